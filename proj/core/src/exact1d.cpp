#include "cep/exact1d.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

#include "cep/bounds.hpp"

namespace cep {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void require_1d(const Bundle& bundle) {
    if (bundle.dimension() != 1)
        throw std::invalid_argument("exact error probabilities require a 1-D constellation");
}

// Decision score of point k at position y, scaled by 2 sigma^2:
//   line_k(y) = x_k * y + (sigma^2 log p_k - x_k^2 / 2).
// The common -y^2/2 term drops out of the argmax, so the decision regions
// are the upper envelope of these lines. Points whose line never reaches
// the envelope have empty regions.
struct ScoreLine {
    double slope;
    double intercept;
    std::size_t index;
};

double intersection(const ScoreLine& a, const ScoreLine& b) {
    // Slopes are the point coordinates, distinct after validation.
    return (a.intercept - b.intercept) / (b.slope - a.slope);
}

}  // namespace

RegionIntervals regions_1d(const Bundle& bundle, DetectorKind kind, NoiseModel noise) {
    require_1d(bundle);
    const std::size_t m = bundle.size();

    std::vector<std::size_t> order(m);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        return bundle.constellation.coords[a] < bundle.constellation.coords[b];
    });

    const double variance = noise.variance();
    std::vector<ScoreLine> lines;
    lines.reserve(m);
    for (std::size_t k : order) {
        const double x = bundle.constellation.coords[k];
        const double weight = kind == DetectorKind::map
                                  ? variance * std::log(bundle.prob(k))
                                  : 0.0;
        lines.push_back({x, weight - x * x / 2.0, k});
    }

    // Upper-envelope sweep in slope order; a pushed line whose window
    // closes before the previous boundary is dominated and popped.
    std::vector<ScoreLine> stack;
    stack.reserve(m);
    for (const ScoreLine& line : lines) {
        while (stack.size() >= 2 &&
               intersection(stack.back(), line) <= intersection(stack[stack.size() - 2],
                                                                stack.back())) {
            stack.pop_back();
        }
        stack.push_back(line);
    }

    RegionIntervals regions;
    regions.intervals.assign(m, std::nullopt);
    for (std::size_t k = 0; k < stack.size(); ++k) {
        const double lo = k == 0 ? -kInf : intersection(stack[k - 1], stack[k]);
        const double hi = k + 1 == stack.size() ? kInf : intersection(stack[k], stack[k + 1]);
        regions.intervals[stack[k].index] = std::make_pair(lo, hi);
    }
    return regions;
}

std::vector<double> transition_exact(const Bundle& bundle, DetectorKind kind, NoiseModel noise) {
    require_1d(bundle);
    const std::size_t m = bundle.size();
    const RegionIntervals regions = regions_1d(bundle, kind, noise);

    std::vector<double> f(m * m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
        const double x = bundle.constellation.coords[i];
        for (std::size_t j = 0; j < m; ++j) {
            const auto& iv = regions.intervals[j];
            if (!iv) continue;
            f[i * m + j] = q_interval((iv->first - x) / noise.sigma,
                                      (iv->second - x) / noise.sigma);
        }
    }
    return f;
}

namespace {

double error_sum(const Bundle& bundle, DetectorKind kind, NoiseModel noise,
                 const Labeling* labeling) {
    const std::size_t m = bundle.size();
    const std::vector<double> f = transition_exact(bundle, kind, noise);
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            const double h = labeling
                                 ? static_cast<double>(hamming_distance(*labeling, i, j)) /
                                       static_cast<double>(labeling->bit_count)
                                 : 1.0;
            inner += h * f[i * m + j];
        }
        total += bundle.prob(i) * inner;
    }
    return total;
}

}  // namespace

double sep_exact(const Bundle& bundle, DetectorKind kind, NoiseModel noise) {
    return error_sum(bundle, kind, noise, nullptr);
}

double bep_exact(const Bundle& bundle, DetectorKind kind, NoiseModel noise) {
    return error_sum(bundle, kind, noise, &bundle.require_labeling());
}

double error_exact(const Bundle& bundle, ErrorSpec spec, NoiseModel noise) {
    return spec.error == ErrorKind::sep ? sep_exact(bundle, spec.detector, noise)
                                        : bep_exact(bundle, spec.detector, noise);
}

}  // namespace cep
