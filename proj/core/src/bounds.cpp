#include "cep/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace cep {

double q_function(double x) { return 0.5 * std::erfc(x / std::numbers::sqrt2); }

double q_interval(double a, double b) {
    // Reflect so that both tails are evaluated on the small side; the
    // naive Q(a) - Q(b) cancels catastrophically when both arguments are
    // far negative.
    if (a >= 0.0) return q_function(a) - q_function(b);
    if (b <= 0.0) return q_function(-b) - q_function(-a);
    return 1.0 - q_function(-a) - q_function(b);
}

namespace {

constexpr double kTwoOnePlusSqrt3 = 2.0 * (1.0 + std::numbers::sqrt3);

double error_weight(const Bundle& bundle, ErrorKind error, std::size_t i, std::size_t j) {
    if (error == ErrorKind::sep) return 1.0;
    const Labeling& labeling = bundle.require_labeling();
    return static_cast<double>(hamming_distance(labeling, i, j)) /
           static_cast<double>(labeling.bit_count);
}

}  // namespace

LowerBoundGeometry lb_geometry(const Bundle& bundle, NoiseModel noise) {
    const std::size_t m = bundle.size();
    const double d = bundle.med.med;
    const double root_n = std::sqrt(static_cast<double>(bundle.dimension()));
    const double inf = std::numeric_limits<double>::infinity();

    LowerBoundGeometry g;
    g.size_ = m;

    double p_max = 0.0, p_min = 1.0;
    std::vector<double> log_p(m);
    for (std::size_t i = 0; i < m; ++i) {
        const double p = bundle.prob(i);
        p_max = std::max(p_max, p);
        p_min = std::min(p_min, p);
        log_p[i] = std::log(p);
    }
    g.max_ratio = p_max / p_min;
    g.log_max_ratio = std::log(p_max) - std::log(p_min);

    g.r = (d * d - 4.0 * noise.variance() * g.log_max_ratio) / (kTwoOnePlusSqrt3 * d);

    g.tau.assign(m * m, inf);
    g.min_tau = inf;
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            const double term =
                kTwoOnePlusSqrt3 * root_n * std::abs(log_p[i] - log_p[j]) + 4.0 * g.log_max_ratio;
            const double tau = term == 0.0 ? inf : d / std::sqrt(term);
            g.tau[i * m + j] = tau;
            g.min_tau = std::min(g.min_tau, tau);
        }
    }
    return g;
}

double transition_ub(const Bundle& bundle, std::size_t i, std::size_t j, DetectorKind kind,
                     NoiseModel noise) {
    if (i == j) throw std::invalid_argument("transition bounds require two distinct points");
    return q_function(delta_ij(bundle, i, j, kind, noise) / noise.sigma);
}

namespace {

// Hypercube bracket of one MED pair, clamped at zero. Shared terms
// (the outer Q and the side factor) are passed in by the error bound.
double lb_bracket(const Bundle& bundle, std::size_t i, std::size_t j, DetectorKind kind,
                  NoiseModel noise, double q_outer, double side_factor) {
    const double q_inner = q_function(delta_ij(bundle, i, j, kind, noise) / noise.sigma);
    return std::max(q_inner - q_outer, 0.0) * side_factor;
}

struct LbShared {
    double q_outer;
    double side_factor;
};

LbShared lb_shared_terms(const Bundle& bundle, const LowerBoundGeometry& g, NoiseModel noise) {
    const double d = bundle.med.med;
    const double root_n = std::sqrt(static_cast<double>(bundle.dimension()));
    const double q_outer = q_function(d / (2.0 * noise.sigma) + g.r / (root_n * noise.sigma));
    const double side = 1.0 - 2.0 * q_function(g.r / (root_n * noise.sigma));
    const auto exponent = static_cast<double>(bundle.dimension() - 1);
    return {q_outer, std::pow(side, exponent)};
}

}  // namespace

std::optional<double> transition_lb(const Bundle& bundle, std::size_t i, std::size_t j,
                                    DetectorKind kind, NoiseModel noise) {
    if (i == j) throw std::invalid_argument("transition bounds require two distinct points");
    const LowerBoundGeometry g = lb_geometry(bundle, noise);
    if (noise.sigma >= g.tau_at(i, j)) return std::nullopt;
    if (!bundle.med.is_med_pair(i, j)) return 0.0;
    const LbShared shared = lb_shared_terms(bundle, g, noise);
    return lb_bracket(bundle, i, j, kind, noise, shared.q_outer, shared.side_factor);
}

double error_ub(const Bundle& bundle, ErrorSpec spec, NoiseModel noise) {
    if (spec.error == ErrorKind::bep) bundle.require_labeling();
    const std::size_t m = bundle.size();
    double total = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        double inner = 0.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            inner += error_weight(bundle, spec.error, i, j) *
                     transition_ub(bundle, i, j, spec.detector, noise);
        }
        total += bundle.prob(i) * inner;
    }
    return total;
}

std::optional<double> error_lb(const Bundle& bundle, ErrorSpec spec, NoiseModel noise) {
    if (spec.error == ErrorKind::bep) bundle.require_labeling();
    const LowerBoundGeometry g = lb_geometry(bundle, noise);
    if (noise.sigma >= g.min_tau) return std::nullopt;
    const LbShared shared = lb_shared_terms(bundle, g, noise);
    double total = 0.0;
    for (const auto& [i, j] : bundle.med.med_pairs) {
        total += bundle.prob(i) * error_weight(bundle, spec.error, i, j) *
                 lb_bracket(bundle, i, j, spec.detector, noise, shared.q_outer,
                            shared.side_factor);
    }
    return total;
}

}  // namespace cep
