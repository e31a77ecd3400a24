#include "cep/detector.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

namespace cep {

NoiseModel::NoiseModel(double sigma_value) : sigma(sigma_value) {
    if (!(sigma > 0.0) || !std::isfinite(sigma))
        throw std::invalid_argument("noise standard deviation must be positive and finite");
}

NoiseModel NoiseModel::from_variance(double sigma_squared) {
    if (!(sigma_squared > 0.0) || !std::isfinite(sigma_squared))
        throw std::invalid_argument("noise variance must be positive and finite");
    return NoiseModel(std::sqrt(sigma_squared));
}

Decider::Decider(const Bundle& bundle, DetectorKind kind, std::optional<NoiseModel> noise)
    : dimension_(bundle.dimension()),
      count_(bundle.size()),
      coords_(bundle.constellation.coords),
      bias_(bundle.size(), 0.0) {
    if (kind == DetectorKind::map) {
        if (!noise) throw std::invalid_argument("MAP detection requires a noise model");
        // Scores are scaled by 2 sigma^2, which preserves the argmax:
        // argmax_j { 2 sigma^2 log p_j - ||y - x_j||^2 }.
        const double two_var = 2.0 * noise->variance();
        for (std::size_t j = 0; j < count_; ++j) bias_[j] = two_var * std::log(bundle.prob(j));
    }
}

std::size_t Decider::operator()(std::span<const double> received) const {
    if (received.size() != dimension_)
        throw std::invalid_argument("received vector has dimension " +
                                    std::to_string(received.size()) + ", expected " +
                                    std::to_string(dimension_));
    std::size_t best = 0;
    double best_score = -std::numeric_limits<double>::infinity();
    const double* p = coords_.data();
    for (std::size_t j = 0; j < count_; ++j, p += dimension_) {
        double dist2 = 0.0;
        for (std::size_t k = 0; k < dimension_; ++k) {
            const double diff = received[k] - p[k];
            dist2 += diff * diff;
        }
        const double score = bias_[j] - dist2;
        if (score > best_score) {  // strict: ties keep the smallest index
            best_score = score;
            best = j;
        }
    }
    return best;
}

std::size_t decide(std::span<const double> received, const Bundle& bundle, DetectorKind kind,
                   std::optional<NoiseModel> noise) {
    return Decider(bundle, kind, noise)(received);
}

double delta_ij(const Bundle& bundle, std::size_t i, std::size_t j, DetectorKind kind,
                NoiseModel noise) {
    if (i == j) throw std::invalid_argument("delta_ij requires two distinct points");
    const double dij = bundle.med.distance(i, j);
    if (kind == DetectorKind::ml) return dij / 2.0;
    const double log_ratio = std::log(bundle.prob(i)) - std::log(bundle.prob(j));
    return dij / 2.0 * (1.0 + 2.0 * noise.variance() / (dij * dij) * log_ratio);
}

std::vector<std::uint32_t> rasterize_regions(const Bundle& bundle, DetectorKind kind,
                                             NoiseModel noise, RasterWindow window,
                                             std::size_t resolution) {
    if (bundle.dimension() != 2)
        throw std::invalid_argument("region rasters require a two-dimensional constellation");
    if (resolution == 0) throw std::invalid_argument("resolution must be positive");

    Decider decider(bundle, kind, noise);
    const double dx = (window.x_max - window.x_min) / static_cast<double>(resolution);
    const double dy = (window.y_max - window.y_min) / static_cast<double>(resolution);
    std::vector<std::uint32_t> grid(resolution * resolution);
    for (std::size_t row = 0; row < resolution; ++row) {
        const double y = window.y_min + (static_cast<double>(row) + 0.5) * dy;
        for (std::size_t col = 0; col < resolution; ++col) {
            const double x = window.x_min + (static_cast<double>(col) + 0.5) * dx;
            const double cell[2] = {x, y};
            grid[row * resolution + col] = static_cast<std::uint32_t>(decider(cell));
        }
    }
    return grid;
}

}  // namespace cep
