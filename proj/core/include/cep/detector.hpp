#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cep/constellation.hpp"

namespace cep {

enum class DetectorKind { map, ml };
enum class ErrorKind { sep, bep };

/// Which of the four error probabilities is being evaluated.
struct ErrorSpec {
    DetectorKind detector = DetectorKind::map;
    ErrorKind error = ErrorKind::sep;
};

/// Per-dimension noise standard deviation of the AWGN channel, in
/// signal-space units.
struct NoiseModel {
    double sigma = 1.0;

    explicit NoiseModel(double sigma_value);
    static NoiseModel from_variance(double sigma_squared);

    double variance() const { return sigma * sigma; }
};

/// Precomputed decision rule for repeated classification of received
/// vectors. MAP maximizes log p_j - ||y - x_j||^2 / (2 sigma^2); ML
/// maximizes -||y - x_j||^2. Ties go to the smallest index so identical
/// inputs always give identical outputs.
class Decider {
public:
    Decider(const Bundle& bundle, DetectorKind kind,
            std::optional<NoiseModel> noise = std::nullopt);

    std::size_t operator()(std::span<const double> received) const;

    std::size_t dimension() const { return dimension_; }

private:
    std::size_t dimension_;
    std::size_t count_;
    std::vector<double> coords_;  // flattened copy of the constellation
    std::vector<double> bias_;    // 2 sigma^2 log p_j for MAP, zero for ML
};

/// One-shot decision. `noise` is required for MAP and ignored for ML.
std::size_t decide(std::span<const double> received, const Bundle& bundle, DetectorKind kind,
                   std::optional<NoiseModel> noise = std::nullopt);

/// Signed distance from x_i to the pairwise decision hyperplane between
/// points i and j. MAP: (delta_ij/2) * (1 + (2 sigma^2/delta_ij^2) ln(p_i/p_j));
/// ML: delta_ij/2. May be negative, in which case the half-space favouring
/// j contains x_i itself.
double delta_ij(const Bundle& bundle, std::size_t i, std::size_t j, DetectorKind kind,
                NoiseModel noise);

/// Axis-aligned box in the signal plane, for 2-D region rasters.
struct RasterWindow {
    double x_min, x_max;
    double y_min, y_max;
};

/// Classifies the centers of a resolution x resolution grid of cells over
/// the window. Output is row-major with rows ordered by ascending y and
/// columns by ascending x. Requires a two-dimensional constellation.
std::vector<std::uint32_t> rasterize_regions(const Bundle& bundle, DetectorKind kind,
                                             NoiseModel noise, RasterWindow window,
                                             std::size_t resolution);

}  // namespace cep
