#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cep/constellation.hpp"
#include "cep/detector.hpp"

namespace cep {

/// Gaussian tail probability Q(x) = Pr{Z > x} for standard normal Z.
double q_function(double x);

/// Q(a) - Q(b) evaluated without cancellation for arguments of either
/// sign; this is Pr{a < Z <= b} when a <= b. Infinite endpoints are fine.
double q_interval(double a, double b);

/// Geometry of the hypercube construction behind the transition lower
/// bound: circumradius r at the given sigma, per-ordered-pair validity
/// thresholds tau (infinite under uniform priors), and the prior extremes.
struct LowerBoundGeometry {
    double r = 0.0;
    std::vector<double> tau;  // M*M row-major, +infinity on the diagonal
    double max_ratio = 1.0;
    double log_max_ratio = 0.0;
    double min_tau = 0.0;     // over ordered pairs i != j

    std::size_t size_ = 0;
    double tau_at(std::size_t i, std::size_t j) const { return tau[i * size_ + j]; }
};

LowerBoundGeometry lb_geometry(const Bundle& bundle, NoiseModel noise);

/// Pairwise transition probability upper bound Q(Delta_ij(sigma)/sigma),
/// valid for both detectors.
double transition_ub(const Bundle& bundle, std::size_t i, std::size_t j, DetectorKind kind,
                     NoiseModel noise);

/// Pairwise transition probability lower bound. Empty when the bound is
/// not valid at this noise level (sigma >= tau_ij); zero for pairs above
/// the minimum distance; otherwise the hypercube bracket, clamped at zero.
std::optional<double> transition_lb(const Bundle& bundle, std::size_t i, std::size_t j,
                                    DetectorKind kind, NoiseModel noise);

/// Union-style error probability upper bound: the full double sum of
/// p_i h_ij Q(Delta_ij/sigma) over ordered pairs.
double error_ub(const Bundle& bundle, ErrorSpec spec, NoiseModel noise);

/// Error probability lower bound restricted to MED pairs. Empty when
/// sigma >= min tau; never produces a sentinel value, so sweeps can emit
/// gaps where the bound is undefined.
std::optional<double> error_lb(const Bundle& bundle, ErrorSpec spec, NoiseModel noise);

}  // namespace cep
