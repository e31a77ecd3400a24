#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "cep/constellation.hpp"
#include "cep/detector.hpp"

namespace cep {

/// Decision intervals on the real line, one per constellation point in the
/// original index order. Unbounded ends are +-infinity. A MAP interval can
/// be empty: a low-prior point loses its region entirely at large sigma.
struct RegionIntervals {
    std::vector<std::optional<std::pair<double, double>>> intervals;

    bool empty_region(std::size_t i) const { return !intervals[i].has_value(); }
};

/// Exact decision regions of a one-dimensional constellation. Points on a
/// boundary belong to the lower-indexed region, consistent with the
/// detectors' tie-breaking; this is measure-zero and does not affect any
/// probability below.
RegionIntervals regions_1d(const Bundle& bundle, DetectorKind kind, NoiseModel noise);

/// Exact transition matrix F_ij = Pr{Y in region j | X = x_i}, M*M
/// row-major. Rows sum to one within 1e-12.
std::vector<double> transition_exact(const Bundle& bundle, DetectorKind kind, NoiseModel noise);

/// Exact symbol error probability for a one-dimensional bundle.
double sep_exact(const Bundle& bundle, DetectorKind kind, NoiseModel noise);

/// Exact bit error probability for a one-dimensional bundle; requires a
/// labeling.
double bep_exact(const Bundle& bundle, DetectorKind kind, NoiseModel noise);

/// Dispatch on the error kind of the spec.
double error_exact(const Bundle& bundle, ErrorSpec spec, NoiseModel noise);

}  // namespace cep
