#pragma once

#include <cstddef>

#include "cep/constellation.hpp"

namespace cep {
namespace presets {

/// One-dimensional points (-1, 0, +2) with priors (0.62, 0.07, 0.31);
/// zero-mean, MED 1, single MED pair.
Bundle asymmetric_threepoint();

/// One-dimensional points (-1, 0, +1) with priors (p1, 1-2p1, p1),
/// 0 < p1 < 1/2.
Bundle symmetric_threepoint(double p1);

/// Equally likely M-PAM at -(M-1), ..., +(M-1), spacing 2. Natural binary
/// labels when M is a power of two.
Bundle uniform_pam(std::size_t order);

/// Two concentric rings of 4 and 12 points with unit MED: inner radius
/// 1/sqrt(2), outer radius 1/(2 sin(pi/12)). Inner points carry prior p1
/// each, outer points (1 - 4 p1)/12 each, 0 < p1 < 1/4. Every point has
/// exactly two neighbors at MED, all within its own ring. Natural 4-bit
/// labels.
Bundle ring_4_12(double p1);

}  // namespace presets
}  // namespace cep
