#pragma once

#include <optional>

#include "cep/constellation.hpp"
#include "cep/detector.hpp"

namespace cep {

/// High-SNR multiplier B of Q(d/(2 sigma)) in the error probability:
/// B = sum_i p_i sum_{j: MED pair} h_ij w_ij with w_ij = sqrt(p_j/p_i)
/// for MAP and 1 for ML, h_ij = 1 for SEP and d_H(i,j)/m for BEP.
/// Terms are accumulated i-major, j ascending, so the floating-point
/// result is identical across runs.
double asymptotic_B(const Bundle& bundle, ErrorSpec spec);

/// Asymptotic MAP/ML error ratio R = B_map / B_ml. Always in (0,1];
/// equals 1 exactly when every MED pair has equal priors.
double ratio_R(const Bundle& bundle, ErrorKind error);

/// All asymptotic constants of one bundle. Bit-level fields are absent
/// when the bundle carries no labeling.
struct AsymptoticSummary {
    double B_map_sep = 0.0;
    double B_ml_sep = 0.0;
    double R_sep = 0.0;
    std::optional<double> B_map_bep;
    std::optional<double> B_ml_bep;
    std::optional<double> R_bep;
};

AsymptoticSummary summarize_asymptotics(const Bundle& bundle);

/// Closed-form high-SNR approximation B * Q(d/(2 sigma)).
double asymptotic_approx(const Bundle& bundle, ErrorSpec spec, NoiseModel noise);

}  // namespace cep
