#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "cep/bounds.hpp"
#include "cep/constellation.hpp"
#include "cep/detector.hpp"

namespace cep {

/// Simulation contract: for a fixed (seed, trials, workers) triple the
/// result is bit-identical across runs. The trial index space is split
/// into `workers` contiguous blocks, each driven by an independent
/// counter-based substream derived from (seed, block), so any triple is
/// also statistically valid.
struct SimConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    DetectorKind detector = DetectorKind::ml;
    ErrorKind error = ErrorKind::sep;
    unsigned workers = 1;
};

struct SimResult {
    double estimate = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    /// Symbol error count for SEP; accumulated d_H/m mass for BEP.
    double errors_observed = 0.0;
};

/// Estimates SEP or BEP by sampling the channel: draw a symbol from the
/// priors, add i.i.d. Gaussian noise per dimension, decide, and score
/// 1{j != i} (SEP) or d_H(i,j)/m (BEP).
SimResult simulate(const Bundle& bundle, NoiseModel noise, const SimConfig& config);

/// SNR convention used throughout: E_s / sigma^2 in dB, where sigma^2 is
/// the noise variance PER DIMENSION and E_s the average symbol energy.
double sigma_from_snr_db(double avg_energy, double snr_db);
double snr_db_from_sigma(double avg_energy, double sigma);

/// One sweep point: bounds, asymptote, and the simulated estimate at the
/// sigma implied by the SNR value. `lb` is empty where the lower bound is
/// not valid.
struct SweepPoint {
    double snr_db = 0.0;
    double sigma = 0.0;
    double ub = 0.0;
    std::optional<double> lb;
    double asym = 0.0;
    SimResult sim;
};

/// Evaluates every quantity of interest over an SNR grid. Every point
/// reuses the same simulation seed (common random numbers across the
/// sweep).
std::vector<SweepPoint> sweep(const Bundle& bundle, std::span<const double> snr_grid_db,
                              const SimConfig& config);

}  // namespace cep
