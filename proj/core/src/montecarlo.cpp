#include "cep/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

#include "cep/asymptotics.hpp"

namespace cep {

namespace {

// Counter-style 64-bit stream: every output is a mixed function of an
// advancing state, so a block's draws depend only on its initial state.
struct SplitMix64 {
    std::uint64_t state;

    explicit SplitMix64(std::uint64_t s) : state(s) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9E3779B97F4A7C15ull);
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
        return z ^ (z >> 31);
    }

    // Uniform in [0, 1) with 53 random bits.
    double next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

std::uint64_t mix64(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

// Independent substream for one (seed, block) pair.
SplitMix64 block_stream(std::uint64_t seed, std::uint64_t block) {
    return SplitMix64(mix64(seed + 0x9E3779B97F4A7C15ull) ^
                      mix64(block * 0xBF58476D1CE4E5B9ull + 0x94D049BB133111EBull));
}

// Marsaglia polar draws; the rejection loop stays inside the block's own
// stream, so blocks remain independent.
struct GaussianStream {
    SplitMix64 rng;
    double spare = 0.0;
    bool has_spare = false;

    explicit GaussianStream(SplitMix64 r) : rng(r) {}

    double next() {
        if (has_spare) {
            has_spare = false;
            return spare;
        }
        double u, v, s;
        do {
            u = 2.0 * rng.next_unit() - 1.0;
            v = 2.0 * rng.next_unit() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare = v * f;
        has_spare = true;
        return u * f;
    }
};

struct BlockTally {
    double sum = 0.0;
    double sum_sq = 0.0;
};

BlockTally run_block(const Bundle& bundle, NoiseModel noise, const SimConfig& config,
                     const std::vector<double>& cdf, std::uint64_t block,
                     std::uint64_t count) {
    const std::size_t n = bundle.dimension();
    const std::size_t m = bundle.size();
    const Decider decider(bundle, config.detector, noise);
    const Labeling* labeling =
        config.error == ErrorKind::bep ? &*bundle.labeling : nullptr;
    const double inv_m_bits =
        labeling ? 1.0 / static_cast<double>(labeling->bit_count) : 0.0;

    GaussianStream gauss(block_stream(config.seed, block));
    std::vector<double> received(n);

    BlockTally tally;
    for (std::uint64_t t = 0; t < count; ++t) {
        const double u = gauss.rng.next_unit();
        std::size_t sent = 0;
        while (sent + 1 < m && u >= cdf[sent]) ++sent;
        const double* x = bundle.constellation.coords.data() + sent * n;
        for (std::size_t k = 0; k < n; ++k) received[k] = x[k] + noise.sigma * gauss.next();
        const std::size_t detected = decider(received);
        double score = 0.0;
        if (detected != sent) {
            score = labeling
                        ? hamming_distance(*labeling, sent, detected) * inv_m_bits
                        : 1.0;
        }
        tally.sum += score;
        tally.sum_sq += score * score;
    }
    return tally;
}

}  // namespace

SimResult simulate(const Bundle& bundle, NoiseModel noise, const SimConfig& config) {
    if (config.trials == 0) throw std::invalid_argument("trial count must be at least 1");
    if (config.workers == 0) throw std::invalid_argument("worker count must be at least 1");
    if (config.error == ErrorKind::bep) bundle.require_labeling();

    const std::size_t m = bundle.size();
    std::vector<double> cdf(m);
    double acc = 0.0;
    for (std::size_t i = 0; i < m; ++i) {
        acc += bundle.prob(i);
        cdf[i] = acc;
    }
    cdf[m - 1] = 1.0;

    const std::uint64_t workers = std::min<std::uint64_t>(config.workers, config.trials);
    const std::uint64_t base = config.trials / workers;
    const std::uint64_t extra = config.trials % workers;

    std::vector<BlockTally> tallies(workers);
    auto block_count = [&](std::uint64_t b) { return base + (b < extra ? 1 : 0); };
    if (workers == 1) {
        tallies[0] = run_block(bundle, noise, config, cdf, 0, config.trials);
    } else {
        std::vector<std::thread> pool;
        pool.reserve(workers);
        for (std::uint64_t b = 0; b < workers; ++b) {
            pool.emplace_back([&, b] {
                tallies[b] = run_block(bundle, noise, config, cdf, b, block_count(b));
            });
        }
        for (auto& th : pool) th.join();
    }

    // Merge in block order so scheduling cannot change the result.
    double sum = 0.0, sum_sq = 0.0;
    for (const BlockTally& t : tallies) {
        sum += t.sum;
        sum_sq += t.sum_sq;
    }

    SimResult result;
    result.trials = config.trials;
    result.errors_observed = sum;
    const double n_trials = static_cast<double>(config.trials);
    result.estimate = sum / n_trials;
    if (config.trials > 1) {
        const double variance =
            std::max(0.0, (sum_sq - sum * sum / n_trials) / (n_trials - 1.0));
        result.std_error = std::sqrt(variance / n_trials);
    }
    return result;
}

double sigma_from_snr_db(double avg_energy, double snr_db) {
    return std::sqrt(avg_energy / std::pow(10.0, snr_db / 10.0));
}

double snr_db_from_sigma(double avg_energy, double sigma) {
    return 10.0 * std::log10(avg_energy / (sigma * sigma));
}

std::vector<SweepPoint> sweep(const Bundle& bundle, std::span<const double> snr_grid_db,
                              const SimConfig& config) {
    if (snr_grid_db.empty()) throw std::invalid_argument("SNR grid must not be empty");
    const double es = average_energy(bundle);
    const ErrorSpec spec{config.detector, config.error};

    std::vector<SweepPoint> points;
    points.reserve(snr_grid_db.size());
    for (double snr_db : snr_grid_db) {
        if (!std::isfinite(snr_db)) throw std::invalid_argument("SNR grid values must be finite");
        SweepPoint pt;
        pt.snr_db = snr_db;
        pt.sigma = sigma_from_snr_db(es, snr_db);
        const NoiseModel noise(pt.sigma);
        pt.ub = error_ub(bundle, spec, noise);
        pt.lb = error_lb(bundle, spec, noise);
        pt.asym = asymptotic_approx(bundle, spec, noise);
        pt.sim = simulate(bundle, noise, config);
        points.push_back(pt);
    }
    return points;
}

}  // namespace cep
