#include <doctest.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numeric>

#include "cep/asymptotics.hpp"
#include "cep/bounds.hpp"
#include "cep/exact1d.hpp"
#include "cep/montecarlo.hpp"
#include "cep/presets.hpp"

#include "support/oracles.hpp"
#include "support/q_reference.hpp"
#include "support/random_bundles.hpp"

using namespace cep;
using namespace cep::testing;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
}

TEST_SUITE_BEGIN("exact1d");

TEST_CASE("ML regions of the asymmetric bundle are the midpoint cells") {
    const Bundle b = presets::asymmetric_threepoint();
    const auto regions = regions_1d(b, DetectorKind::ml, NoiseModel(0.5));
    REQUIRE(regions.intervals.size() == 3);
    REQUIRE(!regions.empty_region(0));
    CHECK(regions.intervals[0]->first == -kInf);
    CHECK(regions.intervals[0]->second == doctest::Approx(-0.5));
    CHECK(regions.intervals[1]->first == doctest::Approx(-0.5));
    CHECK(regions.intervals[1]->second == doctest::Approx(1.0));
    CHECK(regions.intervals[2]->second == kInf);
}

TEST_CASE("MAP boundary shifts by sigma^2 times the prior log-ratio") {
    const Bundle b = presets::asymmetric_threepoint();
    const auto regions = regions_1d(b, DetectorKind::map, NoiseModel::from_variance(0.1));
    CHECK(regions.intervals[0]->second == doctest::Approx(kAsymBoundary12).epsilon(1e-13));
    CHECK(regions.intervals[1]->first == doctest::Approx(kAsymBoundary12).epsilon(1e-13));
}

TEST_CASE("a low-prior middle point loses its region at high noise") {
    const Bundle b = validate(Constellation::from_points({{-1.0}, {0.0}, {1.0}}),
                              Distribution{{0.45, 0.10, 0.45}});
    // The pairwise boundaries cross when 2 sigma^2 ln(p1/p2) >= 1.
    const double threshold = 1.0 / (2.0 * std::log(0.45 / 0.10));

    const auto below = regions_1d(b, DetectorKind::map,
                                  NoiseModel::from_variance(threshold * 0.98));
    CHECK(!below.empty_region(1));
    const auto above = regions_1d(b, DetectorKind::map,
                                  NoiseModel::from_variance(threshold * 1.02));
    CHECK(above.empty_region(1));
    CHECK(!above.empty_region(0));
    CHECK(!above.empty_region(2));
    // With the middle point gone the outer boundary is the symmetric zero.
    CHECK(above.intervals[0]->second == doctest::Approx(0.0));

    // Bisect the emptying threshold and compare with the closed form.
    double lo = 0.05, hi = 1.0;
    for (int it = 0; it < 60; ++it) {
        const double mid = 0.5 * (lo + hi);
        const bool empty =
            regions_1d(b, DetectorKind::map, NoiseModel::from_variance(mid)).empty_region(1);
        (empty ? hi : lo) = mid;
    }
    CHECK(0.5 * (lo + hi) == doctest::Approx(threshold).epsilon(1e-6));
}

TEST_CASE("exact operations reject multidimensional bundles") {
    const Bundle ring = presets::ring_4_12(0.22);
    CHECK_THROWS_AS(regions_1d(ring, DetectorKind::ml, NoiseModel(0.1)), std::invalid_argument);
    CHECK_THROWS_AS(sep_exact(ring, DetectorKind::ml, NoiseModel(0.1)), std::invalid_argument);
}

TEST_CASE("ML regions are nonempty and ordered left to right") {
    Rng rng(454);
    for (int trial = 0; trial < 20; ++trial) {
        const Bundle b = random_bundle_1d(rng, 2 + rng.below(9));
        const auto regions = regions_1d(b, DetectorKind::ml, NoiseModel(rng.range(0.05, 2.0)));
        std::vector<std::size_t> order(b.size());
        std::iota(order.begin(), order.end(), std::size_t{0});
        std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t c) {
            return b.constellation.coords[a] < b.constellation.coords[c];
        });
        double last_hi = -kInf;
        for (std::size_t k : order) {
            REQUIRE(!regions.empty_region(k));
            const auto& [lo, hi] = *regions.intervals[k];
            CHECK(lo < hi);
            CHECK(lo == last_hi);
            last_hi = hi;
        }
        CHECK(last_hi == kInf);
    }
}

TEST_CASE("region intervals agree with the decision rule") {
    Rng rng(9090);
    for (int trial = 0; trial < 15; ++trial) {
        const Bundle b = random_bundle_1d(rng, 2 + rng.below(9));
        const NoiseModel noise(rng.range(0.05, 1.5));
        const DetectorKind kind = trial % 2 ? DetectorKind::map : DetectorKind::ml;
        const auto regions = regions_1d(b, kind, noise);
        const double lo = b.constellation.coords.front() - 4.0;
        const double hi = b.constellation.coords.back() + 4.0;
        for (int probe = 0; probe < 200; ++probe) {
            const double y = rng.range(lo, hi);
            const std::size_t chosen = decide(std::array{y}, b, kind, noise);
            REQUIRE(!regions.empty_region(chosen));
            CHECK(regions.intervals[chosen]->first <= y);
            CHECK(y <= regions.intervals[chosen]->second);
        }
    }
}

TEST_CASE("transition matrix rows sum to one") {
    Rng rng(771);
    for (int trial = 0; trial < 50; ++trial) {
        const Bundle b = random_bundle_1d(rng, 2 + rng.below(9));
        const NoiseModel noise(rng.range(0.02, 3.0));
        const DetectorKind kind = trial % 2 ? DetectorKind::map : DetectorKind::ml;
        const auto f = transition_exact(b, kind, noise);
        const std::size_t m = b.size();
        for (std::size_t i = 0; i < m; ++i) {
            double row = 0.0;
            for (std::size_t j = 0; j < m; ++j) {
                row += f[i * m + j];
                CHECK(f[i * m + j] >= 0.0);
            }
            CHECK(std::abs(row - 1.0) <= 1e-12);
        }
    }
}

TEST_CASE("an empty region contributes a zero column") {
    const Bundle b = validate(Constellation::from_points({{-1.0}, {0.0}, {1.0}}),
                              Distribution{{0.45, 0.10, 0.45}});
    const auto f = transition_exact(b, DetectorKind::map, NoiseModel(1.0));
    for (std::size_t i = 0; i < 3; ++i) CHECK(f[i * 3 + 1] == 0.0);
}

TEST_CASE("binary antipodal self-transition is 1 - Q(d/2sigma)") {
    const Bundle b = presets::uniform_pam(2);
    for (double sigma : {0.4, 1.0, 2.5}) {
        const auto f = transition_exact(b, DetectorKind::ml, NoiseModel(sigma));
        CHECK(f[0] == doctest::Approx(1.0 - q_function(1.0 / sigma)).epsilon(1e-13));
        CHECK(f[3] == f[0]);
    }
}

TEST_CASE("transition matrix agrees with direct quadrature") {
    Rng rng(5150);
    for (int trial = 0; trial < 8; ++trial) {
        const Bundle b = random_bundle_1d(rng, 2 + rng.below(5));
        const NoiseModel noise(rng.range(0.1, 1.2));
        const DetectorKind kind = trial % 2 ? DetectorKind::map : DetectorKind::ml;
        const auto f = transition_exact(b, kind, noise);
        const auto regions = regions_1d(b, kind, noise);
        const std::size_t m = b.size();
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = 0; j < m; ++j) {
                if (regions.empty_region(j)) continue;
                const double mass = gaussian_mass_simpson(
                    b.constellation.coords[i], noise.sigma, regions.intervals[j]->first,
                    regions.intervals[j]->second);
                CHECK(f[i * m + j] == doctest::Approx(mass).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("uniform three-point SEP matches the PAM closed form") {
    const Bundle b = presets::symmetric_threepoint(1.0 / 3.0);
    for (double sigma : {0.1, 0.25, 0.5, 1.0}) {
        const double expected = 4.0 / 3.0 * q_function(0.5 / sigma);
        CHECK(sep_exact(b, DetectorKind::ml, NoiseModel(sigma)) ==
              doctest::Approx(expected).epsilon(1e-12));
        CHECK(sep_exact(b, DetectorKind::map, NoiseModel(sigma)) ==
              doctest::Approx(expected).epsilon(1e-12));
    }
}

TEST_CASE("MAP never has a larger symbol error probability than ML") {
    const Bundle asym = presets::asymmetric_threepoint();
    const double es = average_energy(asym);
    for (double db = 1.0; db <= 19.0 + 1e-9; db += 0.5) {
        const NoiseModel noise(sigma_from_snr_db(es, db));
        CHECK(sep_exact(asym, DetectorKind::map, noise) <=
              sep_exact(asym, DetectorKind::ml, noise) * (1.0 + 1e-12));
    }
    Rng rng(321);
    for (int trial = 0; trial < 30; ++trial) {
        const Bundle b = random_bundle_1d(rng, 2 + rng.below(9));
        const NoiseModel noise(rng.range(0.02, 3.0));
        CHECK(sep_exact(b, DetectorKind::map, noise) <=
              sep_exact(b, DetectorKind::ml, noise) * (1.0 + 1e-12));
    }
}

TEST_CASE("MAP asymptote crosses above the exact curve near 2.6 dB") {
    const Bundle b = presets::asymmetric_threepoint();
    const double es = average_energy(b);
    const ErrorSpec spec{DetectorKind::map, ErrorKind::sep};
    {
        const NoiseModel noise(sigma_from_snr_db(es, 2.5));
        CHECK(asymptotic_approx(b, spec, noise) < sep_exact(b, DetectorKind::map, noise));
    }
    for (double db : {2.7, 3.0, 5.0, 10.0, 15.0, 19.0}) {
        const NoiseModel noise(sigma_from_snr_db(es, db));
        CHECK(asymptotic_approx(b, spec, noise) > sep_exact(b, DetectorKind::map, noise));
    }
}

TEST_CASE("exact error ratio approaches the asymptotic constant") {
    const Bundle b = presets::asymmetric_threepoint();
    const double sigma = b.med.med / 12.0;  // d/(2 sigma) = 6
    for (DetectorKind kind : {DetectorKind::map, DetectorKind::ml}) {
        const double ratio =
            sep_exact(b, kind, NoiseModel(sigma)) / q_function(6.0);
        const double B = asymptotic_B(b, {kind, ErrorKind::sep});
        CHECK(std::abs(ratio - B) <= 0.02 * B);
    }
}

TEST_CASE("bit error probability weighs transitions by Hamming distance") {
    Rng rng(64);
    const Bundle b = random_bundle_1d(rng, 8, true);
    const NoiseModel noise(0.4);
    const auto f = transition_exact(b, DetectorKind::map, noise);
    double expected = 0.0;
    for (std::size_t i = 0; i < 8; ++i)
        for (std::size_t j = 0; j < 8; ++j) {
            if (i == j) continue;
            expected += b.prob(i) * hamming_distance(*b.labeling, i, j) / 3.0 * f[i * 8 + j];
        }
    CHECK(bep_exact(b, DetectorKind::map, noise) == doctest::Approx(expected).epsilon(1e-13));
    CHECK(error_exact(b, {DetectorKind::map, ErrorKind::bep}, noise) ==
          bep_exact(b, DetectorKind::map, noise));
    CHECK(error_exact(b, {DetectorKind::map, ErrorKind::sep}, noise) ==
          sep_exact(b, DetectorKind::map, noise));
    CHECK(bep_exact(b, DetectorKind::map, noise) <=
          sep_exact(b, DetectorKind::map, noise) * (1.0 + 1e-12));
}

TEST_CASE("bit error probability requires a labeling") {
    CHECK_THROWS_AS(bep_exact(presets::asymmetric_threepoint(), DetectorKind::ml, NoiseModel(0.3)),
                    std::invalid_argument);
}

TEST_SUITE_END();
