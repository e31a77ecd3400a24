#include "cep/presets.hpp"

#include <cmath>
#include <numbers>

namespace cep {
namespace presets {

Bundle asymmetric_threepoint() {
    return validate(Constellation::from_points({{-1.0}, {0.0}, {2.0}}),
                    Distribution{{0.62, 0.07, 0.31}}, std::nullopt, "threept-asymmetric");
}

Bundle symmetric_threepoint(double p1) {
    return validate(Constellation::from_points({{-1.0}, {0.0}, {1.0}}),
                    Distribution{{p1, 1.0 - 2.0 * p1, p1}}, std::nullopt, "threept-symmetric");
}

Bundle uniform_pam(std::size_t order) {
    std::vector<std::vector<double>> points;
    points.reserve(order);
    for (std::size_t k = 0; k < order; ++k)
        points.push_back({2.0 * static_cast<double>(k) - static_cast<double>(order - 1)});
    Distribution dist{std::vector<double>(order, 1.0 / static_cast<double>(order))};

    std::optional<Labeling> labeling;
    if (order >= 2 && (order & (order - 1)) == 0) {
        std::size_t bits = 0;
        while ((std::size_t{1} << bits) < order) ++bits;
        labeling = Labeling::natural(bits);
    }
    return validate(Constellation::from_points(points), std::move(dist), std::move(labeling),
                    "pam" + std::to_string(order));
}

Bundle ring_4_12(double p1) {
    std::vector<std::vector<double>> points;
    points.reserve(16);
    // Inner square at radius 1/sqrt(2): adjacent points are exactly one
    // MED apart, and the coordinates +-1/2 are exact in binary.
    points.push_back({0.5, 0.5});
    points.push_back({-0.5, 0.5});
    points.push_back({-0.5, -0.5});
    points.push_back({0.5, -0.5});
    // Outer 12-gon at radius 1/(2 sin(pi/12)): adjacent points one MED
    // apart; the ring gap exceeds the MED for any relative rotation.
    const double r2 = 1.0 / (2.0 * std::sin(std::numbers::pi / 12.0));
    for (std::size_t k = 0; k < 12; ++k) {
        const double angle = static_cast<double>(k) * std::numbers::pi / 6.0;
        points.push_back({r2 * std::cos(angle), r2 * std::sin(angle)});
    }

    const double p2 = (1.0 - 4.0 * p1) / 12.0;
    std::vector<double> probs(16, p2);
    for (std::size_t k = 0; k < 4; ++k) probs[k] = p1;

    return validate(Constellation::from_points(points), Distribution{std::move(probs)},
                    Labeling::natural(4), "ring4x12");
}

}  // namespace presets
}  // namespace cep
