#pragma once

#include <cstddef>

namespace cep::testing {

// Gaussian tail probabilities computed independently with 60-digit
// arithmetic and rounded to the nearest double.
struct QReferencePoint {
    double x;
    double q;
};

inline constexpr QReferencePoint kQReference[] = {
    {-8, 0.9999999999999993},
    {-6, 0.9999999990134123},
    {-4, 0.9999683287581669},
    {-2, 0.9772498680518208},
    {-1, 0.8413447460685429},
    {-0.5, 0.6914624612740131},
    {-0.25, 0.5987063256829237},
    {0, 0.5},
    {0.25, 0.4012936743170763},
    {0.5, 0.3085375387259869},
    {1, 0.15865525393145705},
    {1.5, 0.06680720126885807},
    {1.959964, 0.024999999096442405},
    {2, 0.02275013194817921},
    {2.5, 0.006209665325776135},
    {3, 0.0013498980316300946},
    {4, 3.1671241833119924e-05},
    {5, 2.866515718791939e-07},
    {6, 9.86587645037698e-10},
    {7, 1.279812543885835e-12},
    {8, 6.220960574271784e-16},
    {10, 7.619853024160525e-24},
    {12, 1.776482112077679e-33},
    {14, 7.7935368191928e-45},
    {16, 6.388754400538087e-58},
    {20, 2.7536241186062337e-89},
    {24, 1.390392118549703e-127},
    {28, 8.123869469659427e-173},
    {32, 5.452080603512396e-225},
    {36, 4.182624065797283e-284},
    {37, 5.725571222524577e-300},
};

inline constexpr double kQOfOne = 0.15865525393145705;
inline constexpr double kQOfTwo = 0.02275013194817921;
inline constexpr double kQOfSix = 9.86587645037698e-10;

// Asymmetric three-point example at sigma^2 = 0.1: offset of the pairwise
// MAP hyperplane from x_1 and the resulting pairwise bound.
inline constexpr double kAsymDelta12 = 0.7181224235989778;
inline constexpr double kAsymQDelta12 = 0.011576440524531929;
inline constexpr double kAsymBoundary12 = -0.2818775764010222;

}  // namespace cep::testing
