#include "cep/asymptotics.hpp"

#include <cmath>

#include "cep/bounds.hpp"

namespace cep {

double asymptotic_B(const Bundle& bundle, ErrorSpec spec) {
    const Labeling* labeling = nullptr;
    if (spec.error == ErrorKind::bep) labeling = &bundle.require_labeling();

    // med_pairs is sorted i-major, j ascending: summation order is fixed.
    double total = 0.0;
    for (const auto& [i, j] : bundle.med.med_pairs) {
        const double h =
            labeling ? static_cast<double>(hamming_distance(*labeling, i, j)) /
                           static_cast<double>(labeling->bit_count)
                     : 1.0;
        const double w = spec.detector == DetectorKind::map
                             ? std::sqrt(bundle.prob(j) / bundle.prob(i))
                             : 1.0;
        total += bundle.prob(i) * h * w;
    }
    return total;
}

double ratio_R(const Bundle& bundle, ErrorKind error) {
    return asymptotic_B(bundle, {DetectorKind::map, error}) /
           asymptotic_B(bundle, {DetectorKind::ml, error});
}

AsymptoticSummary summarize_asymptotics(const Bundle& bundle) {
    AsymptoticSummary s;
    s.B_map_sep = asymptotic_B(bundle, {DetectorKind::map, ErrorKind::sep});
    s.B_ml_sep = asymptotic_B(bundle, {DetectorKind::ml, ErrorKind::sep});
    s.R_sep = s.B_map_sep / s.B_ml_sep;
    if (bundle.labeling) {
        s.B_map_bep = asymptotic_B(bundle, {DetectorKind::map, ErrorKind::bep});
        s.B_ml_bep = asymptotic_B(bundle, {DetectorKind::ml, ErrorKind::bep});
        s.R_bep = *s.B_map_bep / *s.B_ml_bep;
    }
    return s;
}

double asymptotic_approx(const Bundle& bundle, ErrorSpec spec, NoiseModel noise) {
    return asymptotic_B(bundle, spec) * q_function(bundle.med.med / (2.0 * noise.sigma));
}

}  // namespace cep
