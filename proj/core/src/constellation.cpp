#include "cep/constellation.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <sstream>

namespace cep {

namespace {

constexpr double kDistinctnessTol = 1e-12;  // relative to the constellation diameter
constexpr double kProbSumTol = 1e-12;
constexpr double kMedPairTol = 1e-9;  // relative MED membership tolerance

double euclidean(std::span<const double> a, std::span<const double> b) {
    double s = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) {
        const double diff = a[k] - b[k];
        s += diff * diff;
    }
    return std::sqrt(s);
}

}  // namespace

Constellation Constellation::from_points(const std::vector<std::vector<double>>& points) {
    Constellation c;
    if (points.empty()) return c;
    c.dimension = points.front().size();
    c.coords.reserve(points.size() * c.dimension);
    for (const auto& p : points) {
        if (p.size() != c.dimension)
            throw std::invalid_argument("all points must have the same dimension");
        c.coords.insert(c.coords.end(), p.begin(), p.end());
    }
    return c;
}

Labeling Labeling::natural(std::size_t bit_count) {
    Labeling l;
    l.bit_count = bit_count;
    l.words.resize(std::size_t{1} << bit_count);
    for (std::uint32_t w = 0; w < l.words.size(); ++w) l.words[w] = w;
    return l;
}

Labeling Labeling::from_strings(const std::vector<std::string>& labels) {
    Labeling l;
    if (labels.empty()) return l;
    l.bit_count = labels.front().size();
    l.words.reserve(labels.size());
    for (const auto& s : labels) {
        if (s.size() != l.bit_count)
            throw std::invalid_argument("labels must all have the same length");
        std::uint32_t w = 0;
        for (char ch : s) {
            if (ch != '0' && ch != '1')
                throw std::invalid_argument("labels must contain only '0' and '1'");
            w = (w << 1) | static_cast<std::uint32_t>(ch - '0');
        }
        l.words.push_back(w);
    }
    return l;
}

std::string Labeling::word_string(std::size_t i) const {
    std::string s(bit_count, '0');
    for (std::size_t b = 0; b < bit_count; ++b)
        if (words[i] >> (bit_count - 1 - b) & 1u) s[b] = '1';
    return s;
}

unsigned hamming_distance(const Labeling& labeling, std::size_t i, std::size_t j) {
    if (i >= labeling.words.size() || j >= labeling.words.size())
        throw std::out_of_range("label index out of range");
    return static_cast<unsigned>(std::popcount(labeling.words[i] ^ labeling.words[j]));
}

bool MedGraph::is_med_pair(std::size_t i, std::size_t j) const {
    const auto& nbrs = med_neighbors[i];
    return std::binary_search(nbrs.begin(), nbrs.end(), static_cast<std::uint32_t>(j));
}

MedGraph med_graph(const Constellation& constellation) {
    const std::size_t m = constellation.size();
    MedGraph g;
    g.dist.assign(m * m, 0.0);
    double med = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            const double d = euclidean(constellation.point(i), constellation.point(j));
            g.dist[i * m + j] = d;
            g.dist[j * m + i] = d;
            med = std::min(med, d);
        }
    }
    g.med = med;
    g.neighbor_counts.assign(m, 0);
    g.med_neighbors.assign(m, {});
    const double cutoff = med * (1.0 + kMedPairTol);
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            if (i == j) continue;
            if (g.dist[i * m + j] <= cutoff) {
                g.med_pairs.emplace_back(static_cast<std::uint32_t>(i),
                                         static_cast<std::uint32_t>(j));
                g.med_neighbors[i].push_back(static_cast<std::uint32_t>(j));
                ++g.neighbor_counts[i];
            }
        }
    }
    return g;
}

ValidationError::ValidationError(std::vector<std::string> issues)
    : std::runtime_error([&issues] {
          std::ostringstream os;
          os << "invalid bundle:";
          for (const auto& s : issues) os << "\n  - " << s;
          return os.str();
      }()),
      issues_(std::move(issues)) {}

const Labeling& Bundle::require_labeling() const {
    if (!labeling)
        throw std::invalid_argument(
            "bit-error quantities require a labeling, but the bundle has none");
    return *labeling;
}

Bundle validate(Constellation constellation, Distribution distribution,
                std::optional<Labeling> labeling, std::string name) {
    std::vector<std::string> issues;
    const std::size_t m = constellation.size();
    const std::size_t n = constellation.dimension;

    if (n < 1) issues.push_back("dimension must be at least 1");
    if (m < 2) issues.push_back("constellation must contain at least 2 points");
    if (n >= 1 && constellation.coords.size() != m * n)
        issues.push_back("coordinate count is not a multiple of the dimension");

    for (std::size_t i = 0; i < m * n && i < constellation.coords.size(); ++i) {
        if (!std::isfinite(constellation.coords[i])) {
            issues.push_back("point " + std::to_string(i / n + 1) + " has a non-finite coordinate");
            break;
        }
    }

    // Distinctness is judged against the constellation diameter so the
    // criterion is scale-free.
    if (issues.empty() && m >= 2) {
        double diameter = 0.0;
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = i + 1; j < m; ++j)
                diameter = std::max(diameter, euclidean(constellation.point(i),
                                                        constellation.point(j)));
        for (std::size_t i = 0; i < m; ++i) {
            for (std::size_t j = i + 1; j < m; ++j) {
                const double d = euclidean(constellation.point(i), constellation.point(j));
                if (d <= diameter * kDistinctnessTol) {
                    issues.push_back("point " + std::to_string(j + 1) + " duplicates point " +
                                     std::to_string(i + 1));
                }
            }
        }
    }

    if (distribution.probs.size() != m) {
        issues.push_back("expected " + std::to_string(m) + " probabilities, got " +
                         std::to_string(distribution.probs.size()));
    } else {
        double sum = 0.0;
        for (std::size_t i = 0; i < m; ++i) {
            const double p = distribution.probs[i];
            if (!std::isfinite(p) || p <= 0.0 || p >= 1.0) {
                std::ostringstream os;
                os << "probability " << i + 1 << " is " << p
                   << ", must lie strictly inside (0,1)";
                issues.push_back(os.str());
            }
            sum += p;
        }
        if (std::abs(sum - 1.0) > kProbSumTol) {
            std::ostringstream os;
            os.precision(17);
            os << "probabilities sum to " << sum << ", expected 1 within " << kProbSumTol;
            issues.push_back(os.str());
        }
    }

    if (labeling) {
        if (labeling->words.size() != m) {
            issues.push_back("expected " + std::to_string(m) + " labels, got " +
                             std::to_string(labeling->words.size()));
        } else if (m != (std::size_t{1} << labeling->bit_count)) {
            issues.push_back("constellation size " + std::to_string(m) +
                             " is not 2^" + std::to_string(labeling->bit_count) +
                             "; labelings require a power-of-two size");
        } else {
            auto sorted = labeling->words;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                issues.push_back("labels are not all distinct");
        }
    }

    if (!issues.empty()) throw ValidationError(std::move(issues));

    Bundle b;
    b.constellation = std::move(constellation);
    b.distribution = std::move(distribution);
    b.labeling = std::move(labeling);
    b.med = med_graph(b.constellation);
    b.name = std::move(name);
    return b;
}

double average_energy(const Bundle& bundle) {
    double es = 0.0;
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        double norm2 = 0.0;
        for (double c : bundle.constellation.point(i)) norm2 += c * c;
        es += bundle.prob(i) * norm2;
    }
    return es;
}

}  // namespace cep
