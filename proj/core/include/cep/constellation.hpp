#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cep {

/// Finite set of M distinct points in N-dimensional real signal space.
/// Coordinates are stored row-major (point index major).
struct Constellation {
    std::size_t dimension = 0;
    std::vector<double> coords;

    Constellation() = default;
    Constellation(std::size_t dim, std::vector<double> flat)
        : dimension(dim), coords(std::move(flat)) {}

    static Constellation from_points(const std::vector<std::vector<double>>& points);

    std::size_t size() const { return dimension == 0 ? 0 : coords.size() / dimension; }

    std::span<const double> point(std::size_t i) const {
        return {coords.data() + i * dimension, dimension};
    }
};

/// Prior probabilities over the constellation points. The model requires
/// every entry strictly inside (0,1); points that are never sent must be
/// removed from the constellation, not given probability zero.
struct Distribution {
    std::vector<double> probs;
};

/// One-to-one assignment of length-m bit strings to the M = 2^m points.
/// Bit strings are stored as integers, most significant bit first.
struct Labeling {
    std::vector<std::uint32_t> words;
    std::size_t bit_count = 0;

    static Labeling natural(std::size_t bit_count);
    static Labeling from_strings(const std::vector<std::string>& labels);

    std::string word_string(std::size_t i) const;
};

/// Hamming distance between the labels of points i and j.
unsigned hamming_distance(const Labeling& labeling, std::size_t i, std::size_t j);

/// Pairwise Euclidean distances plus the minimum-distance structure derived
/// from them. A pair (i,j) is a MED pair when dist[i][j] <= med*(1 + 1e-9);
/// the relative tolerance absorbs rounding in constellations read from
/// decimal text.
struct MedGraph {
    std::vector<double> dist;  // M*M, row-major
    double med = 0.0;
    std::vector<std::pair<std::uint32_t, std::uint32_t>> med_pairs;  // ordered, both directions
    std::vector<std::uint32_t> neighbor_counts;                      // G_i
    std::vector<std::vector<std::uint32_t>> med_neighbors;           // ascending per point

    std::size_t size() const { return neighbor_counts.size(); }
    double distance(std::size_t i, std::size_t j) const { return dist[i * size() + j]; }
    bool is_med_pair(std::size_t i, std::size_t j) const;
};

MedGraph med_graph(const Constellation& constellation);

/// Carries every problem found while validating one bundle.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(std::vector<std::string> issues);
    const std::vector<std::string>& issues() const { return issues_; }

private:
    std::vector<std::string> issues_;
};

/// A constellation, its priors, an optional labeling, and the derived
/// distance structure, all checked for consistency. Immutable by
/// convention after construction; safe to share across threads.
struct Bundle {
    Constellation constellation;
    Distribution distribution;
    std::optional<Labeling> labeling;
    MedGraph med;
    std::string name;

    std::size_t size() const { return constellation.size(); }
    std::size_t dimension() const { return constellation.dimension; }
    double prob(std::size_t i) const { return distribution.probs[i]; }

    /// Bit-level quantities fail fast when no labeling was supplied.
    const Labeling& require_labeling() const;
};

/// Checks all type invariants and assembles the bundle. Throws
/// ValidationError listing every violation found. The labeling is optional
/// and only required for bit-error work.
Bundle validate(Constellation constellation, Distribution distribution,
                std::optional<Labeling> labeling = std::nullopt, std::string name = {});

/// Average symbol energy sum_i p_i ||x_i||^2.
double average_energy(const Bundle& bundle);

}  // namespace cep
