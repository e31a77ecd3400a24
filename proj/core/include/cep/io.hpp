#pragma once

#include <filesystem>
#include <stdexcept>
#include <string>

#include "cep/constellation.hpp"

namespace cep {

/// Structural problem in a constellation document (bad syntax, wrong
/// types, wrong field shapes). Invariant violations surface as
/// ValidationError instead.
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a constellation document. The format is a JSON object with keys
///   dimension : positive integer N
///   points    : array of M arrays of N numbers
///   probs     : array of M numbers
///   labels    : optional array of M equal-length binary strings
///   name      : optional string
/// The order of `points` defines the point indices 1..M used in
/// diagnostics and CLI output.
Bundle parse_constellation(const std::string& text);

Bundle load_constellation(const std::filesystem::path& path);

/// Inverse of parse_constellation; numbers serialize with shortest
/// round-trip precision, so parse(serialize(b)) reproduces b exactly.
std::string serialize_constellation(const Bundle& bundle);

/// Decimal text with 17 significant digits (round-trip exact for doubles).
std::string format_full(double value);

}  // namespace cep
