#include "cep/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace cep {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& message) { throw ParseError(message); }

std::size_t require_positive_integer(const json& j, const char* key) {
    if (!j.is_number_unsigned() || j.get<std::uint64_t>() == 0)
        fail(std::string(key) + ": expected a positive integer");
    return j.get<std::size_t>();
}

}  // namespace

Bundle parse_constellation(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("syntax error: ") + e.what());
    }
    if (!doc.is_object()) fail("document root must be an object");

    static const char* known_keys[] = {"dimension", "points", "probs", "labels", "name"};
    for (const auto& [key, value] : doc.items()) {
        bool known = false;
        for (const char* k : known_keys) known = known || key == k;
        if (!known) fail("unknown key \"" + key + "\"");
    }
    for (const char* key : {"dimension", "points", "probs"})
        if (!doc.contains(key)) fail(std::string("missing required key \"") + key + "\"");

    const std::size_t dimension = require_positive_integer(doc["dimension"], "dimension");

    const json& points = doc["points"];
    if (!points.is_array() || points.empty()) fail("points: expected a non-empty array");
    std::vector<double> coords;
    coords.reserve(points.size() * dimension);
    for (std::size_t i = 0; i < points.size(); ++i) {
        const json& row = points[i];
        if (!row.is_array() || row.size() != dimension)
            fail("points[" + std::to_string(i + 1) + "]: expected an array of " +
                 std::to_string(dimension) + " numbers");
        for (std::size_t k = 0; k < dimension; ++k) {
            if (!row[k].is_number())
                fail("points[" + std::to_string(i + 1) + "][" + std::to_string(k + 1) +
                     "]: expected a number");
            coords.push_back(row[k].get<double>());
        }
    }

    const json& probs = doc["probs"];
    if (!probs.is_array()) fail("probs: expected an array");
    Distribution dist;
    dist.probs.reserve(probs.size());
    for (std::size_t i = 0; i < probs.size(); ++i) {
        if (!probs[i].is_number())
            fail("probs[" + std::to_string(i + 1) + "]: expected a number");
        dist.probs.push_back(probs[i].get<double>());
    }

    std::optional<Labeling> labeling;
    if (doc.contains("labels")) {
        const json& labels = doc["labels"];
        if (!labels.is_array()) fail("labels: expected an array of binary strings");
        std::vector<std::string> strings;
        strings.reserve(labels.size());
        std::vector<std::string> issues;
        std::size_t expected_len = 0;
        for (std::size_t i = 0; i < labels.size(); ++i) {
            if (!labels[i].is_string())
                fail("labels[" + std::to_string(i + 1) + "]: expected a string");
            const auto s = labels[i].get<std::string>();
            if (i == 0) expected_len = s.size();
            if (s.empty() || s.find_first_not_of("01") != std::string::npos)
                issues.push_back("label " + std::to_string(i + 1) +
                                 " is not a non-empty binary string: \"" + s + "\"");
            else if (s.size() != expected_len)
                issues.push_back("label " + std::to_string(i + 1) + " has length " +
                                 std::to_string(s.size()) + ", expected " +
                                 std::to_string(expected_len));
            strings.push_back(s);
        }
        if (!issues.empty()) throw ValidationError(std::move(issues));
        labeling = Labeling::from_strings(strings);
    }

    std::string name;
    if (doc.contains("name")) {
        if (!doc["name"].is_string()) fail("name: expected a string");
        name = doc["name"].get<std::string>();
    }

    return validate(Constellation(dimension, std::move(coords)), std::move(dist),
                    std::move(labeling), std::move(name));
}

Bundle load_constellation(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    try {
        return parse_constellation(buffer.str());
    } catch (const ParseError& e) {
        throw ParseError(path.string() + ": " + e.what());
    }
}

std::string serialize_constellation(const Bundle& bundle) {
    json doc;
    if (!bundle.name.empty()) doc["name"] = bundle.name;
    doc["dimension"] = bundle.dimension();
    json points = json::array();
    for (std::size_t i = 0; i < bundle.size(); ++i) {
        json row = json::array();
        for (double c : bundle.constellation.point(i)) row.push_back(c);
        points.push_back(std::move(row));
    }
    doc["points"] = std::move(points);
    doc["probs"] = bundle.distribution.probs;
    if (bundle.labeling) {
        json labels = json::array();
        for (std::size_t i = 0; i < bundle.size(); ++i)
            labels.push_back(bundle.labeling->word_string(i));
        doc["labels"] = std::move(labels);
    }
    return doc.dump(2) + "\n";
}

std::string format_full(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

}  // namespace cep
