#pragma once

#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "json.hpp"

#include "a1weyl/basis.hpp"
#include "a1weyl/oracle.hpp"

// Wire formats shared by the CLI and the tests:
//   WeylElement  {"eps": +-1, "t": [int, ...]}
//   RootVector   {"k": -1|0|1, "sigma": [int, ...]}
//   Word         [RootVector, ...]
//   Pi0Word      [int, ...]
//   RootBasis    [RootVector, ...]
//   LengthReport one JSON object per line
// Parsing validates types strictly; diagnostics distinguish malformed JSON
// from structurally wrong input.

namespace a1weyl {

inline void to_json(nlohmann::json& j, const LatticeVector& v) { j = v.coords(); }

inline void to_json(nlohmann::json& j, const RootVector& a) {
    j = nlohmann::json{{"k", a.k()}, {"sigma", a.sigma()}};
}

inline void to_json(nlohmann::json& j, const WeylElement& w) {
    j = nlohmann::json{{"eps", w.parity()}, {"t", w.translation()}};
}

inline void to_json(nlohmann::json& j, const Word& w) { j = w.letters(); }

inline void to_json(nlohmann::json& j, const Pi0Word& w) { j = w.indices(); }

inline void to_json(nlohmann::json& j, const RootBasis& b) { j = b.elements(); }

inline void to_json(nlohmann::json& j, const LengthReport& r) {
    j = nlohmann::json{{"element", r.element},
                       {"formula_length", r.formula_length},
                       {"bfs_distance", r.bfs_distance},
                       {"witness", r.witness},
                       {"agree", r.agree}};
}

namespace detail {
inline Int json_int(const nlohmann::json& j, const char* what) {
    if (!j.is_number_integer())
        throw std::invalid_argument(std::string(what) + " must be an integer");
    if (j.is_number_unsigned() &&
        j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<Int>::max()))
        throw std::invalid_argument(std::string(what) + " is out of range");
    return j.get<Int>();
}
}  // namespace detail

inline LatticeVector parse_lattice(const nlohmann::json& j, const char* what = "lattice vector") {
    if (!j.is_array() || j.empty())
        throw std::invalid_argument(std::string(what) + " must be a non-empty integer array");
    std::vector<Int> coords;
    coords.reserve(j.size());
    for (const auto& x : j) coords.push_back(detail::json_int(x, what));
    return LatticeVector(std::move(coords));
}

inline WeylElement parse_element(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("eps") || !j.contains("t"))
        throw std::invalid_argument(R"(element must be an object {"eps": +-1, "t": [...]})");
    return WeylElement(detail::json_int(j["eps"], "\"eps\""), parse_lattice(j["t"], "\"t\""));
}

inline RootVector parse_root(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("k") || !j.contains("sigma"))
        throw std::invalid_argument(R"(root must be an object {"k": -1|0|1, "sigma": [...]})");
    return RootVector(detail::json_int(j["k"], "\"k\""), parse_lattice(j["sigma"], "\"sigma\""));
}

inline std::vector<RootVector> parse_root_list(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("expected a JSON array of roots");
    std::vector<RootVector> roots;
    roots.reserve(j.size());
    for (const auto& x : j) roots.push_back(parse_root(x));
    return roots;
}

inline Word parse_word(const nlohmann::json& j, std::size_t nullity) {
    return Word(nullity, parse_root_list(j));
}

}  // namespace a1weyl
