#pragma once

#include <algorithm>
#include <cstdlib>
#include <tuple>
#include <unordered_map>
#include <utility>
#include <vector>

#include "a1weyl/length.hpp"

// Independent brute-force verifiers. bfs_lengths computes literal shortest
// words over a reflection generating set, keyed by canonical form, and is
// deliberately ignorant of the height machinery; verify_length_formula pits it
// against the closed-form length. inversion_count_nu1 is the classical
// nullity-1 characterization (positive roots sent negative), a third route.

namespace a1weyl {

struct BfsEntry {
    Int distance;
    std::vector<std::size_t> witness;  // generator indices, applied left to right
};

struct BfsResult {
    std::unordered_map<WeylElement, BfsEntry, WeylElementHash> reached;
    std::vector<std::size_t> level_sizes;  // level_sizes[d] = elements at distance d
};

/// Breadth-first search of the Cayley graph from the identity. Generators
/// must be reflections (parity -1); those are their own inverses, so right
/// multiplication explores the full ball. Witnesses extend parent witnesses,
/// generators tried in list order, which makes the result deterministic.
inline BfsResult bfs_lengths(const std::vector<WeylElement>& generators, Int depth) {
    if (generators.empty()) throw std::invalid_argument("generator list must not be empty");
    if (depth < 0) throw std::invalid_argument("depth must be non-negative");
    const std::size_t nu = generators.front().nullity();
    for (const auto& g : generators) {
        require_same_nullity(nu, g.nullity());
        if (g.parity() != -1)
            throw std::invalid_argument("generators must be reflections (involutions of parity -1)");
    }

    BfsResult result;
    std::vector<WeylElement> frontier{identity_element(nu)};
    result.reached.emplace(frontier.front(), BfsEntry{0, {}});
    result.level_sizes.push_back(1);

    for (Int d = 1; d <= depth; ++d) {
        std::vector<WeylElement> next;
        for (const auto& w : frontier) {
            const auto& parent_witness = result.reached.at(w).witness;
            for (std::size_t gi = 0; gi < generators.size(); ++gi) {
                WeylElement v = multiply(w, generators[gi]);
                if (result.reached.contains(v)) continue;
                std::vector<std::size_t> witness = parent_witness;
                witness.push_back(gi);
                result.reached.emplace(v, BfsEntry{d, std::move(witness)});
                next.push_back(std::move(v));
            }
        }
        result.level_sizes.push_back(next.size());
        frontier = std::move(next);
    }
    return result;
}

struct LengthReport {
    WeylElement element;
    Int formula_length;
    Int bfs_distance;
    Pi0Word witness;
    bool agree;
};

/// One report per element in the Pi0 ball of the given radius, disagreeing
/// elements first, then by distance and canonical form.
inline std::vector<LengthReport> verify_length_formula(std::size_t nullity, Int depth) {
    const BfsResult bfs = bfs_lengths(pi0_generators(nullity), depth);
    std::vector<LengthReport> reports;
    reports.reserve(bfs.reached.size());
    for (const auto& [element, entry] : bfs.reached) {
        const Int formula = length_pi0(element);
        reports.push_back({element, formula, entry.distance, Pi0Word(nullity, entry.witness),
                           formula == entry.distance});
    }
    std::sort(reports.begin(), reports.end(), [](const LengthReport& a, const LengthReport& b) {
        return std::tuple(a.agree, a.bfs_distance, a.element) <
               std::tuple(b.agree, b.bfs_distance, b.element);
    });
    return reports;
}

/// Number of positive roots k*eps + m*sigma_1 with |m| <= bound that w sends
/// negative. Stable in the bound once it exceeds the length of w, where it
/// equals length_pi0(w); isotropic roots are fixed and never counted.
inline Int inversion_count_nu1(const WeylElement& w, Int bound) {
    if (w.nullity() != 1)
        throw std::invalid_argument("inversion counting is defined for nullity 1 only");
    if (bound < 0) throw std::invalid_argument("bound must be non-negative");
    Int count = 0;
    for (Int k = -1; k <= 1; ++k) {
        for (Int m = -bound; m <= bound; ++m) {
            if (k == 0 && m == 0) continue;
            const RootVector alpha(k, LatticeVector({m}));
            if (is_positive(alpha) && is_negative(act(w, alpha))) ++count;
        }
    }
    return count;
}

/// Closed-form affine length: 2|n| for the n-th power of the fundamental
/// translation (s = 0) and |2n + 1| for its eps-twist (s = 1). In canonical
/// form those are (parity (-1)^s, t = n*sigma_1).
inline Int classical_affine_length(Int s, Int n) {
    if (s != 0 && s != 1) throw std::invalid_argument("s must be 0 or 1");
    if (s == 0) return checked_mul(2, std::abs(n));
    return std::abs(checked_add(checked_mul(2, n), 1));
}

/// Pi0 coordinates of the image of k*eps + m*sigma_1 under the n-th power of
/// the fundamental translation: (m - (2n-1)k, m - 2nk).
inline std::pair<Int, Int> affine_translation_action(Int n, Int m, Int k) {
    if (!is_in_toroidal(k)) throw std::invalid_argument("k must be -1, 0 or 1");
    const Int shift = checked_mul(checked_mul(2, n), k);
    return {checked_add(checked_sub(m, shift), k), checked_sub(m, shift)};
}

/// The eps-twisted variant: (m - (2n+1)k, m - 2nk).
inline std::pair<Int, Int> affine_twisted_action(Int n, Int m, Int k) {
    if (!is_in_toroidal(k)) throw std::invalid_argument("k must be -1, 0 or 1");
    const Int shift = checked_mul(checked_mul(2, n), k);
    return {checked_sub(checked_sub(m, shift), k), checked_sub(m, shift)};
}

}  // namespace a1weyl
