#pragma once

#include <algorithm>
#include <cstdlib>
#include <utility>
#include <vector>

#include "a1weyl/core.hpp"

// Height and positivity for the toroidal system, plus membership tests and
// bounded enumeration. The absolute height of a root equals the l1-norm of
// its coordinates in the fundamental basis Pi0 = {eps, sigma_1 - eps, ...,
// sigma_nu - eps}; that identity is what makes the closed-form length
// formula work and is checked exhaustively by the tests.

namespace a1weyl {

struct HeightBreakdown {
    Int m_plus;   // sum of the positive coordinates of p(alpha), >= 0
    Int m_minus;  // sum of the negative coordinates of p(alpha), <= 0
    Int height;
};

inline std::pair<Int, Int> m_plus_minus(const LatticeVector& sigma) {
    Int mp = 0, mm = 0;
    for (Int c : sigma.coords()) {
        if (c > 0) mp = checked_add(mp, c);
        if (c < 0) mm = checked_add(mm, c);
    }
    return {mp, mm};
}

/// Height of an isotropic vector: 2 m_plus when the positive mass dominates
/// (ties included), 2 m_minus otherwise.
inline Int height_radical(const LatticeVector& sigma) {
    const auto [mp, mm] = m_plus_minus(sigma);
    return mp >= -mm ? checked_mul(2, mp) : checked_mul(2, mm);
}

/// Height of a root kε + σ. For k = -1 with balanced positive and negative
/// mass the radical height enters with the opposite sign; in every other
/// case it is k + height_radical(σ). Nonzero roots have nonzero height.
inline Int height(const RootVector& alpha) {
    const auto [mp, mm] = m_plus_minus(alpha.sigma());
    const Int ht0 = mp >= -mm ? checked_mul(2, mp) : checked_mul(2, mm);
    if (alpha.k() == -1 && mp == -mm) return checked_sub(alpha.k(), ht0);
    return checked_add(alpha.k(), ht0);
}

inline HeightBreakdown height_breakdown(const RootVector& alpha) {
    const auto [mp, mm] = m_plus_minus(alpha.sigma());
    return {mp, mm, height(alpha)};
}

/// Coordinates of alpha in the fundamental basis: n_0 = k + sum m_i and
/// n_i = m_i for i >= 1. Reconstruction and the l1 identity
/// sum |n_i| = |height(alpha)| are test properties.
inline std::vector<Int> pi0_coordinates(const RootVector& alpha) {
    const auto& m = alpha.sigma().coords();
    std::vector<Int> n(alpha.nullity() + 1);
    Int sum = 0;
    for (Int c : m) sum = checked_add(sum, c);
    n[0] = checked_add(alpha.k(), sum);
    std::copy(m.begin(), m.end(), n.begin() + 1);
    return n;
}

/// Positivity of a nonzero root: the coordinate sum of the radical part must
/// be >= 0, strictly so when k = -1. Equivalent to height > 0.
inline bool is_positive(const RootVector& alpha) {
    if (alpha.is_zero()) throw std::invalid_argument("the zero root is neither positive nor negative");
    const auto [mp, mm] = m_plus_minus(alpha.sigma());
    const Int sum = checked_add(mp, mm);
    return alpha.k() == -1 ? sum > 0 : sum >= 0;
}

inline bool is_negative(const RootVector& alpha) { return !is_positive(alpha); }

inline bool is_strictly_positive_isotropic(const LatticeVector& sigma) {
    if (sigma.is_zero()) return false;
    for (Int c : sigma.coords())
        if (c < 0) return false;
    return true;
}

/// Admissible sgn coefficients of the toroidal system. RootVector enforces
/// this at construction, so the RootVector overload always holds.
constexpr bool is_in_toroidal(Int k) noexcept { return k >= -1 && k <= 1; }

inline bool is_in_toroidal(const RootVector& alpha) noexcept { return is_in_toroidal(alpha.k()); }

/// Membership in the baby system. Its semilattice is the union of the
/// cosets sigma_i + 2*Lattice (sigma_0 = 0), so modulo 2 a radical part may
/// have at most one odd coordinate next to a non-isotropic eps-part, and at
/// most two (a coset sum) when isotropic.
inline bool is_in_baby(const RootVector& alpha) noexcept {
    std::size_t odd = 0;
    for (Int c : alpha.sigma().coords())
        if (c % 2 != 0) ++odd;
    return alpha.is_isotropic() ? odd <= 2 : odd <= 1;
}

/// All roots with |height| <= max_abs_height, in ascending lexicographic
/// order of their Pi0 coordinate vectors. The scan box |n_i| <= H is
/// complete because sum |n_i| = |height|.
inline std::vector<RootVector> enumerate_roots(std::size_t nullity, Int max_abs_height) {
    detail::require_nullity(nullity);
    if (max_abs_height < 0) throw std::invalid_argument("max_abs_height must be non-negative");
    std::vector<RootVector> out;
    std::vector<Int> n(nullity + 1, -max_abs_height);
    for (;;) {
        Int radical_sum = 0;
        for (std::size_t i = 1; i <= nullity; ++i) radical_sum = checked_add(radical_sum, n[i]);
        const Int k = checked_sub(n[0], radical_sum);
        if (is_in_toroidal(k)) {
            RootVector alpha(k, LatticeVector(std::vector<Int>(n.begin() + 1, n.end())));
            if (std::abs(height(alpha)) <= max_abs_height) out.push_back(std::move(alpha));
        }
        // odometer with n[0] most significant
        std::size_t i = nullity + 1;
        while (i > 0 && n[i - 1] == max_abs_height) n[--i] = -max_abs_height;
        if (i == 0) break;
        ++n[i - 1];
    }
    return out;
}

}  // namespace a1weyl
