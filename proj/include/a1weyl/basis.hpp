#pragma once

#include <algorithm>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "a1weyl/length.hpp"

// Root bases of the baby system: validation, the fundamental basis, the
// action of W on bases, the conjugation-invariant coordinate matrix of the
// sigma_j, conjugator search, and the pairwise non-conjugate family Pi_n.

namespace a1weyl {

using IntMatrix = std::vector<std::vector<Int>>;

/// Fraction-free (Bareiss) determinant; exact over the integers.
inline Int determinant(IntMatrix a) {
    const std::size_t n = a.size();
    Int sign = 1, prev = 1;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (a[k][k] == 0) {
            std::size_t pivot = k + 1;
            while (pivot < n && a[pivot][k] == 0) ++pivot;
            if (pivot == n) return 0;
            std::swap(a[k], a[pivot]);
            sign = -sign;
        }
        for (std::size_t i = k + 1; i < n; ++i)
            for (std::size_t j = k + 1; j < n; ++j)
                a[i][j] = checked_sub(checked_mul(a[i][j], a[k][k]), checked_mul(a[i][k], a[k][j])) / prev;
        prev = a[k][k];
    }
    return checked_mul(sign, a[n - 1][n - 1]);
}

/// Columns are the elements' coordinates in the ambient basis
/// (eps, sigma_1, ..., sigma_nu).
inline IntMatrix coordinate_matrix(const std::vector<RootVector>& elements) {
    const std::size_t nu = elements.front().nullity();
    IntMatrix m(nu + 1, std::vector<Int>(elements.size(), 0));
    for (std::size_t c = 0; c < elements.size(); ++c) {
        m[0][c] = elements[c].k();
        for (std::size_t r = 1; r <= nu; ++r) m[r][c] = elements[c].sigma().coords()[r - 1];
    }
    return m;
}

/// Cramer solve of m x = rhs for a matrix of determinant +-1; everything
/// stays integral.
inline std::vector<Int> solve_unimodular(const IntMatrix& m, const std::vector<Int>& rhs, Int det_m) {
    const std::size_t n = m.size();
    std::vector<Int> x(n);
    for (std::size_t i = 0; i < n; ++i) {
        IntMatrix replaced = m;
        for (std::size_t r = 0; r < n; ++r) replaced[r][i] = rhs[r];
        x[i] = checked_mul(determinant(std::move(replaced)), det_m);
    }
    return x;
}

/// A root basis is a Z-basis of the ambient group consisting of
/// non-isotropic baby-system roots in which every strictly positive
/// isotropic root has non-negative coordinates. Checking the generators
/// sigma_j suffices: the strictly positive isotropic roots are exactly
/// their non-negative combinations and coordinates are additive.
inline bool is_root_basis(const std::vector<RootVector>& candidate) {
    if (candidate.empty()) throw std::invalid_argument("root basis candidate must not be empty");
    const std::size_t nu = candidate.front().nullity();
    for (const auto& a : candidate) require_same_nullity(nu, a.nullity());
    if (candidate.size() != nu + 1)
        throw std::invalid_argument("root basis candidate needs nullity + 1 elements");
    for (const auto& a : candidate)
        if (a.is_isotropic() || !is_in_baby(a)) return false;
    const IntMatrix m = coordinate_matrix(candidate);
    const Int det = determinant(m);
    if (det != 1 && det != -1) return false;
    for (std::size_t j = 1; j <= nu; ++j) {
        std::vector<Int> rhs(nu + 1, 0);
        rhs[j] = 1;
        for (Int c : solve_unimodular(m, rhs, det))
            if (c < 0) return false;
    }
    return true;
}

class RootBasis {
public:
    explicit RootBasis(std::vector<RootVector> elements) : elements_(std::move(elements)) {
        if (!is_root_basis(elements_)) throw std::invalid_argument("not a root basis");
    }

    const std::vector<RootVector>& elements() const noexcept { return elements_; }
    std::size_t nullity() const noexcept { return elements_.front().nullity(); }
    std::size_t size() const noexcept { return elements_.size(); }

    friend bool operator==(const RootBasis&, const RootBasis&) = default;

private:
    std::vector<RootVector> elements_;
};

/// Conjugacy treats a basis as a set; compare sorted copies.
inline bool equal_as_sets(const RootBasis& a, const RootBasis& b) {
    auto lhs = a.elements();
    auto rhs = b.elements();
    std::sort(lhs.begin(), lhs.end());
    std::sort(rhs.begin(), rhs.end());
    return lhs == rhs;
}

/// Pi0, the unique basis whose elements all have height 1.
inline RootBasis fundamental_basis(std::size_t nullity) {
    std::vector<RootVector> elements;
    elements.reserve(nullity + 1);
    for (std::size_t j = 0; j <= nullity; ++j) elements.push_back(pi0_root(nullity, j));
    return RootBasis(std::move(elements));
}

/// Elementwise action; the image of a root basis is again a root basis.
inline RootBasis apply_to_basis(const WeylElement& w, const RootBasis& pi) {
    std::vector<RootVector> elements;
    elements.reserve(pi.size());
    for (const auto& a : pi.elements()) elements.push_back(act(w, a));
    return RootBasis(std::move(elements));
}

/// Row j holds the coordinates of sigma_j in the basis. The rows are
/// constant on W-orbits, which is what separates the Pi_n family.
inline IntMatrix invariant_matrix(const RootBasis& pi) {
    const std::size_t nu = pi.nullity();
    const IntMatrix m = coordinate_matrix(pi.elements());
    const Int det = determinant(m);
    IntMatrix rows;
    rows.reserve(nu);
    for (std::size_t j = 1; j <= nu; ++j) {
        std::vector<Int> rhs(nu + 1, 0);
        rhs[j] = 1;
        rows.push_back(solve_unimodular(m, rhs, det));
    }
    return rows;
}

/// Searches for w with w(pi1) = pi2 as sets, trying every bijection in
/// lexicographic order. One non-isotropic pair (alpha, alpha') pins the
/// candidate down: parity = sgn(alpha') sgn(alpha) and
/// t = sgn(alpha) (p(alpha) - p(alpha')) / 2, rejected when the halving is
/// not integral; the candidate is then verified on all pairs. Absence is a
/// value, not an error.
inline std::optional<WeylElement> find_conjugator(const RootBasis& pi1, const RootBasis& pi2) {
    require_same_nullity(pi1.nullity(), pi2.nullity());
    const auto& from = pi1.elements();
    const auto& to = pi2.elements();
    std::vector<std::size_t> perm(from.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        const RootVector& src = from[0];
        const RootVector& dst = to[perm[0]];
        const LatticeVector diff = src.sigma() - dst.sigma();
        bool integral = true;
        for (Int c : diff.coords())
            if (c % 2 != 0) integral = false;
        if (!integral) continue;
        std::vector<Int> t(diff.coords().size());
        for (std::size_t i = 0; i < t.size(); ++i) t[i] = checked_mul(src.k(), diff.coords()[i] / 2);
        const WeylElement candidate(checked_mul(src.k(), dst.k()), LatticeVector(std::move(t)));
        bool ok = true;
        for (std::size_t i = 0; ok && i < from.size(); ++i)
            if (act(candidate, from[i]) != to[perm[i]]) ok = false;
        if (ok) return candidate;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

/// The family Pi_n (nullity >= 2, n > 1) of pairwise non-conjugate bases:
///   beta_0 = eps + 2 sigma_1 + 2 sigma_2
///   beta_1 = -eps - sigma_1 - 2n sigma_2
///   beta_2 = -eps - 2 sigma_1 - sigma_2
///   beta_i = -eps - 2 sigma_1 - 2 sigma_2 + sigma_i   (3 <= i <= nullity)
/// Its invariant matrix starts with the row (2n-1, 1, 2n-2, 0, ...), which
/// depends on n, so distinct n give distinct orbits.
inline RootBasis pi_n_family(std::size_t nullity, Int n) {
    if (nullity < 2) throw std::invalid_argument("pi_n family requires nullity >= 2");
    if (n <= 1) throw std::invalid_argument("pi_n family requires n > 1");
    std::vector<RootVector> beta;
    beta.reserve(nullity + 1);

    std::vector<Int> c0(nullity, 0);
    c0[0] = 2;
    c0[1] = 2;
    beta.emplace_back(1, LatticeVector(c0));

    std::vector<Int> c1(nullity, 0);
    c1[0] = -1;
    c1[1] = checked_mul(-2, n);
    beta.emplace_back(-1, LatticeVector(c1));

    std::vector<Int> c2(nullity, 0);
    c2[0] = -2;
    c2[1] = -1;
    beta.emplace_back(-1, LatticeVector(c2));

    for (std::size_t i = 3; i <= nullity; ++i) {
        std::vector<Int> ci(nullity, 0);
        ci[0] = -2;
        ci[1] = -2;
        ci[i - 1] = 1;
        beta.emplace_back(-1, LatticeVector(ci));
    }
    return RootBasis(std::move(beta));
}

}  // namespace a1weyl
