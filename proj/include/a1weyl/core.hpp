#pragma once

#include <cstddef>
#include <functional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "a1weyl/lattice.hpp"

// Exact arithmetic in the Weyl group W of the toroidal type-A1 root system
// on the free abelian group spanned by eps, sigma_1, ..., sigma_nu.
//
// Every group element has a faithful canonical form (parity, t): parity is
// the sign of any expression of w as a product of reflections, and t is the
// radical drift of w. Two elements are equal in W exactly when their
// canonical forms agree, so equality, hashing and set membership are O(nu).
//
// The governing identities, all exercised by the test suite:
//   w(alpha)      = parity(w) * sgn(alpha) * eps + p(alpha) - 2 sgn(alpha) t(w)
//   t(w1 w2)      = parity(w2) t(w1) + t(w2)
//   t(w^-1)       = -parity(w) t(w)
//   w_alpha       = (parity -1, t = sgn(alpha) p(alpha))        for alpha non-isotropic

namespace a1weyl {

/// Root kε + σ of the toroidal system: k is the sgn-coefficient (in
/// {-1, 0, 1}), sigma the radical part. Isotropic means k = 0.
class RootVector {
public:
    RootVector(Int k, LatticeVector sigma) : k_(k), sigma_(std::move(sigma)) {
        if (k_ < -1 || k_ > 1) throw std::invalid_argument("sgn coefficient must be -1, 0 or 1");
    }

    static RootVector epsilon(std::size_t nullity) { return RootVector(1, LatticeVector::zero(nullity)); }
    static RootVector isotropic(LatticeVector sigma) { return RootVector(0, std::move(sigma)); }

    Int k() const noexcept { return k_; }
    const LatticeVector& sigma() const noexcept { return sigma_; }
    std::size_t nullity() const noexcept { return sigma_.nullity(); }

    bool is_isotropic() const noexcept { return k_ == 0; }
    bool is_zero() const noexcept { return k_ == 0 && sigma_.is_zero(); }

    RootVector operator-() const { return RootVector(-k_, -sigma_); }

    friend bool operator==(const RootVector&, const RootVector&) = default;
    friend auto operator<=>(const RootVector&, const RootVector&) = default;

private:
    Int k_;
    LatticeVector sigma_;
};

/// Canonical form (parity, t) of a Weyl group element. parity is +1 for even
/// products of reflections and -1 for odd ones; t is the radical drift.
/// The map w -> parity * (eps + t) is a bijection onto the non-isotropic
/// roots, so the pair determines the element.
class WeylElement {
public:
    WeylElement(Int parity, LatticeVector t) : parity_(parity), t_(std::move(t)) {
        if (parity_ != 1 && parity_ != -1) throw std::invalid_argument("parity must be -1 or +1");
    }

    Int parity() const noexcept { return parity_; }
    const LatticeVector& translation() const noexcept { return t_; }
    std::size_t nullity() const noexcept { return t_.nullity(); }

    bool is_identity() const noexcept { return parity_ == 1 && t_.is_zero(); }

    friend bool operator==(const WeylElement&, const WeylElement&) = default;
    friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

private:
    Int parity_;
    LatticeVector t_;
};

struct WeylElementHash {
    std::size_t operator()(const WeylElement& w) const noexcept {
        std::size_t h = static_cast<std::size_t>(w.parity() + 3);
        for (Int c : w.translation().coords())
            h = h * 1099511628211ull ^ std::hash<Int>{}(c);
        return h;
    }
};

/// Product of reflections, kept as the defining sequence of non-isotropic
/// roots. An empty word still carries its ambient nullity.
class Word {
public:
    explicit Word(std::size_t nullity) : nullity_(detail::require_nullity(nullity)) {}

    Word(std::size_t nullity, std::vector<RootVector> letters) : Word(nullity) {
        letters_.reserve(letters.size());
        for (auto& letter : letters) push_back(std::move(letter));
    }

    void push_back(RootVector letter) {
        require_same_nullity(nullity_, letter.nullity());
        if (letter.is_isotropic())
            throw std::invalid_argument("word letters must be non-isotropic roots");
        letters_.push_back(std::move(letter));
    }

    std::size_t nullity() const noexcept { return nullity_; }
    std::size_t size() const noexcept { return letters_.size(); }
    bool empty() const noexcept { return letters_.empty(); }
    const std::vector<RootVector>& letters() const noexcept { return letters_; }

    friend bool operator==(const Word&, const Word&) = default;

private:
    std::size_t nullity_;
    std::vector<RootVector> letters_;
};

/// (beta, alpha^vee) = (beta, alpha) = 2 sgn(beta) sgn(alpha). The form is
/// determined by the sgn coefficients alone; the radical pairs to zero.
inline Int pairing(const RootVector& beta, const RootVector& alpha) {
    require_same_nullity(beta.nullity(), alpha.nullity());
    return 2 * beta.k() * alpha.k();
}

/// Canonical form of the reflection based on a non-isotropic root.
/// Isotropic roots are rejected: their "reflection" is the identity map,
/// which is not an odd element, and silently accepting them would mask data
/// errors in words.
inline WeylElement reflection(const RootVector& alpha) {
    if (alpha.is_isotropic())
        throw std::invalid_argument("reflection requires a non-isotropic root; use identity_element for the identity");
    return WeylElement(-1, alpha.sigma().scaled(alpha.k()));
}

inline WeylElement identity_element(std::size_t nullity) {
    return WeylElement(1, LatticeVector::zero(nullity));
}

/// Group product in canonical form: t(w1 w2) = parity(w2) t(w1) + t(w2).
inline WeylElement multiply(const WeylElement& w1, const WeylElement& w2) {
    require_same_nullity(w1.nullity(), w2.nullity());
    return WeylElement(w1.parity() * w2.parity(),
                       w1.translation().scaled(w2.parity()) + w2.translation());
}

inline WeylElement operator*(const WeylElement& w1, const WeylElement& w2) { return multiply(w1, w2); }

/// t(w^-1) = -parity(w) t(w); odd elements are involutions.
inline WeylElement inverse(const WeylElement& w) {
    return WeylElement(w.parity(), w.translation().scaled(-w.parity()));
}

/// w1 w2 w1^-1.
inline WeylElement conjugate(const WeylElement& w1, const WeylElement& w2) {
    return multiply(multiply(w1, w2), inverse(w1));
}

/// Action on roots: w(alpha) = parity sgn(alpha) eps + p(alpha) - 2 sgn(alpha) t.
/// Isotropic roots are fixed pointwise.
inline RootVector act(const WeylElement& w, const RootVector& alpha) {
    require_same_nullity(w.nullity(), alpha.nullity());
    return RootVector(w.parity() * alpha.k(),
                      alpha.sigma() - w.translation().scaled(2 * alpha.k()));
}

/// Left-to-right product of the reflections based on the letters.
inline WeylElement evaluate_word(const Word& word) {
    WeylElement w = identity_element(word.nullity());
    for (const RootVector& letter : word.letters()) w = multiply(w, reflection(letter));
    return w;
}

/// Closed form of the same product: parity (-1)^n and the alternating sum
/// sum_i (-1)^(n-i) sgn(alpha_i) p(alpha_i). Agreement with evaluate_word is
/// the well-definedness of the canonical form and is tested as a property.
inline WeylElement word_epsilon_T(const Word& word) {
    const std::size_t n = word.size();
    LatticeVector t = LatticeVector::zero(word.nullity());
    for (std::size_t i = 1; i <= n; ++i) {
        const RootVector& a = word.letters()[i - 1];
        const Int sign = ((n - i) % 2 == 0 ? 1 : -1) * a.k();
        t = t + a.sigma().scaled(sign);
    }
    return WeylElement(n % 2 == 0 ? 1 : -1, t);
}

/// Shortest defining word of the canonical form: empty for the identity,
/// [eps + t] for odd elements, [eps, eps + t] for even ones.
inline Word canonical_word(const WeylElement& w) {
    Word word(w.nullity());
    if (w.is_identity()) return word;
    if (w.parity() == 1) word.push_back(RootVector::epsilon(w.nullity()));
    word.push_back(RootVector(1, w.translation()));
    return word;
}

/// A word multiplies to the identity exactly when its length is even and
/// sum_i (-1)^i sgn(alpha_i) p(alpha_i) = 0; these are all the relations.
inline bool is_alternating(const Word& word) {
    if (word.size() % 2 != 0) return false;
    LatticeVector s = LatticeVector::zero(word.nullity());
    for (std::size_t i = 1; i <= word.size(); ++i) {
        const RootVector& a = word.letters()[i - 1];
        const Int sign = (i % 2 == 0 ? 1 : -1) * a.k();
        s = s + a.sigma().scaled(sign);
    }
    return s.is_zero();
}

}  // namespace a1weyl
