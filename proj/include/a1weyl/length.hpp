#pragma once

#include <cassert>
#include <cstdlib>
#include <utility>
#include <vector>

#include "a1weyl/height.hpp"

// Length of Weyl group elements over the fundamental generators, i.e. the
// reflections based on Pi0 = {eps, sigma_1 - eps, ..., sigma_nu - eps}, with
// a constructive minimal word. The closed form is
//
//     length(w) = |height(eps + t(w))| - sign(height(eps + t(w))) * d,
//
// d = 1 for even elements and 0 for odd ones. The BFS oracle checks it
// against literal Cayley-graph distance.

namespace a1weyl {

/// Word over the fundamental generator indices 0..nu (0 names the reflection
/// based on eps, j >= 1 the one based on sigma_j - eps).
class Pi0Word {
public:
    explicit Pi0Word(std::size_t nullity) : nullity_(detail::require_nullity(nullity)) {}

    Pi0Word(std::size_t nullity, std::vector<std::size_t> indices) : Pi0Word(nullity) {
        for (std::size_t j : indices)
            if (j > nullity_) throw std::invalid_argument("generator index out of range");
        indices_ = std::move(indices);
    }

    std::size_t nullity() const noexcept { return nullity_; }
    std::size_t size() const noexcept { return indices_.size(); }
    bool empty() const noexcept { return indices_.empty(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }

    friend bool operator==(const Pi0Word&, const Pi0Word&) = default;

private:
    std::size_t nullity_;
    std::vector<std::size_t> indices_;
};

/// The j-th fundamental root: eps for j = 0, sigma_j - eps for j >= 1.
/// These are exactly the roots of height 1.
inline RootVector pi0_root(std::size_t nullity, std::size_t j) {
    if (j > nullity) throw std::invalid_argument("generator index out of range");
    if (j == 0) return RootVector::epsilon(nullity);
    return RootVector(-1, LatticeVector::basis_vector(nullity, j));
}

inline WeylElement pi0_generator(std::size_t nullity, std::size_t j) {
    return reflection(pi0_root(nullity, j));
}

inline std::vector<WeylElement> pi0_generators(std::size_t nullity) {
    std::vector<WeylElement> gens;
    gens.reserve(nullity + 1);
    for (std::size_t j = 0; j <= nullity; ++j) gens.push_back(pi0_generator(nullity, j));
    return gens;
}

inline WeylElement evaluate_pi0_word(const Pi0Word& word) {
    WeylElement w = identity_element(word.nullity());
    for (std::size_t j : word.indices()) w = multiply(w, pi0_generator(word.nullity(), j));
    return w;
}

inline Int length_pi0(const WeylElement& w) {
    const Int h = height(RootVector(1, w.translation()));
    const Int d = w.parity() == 1 ? 1 : 0;
    const Int sign = (h > 0) - (h < 0);  // h is never 0, but keep the function total
    return checked_sub(std::abs(h), sign * d);
}

inline Int reflection_length(const RootVector& alpha) {
    if (alpha.is_isotropic())
        throw std::invalid_argument("reflection length requires a non-isotropic root");
    return std::abs(height(alpha));
}

/// Minimal Pi0-word for w, built by slot filling. A generator j >= 1 sitting
/// at position s of a length-k word contributes sigma_j to the translation
/// part when k - s is odd and -sigma_j when k - s is even, while index 0
/// contributes nothing. So for odd k (odd elements) every positive
/// translation coordinate goes to even positions and every negative one to
/// odd positions; for even k the roles flip; whichever side has slots left
/// over is padded with index 0. The word length is the closed-form length,
/// and the counts always fit exactly. Slots fill left to right with
/// generator indices ascending, which pins the word down uniquely.
inline Pi0Word reduced_word_pi0(const WeylElement& w) {
    const std::size_t nu = w.nullity();
    const auto& m = w.translation().coords();
    const bool odd_word = w.parity() == -1;
    const Int len = odd_word ? std::abs(height(RootVector(1, w.translation())))
                             : std::abs(height_radical(w.translation()));

    std::vector<std::size_t> positives, negatives;  // generator indices, with multiplicity
    for (std::size_t j = 1; j <= nu; ++j) {
        for (Int c = 0; c < m[j - 1]; ++c) positives.push_back(j);
        for (Int c = 0; c < -m[j - 1]; ++c) negatives.push_back(j);
    }

    std::vector<std::size_t> word(static_cast<std::size_t>(len), 0);
    std::size_t next_pos = 0, next_neg = 0;
    for (Int s = 1; s <= len; ++s) {
        const bool odd_position = s % 2 == 1;
        const bool wants_positive = odd_word ? !odd_position : odd_position;
        std::size_t& cursor = wants_positive ? next_pos : next_neg;
        const auto& source = wants_positive ? positives : negatives;
        if (cursor < source.size()) word[static_cast<std::size_t>(s) - 1] = source[cursor++];
    }
    assert(next_pos == positives.size() && next_neg == negatives.size());
    return Pi0Word(nu, std::move(word));
}

/// P_i and N_i count occurrences of generator i in odd and even positions
/// (1-based). For any word evaluating to w, the translation coordinates obey
/// m_i = (-1)^k (P_i - N_i).
inline std::pair<std::vector<Int>, std::vector<Int>> word_position_counts(const Pi0Word& word) {
    std::vector<Int> odd_counts(word.nullity() + 1, 0), even_counts(word.nullity() + 1, 0);
    for (std::size_t s = 1; s <= word.size(); ++s) {
        auto& side = s % 2 == 1 ? odd_counts : even_counts;
        ++side[word.indices()[s - 1]];
    }
    return {std::move(odd_counts), std::move(even_counts)};
}

/// Length over the conjugated generator set {reflection(w0(alpha_j))}: equal
/// to the Pi0-length of w0^-1 w w0. Conjugating explicitly keeps this exact
/// for every w0 without a separate closed form.
inline Int length_wrt_conjugated_basis(const WeylElement& w0, const WeylElement& w) {
    return length_pi0(multiply(multiply(inverse(w0), w), w0));
}

}  // namespace a1weyl
