#pragma once

#include <compare>
#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "a1weyl/checked_int.hpp"

namespace a1weyl {

namespace detail {
inline std::size_t require_nullity(std::size_t nullity) {
    if (nullity == 0) throw std::invalid_argument("nullity must be at least 1");
    return nullity;
}
}  // namespace detail

inline void require_same_nullity(std::size_t a, std::size_t b) {
    if (a != b) throw std::invalid_argument("nullity mismatch");
}

/// Element of the radical lattice, stored as coordinates in the fixed basis
/// sigma_1, ..., sigma_nu. The nullity nu is the coordinate count; values of
/// different nullity never mix.
class LatticeVector {
public:
    explicit LatticeVector(std::vector<Int> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) throw std::invalid_argument("nullity must be at least 1");
    }

    static LatticeVector zero(std::size_t nullity) {
        return LatticeVector(std::vector<Int>(detail::require_nullity(nullity), 0));
    }

    /// sigma_j, 1 <= j <= nullity.
    static LatticeVector basis_vector(std::size_t nullity, std::size_t j) {
        detail::require_nullity(nullity);
        if (j < 1 || j > nullity) throw std::invalid_argument("lattice basis index out of range");
        std::vector<Int> v(nullity, 0);
        v[j - 1] = 1;
        return LatticeVector(std::move(v));
    }

    std::size_t nullity() const noexcept { return coords_.size(); }
    const std::vector<Int>& coords() const noexcept { return coords_; }

    bool is_zero() const noexcept {
        for (Int c : coords_)
            if (c != 0) return false;
        return true;
    }

    LatticeVector operator+(const LatticeVector& other) const {
        require_same_nullity(nullity(), other.nullity());
        std::vector<Int> r(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_add(coords_[i], other.coords_[i]);
        return LatticeVector(std::move(r));
    }

    LatticeVector operator-(const LatticeVector& other) const {
        require_same_nullity(nullity(), other.nullity());
        std::vector<Int> r(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_sub(coords_[i], other.coords_[i]);
        return LatticeVector(std::move(r));
    }

    LatticeVector operator-() const { return scaled(-1); }

    LatticeVector scaled(Int c) const {
        std::vector<Int> r(coords_.size());
        for (std::size_t i = 0; i < coords_.size(); ++i) r[i] = checked_mul(coords_[i], c);
        return LatticeVector(std::move(r));
    }

    friend bool operator==(const LatticeVector&, const LatticeVector&) = default;
    friend auto operator<=>(const LatticeVector&, const LatticeVector&) = default;

private:
    std::vector<Int> coords_;
};

}  // namespace a1weyl
