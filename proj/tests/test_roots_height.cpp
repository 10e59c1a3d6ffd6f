#include "doctest.h"

#include <algorithm>
#include <set>

#include "test_util.hpp"

using namespace a1weyl;
using namespace a1weyl::testing;

namespace {

LatticeVector lv(std::vector<Int> c) { return LatticeVector(std::move(c)); }
RootVector rv(Int k, std::vector<Int> c) { return RootVector(k, lv(std::move(c))); }

/// Rebuild a root from its Pi0 coordinates: alpha = sum n_j * pi0_root(j).
RootVector from_pi0_coordinates(std::size_t nullity, const std::vector<Int>& n) {
    Int k = n[0];
    std::vector<Int> sigma(nullity, 0);
    for (std::size_t j = 1; j <= nullity; ++j) {
        k -= n[j];
        sigma[j - 1] += n[j];
    }
    return RootVector(k, LatticeVector(std::move(sigma)));
}

/// Baby-system membership straight from the coset definition: the radical
/// part must land in a sum of at most (2 - |k|) cosets sigma_i + 2*Lattice.
bool baby_membership_oracle(const RootVector& alpha) {
    const std::size_t nu = alpha.nullity();
    auto mod2 = [&](const std::vector<Int>& v) {
        std::vector<Int> r(v.size());
        for (std::size_t i = 0; i < v.size(); ++i) r[i] = ((v[i] % 2) + 2) % 2;
        return r;
    };
    const auto target = mod2(alpha.sigma().coords());
    std::vector<std::vector<Int>> coset_reps;  // sigma_0 = 0, sigma_1, ..., sigma_nu
    coset_reps.emplace_back(nu, 0);
    for (std::size_t i = 1; i <= nu; ++i) {
        std::vector<Int> rep(nu, 0);
        rep[i - 1] = 1;
        coset_reps.push_back(std::move(rep));
    }
    if (!alpha.is_isotropic()) {
        return std::find(coset_reps.begin(), coset_reps.end(), target) != coset_reps.end();
    }
    for (const auto& a : coset_reps)
        for (const auto& b : coset_reps) {
            std::vector<Int> sum(nu);
            for (std::size_t i = 0; i < nu; ++i) sum[i] = (a[i] + b[i]) % 2;
            if (sum == target) return true;
        }
    return false;
}

}  // namespace

TEST_CASE("positive and negative coordinate masses") {
    CHECK(m_plus_minus(lv({0, 0})) == std::pair<Int, Int>{0, 0});
    CHECK(m_plus_minus(lv({3, -2})) == std::pair<Int, Int>{3, -2});
    CHECK(m_plus_minus(lv({1, 1, -5})) == std::pair<Int, Int>{2, -5});
}

TEST_CASE("radical height") {
    CHECK(height_radical(lv({0, 0})) == 0);
    CHECK(height_radical(lv({1, -1})) == 2);
    CHECK(height_radical(lv({1, -3})) == -6);
    // |height| of an isotropic root equals its Pi0 coordinate l1-norm
    auto gen = rng(31);
    for (int i = 0; i < 2000; ++i) {
        const auto sigma = rand_lattice(gen, 3, 9);
        Int l1 = 0;
        for (Int c : pi0_coordinates(RootVector::isotropic(sigma))) l1 += std::abs(c);
        CHECK(std::abs(height_radical(sigma)) == l1);
    }
}

TEST_CASE("height breakdown record") {
    const auto hb = height_breakdown(rv(-1, {1, -3}));
    CHECK(hb.m_plus == 1);
    CHECK(hb.m_minus == -3);
    CHECK(hb.height == -7);
    for (const auto& alpha : enumerate_roots(2, 5)) {
        const auto b = height_breakdown(alpha);
        const auto [mp, mm] = m_plus_minus(alpha.sigma());
        CHECK(b.m_plus == mp);
        CHECK(b.m_minus == mm);
        CHECK(b.m_plus >= 0);
        CHECK(b.m_minus <= 0);
        CHECK(b.height == height(alpha));
        if (!alpha.is_zero()) CHECK(b.height != 0);
    }
}

TEST_CASE("height of roots") {
    CHECK(height(RootVector::epsilon(3)) == 1);
    for (std::size_t j = 1; j <= 3; ++j) CHECK(height(pi0_root(3, j)) == 1);
    CHECK(height(rv(-1, {1, -1})) == -3);
    CHECK(height(rv(1, {2, 0})) == 5);
    CHECK(height(rv(0, {0, 0})) == 0);
    // nonzero roots have nonzero height
    for (const auto& alpha : enumerate_roots(3, 6))
        if (!alpha.is_zero()) CHECK(height(alpha) != 0);
}

TEST_CASE("pi0 coordinates and the l1 identity") {
    CHECK(pi0_coordinates(RootVector::epsilon(3)) == std::vector<Int>{1, 0, 0, 0});
    CHECK(pi0_coordinates(rv(0, {1, 0})) == std::vector<Int>{1, 1, 0});
    CHECK(pi0_coordinates(rv(-1, {1, -1})) == std::vector<Int>{-1, 1, -1});

    for (std::size_t nu = 1; nu <= 3; ++nu) {
        for (const auto& alpha : enumerate_roots(nu, 7)) {
            const auto n = pi0_coordinates(alpha);
            CHECK(from_pi0_coordinates(nu, n) == alpha);
            Int l1 = 0;
            for (Int c : n) l1 += std::abs(c);
            CHECK(l1 == std::abs(height(alpha)));
            // parity: odd l1-norm for non-isotropic roots, even for isotropic
            CHECK(l1 % 2 == (alpha.is_isotropic() ? 0 : 1));
        }
    }
}

TEST_CASE("positivity matches the sign of the height") {
    CHECK(is_positive(RootVector::epsilon(2)));
    CHECK(is_positive(rv(-1, {1, 0})));
    CHECK(is_negative(rv(-1, {1, -1})));
    CHECK_THROWS_AS(is_positive(rv(0, {0, 0})), std::invalid_argument);
    CHECK_THROWS_AS(is_negative(rv(0, {0, 0})), std::invalid_argument);

    for (std::size_t nu = 1; nu <= 3; ++nu) {
        std::size_t positives = 0, negatives = 0, zeros = 0;
        for (const auto& alpha : enumerate_roots(nu, 7)) {
            if (alpha.is_zero()) {
                ++zeros;
                continue;
            }
            const bool pos = is_positive(alpha);
            CHECK(pos == (height(alpha) > 0));
            CHECK(is_negative(alpha) == (height(alpha) < 0));
            CHECK(pos != is_negative(alpha));  // the partition is disjoint and total
            (pos ? positives : negatives)++;
        }
        CHECK(zeros == 1);
        CHECK(positives + negatives + zeros == enumerate_roots(nu, 7).size());
    }
}

TEST_CASE("height antisymmetry away from the balanced isotropic family") {
    // For non-isotropic roots height(-a) = -height(a) always; for isotropic
    // ones the identity needs unbalanced masses, and on the balanced family
    // both signs are positive of the same height.
    for (std::size_t nu = 1; nu <= 3; ++nu) {
        for (const auto& alpha : enumerate_roots(nu, 7)) {
            const auto [mp, mm] = m_plus_minus(alpha.sigma());
            if (!alpha.is_isotropic()) {
                CHECK(height(-alpha) == -height(alpha));
                CHECK(is_positive(alpha) == is_negative(-alpha));
            } else if (mp != -mm) {
                CHECK(height(-alpha) == -height(alpha));
                if (!alpha.is_zero()) CHECK(is_positive(alpha) == is_negative(-alpha));
            }
        }
    }
    const RootVector balanced = rv(0, {1, -1});
    CHECK(height(balanced) == 2);
    CHECK(height(-balanced) == 2);
    CHECK(is_positive(balanced));
    CHECK(is_positive(-balanced));
}

TEST_CASE("strictly positive isotropic roots") {
    CHECK(is_strictly_positive_isotropic(lv({1, 0})));
    CHECK_FALSE(is_strictly_positive_isotropic(lv({0, 0})));
    CHECK_FALSE(is_strictly_positive_isotropic(lv({1, -1})));
}

TEST_CASE("toroidal and baby membership") {
    CHECK(is_in_toroidal(rv(1, {5, -7})));
    CHECK_FALSE(is_in_toroidal(Int{2}));

    CHECK(is_in_baby(rv(1, {2, 2})));
    CHECK_FALSE(is_in_baby(rv(1, {1, 1})));
    CHECK(is_in_baby(rv(0, {1, 1})));

    for (std::size_t nu = 1; nu <= 3; ++nu)
        for (const auto& alpha : enumerate_roots(nu, 6))
            CHECK(is_in_baby(alpha) == baby_membership_oracle(alpha));
    auto gen = rng(32);
    for (int i = 0; i < 2000; ++i) {
        const auto alpha = rand_root(gen, 4, 9);
        CHECK(is_in_baby(alpha) == baby_membership_oracle(alpha));
    }
}

TEST_CASE("bounded root enumeration") {
    CHECK(enumerate_roots(2, 0) == std::vector<RootVector>{rv(0, {0, 0})});

    const auto depth1 = enumerate_roots(1, 1);
    const std::set<RootVector> expect1{rv(0, {0}), rv(1, {0}), rv(-1, {0}), rv(-1, {1}),
                                       rv(1, {-1})};
    CHECK(std::set<RootVector>(depth1.begin(), depth1.end()) == expect1);
    CHECK(depth1.size() == 5);

    const auto depth2 = enumerate_roots(1, 2);
    const std::set<RootVector> expect2{rv(0, {0}),  rv(1, {0}),  rv(-1, {0}), rv(-1, {1}),
                                       rv(1, {-1}), rv(0, {1}),  rv(0, {-1})};
    CHECK(std::set<RootVector>(depth2.begin(), depth2.end()) == expect2);
    CHECK(depth2.size() == 7);

    // completeness against an independent scan over (k, sigma) boxes
    for (std::size_t nu = 1; nu <= 3; ++nu) {
        const Int H = 5;
        std::set<RootVector> scan;
        std::vector<Int> sigma(nu, -H);
        for (;;) {
            for (Int k = -1; k <= 1; ++k) {
                const RootVector alpha(k, LatticeVector(sigma));
                if (std::abs(height(alpha)) <= H) scan.insert(alpha);
            }
            std::size_t i = nu;
            while (i > 0 && sigma[i - 1] == H) sigma[--i] = -H;
            if (i == 0) break;
            ++sigma[i - 1];
        }
        const auto enumerated = enumerate_roots(nu, H);
        CHECK(std::set<RootVector>(enumerated.begin(), enumerated.end()) == scan);
        CHECK(enumerated.size() == scan.size());  // no duplicates
        CHECK(std::is_sorted(enumerated.begin(), enumerated.end(),
                             [](const RootVector& a, const RootVector& b) {
                                 return pi0_coordinates(a) < pi0_coordinates(b);
                             }));
    }
    CHECK_THROWS_AS(enumerate_roots(2, -1), std::invalid_argument);
}

TEST_CASE("the root system is stable under the group action") {
    auto gen = rng(33);
    for (int i = 0; i < 2000; ++i) {
        const auto w = rand_element(gen, 3, 8);
        const auto alpha = rand_root(gen, 3, 8);
        const auto image = act(w, alpha);
        CHECK(is_in_toroidal(image));
        CHECK(std::abs(image.k()) == std::abs(alpha.k()));
        if (alpha.is_isotropic()) CHECK(image == alpha);
    }
}
