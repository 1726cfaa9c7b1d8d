#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <cstdint>
#include <random>
#include <set>
#include <utility>
#include <vector>

#include "thetalab/modular.hpp"

using namespace thetalab;

TEST_CASE("HalfPlanePoint validates its arguments") {
    CHECK_THROWS_AS(HalfPlanePoint(0.0, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(HalfPlanePoint(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(HalfPlanePoint(1e16, 1.0), std::invalid_argument);
    CHECK_NOTHROW(HalfPlanePoint(-0.5, 1e-8));
}

TEST_CASE("UniModMatrix validates the determinant") {
    CHECK_THROWS_AS(UniModMatrix(1, 0, 0, 2), std::invalid_argument);
    CHECK_THROWS_AS(UniModMatrix(1, 1, 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(UniModMatrix(0, 1, 1, 0), std::invalid_argument);  // det -1
    UniModMatrix m{2, 1, 1, 1};
    CHECK(m.inverse() * m == UniModMatrix::identity());
    CHECK(m * m.inverse() == UniModMatrix::identity());
}

TEST_CASE("moebius_apply implements (az+b)/(cz+d)") {
    HalfPlanePoint z{0.3, 0.7};
    UniModMatrix s{0, -1, 1, 0};
    CHECK(std::abs(moebius_apply(s, z).to_complex() - (-1.0 / z.to_complex())) < 1e-15);

    UniModMatrix g{2, 1, 1, 1};
    ComplexValue want = (2.0 * z.to_complex() + 1.0) / (z.to_complex() + 1.0);
    CHECK(std::abs(moebius_apply(g, z).to_complex() - want) < 1e-15);

    HalfPlanePoint f = moebius_apply(MoebiusMap::fricke(4.0), z);
    CHECK(std::abs(f.to_complex() - (-1.0 / (4.0 * z.to_complex()))) < 1e-15);

    HalfPlanePoint sc = moebius_apply(MoebiusMap::scaling(9.0), z);
    CHECK(sc.x == 9.0 * z.x);
    CHECK(sc.y == 9.0 * z.y);

    CHECK_THROWS_AS(MoebiusMap(1.0, 2.0, 2.0, 4.0), std::invalid_argument);
}

TEST_CASE("gamma0 membership") {
    CHECK(in_gamma0(UniModMatrix{1, 0, 4, 1}, 4));
    CHECK(in_gamma0(UniModMatrix{1, 1, 0, 1}, 4));
    CHECK(in_gamma0(UniModMatrix{3, 1, 8, 3}, 4));
    CHECK_FALSE(in_gamma0(UniModMatrix{0, -1, 1, 0}, 4));
    CHECK_FALSE(in_gamma0(UniModMatrix{1, 0, 2, 1}, 4));
    CHECK(in_gamma0(UniModMatrix{1, 0, 2, 1}, 2));
}

TEST_CASE("index formula for Gamma_0(N)") {
    CHECK(index_gamma0(1) == 1);
    CHECK(index_gamma0(2) == 3);
    CHECK(index_gamma0(4) == 6);
    CHECK(index_gamma0(36) == 72);
    // 4 p^2 -> 6 p (p + 1) for odd primes p
    CHECK(index_gamma0(4 * 3 * 3) == 6 * 3 * 4);
    CHECK(index_gamma0(4 * 5 * 5) == 6 * 5 * 6);
    CHECK(index_gamma0(4 * 7 * 7) == 6 * 7 * 8);
    CHECK(index_gamma0(4 * 11 * 11) == 6 * 11 * 12);
}

TEST_CASE("is_odd_prime") {
    CHECK(is_odd_prime(3));
    CHECK(is_odd_prime(5));
    CHECK(is_odd_prime(7));
    CHECK(is_odd_prime(97));
    CHECK_FALSE(is_odd_prime(1));
    CHECK_FALSE(is_odd_prime(2));
    CHECK_FALSE(is_odd_prime(9));
    CHECK_FALSE(is_odd_prime(15));
    CHECK_FALSE(is_odd_prime(91));  // 7 * 13
}

TEST_CASE("coset representatives of Gamma_0(4)") {
    CosetTable t = coset_reps(4);
    CHECK(t.level == 4);
    REQUIRE(t.reps.size() == 6);
    REQUIRE(t.labels.size() == 6);
    std::vector<std::pair<std::int64_t, std::int64_t>> want = {{0, 1}, {1, 0}, {1, 1},
                                                               {1, 2}, {1, 3}, {2, 1}};
    CHECK(t.labels == want);
    CHECK(t.reps[0] == UniModMatrix::identity());
    for (std::size_t i = 0; i < t.reps.size(); ++i) {
        CHECK(((t.reps[i].c % 4) + 4) % 4 == t.labels[i].first);
        CHECK(((t.reps[i].d % 4) + 4) % 4 == t.labels[i].second);
    }
    // pairwise distinct cosets
    for (std::size_t i = 0; i < t.reps.size(); ++i)
        for (std::size_t j = i + 1; j < t.reps.size(); ++j)
            CHECK_FALSE(in_gamma0(t.reps[i] * t.reps[j].inverse(), 4));
}

TEST_CASE("coset table covers P^1(Z/36) with 72 distinct cosets") {
    CosetTable t = coset_reps(36);
    REQUIRE(t.reps.size() == 72);
    std::set<std::pair<std::int64_t, std::int64_t>> labels(t.labels.begin(), t.labels.end());
    CHECK(labels.size() == 72);
    for (std::size_t i = 0; i < t.reps.size(); ++i)
        for (std::size_t j = i + 1; j < t.reps.size(); ++j)
            CHECK_FALSE(in_gamma0(t.reps[i] * t.reps[j].inverse(), 36));
}

TEST_CASE("coset table size equals the index for assorted levels") {
    for (std::int64_t N : {2, 3, 4, 6, 8, 12, 36, 100}) {
        CosetTable t = coset_reps(N);
        CHECK(std::int64_t(t.reps.size()) == index_gamma0(N));
    }
    CHECK_THROWS_AS(coset_reps(0), std::invalid_argument);
}

TEST_CASE("cusp data for level 4") {
    std::vector<CuspInfo> cusps = cusp_data_gamma0_4();
    REQUIRE(cusps.size() == 3);

    const CuspInfo& inf = cusps[0];
    CHECK(inf.at_infinity);
    CHECK(inf.width == 1);
    CHECK(inf.tile_indices == std::vector<std::size_t>{0});

    const CuspInfo& zero = cusps[1];
    CHECK_FALSE(zero.at_infinity);
    CHECK(zero.num == 0);
    CHECK(zero.den == 1);
    CHECK(zero.width == 4);
    CHECK(zero.tile_indices == std::vector<std::size_t>{1, 2, 3, 4});

    const CuspInfo& half = cusps[2];
    CHECK(half.num == 1);
    CHECK(half.den == 2);
    CHECK(half.width == 1);
    CHECK(half.tile_indices == std::vector<std::size_t>{5});

    // widths sum to the index; tiles partition the six cosets
    std::int64_t width_sum = 0;
    std::set<std::size_t> all;
    for (const CuspInfo& c : cusps) {
        width_sum += c.width;
        all.insert(c.tile_indices.begin(), c.tile_indices.end());
    }
    CHECK(width_sum == index_gamma0(4));
    CHECK(all == std::set<std::size_t>{0, 1, 2, 3, 4, 5});
}

TEST_CASE("standard domain reduction lands in the fundamental domain") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> ux(-40.0, 40.0);
    std::uniform_real_distribution<double> uy(-4.0, 1.5);
    for (int k = 0; k < 200; ++k) {
        HalfPlanePoint z{ux(rng), std::exp(uy(rng))};
        auto [r, g] = standard_domain_reduce(z);
        CHECK(r.x >= -0.5 - 1e-12);
        CHECK(r.x <= 0.5 + 1e-12);
        CHECK(r.x * r.x + r.y * r.y >= 1.0 - 1e-11);
        HalfPlanePoint mapped = moebius_apply(g, z);
        CHECK(std::abs(mapped.to_complex() - r.to_complex()) <= 1e-9 * (1.0 + std::abs(r.to_complex())));
    }
}

TEST_CASE("standard domain reduction examples and ties") {
    auto [r1, g1] = standard_domain_reduce({0.7, 2.0});
    CHECK(r1.x == doctest::Approx(-0.3).epsilon(1e-12));
    CHECK(r1.y == 2.0);

    auto [r2, g2] = standard_domain_reduce({0.0, 0.5});
    CHECK(std::abs(r2.x) < 1e-12);
    CHECK(r2.y == doctest::Approx(2.0).epsilon(1e-12));

    // boundary ties: Re resolves into (-1/2, 1/2]
    auto [r3, g3] = standard_domain_reduce({-0.5, 3.0});
    CHECK(r3.x == doctest::Approx(0.5).epsilon(1e-12));

    // on the unit arc the positive-Re representative wins
    auto [r4, g4] = standard_domain_reduce({-0.5, std::sqrt(3.0) / 2.0});
    CHECK(r4.x >= 0.0);
}
