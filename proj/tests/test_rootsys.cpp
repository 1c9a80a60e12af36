#include <doctest.h>

#include "gorfro/rootsys.hpp"
#include "test_util.hpp"

using namespace gorfro;
using testutil::Rng;

namespace {

std::size_t expected_count(char type, int r) {
    switch (type) {
        case 'A': return static_cast<std::size_t>(r * (r + 1) / 2);
        case 'B':
        case 'C': return static_cast<std::size_t>(r * r);
        case 'D': return static_cast<std::size_t>(r * (r - 1));
    }
    return 0;
}

} // namespace

TEST_CASE("positive root counts match the classical formulas up to rank 6") {
    for (char t : {'A', 'B', 'C', 'D'}) {
        for (int r = (t == 'D' ? 3 : 1); r <= 6; ++r) {
            if ((t == 'B' || t == 'C') && r < 2) continue;
            RootSystem rs = build_root_system({{t, r}});
            CHECK(rs.positive_roots().size() == expected_count(t, r));
        }
    }
    CHECK(build_root_system({{'A', 1}}).positive_roots().size() == 1);
    CHECK(build_root_system({{'A', 3}}).positive_roots().size() == 6);
    CHECK(build_root_system({{'A', 1}, {'A', 2}}).positive_roots().size() == 4);
}

TEST_CASE("every positive root has non-negative integer coordinates") {
    for (auto factors : {std::vector<SimpleFactor>{{'B', 3}}, {{'C', 4}}, {{'D', 4}},
                         {{'A', 2}, {'B', 2}}}) {
        RootSystem rs = build_root_system(factors);
        for (const auto& gamma : rs.positive_roots())
            for (int c : gamma) CHECK(c >= 0);
    }
}

TEST_CASE("unsupported types and low D ranks are rejected") {
    CHECK_THROWS_AS(build_root_system({{'E', 6}}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system({{'D', 2}}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system({{'A', 0}}), std::invalid_argument);
    CHECK_THROWS_AS(build_root_system({}), std::invalid_argument);
}

TEST_CASE("parabolic Levi set: the simple roots orthogonal to the weight") {
    RootSystem a3 = build_root_system({{'A', 3}});
    CHECK(parabolic_levi(a3, {0, 1, 0}) == std::set<std::size_t>{0, 2});
    RootSystem a2 = build_root_system({{'A', 2}});
    CHECK(parabolic_levi(a2, {2, 0}) == std::set<std::size_t>{1});
    RootSystem a1 = build_root_system({{'A', 1}});
    CHECK(parabolic_levi(a1, {3}).empty());
    CHECK_THROWS_AS(parabolic_levi(a3, {0, -1, 0}), std::invalid_argument);
}

TEST_CASE("canonical weight of Gr(2,4): kappa = 4*omega_2") {
    RootSystem a3 = build_root_system({{'A', 3}});
    WeightVector kappa = canonical_weight(a3, {0, 2});
    CHECK(kappa == WeightVector{0, 4, 0});
}

TEST_CASE("canonical weight of the Veronese plane: kappa = 3*omega_1") {
    RootSystem a2 = build_root_system({{'A', 2}});
    CHECK(canonical_weight(a2, {1}) == WeightVector{3, 0});
}

TEST_CASE("empty Levi gives 2*rho = (2,...,2) in fundamental weights") {
    for (auto factors : {std::vector<SimpleFactor>{{'A', 4}}, {{'B', 3}}, {{'C', 3}},
                         {{'D', 4}}, {{'A', 1}, {'A', 2}}}) {
        RootSystem rs = build_root_system(factors);
        WeightVector kappa = canonical_weight(rs, {});
        for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(kappa[i] == 2);
    }
}

TEST_CASE("kappa is positive exactly off the Levi set and zero on it") {
    Rng rng(77);
    for (auto factors : {std::vector<SimpleFactor>{{'A', 4}}, {{'B', 3}}, {{'D', 4}},
                         {{'A', 2}, {'C', 2}}}) {
        RootSystem rs = build_root_system(factors);
        for (int t = 0; t < 20; ++t) {
            std::set<std::size_t> levi;
            for (std::size_t i = 0; i < rs.rank(); ++i)
                if (rng.uniform(0, 1)) levi.insert(i);
            WeightVector kappa = canonical_weight(rs, levi);
            for (std::size_t i = 0; i < rs.rank(); ++i) {
                if (levi.count(i))
                    CHECK(kappa[i] == 0);
                else
                    CHECK(kappa[i] > 0);
            }
        }
    }
}

TEST_CASE("subcanonicity verdicts from the module examples") {
    RootSystem a3 = build_root_system({{'A', 3}});
    SubcanonicityVerdict v = subcanonicity_test(a3, {0, 1, 0});
    CHECK(v.holds);
    CHECK(v.N == 4);
    CHECK(v.kappa == WeightVector{0, 4, 0});

    RootSystem a1 = build_root_system({{'A', 1}});
    SubcanonicityVerdict w = subcanonicity_test(a1, {3});
    CHECK_FALSE(w.holds);
    CHECK_FALSE(w.N.has_value());
    CHECK(w.kappa == WeightVector{2});

    RootSystem a11 = build_root_system({{'A', 1}, {'A', 1}});
    SubcanonicityVerdict s = subcanonicity_test(a11, {1, 1});
    CHECK(s.holds);
    CHECK(s.N == 2);
}

TEST_CASE("weights vanishing on a simple factor are ill-posed") {
    RootSystem rs = build_root_system({{'A', 1}, {'A', 2}});
    CHECK_THROWS_AS(subcanonicity_test(rs, {1, 0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(subcanonicity_test(rs, {0, 1, 0}), std::invalid_argument);
    CHECK_NOTHROW(subcanonicity_test(rs, {1, 1, 0}));
    CHECK_THROWS_AS(subcanonicity_test(rs, {1, -1, 1}), std::invalid_argument);
}

TEST_CASE("relabeling the simple factors does not change the verdict") {
    RootSystem a12 = build_root_system({{'A', 1}, {'A', 2}});
    RootSystem a21 = build_root_system({{'A', 2}, {'A', 1}});
    SubcanonicityVerdict v1 = subcanonicity_test(a12, {1, 1, 0});
    SubcanonicityVerdict v2 = subcanonicity_test(a21, {1, 0, 1});
    CHECK(v1.holds == v2.holds);
    CHECK(v1.N == v2.N);

    SubcanonicityVerdict s1 = subcanonicity_test(a12, {2, 1, 1});
    SubcanonicityVerdict s2 = subcanonicity_test(a21, {1, 1, 2});
    CHECK(s1.holds == s2.holds);
}

TEST_CASE("scaling: k*lambda is subcanonical iff N(lambda)/k is a positive integer") {
    RootSystem a3 = build_root_system({{'A', 3}});
    WeightVector omega2 = {0, 1, 0};
    SubcanonicityVerdict base = subcanonicity_test(a3, omega2);
    REQUIRE(base.N == 4);
    for (int k = 1; k <= 4; ++k) {
        WeightVector scaled = {0, k, 0};
        SubcanonicityVerdict v = subcanonicity_test(a3, scaled);
        const bool divisible = 4 % k == 0;
        CHECK(v.holds == divisible);
        if (divisible) CHECK(v.N == 4 / k);
    }
}

TEST_CASE("pairing of 2*rho with every simple coroot equals 2") {
    for (auto factors : {std::vector<SimpleFactor>{{'A', 5}}, {{'B', 4}}, {{'C', 4}},
                         {{'D', 5}}}) {
        RootSystem rs = build_root_system(factors);
        std::vector<int> two_rho(rs.rank(), 0);
        for (const auto& gamma : rs.positive_roots())
            for (std::size_t i = 0; i < rs.rank(); ++i) two_rho[i] += gamma[i];
        WeightVector fw = rs.to_fundamental(two_rho);
        for (std::size_t i = 0; i < rs.rank(); ++i) CHECK(fw[i] == 2);
    }
}

TEST_CASE("type strings and weight rendering") {
    auto f = parse_type_string("A1xA2");
    REQUIRE(f.size() == 2);
    CHECK(f[0].type == 'A');
    CHECK(f[0].rank == 1);
    CHECK(f[1].rank == 2);
    CHECK(type_string(f) == "A1xA2");
    CHECK_THROWS_AS(parse_type_string("A"), std::invalid_argument);
    CHECK_THROWS_AS(parse_type_string(""), std::invalid_argument);

    CHECK(weight_str({0, 4, 0}) == "4*w2");
    CHECK(weight_str({2, 2}) == "2*w1+2*w2");
    CHECK(weight_str({1, 0, 0}) == "w1");
    CHECK(weight_str({0, 0}) == "0");
}

TEST_CASE("positive roots are listed in (height, lex) order deterministically") {
    RootSystem rs = build_root_system({{'A', 3}});
    const auto& roots = rs.positive_roots();
    for (std::size_t i = 1; i < roots.size(); ++i) {
        int ha = 0, hb = 0;
        for (int x : roots[i - 1]) ha += x;
        for (int x : roots[i]) hb += x;
        CHECK((ha < hb || (ha == hb && roots[i - 1] < roots[i])));
    }
}
