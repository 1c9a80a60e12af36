#include <doctest.h>

#include "gorfro/catalog.hpp"
#include "gorfro/groebner.hpp"
#include "gorfro/rootsys.hpp"

using namespace gorfro;

namespace {

const FieldSpec kQ = FieldSpec::rationals();

// dim of the degree-q piece of the Gr(2,nn) coordinate ring: hook content
// formula for the rectangular partition (q,q).
mpz_class grassmann_dim_oracle(int nn, int q) {
    if (q == 0) return 1;
    mpz_class num = 1, den = 1;
    for (int j = 0; j < q; ++j) {
        num *= nn + j;
        num *= nn + j - 1;
        den *= q - j + 1;
        den *= q - j;
    }
    return num / den;
}

mpz_class binom(long n, long k) {
    if (k < 0 || k > n) return 0;
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return b;
}

std::size_t dim_Aq(const CatalogEntry& e, int q) {
    GroebnerBasis gb = buchberger(e.generators, MonomialOrder(), e.nvars, kQ);
    return standard_monomial_count(gb, q);
}

} // namespace

TEST_CASE("veronese entries: variable and relation counts, subcanonicity") {
    CatalogEntry conic = veronese_ideal(1, 2, kQ);
    CHECK(conic.nvars == 3);
    CHECK(conic.generators.size() == 1);
    CHECK(conic.subcanonical.holds);
    CHECK(conic.subcanonical.N == 1);

    CatalogEntry tc = veronese_ideal(1, 3, kQ);
    CHECK(tc.nvars == 4);
    CHECK(tc.generators.size() == 3);
    CHECK_FALSE(tc.subcanonical.holds);

    CatalogEntry quartic = veronese_ideal(1, 4, kQ);
    CHECK(quartic.nvars == 5);
    CHECK(quartic.generators.size() == 6);
    CHECK_FALSE(quartic.subcanonical.holds);

    CatalogEntry v22 = veronese_ideal(2, 2, kQ);
    CHECK(v22.nvars == 6);
    CHECK(v22.generators.size() == 6);
    CHECK_FALSE(v22.subcanonical.holds);

    CatalogEntry v32 = veronese_ideal(3, 2, kQ);
    CHECK(v32.nvars == 10);
    CHECK(v32.generators.size() == 20);
    CHECK(v32.subcanonical.holds);
    CHECK(v32.subcanonical.N == 2);
    CHECK(v32.stretch);

    CHECK_THROWS_AS(veronese_ideal(0, 2, kQ), std::invalid_argument);
}

TEST_CASE("the conic is x0*x2 - x1^2 in the documented variable order") {
    CatalogEntry conic = veronese_ideal(1, 2, kQ);
    Polynomial expect(3, kQ);
    expect.add_term(Monomial({1, 0, 1}), FieldElement::rational(1));
    expect.add_term(Monomial({0, 2, 0}), FieldElement::rational(-1));
    REQUIRE(conic.generators.size() == 1);
    CHECK(conic.generators[0] == expect);
}

TEST_CASE("segre entries: minor counts and subcanonicity") {
    CatalogEntry s11 = segre_ideal(1, 1, kQ);
    CHECK(s11.nvars == 4);
    CHECK(s11.generators.size() == 1);
    CHECK(s11.subcanonical.holds);
    CHECK(s11.subcanonical.N == 2);

    CatalogEntry s12 = segre_ideal(1, 2, kQ);
    CHECK(s12.nvars == 6);
    CHECK(s12.generators.size() == 3);
    CHECK_FALSE(s12.subcanonical.holds);

    CatalogEntry s22 = segre_ideal(2, 2, kQ);
    CHECK(s22.nvars == 9);
    CHECK(s22.generators.size() == 9);
    CHECK(s22.subcanonical.holds);
    CHECK(s22.subcanonical.N == 3);
}

TEST_CASE("plucker entries: C(nn,4) quadrics, always subcanonical with N = nn") {
    CatalogEntry p4 = plucker2_ideal(4, kQ);
    CHECK(p4.nvars == 6);
    CHECK(p4.generators.size() == 1);
    CHECK(p4.subcanonical.N == 4);

    CatalogEntry p5 = plucker2_ideal(5, kQ);
    CHECK(p5.nvars == 10);
    CHECK(p5.generators.size() == 5);
    CHECK(p5.subcanonical.N == 5);
    CHECK(p5.stretch);

    CatalogEntry p6 = plucker2_ideal(6, kQ);
    CHECK(p6.nvars == 15);
    CHECK(p6.generators.size() == 15);
    CHECK(p6.subcanonical.N == 6);

    CHECK_THROWS_AS(plucker2_ideal(3, kQ), std::invalid_argument);
}

TEST_CASE("substitution test: the parameterization kills every generator") {
    for (const auto& id : all_catalog_ids()) {
        CatalogEntry e = make_entry(id, kQ);
        if (e.parameterization.empty()) continue; // ci2q has no toric chart
        for (const auto& g : e.generators) {
            CAPTURE(id);
            CHECK(g.substitute(e.parameterization).is_zero());
        }
    }
    // and some entries outside the built-in list
    for (CatalogEntry e : {veronese_ideal(2, 3, kQ), segre_ideal(2, 3, kQ),
                           plucker2_ideal(6, kQ)}) {
        for (const auto& g : e.generators) {
            CAPTURE(e.id);
            CHECK(g.substitute(e.parameterization).is_zero());
        }
    }
}

TEST_CASE("Hilbert function closed forms: Veronese") {
    for (auto [m, d] : std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {2, 2}}) {
        CatalogEntry e = veronese_ideal(m, d, kQ);
        GroebnerBasis gb = buchberger(e.generators, MonomialOrder(), e.nvars, kQ);
        for (int q = 0; q <= 5; ++q) {
            CAPTURE(m);
            CAPTURE(d);
            CAPTURE(q);
            CHECK(mpz_class(standard_monomial_count(gb, q)) == binom(m + d * q, m));
        }
    }
}

TEST_CASE("Hilbert function closed forms: Segre") {
    for (auto [m1, m2] : std::vector<std::pair<int, int>>{{1, 1}, {1, 2}, {2, 2}}) {
        CatalogEntry e = segre_ideal(m1, m2, kQ);
        GroebnerBasis gb = buchberger(e.generators, MonomialOrder(), e.nvars, kQ);
        for (int q = 0; q <= 4; ++q) {
            CAPTURE(m1);
            CAPTURE(m2);
            CAPTURE(q);
            CHECK(mpz_class(standard_monomial_count(gb, q)) ==
                  binom(m1 + q, m1) * binom(m2 + q, m2));
        }
    }
}

TEST_CASE("Hilbert function of Gr(2,nn) against the hook content oracle, nn <= 5") {
    for (int nn : {4, 5}) {
        CatalogEntry e = plucker2_ideal(nn, kQ);
        GroebnerBasis gb = buchberger(e.generators, MonomialOrder(), e.nvars, kQ);
        for (int q = 0; q <= 4; ++q) {
            CAPTURE(nn);
            CAPTURE(q);
            CHECK(mpz_class(standard_monomial_count(gb, q)) == grassmann_dim_oracle(nn, q));
        }
    }
}

TEST_CASE("krull dimension matches the expected dimension of each entry") {
    for (const auto& id : all_catalog_ids()) {
        CatalogEntry e = make_entry(id, kQ);
        GroebnerBasis gb = buchberger(e.generators, MonomialOrder(), e.nvars, kQ);
        CAPTURE(id);
        CHECK(krull_dim(hilbert_numerator_auto(gb), e.nvars) == e.expected_dim);
    }
}

TEST_CASE("classical subcanonicity agrees with the root-theoretic test") {
    std::vector<CatalogEntry> entries;
    for (const auto& id : all_catalog_ids()) entries.push_back(make_entry(id, kQ));
    entries.push_back(veronese_ideal(2, 3, kQ));
    entries.push_back(segre_ideal(2, 2, kQ));
    entries.push_back(plucker2_ideal(6, kQ));
    for (const auto& e : entries) {
        if (!e.root_data) continue;
        RootSystem rs = build_root_system(e.root_data->factors);
        SubcanonicityVerdict v = subcanonicity_test(rs, e.root_data->weight);
        CAPTURE(e.id);
        CHECK(v.holds == e.subcanonical.holds);
        if (v.holds) CHECK(v.N == e.subcanonical.N);
    }
}

TEST_CASE("classical_subcanonical: not applicable for entries without data") {
    CatalogEntry ci = ci_two_quadrics(kQ);
    SubcanonicalClassical sc = classical_subcanonical(ci);
    CHECK_FALSE(sc.applies);
    CHECK_FALSE(ci.root_data.has_value());

    SubcanonicalClassical v = classical_subcanonical(veronese_ideal(3, 2, kQ));
    CHECK(v.applies);
    CHECK(v.holds);
    CHECK(v.N == 2);
}

TEST_CASE("catalog ids round-trip through make_entry") {
    CHECK(core_catalog_ids().size() == 8);
    CHECK(stretch_catalog_ids().size() == 2);
    for (const auto& id : all_catalog_ids()) CHECK(make_entry(id, kQ).id == id);
    CHECK_THROWS_AS(make_entry("veronese:1", kQ), std::invalid_argument);
    CHECK_THROWS_AS(make_entry("spinor:10", kQ), std::invalid_argument);
}

TEST_CASE("generated ideals are homogeneous binomials/trinomials of degree 2") {
    for (const auto& id : all_catalog_ids()) {
        CatalogEntry e = make_entry(id, kQ);
        for (const auto& g : e.generators) {
            CHECK(g.homogeneous_degree() == 2);
            CHECK(g.term_count() <= 3);
        }
    }
}
