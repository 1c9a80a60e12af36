#include <doctest.h>

#include <stdexcept>

#include "gorfro/matrix.hpp"
#include "gorfro/order.hpp"
#include "gorfro/polynomial.hpp"
#include "test_util.hpp"

using namespace gorfro;
using testutil::Rng;

namespace {

Monomial mono(std::vector<std::uint32_t> e) { return Monomial(std::move(e)); }

Polynomial poly(std::size_t n, FieldSpec fs,
                std::vector<std::pair<std::vector<std::uint32_t>, long>> terms) {
    Polynomial p(n, fs);
    for (auto& [e, c] : terms) p.add_term(Monomial(e), FieldElement::integer(c, fs));
    return p;
}

} // namespace

TEST_CASE("rationals are canonical: lowest terms, positive denominator") {
    FieldElement a = FieldElement::rational(6, -4);
    CHECK(a.rat().get_num() == -3);
    CHECK(a.rat().get_den() == 2);
    FieldElement b = FieldElement::rational(1, 3);
    CHECK((a + b).rat() == mpq_class(-7, 6));
    CHECK((a * b).rat() == mpq_class(-1, 2));
    CHECK((a - a).is_zero());
    CHECK((b / b).is_one());
}

TEST_CASE("division by zero is an error, never a silent wrap") {
    FieldElement z = FieldElement::rational(0);
    CHECK_THROWS_AS(FieldElement::rational(1) / z, std::domain_error);
    FieldElement pz = FieldElement::modp(0, kDefaultPrime);
    CHECK_THROWS_AS(FieldElement::modp(5, kDefaultPrime) / pz, std::domain_error);
    CHECK_THROWS_AS(z.inverse(), std::domain_error);
}

TEST_CASE("mixed field modes are rejected") {
    FieldElement q = FieldElement::rational(1);
    FieldElement p = FieldElement::modp(1, kDefaultPrime);
    CHECK_THROWS_AS(q + p, std::invalid_argument);
    CHECK_THROWS_AS(FieldElement::modp(1, 32003) * FieldElement::modp(1, 32009),
                    std::invalid_argument);
}

TEST_CASE("prime field arithmetic") {
    CHECK(is_prime(kDefaultPrime));
    CHECK(is_prime(kSecondPrime));
    CHECK_FALSE(is_prime(32001));
    CHECK_THROWS_AS(FieldSpec::prime_field(32001), std::invalid_argument);

    Rng rng(7);
    for (int t = 0; t < 200; ++t) {
        long v = rng.uniform(1, kDefaultPrime - 1);
        FieldElement a = FieldElement::modp(v, kDefaultPrime);
        CHECK((a * a.inverse()).is_one());
        CHECK((a - a).is_zero());
    }
    CHECK(FieldElement::modp(-1, kDefaultPrime).residue() == kDefaultPrime - 1);
}

TEST_CASE("monomial degree stays equal to the exponent sum") {
    Monomial m = mono({2, 0, 3});
    CHECK(m.degree() == 5);
    Monomial v = Monomial::variable(3, 1);
    CHECK((m * v).degree() == 6);
    CHECK((m * v).exp(1) == 1);
    CHECK(m.quotient(mono({1, 0, 2})) == mono({1, 0, 1}));
    CHECK_THROWS_AS(m.quotient(mono({0, 1, 0})), std::invalid_argument);
    CHECK(Monomial::lcm(mono({2, 0, 1}), mono({1, 1, 1})) == mono({2, 1, 1}));
    CHECK(mono({2, 0, 0}).coprime(mono({0, 1, 1})));
    CHECK_FALSE(mono({2, 0, 1}).coprime(mono({0, 1, 1})));
}

TEST_CASE("grevlex picks the textbook lead terms of the twisted cubic relations") {
    MonomialOrder ord;
    // x1^2 beats x0*x2
    CHECK(ord.greater(mono({0, 2, 0, 0}), mono({1, 0, 1, 0})));
    // x1*x2 beats x0*x3
    CHECK(ord.greater(mono({0, 1, 1, 0}), mono({1, 0, 0, 1})));
    // x2^2 beats x1*x3
    CHECK(ord.greater(mono({0, 0, 2, 0}), mono({0, 1, 0, 1})));
}

TEST_CASE("term orders: total, multiplicative, 1 minimal") {
    for (MonomialOrder ord :
         {MonomialOrder(), MonomialOrder(OrderKind::lex),
          MonomialOrder(OrderKind::grevlex, {2, 0, 3, 1})}) {
        Rng rng(11);
        const std::size_t n = 4;
        for (int t = 0; t < 300; ++t) {
            Monomial a = testutil::random_monomial(rng, n, 5);
            Monomial b = testutil::random_monomial(rng, n, 5);
            Monomial c = testutil::random_monomial(rng, n, 5);
            int ab = ord.compare(a, b);
            CHECK(ord.compare(b, a) == -ab);
            if (ab == 0) CHECK(a == b); // total order
            if (ab > 0) CHECK(ord.compare(a * c, b * c) > 0); // multiplicative
            if (!a.is_one()) CHECK(ord.greater(a, Monomial::one(n)));
            if (ab > 0 && ord.compare(b, c) > 0) CHECK(ord.compare(a, c) > 0);
        }
    }
}

TEST_CASE("poly_mul: products with all cancellations performed") {
    FieldSpec fs = FieldSpec::rationals();
    Polynomial x0 = poly(2, fs, {{{1, 0}, 1}});
    Polynomial x1 = poly(2, fs, {{{0, 1}, 1}});
    CHECK(poly_mul(x0, x1) == poly(2, fs, {{{1, 1}, 1}}));

    Polynomial sum = poly(2, fs, {{{1, 0}, 1}, {{0, 1}, 1}});
    Polynomial diff = poly(2, fs, {{{1, 0}, 1}, {{0, 1}, -1}});
    CHECK(poly_mul(sum, diff) == poly(2, fs, {{{2, 0}, 1}, {{0, 2}, -1}}));

    Polynomial conic = poly(3, fs, {{{1, 0, 1}, 1}, {{0, 2, 0}, -1}});
    CHECK(poly_mul(conic, Polynomial::zero(3, fs)).is_zero());
}

TEST_CASE("homogeneous degrees add under multiplication") {
    FieldSpec fs = FieldSpec::rationals();
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        Polynomial f = testutil::random_homogeneous(rng, 3, 2, 4, fs);
        Polynomial g = testutil::random_homogeneous(rng, 3, 3, 4, fs);
        Polynomial fg = poly_mul(f, g);
        if (!fg.is_zero()) CHECK(*fg.homogeneous_degree() == 5);
    }
    Polynomial inhom = poly(2, fs, {{{1, 0}, 1}, {{2, 0}, 1}});
    CHECK_FALSE(inhom.homogeneous_degree().has_value());
}

TEST_CASE("polynomial multiplication is associative and commutative") {
    Rng rng(31);
    for (FieldSpec fs : {FieldSpec::rationals(), FieldSpec::prime_field()}) {
        for (int t = 0; t < 60; ++t) {
            std::size_t n = static_cast<std::size_t>(rng.uniform(1, 5));
            Polynomial f = testutil::random_polynomial(rng, n, 4, 4, fs);
            Polynomial g = testutil::random_polynomial(rng, n, 4, 4, fs);
            Polynomial h = testutil::random_polynomial(rng, n, 4, 4, fs);
            CHECK(poly_mul(f, g) == poly_mul(g, f));
            CHECK(poly_mul(poly_mul(f, g), h) == poly_mul(f, poly_mul(g, h)));
            CHECK(poly_mul(f, g + h) == poly_mul(f, g) + poly_mul(f, h));
        }
    }
}

TEST_CASE("rank_and_kernel: identity, single relation, zero matrix") {
    FieldSpec fs = FieldSpec::rationals();

    ExactMatrix id = ExactMatrix::identity(2, fs);
    auto rk = id.rank_and_kernel();
    CHECK(rk.rank == 2);
    CHECK(rk.kernel.empty());

    ExactMatrix rel(1, 2, fs);
    rel.set(0, 0, FieldElement::rational(1));
    rel.set(0, 1, FieldElement::rational(1));
    auto rk2 = rel.rank_and_kernel();
    CHECK(rk2.rank == 1);
    REQUIRE(rk2.kernel.size() == 1);
    // canonical scaling: (1, -1)
    REQUIRE(rk2.kernel[0].size() == 2);
    CHECK(rk2.kernel[0][0].first == 0);
    CHECK(rk2.kernel[0][0].second == FieldElement::rational(1));
    CHECK(rk2.kernel[0][1].first == 1);
    CHECK(rk2.kernel[0][1].second == FieldElement::rational(-1));

    ExactMatrix zero(4, 4, fs);
    auto rk3 = zero.rank_and_kernel();
    CHECK(rk3.rank == 0);
    REQUIRE(rk3.kernel.size() == 4);
    for (std::size_t i = 0; i < 4; ++i) {
        REQUIRE(rk3.kernel[i].size() == 1);
        CHECK(rk3.kernel[i][0].first == i);
        CHECK(rk3.kernel[i][0].second.is_one());
    }
}

TEST_CASE("kernel vectors are exact kernel elements; rank + nullity = cols") {
    Rng rng(47);
    for (FieldSpec fs : {FieldSpec::rationals(), FieldSpec::prime_field()}) {
        for (int t = 0; t < 40; ++t) {
            std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
            std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
            ExactMatrix m(rows, cols, fs);
            for (std::size_t r = 0; r < rows; ++r)
                for (std::size_t c = 0; c < cols; ++c) {
                    long v = rng.uniform(-4, 4);
                    if (v != 0 && rng.uniform(0, 2) != 0)
                        m.set(r, c, FieldElement::integer(v, fs));
                }
            auto rk = m.rank_and_kernel(); // rank-nullity asserted in-routine
            CHECK(rk.rank + rk.kernel.size() == cols);
            for (const auto& v : rk.kernel) CHECK(m.apply(v).empty());
        }
    }
}

TEST_CASE("rank over Q agrees with rank mod p, with the unlucky-prime protocol") {
    Rng rng(53);
    int flagged = 0;
    for (int t = 0; t < 60; ++t) {
        std::size_t rows = static_cast<std::size_t>(rng.uniform(1, 6));
        std::size_t cols = static_cast<std::size_t>(rng.uniform(1, 6));
        ExactMatrix mq(rows, cols, FieldSpec::rationals());
        ExactMatrix mp(rows, cols, FieldSpec::prime_field(kDefaultPrime));
        ExactMatrix mp2(rows, cols, FieldSpec::prime_field(kSecondPrime));
        for (std::size_t r = 0; r < rows; ++r)
            for (std::size_t c = 0; c < cols; ++c) {
                long v = rng.uniform(-30, 30);
                if (v == 0) continue;
                mq.set(r, c, FieldElement::rational(v));
                mp.set(r, c, FieldElement::modp(v, kDefaultPrime));
                mp2.set(r, c, FieldElement::modp(v, kSecondPrime));
            }
        std::size_t rq = mq.rank();
        if (mp.rank() != rq) {
            ++flagged; // unlucky prime event: the second prime must recover
            CHECK(mp2.rank() == rq);
        }
    }
    CHECK(flagged == 0); // entries this small cannot hit 32003
}

TEST_CASE("column space echelon spans the columns") {
    FieldSpec fs = FieldSpec::rationals();
    ExactMatrix m(3, 3, fs);
    m.set(0, 0, FieldElement::rational(1));
    m.set(1, 0, FieldElement::rational(2));
    m.set(0, 1, FieldElement::rational(2));
    m.set(1, 1, FieldElement::rational(4)); // col1 = 2*col0
    m.set(2, 2, FieldElement::rational(5));
    auto basis = m.column_space_echelon();
    CHECK(basis.size() == 2);
    CHECK(basis.size() == m.rank());
}
