#pragma once

#include <string>
#include <vector>

#include <gmpxx.h>

#include "gorfro/polynomial.hpp"

namespace gorfro {

/// Reduced Groebner basis: monic homogeneous generators, no generator's lead
/// monomial divisible by another's, every tail monomial outside the lead
/// ideal. Immutable once built.
class GroebnerBasis {
public:
    GroebnerBasis(std::size_t nvars, FieldSpec fs, MonomialOrder order,
                  std::vector<Polynomial> reduced, std::vector<Polynomial> source);

    std::size_t nvars() const { return nvars_; }
    const FieldSpec& field() const { return fs_; }
    const MonomialOrder& order() const { return order_; }
    const std::vector<Polynomial>& generators() const { return generators_; }
    const std::vector<Polynomial>& source_generators() const { return source_; }
    const std::vector<Monomial>& lead_monomials() const { return leads_; }

    bool lead_reducible(const Monomial& m) const;

private:
    std::size_t nvars_;
    FieldSpec fs_;
    MonomialOrder order_;
    std::vector<Polynomial> generators_;
    std::vector<Polynomial> source_;
    std::vector<Monomial> leads_;
};

/// Buchberger's algorithm with the product and chain criteria, normal pair
/// selection (minimal lcm degree first). Input generators must be
/// homogeneous and nonzero; the result is the reduced basis, deterministic
/// for fixed input and order.
GroebnerBasis buchberger(const std::vector<Polynomial>& ideal_generators,
                         const MonomialOrder& order, std::size_t nvars, FieldSpec fs);

/// Convenience overload deducing ring data from a nonempty generator list.
GroebnerBasis buchberger(const std::vector<Polynomial>& ideal_generators,
                         const MonomialOrder& order);

/// Fully reduced normal form: no monomial of the result is divisible by any
/// lead monomial of the basis; f - result lies in the ideal.
Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb);

/// Degree-q monomials outside the lead ideal, listed in decreasing monomial
/// order. Their count is dim A_q.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int q);
std::size_t standard_monomial_count(const GroebnerBasis& gb, int q);

/// Numerator N(t) with HilbertSeries(S/I) = N(t) / (1-t)^n.
class HilbertNumerator {
public:
    explicit HilbertNumerator(std::vector<mpz_class> coeffs);

    /// Degree of N(t); -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    mpz_class coefficient(int q) const;
    const std::vector<mpz_class>& coefficients() const { return coeffs_; }

    mpz_class value_at_one() const;
    /// t^deg * N(1/t) == +-N(t).
    bool is_palindromic() const;

    bool operator==(const HilbertNumerator& o) const { return coeffs_ == o.coeffs_; }
    std::string str() const;

private:
    std::vector<mpz_class> coeffs_; // trailing zeros stripped
};

/// Computes N(t) by multiplying the observed Hilbert function by (1-t)^n;
/// throws "q_max too small" unless the last n+1 computed coefficients have
/// stabilized to zero.
HilbertNumerator hilbert_numerator(const GroebnerBasis& gb, int q_max);

/// Starts at (max lead degree + n) and extends until stabilization passes.
HilbertNumerator hilbert_numerator_auto(const GroebnerBasis& gb);

/// n minus the multiplicity of the root t = 1 in N(t); throws when N is
/// identically zero (the unit ideal).
int krull_dim(const HilbertNumerator& numerator, std::size_t nvars);

} // namespace gorfro
