#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gorfro/field.hpp"
#include "gorfro/monomial.hpp"
#include "gorfro/order.hpp"

namespace gorfro {

/// Sparse multivariate polynomial over an exact field. No zero coefficients
/// are ever stored; all terms share the ambient variable count and field.
class Polynomial {
public:
    using TermMap = std::map<Monomial, FieldElement>;

    Polynomial(std::size_t nvars, FieldSpec fs) : nvars_(nvars), fs_(fs) {}

    static Polynomial zero(std::size_t nvars, FieldSpec fs) { return Polynomial(nvars, fs); }
    static Polynomial constant(std::size_t nvars, const FieldElement& c);
    static Polynomial monomial(const Monomial& m, const FieldElement& c);

    std::size_t nvars() const { return nvars_; }
    const FieldSpec& field() const { return fs_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    /// Total degree of a homogeneous polynomial; nullopt when inhomogeneous
    /// or zero.
    std::optional<int> homogeneous_degree() const;
    bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

    /// Adds c*m, cancelling to zero where needed.
    void add_term(const Monomial& m, const FieldElement& c);
    FieldElement coefficient(const Monomial& m) const;

    Polynomial operator-() const;
    Polynomial& operator+=(const Polynomial& g);
    Polynomial& operator-=(const Polynomial& g);
    friend Polynomial operator+(Polynomial f, const Polynomial& g) { return f += g; }
    friend Polynomial operator-(Polynomial f, const Polynomial& g) { return f -= g; }
    Polynomial operator*(const Polynomial& g) const;
    Polynomial scaled(const FieldElement& c) const;
    Polynomial times_monomial(const Monomial& m) const;

    bool operator==(const Polynomial& g) const;
    bool operator!=(const Polynomial& g) const { return !(*this == g); }

    /// Largest term under `order`; throws on the zero polynomial.
    std::pair<Monomial, FieldElement> leading_term(const MonomialOrder& order) const;
    Polynomial monic(const MonomialOrder& order) const;

    /// Substitutes images[i] for variable i; images live in a common target
    /// ring. Used by the catalog parameterization checks.
    Polynomial substitute(const std::vector<Polynomial>& images) const;

    std::string str() const;

private:
    std::size_t nvars_;
    FieldSpec fs_;
    TermMap terms_;

    void check_compatible(const Polynomial& g) const;
};

/// Product with all cancellations performed; homogeneous degrees add.
Polynomial poly_mul(const Polynomial& f, const Polynomial& g);

} // namespace gorfro
