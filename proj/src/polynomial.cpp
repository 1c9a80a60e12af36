#include "gorfro/polynomial.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorfro {

Polynomial Polynomial::constant(std::size_t nvars, const FieldElement& c) {
    Polynomial f(nvars, c.field());
    f.add_term(Monomial::one(nvars), c);
    return f;
}

Polynomial Polynomial::monomial(const Monomial& m, const FieldElement& c) {
    Polynomial f(m.nvars(), c.field());
    f.add_term(m, c);
    return f;
}

std::optional<int> Polynomial::homogeneous_degree() const {
    if (terms_.empty()) return std::nullopt;
    int d = static_cast<int>(terms_.begin()->first.degree());
    for (const auto& [m, c] : terms_)
        if (static_cast<int>(m.degree()) != d) return std::nullopt;
    return d;
}

void Polynomial::add_term(const Monomial& m, const FieldElement& c) {
    if (m.nvars() != nvars_) throw std::invalid_argument("variable count mismatch");
    if (c.field() != fs_) throw std::invalid_argument("mixed field modes");
    if (c.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

FieldElement Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? FieldElement::zero(fs_) : it->second;
}

void Polynomial::check_compatible(const Polynomial& g) const {
    if (nvars_ != g.nvars_) throw std::invalid_argument("variable count mismatch");
    if (fs_ != g.fs_) throw std::invalid_argument("mixed field modes");
}

Polynomial Polynomial::operator-() const {
    Polynomial r(nvars_, fs_);
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

Polynomial& Polynomial::operator+=(const Polynomial& g) {
    check_compatible(g);
    for (const auto& [m, c] : g.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& g) {
    check_compatible(g);
    for (const auto& [m, c] : g.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& g) const {
    check_compatible(g);
    Polynomial r(nvars_, fs_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : g.terms_) r.add_term(ma * mb, ca * cb);
    return r;
}

Polynomial Polynomial::scaled(const FieldElement& c) const {
    Polynomial r(nvars_, fs_);
    if (c.is_zero()) return r;
    for (const auto& [m, v] : terms_) r.terms_.emplace(m, v * c);
    return r;
}

Polynomial Polynomial::times_monomial(const Monomial& m) const {
    Polynomial r(nvars_, fs_);
    for (const auto& [t, c] : terms_) r.terms_.emplace(t * m, c);
    return r;
}

bool Polynomial::operator==(const Polynomial& g) const {
    return nvars_ == g.nvars_ && fs_ == g.fs_ && terms_ == g.terms_;
}

std::pair<Monomial, FieldElement> Polynomial::leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero polynomial");
    auto best = terms_.begin();
    for (auto it = std::next(terms_.begin()); it != terms_.end(); ++it)
        if (order.greater(it->first, best->first)) best = it;
    return {best->first, best->second};
}

Polynomial Polynomial::monic(const MonomialOrder& order) const {
    if (terms_.empty()) return *this;
    FieldElement lc = leading_term(order).second;
    return scaled(lc.inverse());
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& images) const {
    if (images.size() != nvars_)
        throw std::invalid_argument("substitution needs one image per variable");
    if (nvars_ == 0) throw std::invalid_argument("substitute on empty ring");
    const std::size_t target_n = images[0].nvars();
    Polynomial r(target_n, fs_);
    for (const auto& [m, c] : terms_) {
        Polynomial t = Polynomial::constant(target_n, c);
        for (std::size_t i = 0; i < nvars_; ++i)
            for (std::uint32_t e = 0; e < m.exp(i); ++e) t = t * images[i];
        r += t;
    }
    return r;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    // Deterministic rendering: degree descending, then lexicographic
    // descending on exponent vectors.
    std::vector<const TermMap::value_type*> ts;
    ts.reserve(terms_.size());
    for (const auto& t : terms_) ts.push_back(&t);
    std::sort(ts.begin(), ts.end(), [](const auto* a, const auto* b) {
        if (a->first.degree() != b->first.degree())
            return a->first.degree() > b->first.degree();
        return b->first < a->first;
    });
    std::string s;
    for (const auto* t : ts) {
        const auto& [m, c] = *t;
        std::string coeff = c.str();
        bool negative = !coeff.empty() && coeff[0] == '-';
        if (negative) coeff = coeff.substr(1);
        if (s.empty()) {
            if (negative) s += "-";
        } else {
            s += negative ? " - " : " + ";
        }
        bool unit_coeff = coeff == "1";
        if (!unit_coeff || m.is_one()) {
            s += coeff;
            if (!m.is_one()) s += "*";
        }
        if (!m.is_one()) s += m.str();
    }
    return s;
}

Polynomial poly_mul(const Polynomial& f, const Polynomial& g) { return f * g; }

} // namespace gorfro
