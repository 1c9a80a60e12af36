#include "gorfro/monomial.hpp"

#include <numeric>
#include <stdexcept>

namespace gorfro {

Monomial::Monomial(std::vector<std::uint32_t> exps) : exps_(std::move(exps)) {
    degree_ = std::accumulate(exps_.begin(), exps_.end(), 0u);
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i) {
    if (i >= nvars) throw std::out_of_range("variable index out of range");
    Monomial m(nvars);
    m.exps_[i] = 1;
    m.degree_ = 1;
    return m;
}

bool Monomial::divides(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::invalid_argument("variable count mismatch");
    if (degree_ > m.degree_) return false;
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > m.exps_[i]) return false;
    return true;
}

bool Monomial::coprime(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::invalid_argument("variable count mismatch");
    for (std::size_t i = 0; i < exps_.size(); ++i)
        if (exps_[i] > 0 && m.exps_[i] > 0) return false;
    return true;
}

Monomial Monomial::operator*(const Monomial& m) const {
    if (nvars() != m.nvars()) throw std::invalid_argument("variable count mismatch");
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += m.exps_[i];
    Monomial r(std::move(e));
    return r;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
    if (!divisor.divides(*this))
        throw std::invalid_argument("monomial quotient is not exact");
    std::vector<std::uint32_t> e(exps_);
    for (std::size_t i = 0; i < e.size(); ++i) e[i] -= divisor.exps_[i];
    return Monomial(std::move(e));
}

Monomial Monomial::lcm(const Monomial& a, const Monomial& b) {
    if (a.nvars() != b.nvars()) throw std::invalid_argument("variable count mismatch");
    std::vector<std::uint32_t> e(a.exps_);
    for (std::size_t i = 0; i < e.size(); ++i)
        if (b.exps_[i] > e[i]) e[i] = b.exps_[i];
    return Monomial(std::move(e));
}

std::string Monomial::str() const {
    if (is_one()) return "1";
    std::string s;
    for (std::size_t i = 0; i < exps_.size(); ++i) {
        if (exps_[i] == 0) continue;
        if (!s.empty()) s += "*";
        s += "x" + std::to_string(i);
        if (exps_[i] > 1) s += "^" + std::to_string(exps_[i]);
    }
    return s;
}

} // namespace gorfro
