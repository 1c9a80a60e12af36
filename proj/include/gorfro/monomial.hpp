#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace gorfro {

/// Exponent vector with cached total degree.
class Monomial {
public:
    explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
    explicit Monomial(std::vector<std::uint32_t> exps);

    static Monomial one(std::size_t nvars) { return Monomial(nvars); }
    static Monomial variable(std::size_t nvars, std::size_t i);

    std::size_t nvars() const { return exps_.size(); }
    std::uint32_t degree() const { return degree_; }
    std::uint32_t exp(std::size_t i) const { return exps_[i]; }
    const std::vector<std::uint32_t>& exponents() const { return exps_; }
    bool is_one() const { return degree_ == 0; }

    bool divides(const Monomial& m) const;
    bool coprime(const Monomial& m) const;
    Monomial operator*(const Monomial& m) const;
    /// Exact quotient; throws if `divisor` does not divide this monomial.
    Monomial quotient(const Monomial& divisor) const;
    static Monomial lcm(const Monomial& a, const Monomial& b);

    bool operator==(const Monomial& m) const { return exps_ == m.exps_; }
    bool operator!=(const Monomial& m) const { return exps_ != m.exps_; }
    /// Plain lexicographic compare on exponent vectors; used only as a
    /// canonical container key, not as a term order.
    bool operator<(const Monomial& m) const { return exps_ < m.exps_; }

    std::string str() const; // e.g. "x0*x2^2", "1" for the empty monomial

private:
    std::vector<std::uint32_t> exps_;
    std::uint32_t degree_ = 0;
};

struct MonomialHash {
    std::size_t operator()(const Monomial& m) const {
        std::size_t h = m.nvars();
        for (std::uint32_t e : m.exponents())
            h = h * 1000003u + e + 0x9e3779b9u;
        return h;
    }
};

} // namespace gorfro
