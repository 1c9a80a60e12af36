#pragma once

#include <cstdint>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace gorfro {

enum class FieldMode { rational, prime };

// Conventional computer-algebra primes; the second is used to cross-check
// suspected unlucky-prime events.
inline constexpr std::uint32_t kDefaultPrime = 32003;
inline constexpr std::uint32_t kSecondPrime = 32009;

bool is_prime(std::uint32_t n);

/// Field mode plus modulus; every polynomial/matrix carries one so that
/// mixed-mode arithmetic can be rejected early.
struct FieldSpec {
    FieldMode mode = FieldMode::rational;
    std::uint32_t p = 0;

    static FieldSpec rationals() { return {FieldMode::rational, 0}; }
    static FieldSpec prime_field(std::uint32_t p = kDefaultPrime);

    bool operator==(const FieldSpec& o) const { return mode == o.mode && p == o.p; }
    bool operator!=(const FieldSpec& o) const { return !(*this == o); }
    std::string str() const;
};

/// Exact scalar: an arbitrary-precision rational, or a residue modulo a prime.
/// Rationals are kept in lowest terms with positive denominator (GMP
/// canonical form); residues live in [0, p).
class FieldElement {
public:
    FieldElement() : v_(mpq_class(0)) {}

    static FieldElement rational(long num, long den = 1);
    static FieldElement rational(const mpq_class& q);
    static FieldElement modp(long value, std::uint32_t p);
    static FieldElement zero(const FieldSpec& fs);
    static FieldElement one(const FieldSpec& fs);
    static FieldElement integer(long value, const FieldSpec& fs);

    FieldMode mode() const {
        return std::holds_alternative<mpq_class>(v_) ? FieldMode::rational
                                                     : FieldMode::prime;
    }
    FieldSpec field() const;

    bool is_zero() const;
    bool is_one() const;

    FieldElement operator-() const;
    FieldElement& operator+=(const FieldElement& o);
    FieldElement& operator-=(const FieldElement& o);
    FieldElement& operator*=(const FieldElement& o);
    FieldElement& operator/=(const FieldElement& o);
    friend FieldElement operator+(FieldElement a, const FieldElement& b) { return a += b; }
    friend FieldElement operator-(FieldElement a, const FieldElement& b) { return a -= b; }
    friend FieldElement operator*(FieldElement a, const FieldElement& b) { return a *= b; }
    friend FieldElement operator/(FieldElement a, const FieldElement& b) { return a /= b; }

    FieldElement inverse() const;
    bool operator==(const FieldElement& o) const;
    bool operator!=(const FieldElement& o) const { return !(*this == o); }

    /// Rational value; valid in rational mode only.
    const mpq_class& rat() const;
    /// Residue in [0, p); valid in prime mode only.
    std::uint32_t residue() const;
    std::uint32_t modulus() const;

    std::string str() const;

private:
    struct Zp {
        std::uint32_t v;
        std::uint32_t p;
    };
    explicit FieldElement(mpq_class q) : v_(std::move(q)) {}
    explicit FieldElement(Zp z) : v_(z) {}

    void check_same(const FieldElement& o) const;

    std::variant<mpq_class, Zp> v_;
};

} // namespace gorfro
