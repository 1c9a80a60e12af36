#include "gorfro/field.hpp"

#include <stdexcept>

namespace gorfro {

bool is_prime(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint32_t d = 3; d <= n / d; d += 2)
        if (n % d == 0) return false;
    return true;
}

FieldSpec FieldSpec::prime_field(std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return {FieldMode::prime, p};
}

std::string FieldSpec::str() const {
    return mode == FieldMode::rational ? "rational" : "p:" + std::to_string(p);
}

namespace {

std::uint32_t mod_reduce(long value, std::uint32_t p) {
    long r = value % static_cast<long>(p);
    if (r < 0) r += p;
    return static_cast<std::uint32_t>(r);
}

// Inverse mod p by extended Euclid.
std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
    if (a == 0) throw std::domain_error("division by zero in prime field");
    long t = 0, newt = 1;
    long r = p, newr = a;
    while (newr != 0) {
        long q = r / newr;
        long tmp = t - q * newt;
        t = newt;
        newt = tmp;
        tmp = r - q * newr;
        r = newr;
        newr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

} // namespace

FieldElement FieldElement::rational(long num, long den) {
    if (den == 0) throw std::domain_error("zero denominator");
    mpq_class q(num, den);
    q.canonicalize();
    return FieldElement(std::move(q));
}

FieldElement FieldElement::rational(const mpq_class& q) {
    mpq_class c = q;
    c.canonicalize();
    return FieldElement(std::move(c));
}

FieldElement FieldElement::modp(long value, std::uint32_t p) {
    if (!is_prime(p))
        throw std::invalid_argument("modulus " + std::to_string(p) + " is not prime");
    return FieldElement(Zp{mod_reduce(value, p), p});
}

FieldElement FieldElement::zero(const FieldSpec& fs) { return integer(0, fs); }
FieldElement FieldElement::one(const FieldSpec& fs) { return integer(1, fs); }

FieldElement FieldElement::integer(long value, const FieldSpec& fs) {
    if (fs.mode == FieldMode::rational) return rational(value);
    return FieldElement(Zp{mod_reduce(value, fs.p), fs.p});
}

FieldSpec FieldElement::field() const {
    if (mode() == FieldMode::rational) return FieldSpec::rationals();
    return {FieldMode::prime, std::get<Zp>(v_).p};
}

bool FieldElement::is_zero() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return sgn(*q) == 0;
    return std::get<Zp>(v_).v == 0;
}

bool FieldElement::is_one() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return *q == 1;
    return std::get<Zp>(v_).v == 1;
}

void FieldElement::check_same(const FieldElement& o) const {
    if (v_.index() != o.v_.index())
        throw std::invalid_argument("mixed field modes");
    if (auto* z = std::get_if<Zp>(&v_)) {
        if (z->p != std::get<Zp>(o.v_).p)
            throw std::invalid_argument("mixed prime moduli");
    }
}

FieldElement FieldElement::operator-() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return FieldElement(mpq_class(-*q));
    const Zp& z = std::get<Zp>(v_);
    return FieldElement(Zp{z.v == 0 ? 0 : z.p - z.v, z.p});
}

FieldElement& FieldElement::operator+=(const FieldElement& o) {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q += std::get<mpq_class>(o.v_);
    } else {
        Zp& z = std::get<Zp>(v_);
        std::uint64_t s = static_cast<std::uint64_t>(z.v) + std::get<Zp>(o.v_).v;
        z.v = static_cast<std::uint32_t>(s >= z.p ? s - z.p : s);
    }
    return *this;
}

FieldElement& FieldElement::operator-=(const FieldElement& o) {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q -= std::get<mpq_class>(o.v_);
    } else {
        Zp& z = std::get<Zp>(v_);
        std::uint32_t ov = std::get<Zp>(o.v_).v;
        z.v = z.v >= ov ? z.v - ov : z.v + z.p - ov;
    }
    return *this;
}

FieldElement& FieldElement::operator*=(const FieldElement& o) {
    check_same(o);
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q *= std::get<mpq_class>(o.v_);
    } else {
        Zp& z = std::get<Zp>(v_);
        std::uint64_t prod = static_cast<std::uint64_t>(z.v) * std::get<Zp>(o.v_).v;
        z.v = static_cast<std::uint32_t>(prod % z.p);
    }
    return *this;
}

FieldElement& FieldElement::operator/=(const FieldElement& o) {
    check_same(o);
    if (o.is_zero()) throw std::domain_error("division by zero");
    if (auto* q = std::get_if<mpq_class>(&v_)) {
        *q /= std::get<mpq_class>(o.v_);
    } else {
        Zp& z = std::get<Zp>(v_);
        const Zp& oz = std::get<Zp>(o.v_);
        std::uint64_t prod =
            static_cast<std::uint64_t>(z.v) * mod_inverse(oz.v, oz.p);
        z.v = static_cast<std::uint32_t>(prod % z.p);
    }
    return *this;
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw std::domain_error("division by zero");
    if (auto* q = std::get_if<mpq_class>(&v_)) return FieldElement(mpq_class(1 / *q));
    const Zp& z = std::get<Zp>(v_);
    return FieldElement(Zp{mod_inverse(z.v, z.p), z.p});
}

bool FieldElement::operator==(const FieldElement& o) const {
    if (v_.index() != o.v_.index()) return false;
    if (auto* q = std::get_if<mpq_class>(&v_))
        return *q == std::get<mpq_class>(o.v_);
    const Zp& a = std::get<Zp>(v_);
    const Zp& b = std::get<Zp>(o.v_);
    return a.p == b.p && a.v == b.v;
}

const mpq_class& FieldElement::rat() const {
    if (mode() != FieldMode::rational)
        throw std::logic_error("rat() on prime-field element");
    return std::get<mpq_class>(v_);
}

std::uint32_t FieldElement::residue() const {
    if (mode() != FieldMode::prime)
        throw std::logic_error("residue() on rational element");
    return std::get<Zp>(v_).v;
}

std::uint32_t FieldElement::modulus() const {
    if (mode() != FieldMode::prime)
        throw std::logic_error("modulus() on rational element");
    return std::get<Zp>(v_).p;
}

std::string FieldElement::str() const {
    if (auto* q = std::get_if<mpq_class>(&v_)) return q->get_str();
    return std::to_string(std::get<Zp>(v_).v);
}

} // namespace gorfro
