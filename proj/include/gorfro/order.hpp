#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "gorfro/monomial.hpp"

namespace gorfro {

enum class OrderKind { grevlex, lex };

/// Term order: degree-reverse-lexicographic (default) or lexicographic, with
/// an optional variable-precedence permutation. precedence[0] is the largest
/// variable; an empty precedence means x0 > x1 > ... > x_{n-1}.
class MonomialOrder {
public:
    MonomialOrder() : kind_(OrderKind::grevlex) {}
    explicit MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence = {});

    OrderKind kind() const { return kind_; }
    const std::vector<std::size_t>& precedence() const { return precedence_; }

    /// -1 if a < b, 0 if equal, +1 if a > b.
    int compare(const Monomial& a, const Monomial& b) const;
    bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
    bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

    std::string str() const;

private:
    OrderKind kind_;
    std::vector<std::size_t> precedence_;
};

} // namespace gorfro
