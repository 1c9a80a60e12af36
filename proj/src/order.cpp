#include "gorfro/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorfro {

MonomialOrder::MonomialOrder(OrderKind kind, std::vector<std::size_t> precedence)
    : kind_(kind), precedence_(std::move(precedence)) {
    if (precedence_.empty()) return;
    std::vector<std::size_t> sorted = precedence_;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < sorted.size(); ++i)
        if (sorted[i] != i)
            throw std::invalid_argument("precedence is not a permutation of 0..n-1");
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
    const std::size_t n = a.nvars();
    if (n != b.nvars()) throw std::invalid_argument("variable count mismatch");
    if (!precedence_.empty() && precedence_.size() != n)
        throw std::invalid_argument("precedence size does not match variable count");

    auto var_at = [&](std::size_t rank) {
        return precedence_.empty() ? rank : precedence_[rank];
    };

    if (kind_ == OrderKind::lex) {
        for (std::size_t k = 0; k < n; ++k) {
            std::uint32_t ea = a.exp(var_at(k)), eb = b.exp(var_at(k));
            if (ea != eb) return ea > eb ? 1 : -1;
        }
        return 0;
    }

    // grevlex: higher degree wins; ties broken by the last differing
    // exponent, where the smaller exponent wins.
    if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
    for (std::size_t k = n; k-- > 0;) {
        std::uint32_t ea = a.exp(var_at(k)), eb = b.exp(var_at(k));
        if (ea != eb) return ea < eb ? 1 : -1;
    }
    return 0;
}

std::string MonomialOrder::str() const {
    std::string s = kind_ == OrderKind::grevlex ? "grevlex" : "lex";
    if (!precedence_.empty()) {
        s += "[";
        for (std::size_t i = 0; i < precedence_.size(); ++i) {
            if (i) s += ",";
            s += std::to_string(precedence_[i]);
        }
        s += "]";
    }
    return s;
}

} // namespace gorfro
