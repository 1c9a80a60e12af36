#include "gorfro/groebner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace gorfro {

GroebnerBasis::GroebnerBasis(std::size_t nvars, FieldSpec fs, MonomialOrder order,
                             std::vector<Polynomial> reduced, std::vector<Polynomial> source)
    : nvars_(nvars),
      fs_(fs),
      order_(std::move(order)),
      generators_(std::move(reduced)),
      source_(std::move(source)) {
    leads_.reserve(generators_.size());
    for (const auto& g : generators_) leads_.push_back(g.leading_term(order_).first);
}

bool GroebnerBasis::lead_reducible(const Monomial& m) const {
    for (const auto& l : leads_)
        if (l.divides(m)) return true;
    return false;
}

namespace {

Polynomial reduce_full(const Polynomial& f, const std::vector<Polynomial>& basis,
                       const std::vector<Monomial>& leads, const MonomialOrder& order) {
    Polynomial out(f.nvars(), f.field());
    Polynomial tail = f;
    while (!tail.is_zero()) {
        auto [m, c] = tail.leading_term(order);
        bool reduced = false;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            if (leads[i].divides(m)) {
                // basis polynomials are monic
                tail -= basis[i].times_monomial(m.quotient(leads[i])).scaled(c);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            out.add_term(m, c);
            tail.add_term(m, -c);
        }
    }
    return out;
}

struct Pair {
    std::uint32_t lcm_degree;
    std::size_t i, j;
    bool operator<(const Pair& o) const {
        if (lcm_degree != o.lcm_degree) return lcm_degree < o.lcm_degree;
        if (i != o.i) return i < o.i;
        return j < o.j;
    }
};

} // namespace

GroebnerBasis buchberger(const std::vector<Polynomial>& ideal_generators,
                         const MonomialOrder& order, std::size_t nvars, FieldSpec fs) {
    for (const auto& g : ideal_generators) {
        if (g.nvars() != nvars || g.field() != fs)
            throw std::invalid_argument("generators from different rings");
        if (g.is_zero()) throw std::invalid_argument("zero generator");
        if (!g.homogeneous_degree().has_value())
            throw std::invalid_argument("inhomogeneous generator: " + g.str());
    }

    std::vector<Polynomial> basis;
    std::vector<Monomial> leads;
    auto push = [&](Polynomial g) {
        basis.push_back(g.monic(order));
        leads.push_back(basis.back().leading_term(order).first);
    };
    for (const auto& g : ideal_generators) push(g);

    std::set<Pair> pending;
    auto add_pairs = [&](std::size_t t) {
        for (std::size_t i = 0; i < t; ++i) {
            Monomial l = Monomial::lcm(leads[i], leads[t]);
            pending.insert({l.degree(), i, t});
        }
    };
    for (std::size_t t = 1; t < basis.size(); ++t) add_pairs(t);

    auto in_pending = [&](std::size_t a, std::size_t b) {
        if (a > b) std::swap(a, b);
        Monomial l = Monomial::lcm(leads[a], leads[b]);
        return pending.count({l.degree(), a, b}) != 0;
    };

    while (!pending.empty()) {
        Pair pr = *pending.begin();
        pending.erase(pending.begin());
        const std::size_t i = pr.i, j = pr.j;

        if (leads[i].coprime(leads[j])) continue; // product criterion
        Monomial l = Monomial::lcm(leads[i], leads[j]);
        bool chain = false;
        for (std::size_t k = 0; k < basis.size() && !chain; ++k) {
            if (k == i || k == j) continue;
            if (leads[k].divides(l) && !in_pending(i, k) && !in_pending(j, k)) chain = true;
        }
        if (chain) continue;

        Polynomial s = basis[i].times_monomial(l.quotient(leads[i])) -
                       basis[j].times_monomial(l.quotient(leads[j]));
        Polynomial r = reduce_full(s, basis, leads, order);
        if (!r.is_zero()) {
            push(std::move(r));
            add_pairs(basis.size() - 1);
        }
    }

    // Minimalize: drop generators whose lead is divisible by another lead.
    std::vector<std::size_t> idx(basis.size());
    for (std::size_t k = 0; k < idx.size(); ++k) idx[k] = k;
    std::sort(idx.begin(), idx.end(), [&](std::size_t a, std::size_t b) {
        int c = order.compare(leads[a], leads[b]);
        if (c != 0) return c < 0;
        return a < b;
    });
    std::vector<Polynomial> minimal;
    std::vector<Monomial> min_leads;
    for (std::size_t k : idx) {
        bool redundant = false;
        for (const auto& l : min_leads)
            if (l.divides(leads[k])) {
                redundant = true;
                break;
            }
        if (!redundant) {
            minimal.push_back(basis[k]);
            min_leads.push_back(leads[k]);
        }
    }

    // Tail-reduce each survivor against the others.
    std::vector<Polynomial> reduced;
    reduced.reserve(minimal.size());
    for (std::size_t k = 0; k < minimal.size(); ++k) {
        std::vector<Polynomial> others;
        std::vector<Monomial> other_leads;
        for (std::size_t t = 0; t < minimal.size(); ++t) {
            if (t == k) continue;
            others.push_back(minimal[t]);
            other_leads.push_back(min_leads[t]);
        }
        reduced.push_back(reduce_full(minimal[k], others, other_leads, order).monic(order));
    }

    return GroebnerBasis(nvars, fs, order, std::move(reduced), ideal_generators);
}

GroebnerBasis buchberger(const std::vector<Polynomial>& ideal_generators,
                         const MonomialOrder& order) {
    if (ideal_generators.empty())
        throw std::invalid_argument("cannot deduce ring from empty generator list");
    return buchberger(ideal_generators, order, ideal_generators[0].nvars(),
                      ideal_generators[0].field());
}

Polynomial normal_form(const Polynomial& f, const GroebnerBasis& gb) {
    if (f.nvars() != gb.nvars() || f.field() != gb.field())
        throw std::invalid_argument("polynomial from a different ring");
    return reduce_full(f, gb.generators(), gb.lead_monomials(), gb.order());
}

namespace {

// Staircase walk: enumerates degree-q monomials outside the lead ideal,
// pruning a subtree as soon as the fixed prefix is already divisible by a
// lead monomial supported there.
class StaircaseEnum {
public:
    StaircaseEnum(const GroebnerBasis& gb, int q)
        : n_(gb.nvars()), q_(q), exps_(gb.nvars(), 0) {
        by_maxvar_.resize(n_);
        for (const auto& l : gb.lead_monomials()) {
            if (l.is_one()) {
                unit_ideal_ = true;
                return;
            }
            std::size_t mv = 0;
            for (std::size_t i = 0; i < n_; ++i)
                if (l.exp(i) > 0) mv = i;
            by_maxvar_[mv].push_back(&l);
        }
    }

    template <class F>
    void run(F&& emit) {
        if (unit_ideal_ || q_ < 0) return;
        if (n_ == 0) {
            if (q_ == 0) emit(Monomial(std::vector<std::uint32_t>{}));
            return;
        }
        walk(0, static_cast<std::uint32_t>(q_), emit);
    }

private:
    template <class F>
    void walk(std::size_t var, std::uint32_t rem, F&& emit) {
        if (var == n_ - 1) {
            exps_[var] = rem;
            if (!blocked(var)) emit(Monomial(exps_));
            exps_[var] = 0;
            return;
        }
        for (std::uint32_t e = 0; e <= rem; ++e) {
            exps_[var] = e;
            if (!blocked(var)) walk(var + 1, rem - e, emit);
        }
        exps_[var] = 0;
    }

    bool blocked(std::size_t var) const {
        for (const Monomial* l : by_maxvar_[var]) {
            bool div = true;
            for (std::size_t i = 0; i <= var && div; ++i)
                div = l->exp(i) <= exps_[i];
            if (div) return true;
        }
        return false;
    }

    std::size_t n_;
    int q_;
    std::vector<std::uint32_t> exps_;
    std::vector<std::vector<const Monomial*>> by_maxvar_;
    bool unit_ideal_ = false;
};

} // namespace

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, int q) {
    std::vector<Monomial> out;
    StaircaseEnum walker(gb, q);
    walker.run([&](Monomial m) { out.push_back(std::move(m)); });
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return gb.order().greater(a, b); });
    return out;
}

std::size_t standard_monomial_count(const GroebnerBasis& gb, int q) {
    std::size_t count = 0;
    StaircaseEnum walker(gb, q);
    walker.run([&](const Monomial&) { ++count; });
    return count;
}

HilbertNumerator::HilbertNumerator(std::vector<mpz_class> coeffs) : coeffs_(std::move(coeffs)) {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

mpz_class HilbertNumerator::coefficient(int q) const {
    if (q < 0 || q >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[q];
}

mpz_class HilbertNumerator::value_at_one() const {
    mpz_class s = 0;
    for (const auto& c : coeffs_) s += c;
    return s;
}

bool HilbertNumerator::is_palindromic() const {
    if (coeffs_.empty()) return false;
    const std::size_t d = coeffs_.size() - 1;
    bool plus = true, minus = true;
    for (std::size_t q = 0; q <= d; ++q) {
        if (coeffs_[q] != coeffs_[d - q]) plus = false;
        if (coeffs_[q] != -coeffs_[d - q]) minus = false;
    }
    return plus || minus;
}

std::string HilbertNumerator::str() const {
    if (coeffs_.empty()) return "0";
    std::string s;
    for (std::size_t q = 0; q < coeffs_.size(); ++q) {
        if (coeffs_[q] == 0) continue;
        mpz_class a = coeffs_[q];
        bool neg = a < 0;
        if (neg) a = -a;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? " - " : " + ";
        }
        if (a != 1 || q == 0) s += a.get_str();
        if (q > 0) {
            if (a != 1) s += "*";
            s += "t";
            if (q > 1) s += "^" + std::to_string(q);
        }
    }
    return s.empty() ? "0" : s;
}

namespace {

HilbertNumerator numerator_from_dims(const std::vector<std::size_t>& dims, std::size_t n,
                                     int q_max) {
    std::vector<mpz_class> binom(n + 1);
    for (std::size_t j = 0; j <= n; ++j)
        mpz_bin_uiui(binom[j].get_mpz_t(), static_cast<unsigned long>(n),
                     static_cast<unsigned long>(j));

    std::vector<mpz_class> num(q_max + 1);
    for (int q = 0; q <= q_max; ++q) {
        mpz_class acc = 0;
        for (std::size_t j = 0; j <= n && static_cast<int>(j) <= q; ++j) {
            mpz_class term = binom[j] * static_cast<unsigned long>(dims[q - j]);
            if (j % 2 == 0)
                acc += term;
            else
                acc -= term;
        }
        num[q] = acc;
    }

    // Stabilization: the last n+1 coefficients must already be zero.
    for (int q = std::max(0, q_max - static_cast<int>(n)); q <= q_max; ++q)
        if (num[q] != 0) throw std::runtime_error("q_max too small");

    return HilbertNumerator(std::move(num));
}

} // namespace

HilbertNumerator hilbert_numerator(const GroebnerBasis& gb, int q_max) {
    if (q_max < 0) throw std::invalid_argument("q_max must be non-negative");
    std::vector<std::size_t> dims(q_max + 1);
    for (int q = 0; q <= q_max; ++q) dims[q] = standard_monomial_count(gb, q);
    return numerator_from_dims(dims, gb.nvars(), q_max);
}

HilbertNumerator hilbert_numerator_auto(const GroebnerBasis& gb) {
    const std::size_t n = gb.nvars();
    std::uint32_t max_lead = 0;
    for (const auto& l : gb.lead_monomials()) max_lead = std::max(max_lead, l.degree());
    int q_max = static_cast<int>(max_lead + n);

    constexpr int kHardCap = 512;
    std::vector<std::size_t> dims;
    for (int q = 0; q <= q_max; ++q) dims.push_back(standard_monomial_count(gb, q));
    while (true) {
        try {
            return numerator_from_dims(dims, n, q_max);
        } catch (const std::runtime_error&) {
            if (q_max >= kHardCap) throw;
            ++q_max;
            dims.push_back(standard_monomial_count(gb, q_max));
        }
    }
}

int krull_dim(const HilbertNumerator& numerator, std::size_t nvars) {
    if (numerator.is_zero())
        throw std::invalid_argument("Hilbert numerator is identically zero");
    std::vector<mpz_class> c = numerator.coefficients();
    int multiplicity = 0;
    auto value_at_one = [](const std::vector<mpz_class>& v) {
        mpz_class s = 0;
        for (const auto& x : v) s += x;
        return s;
    };
    while (value_at_one(c) == 0) {
        // divide by (1 - t): quotient coefficients are prefix sums
        std::vector<mpz_class> qc(c.size() - 1);
        mpz_class run = 0;
        for (std::size_t k = 0; k + 1 < c.size(); ++k) {
            run += c[k];
            qc[k] = run;
        }
        c = std::move(qc);
        ++multiplicity;
        if (c.empty()) break;
    }
    return static_cast<int>(nvars) - multiplicity;
}

} // namespace gorfro
