#include "gorfro/matrix.hpp"

#include <algorithm>
#include <stdexcept>

namespace gorfro {

ExactMatrix ExactMatrix::identity(std::size_t n, FieldSpec fs) {
    ExactMatrix m(n, n, fs);
    for (std::size_t i = 0; i < n; ++i) m.set(i, i, FieldElement::one(fs));
    return m;
}

void ExactMatrix::set(std::size_t r, std::size_t c, const FieldElement& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (v.field() != fs_) throw std::invalid_argument("mixed field modes");
    if (v.is_zero())
        entries_.erase({r, c});
    else
        entries_[{r, c}] = v;
}

void ExactMatrix::add(std::size_t r, std::size_t c, const FieldElement& v) {
    if (r >= rows_ || c >= cols_) throw std::out_of_range("matrix index out of range");
    if (v.field() != fs_) throw std::invalid_argument("mixed field modes");
    if (v.is_zero()) return;
    auto it = entries_.find({r, c});
    if (it == entries_.end()) {
        entries_.emplace(std::make_pair(r, c), v);
    } else {
        it->second += v;
        if (it->second.is_zero()) entries_.erase(it);
    }
}

FieldElement ExactMatrix::at(std::size_t r, std::size_t c) const {
    auto it = entries_.find({r, c});
    return it == entries_.end() ? FieldElement::zero(fs_) : it->second;
}

ExactMatrix ExactMatrix::transpose() const {
    ExactMatrix t(cols_, rows_, fs_);
    for (const auto& [rc, v] : entries_) t.entries_[{rc.second, rc.first}] = v;
    return t;
}

namespace detail {

namespace {

// ---- rational path: integer rows with content reduction ----

struct IntRow {
    std::size_t orig;
    std::vector<std::pair<std::size_t, mpz_class>> e; // sorted by column
};

void content_reduce(IntRow& r) {
    mpz_class g = 0;
    for (const auto& [c, v] : r.e) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    if (g <= 1) return;
    for (auto& [c, v] : r.e) v /= g;
}

IntRow to_int_row(std::size_t orig, const SparseVector& row) {
    mpz_class den_lcm = 1;
    for (const auto& [c, v] : row)
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(),
                v.rat().get_den().get_mpz_t());
    IntRow r{orig, {}};
    r.e.reserve(row.size());
    for (const auto& [c, v] : row) {
        mpz_class scaled = v.rat().get_num() * (den_lcm / v.rat().get_den());
        if (scaled != 0) r.e.emplace_back(c, std::move(scaled));
    }
    content_reduce(r);
    return r;
}

const mpz_class* find_col(const IntRow& r, std::size_t c) {
    auto it = std::lower_bound(r.e.begin(), r.e.end(), c,
                               [](const auto& a, std::size_t col) { return a.first < col; });
    if (it == r.e.end() || it->first != c) return nullptr;
    return &it->second;
}

// target = a*target - b*pivot, with all cancellations performed.
void cross_eliminate(IntRow& target, const IntRow& pivot, const mpz_class& a,
                     const mpz_class& b) {
    std::vector<std::pair<std::size_t, mpz_class>> out;
    out.reserve(target.e.size() + pivot.e.size());
    std::size_t i = 0, j = 0;
    while (i < target.e.size() || j < pivot.e.size()) {
        if (j == pivot.e.size() ||
            (i < target.e.size() && target.e[i].first < pivot.e[j].first)) {
            out.emplace_back(target.e[i].first, a * target.e[i].second);
            ++i;
        } else if (i == target.e.size() || pivot.e[j].first < target.e[i].first) {
            out.emplace_back(pivot.e[j].first, -b * pivot.e[j].second);
            ++j;
        } else {
            mpz_class v = a * target.e[i].second - b * pivot.e[j].second;
            if (v != 0) out.emplace_back(target.e[i].first, std::move(v));
            ++i;
            ++j;
        }
    }
    target.e = std::move(out);
    content_reduce(target);
}

EchelonResult echelon_rational(std::size_t ncols, const std::vector<IntRow>& input,
                               bool fully_reduce) {
    std::vector<IntRow> active;
    for (const auto& r : input)
        if (!r.e.empty()) active.push_back(r);

    std::vector<IntRow> pivot_rows;
    std::vector<std::size_t> pivot_cols;

    while (!active.empty()) {
        // Column-minimal, then row-minimal pivot. Previously chosen pivot
        // columns are already zero in every active row, so each row's
        // leading column is its candidate.
        std::size_t best = 0;
        for (std::size_t k = 1; k < active.size(); ++k) {
            std::size_t ck = active[k].e.front().first;
            std::size_t cb = active[best].e.front().first;
            if (ck < cb || (ck == cb && active[k].orig < active[best].orig)) best = k;
        }
        IntRow pivot = std::move(active[best]);
        active.erase(active.begin() + best);
        const std::size_t pc = pivot.e.front().first;
        const mpz_class pv = pivot.e.front().second;

        for (std::size_t k = 0; k < active.size();) {
            if (active[k].e.front().first == pc) {
                cross_eliminate(active[k], pivot, pv, active[k].e.front().second);
                if (active[k].e.empty()) {
                    active.erase(active.begin() + k);
                    continue;
                }
            }
            ++k;
        }
        pivot_rows.push_back(std::move(pivot));
        pivot_cols.push_back(pc);
    }

    if (fully_reduce) {
        for (std::size_t i = pivot_rows.size(); i-- > 1;) {
            for (std::size_t j = 0; j < i; ++j) {
                const mpz_class* v = find_col(pivot_rows[j], pivot_cols[i]);
                if (v) {
                    mpz_class coef = *v;
                    cross_eliminate(pivot_rows[j], pivot_rows[i],
                                    pivot_rows[i].e.front().second, coef);
                }
            }
        }
    }

    EchelonResult res;
    res.rank = pivot_rows.size();
    res.pivot_cols = pivot_cols;
    res.rows.reserve(pivot_rows.size());
    for (const auto& r : pivot_rows) {
        const mpz_class& pv = r.e.front().second;
        SparseVector row;
        row.reserve(r.e.size());
        for (const auto& [c, v] : r.e) {
            mpq_class q(v);
            q /= mpq_class(pv);
            row.emplace_back(c, FieldElement::rational(q));
        }
        res.rows.push_back(std::move(row));
    }
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) res.free_cols.push_back(c);
    return res;
}

// ---- prime-field path ----

struct ModRow {
    std::size_t orig;
    std::vector<std::pair<std::size_t, std::uint32_t>> e;
};

std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) {
    long t = 0, nt = 1, r = p, nr = a;
    while (nr != 0) {
        long q = r / nr;
        long tmp = t - q * nt;
        t = nt;
        nt = tmp;
        tmp = r - q * nr;
        r = nr;
        nr = tmp;
    }
    if (t < 0) t += p;
    return static_cast<std::uint32_t>(t);
}

void scale_row(ModRow& r, std::uint32_t s, std::uint32_t p) {
    for (auto& [c, v] : r.e)
        v = static_cast<std::uint32_t>(static_cast<std::uint64_t>(v) * s % p);
}

// target -= b*pivot (pivot normalized to leading 1).
void mod_eliminate(ModRow& target, const ModRow& pivot, std::uint32_t b, std::uint32_t p) {
    std::vector<std::pair<std::size_t, std::uint32_t>> out;
    out.reserve(target.e.size() + pivot.e.size());
    std::size_t i = 0, j = 0;
    while (i < target.e.size() || j < pivot.e.size()) {
        if (j == pivot.e.size() ||
            (i < target.e.size() && target.e[i].first < pivot.e[j].first)) {
            out.push_back(target.e[i]);
            ++i;
        } else if (i == target.e.size() || pivot.e[j].first < target.e[i].first) {
            std::uint64_t sub = static_cast<std::uint64_t>(b) * pivot.e[j].second % p;
            if (sub != 0)
                out.emplace_back(pivot.e[j].first, static_cast<std::uint32_t>(p - sub));
            ++j;
        } else {
            std::uint64_t sub = static_cast<std::uint64_t>(b) * pivot.e[j].second % p;
            std::uint32_t v = target.e[i].second >= sub
                                  ? target.e[i].second - static_cast<std::uint32_t>(sub)
                                  : target.e[i].second + p - static_cast<std::uint32_t>(sub);
            if (v != 0) out.emplace_back(target.e[i].first, v);
            ++i;
            ++j;
        }
    }
    target.e = std::move(out);
}

EchelonResult echelon_prime(std::size_t ncols, std::uint32_t p, std::vector<ModRow> active,
                            bool fully_reduce) {
    active.erase(std::remove_if(active.begin(), active.end(),
                                [](const ModRow& r) { return r.e.empty(); }),
                 active.end());

    std::vector<ModRow> pivot_rows;
    std::vector<std::size_t> pivot_cols;

    while (!active.empty()) {
        std::size_t best = 0;
        for (std::size_t k = 1; k < active.size(); ++k) {
            std::size_t ck = active[k].e.front().first;
            std::size_t cb = active[best].e.front().first;
            if (ck < cb || (ck == cb && active[k].orig < active[best].orig)) best = k;
        }
        ModRow pivot = std::move(active[best]);
        active.erase(active.begin() + best);
        const std::size_t pc = pivot.e.front().first;
        scale_row(pivot, mod_inv(pivot.e.front().second, p), p);

        for (std::size_t k = 0; k < active.size();) {
            if (active[k].e.front().first == pc) {
                mod_eliminate(active[k], pivot, active[k].e.front().second, p);
                if (active[k].e.empty()) {
                    active.erase(active.begin() + k);
                    continue;
                }
            }
            ++k;
        }
        pivot_rows.push_back(std::move(pivot));
        pivot_cols.push_back(pc);
    }

    if (fully_reduce) {
        for (std::size_t i = pivot_rows.size(); i-- > 1;) {
            for (std::size_t j = 0; j < i; ++j) {
                auto it = std::lower_bound(
                    pivot_rows[j].e.begin(), pivot_rows[j].e.end(), pivot_cols[i],
                    [](const auto& a, std::size_t col) { return a.first < col; });
                if (it != pivot_rows[j].e.end() && it->first == pivot_cols[i])
                    mod_eliminate(pivot_rows[j], pivot_rows[i], it->second, p);
            }
        }
    }

    EchelonResult res;
    res.rank = pivot_rows.size();
    res.pivot_cols = pivot_cols;
    res.rows.reserve(pivot_rows.size());
    for (const auto& r : pivot_rows) {
        SparseVector row;
        row.reserve(r.e.size());
        for (const auto& [c, v] : r.e)
            row.emplace_back(c, FieldElement::modp(static_cast<long>(v), p));
        res.rows.push_back(std::move(row));
    }
    std::vector<bool> is_pivot(ncols, false);
    for (std::size_t c : pivot_cols) is_pivot[c] = true;
    for (std::size_t c = 0; c < ncols; ++c)
        if (!is_pivot[c]) res.free_cols.push_back(c);
    return res;
}

EchelonResult run_echelon(std::size_t ncols, const FieldSpec& fs,
                          const std::vector<SparseVector>& rows, bool fully_reduce) {
    if (fs.mode == FieldMode::rational) {
        std::vector<IntRow> irows;
        irows.reserve(rows.size());
        for (std::size_t i = 0; i < rows.size(); ++i) irows.push_back(to_int_row(i, rows[i]));
        return echelon_rational(ncols, irows, fully_reduce);
    }
    std::vector<ModRow> mrows;
    mrows.reserve(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        ModRow r{i, {}};
        r.e.reserve(rows[i].size());
        for (const auto& [c, v] : rows[i])
            if (v.residue() != 0) r.e.emplace_back(c, v.residue());
        mrows.push_back(std::move(r));
    }
    return echelon_prime(ncols, fs.p, std::move(mrows), fully_reduce);
}

} // namespace

EchelonResult reduced_echelon(std::size_t, std::size_t ncols, const FieldSpec& fs,
                              const std::vector<SparseVector>& rows) {
    return run_echelon(ncols, fs, rows, true);
}

std::size_t echelon_rank(const FieldSpec& fs, const std::vector<SparseVector>& rows) {
    std::size_t ncols = 0;
    for (const auto& r : rows)
        if (!r.empty()) ncols = std::max(ncols, r.back().first + 1);
    return run_echelon(ncols, fs, rows, false).rank;
}

std::vector<SparseVector> kernel_from_echelon(const EchelonResult& ech, const FieldSpec& fs) {
    // Reduced echelon rows touch only their own pivot column plus free
    // columns, so each free column yields one kernel vector directly.
    std::vector<SparseVector> kernel;
    kernel.reserve(ech.free_cols.size());
    for (std::size_t f : ech.free_cols) {
        SparseVector v;
        v.emplace_back(f, FieldElement::one(fs));
        for (std::size_t i = 0; i < ech.rows.size(); ++i) {
            for (const auto& [c, val] : ech.rows[i]) {
                if (c == f) {
                    v.emplace_back(ech.pivot_cols[i], -val);
                    break;
                }
                if (c > f) break;
            }
        }
        std::sort(v.begin(), v.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        // Canonical scaling: first nonzero coordinate equals 1.
        FieldElement lead = v.front().second;
        if (!lead.is_one()) {
            FieldElement inv = lead.inverse();
            for (auto& [c, val] : v) val *= inv;
        }
        kernel.push_back(std::move(v));
    }
    return kernel;
}

} // namespace detail

namespace {

std::vector<SparseVector> rows_of(const ExactMatrix& m) {
    std::vector<SparseVector> rows(m.rows());
    for (const auto& [rc, v] : m.entries()) rows[rc.first].emplace_back(rc.second, v);
    return rows;
}

} // namespace

ExactMatrix::RankKernel ExactMatrix::rank_and_kernel() const {
    auto ech = detail::reduced_echelon(rows_, cols_, fs_, rows_of(*this));
    RankKernel rk;
    rk.rank = ech.rank;
    rk.kernel = detail::kernel_from_echelon(ech, fs_);
    if (rk.rank + rk.kernel.size() != cols_)
        throw std::logic_error("rank-nullity violation in rank_and_kernel");
    return rk;
}

std::size_t ExactMatrix::rank() const {
    return detail::run_echelon(cols_, fs_, rows_of(*this), false).rank;
}

std::vector<SparseVector> ExactMatrix::column_space_echelon() const {
    // Column space of M = row space of M^T, echelonized over the row
    // coordinates of M.
    ExactMatrix t = transpose();
    auto ech = detail::reduced_echelon(t.rows(), t.cols(), fs_, rows_of(t));
    return ech.rows;
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
    if (cols_ != o.rows_) throw std::invalid_argument("matrix shape mismatch");
    if (fs_ != o.fs_) throw std::invalid_argument("mixed field modes");
    ExactMatrix r(rows_, o.cols_, fs_);
    // column view of o
    std::vector<SparseVector> ocols(o.cols_);
    for (const auto& [rc, v] : o.entries_) ocols[rc.second].emplace_back(rc.first, v);
    std::vector<SparseVector> lrows = rows_of(*this);
    for (std::size_t i = 0; i < rows_; ++i) {
        if (lrows[i].empty()) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) {
            if (ocols[j].empty()) continue;
            FieldElement acc = FieldElement::zero(fs_);
            std::size_t a = 0, b = 0;
            while (a < lrows[i].size() && b < ocols[j].size()) {
                if (lrows[i][a].first < ocols[j][b].first)
                    ++a;
                else if (ocols[j][b].first < lrows[i][a].first)
                    ++b;
                else {
                    acc += lrows[i][a].second * ocols[j][b].second;
                    ++a;
                    ++b;
                }
            }
            if (!acc.is_zero()) r.set(i, j, acc);
        }
    }
    return r;
}

SparseVector ExactMatrix::apply(const SparseVector& v) const {
    std::map<std::size_t, FieldElement> acc;
    std::vector<SparseVector> cols(cols_);
    for (const auto& [rc, val] : entries_) cols[rc.second].emplace_back(rc.first, val);
    for (const auto& [c, val] : v) {
        if (c >= cols_) throw std::out_of_range("vector index out of range");
        for (const auto& [r, mv] : cols[c]) {
            auto [it, inserted] = acc.try_emplace(r, mv * val);
            if (!inserted) it->second += mv * val;
        }
    }
    SparseVector out;
    for (const auto& [r, val] : acc)
        if (!val.is_zero()) out.emplace_back(r, val);
    return out;
}

} // namespace gorfro
