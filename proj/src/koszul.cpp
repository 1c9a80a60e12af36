#include "gorfro/koszul.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace gorfro {

// ---------------------------------------------------------------- BettiTable

std::size_t BettiTable::beta(int p, int q) const {
    auto it = nonzero.find({p, q});
    return it == nonzero.end() ? 0 : it->second;
}

std::vector<std::size_t> BettiTable::totals() const {
    std::vector<std::size_t> t(static_cast<std::size_t>(pd) + 1, 0);
    for (const auto& [pq, b] : nonzero) t[static_cast<std::size_t>(pq.first)] += b;
    return t;
}

std::string BettiTable::render_text() const {
    const int rows = regularity, cols = pd;
    std::vector<std::vector<std::string>> cell(rows + 1, std::vector<std::string>(cols + 1));
    std::vector<std::size_t> width(cols + 1);
    for (int p = 0; p <= cols; ++p) {
        width[p] = std::to_string(p).size();
        for (int r = 0; r <= rows; ++r) {
            std::size_t b = beta(p, p + r);
            cell[r][p] = b == 0 ? "." : std::to_string(b);
            width[p] = std::max(width[p], cell[r][p].size());
        }
    }
    std::size_t label_width = std::to_string(rows).size() + 1;
    std::ostringstream os;
    os << std::string(label_width + 1, ' ');
    for (int p = 0; p <= cols; ++p) {
        std::string h = std::to_string(p);
        os << std::string(width[p] - h.size(), ' ') << h;
        if (p < cols) os << " ";
    }
    os << "\n";
    for (int r = 0; r <= rows; ++r) {
        std::string label = std::to_string(r) + ":";
        os << label << std::string(label_width + 1 - label.size(), ' ');
        for (int p = 0; p <= cols; ++p) {
            os << std::string(width[p] - cell[r][p].size(), ' ') << cell[r][p];
            if (p < cols) os << " ";
        }
        os << "\n";
    }
    return os.str();
}

bool HomologyClass::is_zero() const {
    for (const auto& c : coords)
        if (!c.is_zero()) return false;
    return true;
}

// ------------------------------------------------------------- construction

KoszulHomology::KoszulHomology(const GroebnerBasis& gb, KoszulOptions opt)
    : KoszulHomology(gb, opt, LazyTag{}) {
    build_table();
}

KoszulHomology::KoszulHomology(const GroebnerBasis& gb, KoszulOptions opt, LazyTag)
    : gb_(gb), n_(gb.nvars()), fs_(gb.field()), opt_(opt) {
    nf_cache_.resize(n_);
    detect_grading();
}

KoszulHomology KoszulHomology::lazy(const GroebnerBasis& gb) {
    return KoszulHomology(gb, {}, LazyTag{});
}

void KoszulHomology::check_budget(const char* where) const {
    if (opt_.max_seconds <= 0) return;
    double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (elapsed > opt_.max_seconds)
        throw ResourceLimitError(std::string("time budget exceeded while ") + where);
}

// The Koszul differential preserves every grading for which the ideal is
// multihomogeneous. We detect the finest such grading (the kernel of the
// exponent-difference constraints of the basis elements) and use it to
// split each (p,q) cell into independent elimination blocks.
void KoszulHomology::detect_grading() {
    const FieldSpec qfs = FieldSpec::rationals();
    std::vector<SparseVector> constraints;
    for (const auto& g : gb_.generators()) {
        auto it = g.terms().begin();
        const Monomial& m0 = it->first;
        for (++it; it != g.terms().end(); ++it) {
            SparseVector row;
            for (std::size_t i = 0; i < n_; ++i) {
                long diff = static_cast<long>(it->first.exp(i)) - static_cast<long>(m0.exp(i));
                if (diff != 0) row.emplace_back(i, FieldElement::rational(diff));
            }
            if (!row.empty()) constraints.push_back(std::move(row));
        }
    }
    auto ech = detail::reduced_echelon(constraints.size(), n_, qfs, constraints);
    auto kernel = detail::kernel_from_echelon(ech, qfs);

    var_weights_.clear();
    for (const auto& v : kernel) {
        mpz_class den_lcm = 1;
        for (const auto& [i, c] : v)
            mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.rat().get_den().get_mpz_t());
        std::vector<mpz_class> w(n_, 0);
        for (const auto& [i, c] : v) w[i] = c.rat().get_num() * (den_lcm / c.rat().get_den());
        mpz_class g = 0;
        for (const auto& x : w) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        std::vector<long long> row(n_, 0);
        for (std::size_t i = 0; i < n_; ++i) {
            mpz_class val = g > 1 ? mpz_class(w[i] / g) : w[i];
            if (!val.fits_slong_p()) throw std::overflow_error("grading weight overflow");
            row[i] = val.get_si();
        }
        var_weights_.push_back(std::move(row));
    }

    // every basis element must be multihomogeneous under the detected grading
    for (const auto& g : gb_.generators()) {
        auto mdeg = [&](const Monomial& m) {
            MultiKey k(var_weights_.size(), 0);
            for (std::size_t w = 0; w < var_weights_.size(); ++w)
                for (std::size_t i = 0; i < n_; ++i)
                    k[w] += static_cast<long long>(m.exp(i)) * var_weights_[w][i];
            return k;
        };
        MultiKey k0 = mdeg(g.terms().begin()->first);
        for (const auto& [m, c] : g.terms())
            if (mdeg(m) != k0) throw std::logic_error("grading detection failed");
    }
}

const KoszulHomology::DegData& KoszulHomology::deg_data(int d) const {
    auto it = degrees_.find(d);
    if (it != degrees_.end()) return it->second;
    DegData dd;
    if (d >= 0) {
        dd.monomials = standard_monomials(gb_, d);
        dd.index.reserve(dd.monomials.size());
        dd.mdeg.reserve(dd.monomials.size());
        const std::size_t g = var_weights_.size();
        for (std::size_t idx = 0; idx < dd.monomials.size(); ++idx) {
            dd.index.emplace(dd.monomials[idx], idx);
            MultiKey k(g, 0);
            for (std::size_t w = 0; w < g; ++w)
                for (std::size_t i = 0; i < n_; ++i)
                    k[w] += static_cast<long long>(dd.monomials[idx].exp(i)) *
                            var_weights_[w][i];
            dd.mdeg.push_back(std::move(k));
        }
    }
    return degrees_.emplace(d, std::move(dd)).first->second;
}

const std::vector<std::vector<std::size_t>>& KoszulHomology::subsets(int p) const {
    auto it = subsets_.find(p);
    if (it != subsets_.end()) return it->second;
    std::vector<std::vector<std::size_t>> list;
    if (p >= 0 && p <= static_cast<int>(n_)) {
        if (p == 0) {
            list.push_back({});
        } else {
            std::vector<std::size_t> c(p);
            std::iota(c.begin(), c.end(), 0);
            while (true) {
                list.push_back(c);
                int i = p - 1;
                while (i >= 0 && c[i] == n_ - p + i) --i;
                if (i < 0) break;
                ++c[i];
                for (std::size_t j = i + 1; j < static_cast<std::size_t>(p); ++j)
                    c[j] = c[j - 1] + 1;
            }
        }
        for (std::size_t idx = 0; idx < list.size(); ++idx) subset_index_[list[idx]] = idx;
    }
    return subsets_.emplace(p, std::move(list)).first->second;
}

std::size_t KoszulHomology::subset_index(const std::vector<std::size_t>& s) const {
    subsets(static_cast<int>(s.size()));
    auto it = subset_index_.find(s);
    if (it == subset_index_.end()) throw std::logic_error("unknown subset");
    return it->second;
}

const std::map<KoszulHomology::MultiKey, std::vector<std::size_t>>&
KoszulHomology::cell_blocks(int p, int q) const {
    auto key = std::make_pair(p, q);
    auto it = blocks_cache_.find(key);
    if (it != blocks_cache_.end()) return it->second;

    std::map<MultiKey, std::vector<std::size_t>> blocks;
    if (p >= 0 && p <= static_cast<int>(n_) && q - p >= 0) {
        const auto& subs = subsets(p);
        const DegData& dd = deg_data(q - p);
        const std::size_t mcount = dd.monomials.size();
        const std::size_t g = var_weights_.size();
        for (std::size_t s = 0; s < subs.size(); ++s) {
            MultiKey skey(g, 0);
            for (std::size_t i : subs[s])
                for (std::size_t w = 0; w < g; ++w) skey[w] += var_weights_[w][i];
            for (std::size_t m = 0; m < mcount; ++m) {
                MultiKey k = skey;
                for (std::size_t w = 0; w < g; ++w) k[w] += dd.mdeg[m][w];
                blocks[std::move(k)].push_back(s * mcount + m);
            }
        }
    }
    return blocks_cache_.emplace(key, std::move(blocks)).first->second;
}

const std::vector<std::pair<std::size_t, FieldElement>>& KoszulHomology::step_nf(
    std::size_t i, const Monomial& m) const {
    auto& cache = nf_cache_[i];
    auto it = cache.find(m);
    if (it != cache.end()) return it->second;

    Polynomial xm = Polynomial::monomial(m * Monomial::variable(n_, i), FieldElement::one(fs_));
    Polynomial nf = normal_form(xm, gb_);
    const DegData& target = deg_data(static_cast<int>(m.degree()) + 1);
    std::vector<std::pair<std::size_t, FieldElement>> out;
    out.reserve(nf.term_count());
    for (const auto& [mm, c] : nf.terms()) out.emplace_back(target.index.at(mm), c);
    std::sort(out.begin(), out.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    return cache.emplace(m, std::move(out)).first->second;
}

const Polynomial& KoszulHomology::product_nf(const Monomial& m) const {
    auto it = product_nf_cache_.find(m);
    if (it != product_nf_cache_.end()) return it->second;
    Polynomial nf = normal_form(Polynomial::monomial(m, FieldElement::one(fs_)), gb_);
    return product_nf_cache_.emplace(m, std::move(nf)).first->second;
}

std::vector<SparseVector> KoszulHomology::block_columns(
    int p, int q, const std::vector<std::size_t>& cols) const {
    const DegData& src = deg_data(q - p);
    const std::size_t mcount_src = src.monomials.size();
    const std::size_t mcount_dst = deg_data(q - p + 1).monomials.size();
    const auto& subs = subsets(p);
    subsets(p - 1); // make the (p-1)-subsets indexable

    std::vector<SparseVector> out;
    out.reserve(cols.size());
    std::vector<std::size_t> reduced;
    for (std::size_t id : cols) {
        const std::size_t s_idx = id / mcount_src;
        const std::size_t m_idx = id % mcount_src;
        const auto& S = subs[s_idx];
        const Monomial& m = src.monomials[m_idx];
        SparseVector col;
        for (std::size_t pos = 0; pos < S.size(); ++pos) {
            reduced.assign(S.begin(), S.end());
            reduced.erase(reduced.begin() + pos);
            const std::size_t row_base = subset_index(reduced) * mcount_dst;
            const bool negative = pos % 2 == 1;
            for (const auto& [tgt, c] : step_nf(S[pos], m))
                col.emplace_back(row_base + tgt, negative ? -c : c);
        }
        std::sort(col.begin(), col.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        out.push_back(std::move(col));
    }
    return out;
}

// ------------------------------------------------------------------- table

std::size_t KoszulHomology::differential_rank(int p, int q) {
    auto key = std::make_pair(p, q);
    auto it = ranks_.find(key);
    if (it != ranks_.end()) return it->second;
    std::size_t rank = 0;
    if (p >= 1 && cell_dim(p, q) > 0) {
        for (const auto& [mu, cols] : cell_blocks(p, q)) {
            // columns are fed as rows: the rank is unchanged
            rank += detail::echelon_rank(fs_, block_columns(p, q, cols));
        }
        check_budget("computing differential ranks");
    }
    ranks_.emplace(key, rank);
    return rank;
}

void KoszulHomology::compute_slice(int q) {
    check_budget("computing a homology slice");
    const int pmax = std::min<int>(q, static_cast<int>(n_));
    mpz_class euler = 0;
    for (int p = 0; p <= pmax; ++p) {
        const std::size_t dim = cell_dim(p, q);
        if (dim == 0) continue;
        const std::size_t r_here = p >= 1 ? differential_rank(p, q) : 0;
        const std::size_t r_next = differential_rank(p + 1, q);
        if (r_here + r_next > dim)
            throw std::logic_error("rank accounting exceeded the cell dimension");
        const std::size_t b = dim - r_here - r_next;
        if (b > 0) {
            if (p == 0 && q > 0)
                throw std::logic_error("beta_{0,q} must vanish for q > 0");
            betti_.nonzero[{p, q}] = b;
            if (p % 2 == 0)
                euler += static_cast<unsigned long>(b);
            else
                euler -= static_cast<unsigned long>(b);
        }
    }
    if (euler != numerator_.coefficient(q))
        throw std::runtime_error("Euler identity mismatch at internal degree " +
                                 std::to_string(q));
}

void KoszulHomology::build_table() {
    numerator_ = hilbert_numerator_auto(gb_);
    if (deg_data(0).monomials.empty())
        throw std::invalid_argument("unit ideal: the quotient ring is zero");

    int target = opt_.q_max_override ? std::max(*opt_.q_max_override, 0)
                                     : std::max(numerator_.degree() + 2, 2);
    for (int q = 0; q <= target; ++q) compute_slice(q);

    if (!opt_.q_max_override) {
        auto slice_nonzero = [&](int q) {
            for (const auto& [pq, b] : betti_.nonzero)
                if (pq.second == q) return true;
            return false;
        };
        constexpr int kHardCap = 256;
        while (slice_nonzero(target) || slice_nonzero(target - 1)) {
            if (target >= kHardCap)
                throw std::runtime_error("q_max stopping rule did not stabilize");
            ++target;
            compute_slice(target);
        }
    }

    q_max_ = target;
    betti_.q_max = target;
    betti_.pd = 0;
    betti_.regularity = 0;
    for (const auto& [pq, b] : betti_.nonzero) {
        betti_.pd = std::max(betti_.pd, pq.first);
        betti_.regularity = std::max(betti_.regularity, pq.second - pq.first);
    }
    betti_.socle_degree = 0;
    betti_.type = 0;
    for (const auto& [pq, b] : betti_.nonzero) {
        if (pq.first != betti_.pd) continue;
        betti_.socle_degree = std::max(betti_.socle_degree, pq.second);
        betti_.type += b;
    }
    table_built_ = true;
}

const BettiTable& KoszulHomology::betti() const {
    if (!table_built_) throw std::logic_error("homology table not built on a lazy engine");
    return betti_;
}

std::size_t KoszulHomology::cell_dim(int p, int q) const {
    if (p < 0 || p > static_cast<int>(n_) || q < p) return 0;
    return subsets(p).size() * deg_data(q - p).monomials.size();
}

KoszulHomology::CellElement KoszulHomology::cell_element(int p, int q,
                                                         std::size_t index) const {
    const DegData& dd = deg_data(q - p);
    const std::size_t mcount = dd.monomials.size();
    if (mcount == 0 || index >= cell_dim(p, q))
        throw std::out_of_range("cell index out of range");
    return {subsets(p)[index / mcount], dd.monomials[index % mcount]};
}

ExactMatrix KoszulHomology::differential_matrix(int p, int q) const {
    if (p < 1 || p > static_cast<int>(n_))
        throw std::invalid_argument("differential requires 1 <= p <= n");
    const std::size_t nrows = cell_dim(p - 1, q), ncols = cell_dim(p, q);
    ExactMatrix m(nrows, ncols, fs_);
    if (ncols == 0) return m;
    std::vector<std::size_t> all(ncols);
    std::iota(all.begin(), all.end(), 0);
    auto colvecs = block_columns(p, q, all);
    for (std::size_t j = 0; j < ncols; ++j)
        for (const auto& [r, c] : colvecs[j]) m.set(r, j, c);
    return m;
}

bool KoszulHomology::check_d_squared(int p, int q) const {
    if (p < 2 || p > static_cast<int>(n_)) return true;
    const std::size_t ncols = cell_dim(p, q);
    if (ncols == 0) return true;

    const DegData& src = deg_data(q - p);
    const DegData& mid = deg_data(q - p + 1);
    const std::size_t mcount2 = deg_data(q - p + 2).monomials.size();
    const auto& subs = subsets(p);
    subsets(p - 1);
    subsets(p - 2);

    std::vector<std::size_t> s1, s2;
    for (const auto& S : subs) {
        for (const Monomial& m : src.monomials) {
            std::map<std::size_t, FieldElement> acc;
            for (std::size_t pos = 0; pos < S.size(); ++pos) {
                s1.assign(S.begin(), S.end());
                s1.erase(s1.begin() + pos);
                const bool neg1 = pos % 2 == 1;
                for (const auto& [i1, c1] : step_nf(S[pos], m)) {
                    const Monomial& m1 = mid.monomials[i1];
                    for (std::size_t pos2 = 0; pos2 < s1.size(); ++pos2) {
                        s2.assign(s1.begin(), s1.end());
                        s2.erase(s2.begin() + pos2);
                        const bool neg2 = (pos2 % 2 == 1) != neg1;
                        const std::size_t base = subset_index(s2) * mcount2;
                        for (const auto& [i2, c2] : step_nf(s1[pos2], m1)) {
                            FieldElement v = c1 * c2;
                            if (neg2) v = -v;
                            auto [it, inserted] = acc.try_emplace(base + i2, v);
                            if (!inserted) it->second += v;
                        }
                    }
                }
            }
            for (const auto& [idx, v] : acc)
                if (!v.is_zero()) return false;
        }
    }
    return true;
}

// ------------------------------------------------------------ homology basis

KoszulHomology::BlockContext& KoszulHomology::block_context(int p, int q,
                                                            const MultiKey& mu) {
    auto& ch = homology_[{p, q}];
    auto it = ch.blocks.find(mu);
    if (it != ch.blocks.end()) return it->second;

    BlockContext ctx;
    const auto& blocks = cell_blocks(p, q);
    if (auto bit = blocks.find(mu); bit != blocks.end()) ctx.cols = bit->second;
    const std::size_t w = ctx.cols.size();

    if (w > 0) {
        // cycles: kernel of this block of d_{p,q}
        auto dcols = block_columns(p, q, ctx.cols);
        std::map<std::size_t, SparseVector> rowmap;
        for (std::size_t j = 0; j < w; ++j)
            for (const auto& [r, c] : dcols[j]) rowmap[r].emplace_back(j, c);
        std::vector<SparseVector> rows;
        rows.reserve(rowmap.size());
        for (auto& [r, row] : rowmap) rows.push_back(std::move(row));
        auto ech = detail::reduced_echelon(rows.size(), w, fs_, rows);
        auto kernel = detail::kernel_from_echelon(ech, fs_);

        // boundaries: image of the mu-block of d_{p+1,q}, in local coords
        std::vector<SparseVector> brows;
        const auto& blocks_up = cell_blocks(p + 1, q);
        if (auto uit = blocks_up.find(mu); uit != blocks_up.end()) {
            auto bcols = block_columns(p + 1, q, uit->second);
            brows.reserve(bcols.size());
            for (auto& col : bcols) {
                SparseVector local;
                local.reserve(col.size());
                for (const auto& [g, c] : col) {
                    auto pos = std::lower_bound(ctx.cols.begin(), ctx.cols.end(), g);
                    if (pos == ctx.cols.end() || *pos != g)
                        throw std::logic_error("boundary leaves its grading block");
                    local.emplace_back(
                        static_cast<std::size_t>(pos - ctx.cols.begin()), c);
                }
                brows.push_back(std::move(local));
            }
        }
        auto bech = detail::reduced_echelon(brows.size(), w, fs_, brows);
        ctx.boundary = std::move(bech.rows);

        auto reduce_dense = [&](std::vector<FieldElement>& vec,
                                const std::vector<SparseVector>& basis) {
            for (const auto& row : basis) {
                const std::size_t piv = row.front().first;
                if (vec[piv].is_zero()) continue;
                const FieldElement c = vec[piv];
                for (const auto& [idx, val] : row) vec[idx] -= c * val;
            }
        };

        // representatives: kernel vectors reduced mod boundaries, echelonized
        for (const auto& kv : kernel) {
            std::vector<FieldElement> vec(w, FieldElement::zero(fs_));
            for (const auto& [i, c] : kv) vec[i] = c;
            reduce_dense(vec, ctx.boundary);
            reduce_dense(vec, ctx.reps);
            std::size_t piv = w;
            for (std::size_t i = 0; i < w; ++i)
                if (!vec[i].is_zero()) {
                    piv = i;
                    break;
                }
            if (piv == w) continue;
            const FieldElement inv = vec[piv].inverse();
            SparseVector rep;
            for (std::size_t i = piv; i < w; ++i)
                if (!vec[i].is_zero()) rep.emplace_back(i, vec[i] * inv);
            ctx.reps.push_back(std::move(rep));
        }
        const std::size_t expected = kernel.size() - bech.rank;
        if (ctx.reps.size() != expected)
            throw std::logic_error("representative count disagrees with rank data");

        // sort by pivot and back-substitute so the reps are mutually reduced
        std::sort(ctx.reps.begin(), ctx.reps.end(),
                  [](const SparseVector& a, const SparseVector& b) {
                      return a.front().first < b.front().first;
                  });
        for (std::size_t i = ctx.reps.size(); i-- > 1;) {
            const std::size_t piv = ctx.reps[i].front().first;
            for (std::size_t j = 0; j < i; ++j) {
                FieldElement c = FieldElement::zero(fs_);
                for (const auto& [idx, val] : ctx.reps[j])
                    if (idx == piv) {
                        c = val;
                        break;
                    }
                if (c.is_zero()) continue;
                std::vector<FieldElement> vec(w, FieldElement::zero(fs_));
                for (const auto& [idx, val] : ctx.reps[j]) vec[idx] = val;
                for (const auto& [idx, val] : ctx.reps[i]) vec[idx] -= c * val;
                SparseVector out;
                for (std::size_t t = 0; t < w; ++t)
                    if (!vec[t].is_zero()) out.emplace_back(t, vec[t]);
                ctx.reps[j] = std::move(out);
            }
        }
    }

    auto [ins, inserted] = ch.blocks.emplace(mu, std::move(ctx));
    (void)inserted;
    return ins->second;
}

KoszulHomology::CellHomology& KoszulHomology::full_cell(int p, int q) {
    auto& ch = homology_[{p, q}];
    if (ch.full) return ch;
    for (const auto& [mu, cols] : cell_blocks(p, q)) block_context(p, q, mu);
    ch.classes.clear();
    std::size_t counter = 0;
    for (auto& [mu, ctx] : ch.blocks) {
        ctx.rep_class_ids.clear();
        for (std::size_t r = 0; r < ctx.reps.size(); ++r) {
            ctx.rep_class_ids.push_back(counter++);
            ch.classes.emplace_back(mu, r);
        }
    }
    ch.beta = counter;
    ch.full = true;
    if (table_built_ && q <= q_max_ && ch.beta != betti_.beta(p, q))
        throw std::logic_error("homology basis size disagrees with the Betti number");
    return ch;
}

std::size_t KoszulHomology::class_count(int p, int q) const {
    if (table_built_ && q <= q_max_) return betti_.beta(p, q);
    return const_cast<KoszulHomology*>(this)->full_cell(p, q).beta;
}

SparseVector KoszulHomology::representative(int p, int q, std::size_t idx) const {
    auto& self = *const_cast<KoszulHomology*>(this);
    CellHomology& ch = self.full_cell(p, q);
    if (idx >= ch.classes.size()) throw std::out_of_range("class index out of range");
    const auto& [mu, ridx] = ch.classes[idx];
    const BlockContext& ctx = ch.blocks.at(mu);
    SparseVector out;
    out.reserve(ctx.reps[ridx].size());
    for (const auto& [local, c] : ctx.reps[ridx]) out.emplace_back(ctx.cols[local], c);
    return out;
}

HomologyClass KoszulHomology::basis_class(int p, int q, std::size_t idx) const {
    const std::size_t count = class_count(p, q);
    if (idx >= count) throw std::out_of_range("class index out of range");
    HomologyClass z{p, q, std::vector<FieldElement>(count, FieldElement::zero(fs_))};
    z.coords[idx] = FieldElement::one(fs_);
    return z;
}

HomologyClass KoszulHomology::zero_class(int p, int q) const {
    std::size_t count = 0;
    if (table_built_ && q <= q_max_)
        count = betti_.beta(p, q);
    else if (p <= static_cast<int>(n_) && p >= 0 && q >= p)
        count = class_count(p, q);
    return HomologyClass{p, q,
                         std::vector<FieldElement>(count, FieldElement::zero(fs_))};
}

HomologyClass KoszulHomology::unit_class() const { return basis_class(0, 0, 0); }

HomologyClass KoszulHomology::reduce_cycle(
    int p, int q, const std::map<std::size_t, FieldElement>& cycle) {
    const bool in_table = table_built_ && q <= q_max_;
    CellHomology* full = nullptr;
    if (in_table && betti_.beta(p, q) > 0) full = &full_cell(p, q);

    HomologyClass out = zero_class(p, q);
    if (cycle.empty()) return out;

    // split the cycle by grading block
    const DegData& dd = deg_data(q - p);
    const std::size_t mcount = dd.monomials.size();
    const auto& subs = subsets(p);
    const std::size_t g = var_weights_.size();
    std::map<MultiKey, std::vector<std::pair<std::size_t, FieldElement>>> by_block;
    for (const auto& [id, c] : cycle) {
        if (c.is_zero()) continue;
        MultiKey k(g, 0);
        for (std::size_t i : subs[id / mcount])
            for (std::size_t w = 0; w < g; ++w) k[w] += var_weights_[w][i];
        for (std::size_t w = 0; w < g; ++w) k[w] += dd.mdeg[id % mcount][w];
        by_block[std::move(k)].emplace_back(id, c);
    }

    for (const auto& [mu, entries] : by_block) {
        BlockContext& ctx = block_context(p, q, mu);
        const std::size_t w = ctx.cols.size();
        std::vector<FieldElement> vec(w, FieldElement::zero(fs_));
        for (const auto& [id, c] : entries) {
            auto pos = std::lower_bound(ctx.cols.begin(), ctx.cols.end(), id);
            if (pos == ctx.cols.end() || *pos != id)
                throw std::logic_error("cycle entry outside its grading block");
            vec[static_cast<std::size_t>(pos - ctx.cols.begin())] = c;
        }
        for (const auto& row : ctx.boundary) {
            const std::size_t piv = row.front().first;
            if (vec[piv].is_zero()) continue;
            const FieldElement c = vec[piv];
            for (const auto& [idx, val] : row) vec[idx] -= c * val;
        }
        for (std::size_t r = 0; r < ctx.reps.size(); ++r) {
            const std::size_t piv = ctx.reps[r].front().first;
            if (vec[piv].is_zero()) continue;
            const FieldElement c = vec[piv];
            if (full) {
                out.coords[ctx.rep_class_ids[r]] += c;
            } else if (in_table) {
                throw std::logic_error(
                    "nonzero homology found in a cell the rank data reports as zero");
            } else {
                throw std::runtime_error("homology class outside the computed table");
            }
            for (const auto& [idx, val] : ctx.reps[r]) vec[idx] -= c * val;
        }
        for (const auto& v : vec)
            if (!v.is_zero())
                throw std::logic_error("cycle reduction left a nonzero remainder");
    }
    return out;
}

// ---------------------------------------------------------------- DG algebra

namespace {

/// Merges two disjoint sorted subsets; returns 0 when they intersect, else
/// the sign of the sorting permutation.
int merge_subsets(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b,
                  std::vector<std::size_t>& out) {
    out.clear();
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    long inversions = 0;
    while (i < a.size() || j < b.size()) {
        if (j == b.size() || (i < a.size() && a[i] < b[j])) {
            out.push_back(a[i]);
            ++i;
        } else if (i == a.size() || b[j] < a[i]) {
            inversions += static_cast<long>(a.size() - i);
            out.push_back(b[j]);
            ++j;
        } else {
            return 0;
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

} // namespace

HomologyClass KoszulHomology::dg_product(const HomologyClass& a, const HomologyClass& b) {
    const int p = a.p + b.p, q = a.q + b.q;
    if (p > static_cast<int>(n_)) return HomologyClass{p, q, {}};
    if (a.is_zero() || b.is_zero()) return zero_class(p, q);

    auto expand = [&](const HomologyClass& z) {
        std::map<std::size_t, FieldElement> v;
        for (std::size_t i = 0; i < z.coords.size(); ++i) {
            if (z.coords[i].is_zero()) continue;
            for (const auto& [idx, c] : representative(z.p, z.q, i)) {
                auto [it, inserted] = v.try_emplace(idx, z.coords[i] * c);
                if (!inserted) it->second += z.coords[i] * c;
            }
        }
        for (auto it = v.begin(); it != v.end();)
            it = it->second.is_zero() ? v.erase(it) : std::next(it);
        return v;
    };
    auto va = expand(a), vb = expand(b);

    const DegData& dda = deg_data(a.q - a.p);
    const DegData& ddb = deg_data(b.q - b.p);
    const DegData& ddt = deg_data(q - p);
    const std::size_t mca = dda.monomials.size();
    const std::size_t mcb = ddb.monomials.size();
    const std::size_t mct = ddt.monomials.size();
    const auto& subs_a = subsets(a.p);
    const auto& subs_b = subsets(b.p);
    subsets(p);

    std::map<std::size_t, FieldElement> acc;
    std::vector<std::size_t> merged;
    for (const auto& [ga, ca] : va) {
        const auto& s1 = subs_a[ga / mca];
        const Monomial& m1 = dda.monomials[ga % mca];
        for (const auto& [gb, cb] : vb) {
            const auto& s2 = subs_b[gb / mcb];
            int sign = merge_subsets(s1, s2, merged);
            if (sign == 0) continue;
            const Monomial& m2 = ddb.monomials[gb % mcb];
            const Polynomial& nf = product_nf(m1 * m2);
            if (nf.is_zero()) continue;
            const std::size_t base = subset_index(merged) * mct;
            FieldElement factor = ca * cb;
            if (sign < 0) factor = -factor;
            for (const auto& [mm, cc] : nf.terms()) {
                const std::size_t idx = base + ddt.index.at(mm);
                auto [it, inserted] = acc.try_emplace(idx, factor * cc);
                if (!inserted) it->second += factor * cc;
            }
        }
    }
    for (auto it = acc.begin(); it != acc.end();)
        it = it->second.is_zero() ? acc.erase(it) : std::next(it);
    return reduce_cycle(p, q, acc);
}

ExactMatrix KoszulHomology::pairing_matrix(int p) {
    const BettiTable& bt = betti();
    if (bt.type != 1)
        throw std::domain_error("top class not one-dimensional (type = " +
                                std::to_string(bt.type) + ")");
    const int c = bt.pd, sigma = bt.socle_degree;

    std::vector<std::pair<int, std::size_t>> row_ids, col_ids;
    for (const auto& [pq, b] : bt.nonzero) {
        if (pq.first == p)
            for (std::size_t i = 0; i < b; ++i) row_ids.emplace_back(pq.second, i);
        if (pq.first == c - p)
            for (std::size_t i = 0; i < b; ++i) col_ids.emplace_back(pq.second, i);
    }

    ExactMatrix m(row_ids.size(), col_ids.size(), fs_);
    for (std::size_t r = 0; r < row_ids.size(); ++r) {
        for (std::size_t cc = 0; cc < col_ids.size(); ++cc) {
            if (row_ids[r].first + col_ids[cc].first != sigma) continue;
            HomologyClass prod =
                dg_product(basis_class(p, row_ids[r].first, row_ids[r].second),
                           basis_class(c - p, col_ids[cc].first, col_ids[cc].second));
            if (!prod.coords.empty() && !prod.coords[0].is_zero())
                m.set(r, cc, prod.coords[0]);
        }
    }
    return m;
}

ExactMatrix differential_matrix(int p, int q, const GroebnerBasis& gb) {
    return KoszulHomology::lazy(gb).differential_matrix(p, q);
}

BettiTable betti_table(const KoszulHomology& hb) { return hb.betti(); }

} // namespace gorfro
