#pragma once

#include <chrono>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "gorfro/groebner.hpp"
#include "gorfro/matrix.hpp"

namespace gorfro {

/// Thrown when a computation exceeds its configured budget; reported
/// distinctly from mathematical failures.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct KoszulOptions {
    /// Hard override for the internal-degree cutoff; when absent the
    /// stopping rule applies (start at deg N(t) + 2, extend while either of
    /// the two highest computed degrees still carries homology).
    std::optional<int> q_max_override;
    /// Wall-clock budget in seconds; 0 means unlimited.
    double max_seconds = 0;
};

/// Bigraded Betti numbers beta_{p,q} = dim Tor_p(A,k)_q with the derived
/// scalars read off the table.
struct BettiTable {
    std::map<std::pair<int, int>, std::size_t> nonzero; // (p,q) -> beta
    int q_max = 0;
    int pd = 0;
    int regularity = 0;
    int socle_degree = 0;
    std::size_t type = 0;

    std::size_t beta(int p, int q) const;
    /// Total Betti numbers per homological degree, indices 0..pd.
    std::vector<std::size_t> totals() const;
    /// Macaulay-style grid: rows indexed by q-p, columns by p, dot for zero.
    std::string render_text() const;
};

/// Element of H_{p,q} expressed in the stored homology basis of that cell.
struct HomologyClass {
    int p = 0;
    int q = 0;
    std::vector<FieldElement> coords;
    bool is_zero() const;
};

/// The Koszul complex A (x) Lambda(e_0..e_{n-1}) with d(e_i) = x_i, its
/// homology with cycle representatives, the DG product and the duality
/// pairing. The complex is processed one internal degree at a time; within
/// a degree it splits along the finest grading for which the ideal is
/// multihomogeneous, which keeps the elimination blocks small.
class KoszulHomology {
public:
    explicit KoszulHomology(const GroebnerBasis& gb, KoszulOptions opt = {});

    /// Builds caches only; no homology table. Sufficient for
    /// differential_matrix and d-squared checks.
    static KoszulHomology lazy(const GroebnerBasis& gb);

    const GroebnerBasis& groebner() const { return gb_; }
    std::size_t nvars() const { return n_; }
    const FieldSpec& field() const { return fs_; }
    const HilbertNumerator& hilbert() const { return numerator_; }
    int q_max() const { return q_max_; }
    std::size_t grading_rank() const { return var_weights_.size(); }

    const BettiTable& betti() const;
    std::size_t beta(int p, int q) const { return betti().beta(p, q); }

    // --- cells ---
    std::size_t cell_dim(int p, int q) const;
    struct CellElement {
        std::vector<std::size_t> subset;
        Monomial monomial;
    };
    CellElement cell_element(int p, int q, std::size_t index) const;
    /// Matrix of d : K_{p,q} -> K_{p-1,q}; requires 1 <= p <= n.
    ExactMatrix differential_matrix(int p, int q) const;
    /// Streaming check that d(d(column)) == 0 for every basis column.
    bool check_d_squared(int p, int q) const;

    // --- homology representatives ---
    std::size_t class_count(int p, int q) const;
    /// idx-th representative as a cycle vector over the cell basis.
    SparseVector representative(int p, int q, std::size_t idx) const;
    HomologyClass basis_class(int p, int q, std::size_t idx) const;
    HomologyClass zero_class(int p, int q) const;
    HomologyClass unit_class() const;

    // --- DG algebra ---
    HomologyClass dg_product(const HomologyClass& a, const HomologyClass& b);
    /// Pairing of H_{p,*} against H_{pd-p, socle-*} through the top class;
    /// requires type == 1.
    ExactMatrix pairing_matrix(int p);

private:
    struct LazyTag {};
    KoszulHomology(const GroebnerBasis& gb, KoszulOptions opt, LazyTag);

    using MultiKey = std::vector<long long>;

    struct DegData {
        std::vector<Monomial> monomials; // descending in the term order
        std::unordered_map<Monomial, std::size_t, MonomialHash> index;
        std::vector<MultiKey> mdeg;
    };

    struct BlockContext {
        std::vector<std::size_t> cols;           // global cell indices, sorted
        std::vector<SparseVector> boundary;      // reduced echelon, local coords
        std::vector<SparseVector> reps;          // reduced echelon, local coords
        std::vector<std::size_t> rep_class_ids;  // set once the cell is fully built
    };

    struct CellHomology {
        bool full = false; // all blocks built, class ids assigned
        std::size_t beta = 0;
        std::map<MultiKey, BlockContext> blocks;
        std::vector<std::pair<MultiKey, std::size_t>> classes; // (block key, rep idx)
    };

    void detect_grading();
    const DegData& deg_data(int d) const;
    const std::vector<std::vector<std::size_t>>& subsets(int p) const;
    std::size_t subset_index(const std::vector<std::size_t>& s) const;
    const std::map<MultiKey, std::vector<std::size_t>>& cell_blocks(int p, int q) const;

    /// NF(x_i * m) over the standard monomials one degree up, memoized.
    const std::vector<std::pair<std::size_t, FieldElement>>& step_nf(std::size_t i,
                                                                     const Monomial& m) const;
    const Polynomial& product_nf(const Monomial& m) const;
    /// Columns of d_{p,q} restricted to the given cell indices; entries are
    /// global cell indices of (p-1, q).
    std::vector<SparseVector> block_columns(int p, int q,
                                            const std::vector<std::size_t>& cols) const;

    std::size_t differential_rank(int p, int q);
    void compute_slice(int q);
    void build_table();
    BlockContext& block_context(int p, int q, const MultiKey& mu);
    CellHomology& full_cell(int p, int q);
    HomologyClass reduce_cycle(int p, int q,
                               const std::map<std::size_t, FieldElement>& cycle);
    void check_budget(const char* where) const;

    GroebnerBasis gb_;
    std::size_t n_;
    FieldSpec fs_;
    KoszulOptions opt_;
    HilbertNumerator numerator_{std::vector<mpz_class>{}};
    int q_max_ = -1;
    bool table_built_ = false;
    BettiTable betti_;

    std::vector<std::vector<long long>> var_weights_; // g rows of length n
    mutable std::map<int, DegData> degrees_;
    mutable std::map<int, std::vector<std::vector<std::size_t>>> subsets_;
    mutable std::map<std::vector<std::size_t>, std::size_t> subset_index_;
    mutable std::map<std::pair<int, int>, std::map<MultiKey, std::vector<std::size_t>>>
        blocks_cache_;
    mutable std::vector<
        std::unordered_map<Monomial, std::vector<std::pair<std::size_t, FieldElement>>,
                           MonomialHash>>
        nf_cache_;
    mutable std::unordered_map<Monomial, Polynomial, MonomialHash> product_nf_cache_;
    std::map<std::pair<int, int>, std::size_t> ranks_;
    std::map<std::pair<int, int>, CellHomology> homology_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

/// Free-function forms of the per-operation surface.
ExactMatrix differential_matrix(int p, int q, const GroebnerBasis& gb);
BettiTable betti_table(const KoszulHomology& hb);

} // namespace gorfro
