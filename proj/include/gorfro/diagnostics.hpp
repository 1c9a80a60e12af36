#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "gorfro/catalog.hpp"
#include "gorfro/koszul.hpp"

namespace gorfro {

/// Auslander-Buchsbaum reading: Cohen-Macaulay iff pd == n - dim.
bool is_cohen_macaulay(const BettiTable& bt, int dim_A, std::size_t n);

struct GorensteinVerdict {
    bool value = false;
    std::vector<std::string> witnesses;
};
/// Cohen-Macaulay with type 1.
GorensteinVerdict is_gorenstein(const BettiTable& bt, int dim_A, std::size_t n);

struct FrobeniusVerdict {
    bool value = false;
    std::vector<std::string> witnesses;
    std::optional<std::size_t> top_dim;         // set when type != 1
    std::optional<int> degenerate_p;            // p with a degenerate pairing
    std::optional<ExactMatrix> degenerate_pairing;
};
/// Nondegeneracy of the multiplication-then-project pairing in every
/// homological degree; a multi-dimensional top class counts as failure, not
/// as an error.
FrobeniusVerdict is_frobenius(KoszulHomology& hb, const BettiTable& bt);

struct RunLimits {
    double max_seconds = 0; // 0 = unlimited
    std::optional<int> q_max_override;
};

struct TheoremCheck {
    bool applies = false;
    bool holds = false;
    std::string detail;
};

struct SubcanonicalReport {
    bool applies = false;
    bool holds = false;
    std::optional<int> N;
    std::optional<bool> root_theoretic; // set when root data is present
    std::optional<int> root_N;
};

struct ExampleReport {
    std::string example;
    FieldSpec field;
    std::size_t n = 0;
    int dim = 0;
    int codim = 0;
    int pd = 0;
    std::size_t type = 0;
    BettiTable betti;
    HilbertNumerator numerator{std::vector<mpz_class>{}};
    bool cohen_macaulay = false;
    bool gorenstein = false;
    bool frobenius = false;
    std::vector<std::string> witnesses;
    SubcanonicalReport subcanonical;
    TheoremCheck avramov_golod, theorem1, theorem2;
    long long runtime_ms = 0;
    std::string notes;

    bool all_theorems_hold() const;
};

struct PipelineResult {
    ExampleReport report;
    std::shared_ptr<GroebnerBasis> groebner;
    std::shared_ptr<KoszulHomology> homology;
};

/// Groebner basis -> Hilbert data -> Koszul homology -> verdicts -> theorem
/// checks for one catalog entry (or user ideal wrapped as an entry).
PipelineResult run_pipeline_full(const CatalogEntry& entry, FieldSpec fs,
                                 RunLimits limits = {});
ExampleReport run_pipeline(const CatalogEntry& entry, FieldSpec fs, RunLimits limits = {});

TheoremCheck verify_avramov_golod(const ExampleReport& r);
TheoremCheck verify_theorem1(const ExampleReport& r);
TheoremCheck verify_theorem2(const ExampleReport& r);

/// Runs an example in rational and prime mode and compares Betti tables;
/// a first-prime mismatch is retried with the second prime (unlucky-prime
/// protocol). The rational result is authoritative.
struct ModeComparison {
    bool agree = false;
    bool used_second_prime = false;
    ExampleReport rational;
    ExampleReport prime;
};
ModeComparison compare_field_modes(const CatalogEntry& rational_entry,
                                   const std::string& id, RunLimits limits = {});

/// The `verify-theorems --all` harness: core entries in rational mode,
/// stretch entries in prime mode, run in parallel, reports merged in
/// catalog order.
struct HarnessResult {
    std::vector<ExampleReport> reports;
    bool all_ok = false;
};
HarnessResult verify_theorems_all(RunLimits core_limits = {},
                                  RunLimits stretch_limits = {});

} // namespace gorfro
