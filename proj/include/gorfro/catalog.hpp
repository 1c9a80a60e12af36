#pragma once

#include <optional>
#include <string>
#include <vector>

#include "gorfro/polynomial.hpp"
#include "gorfro/rootsys.hpp"

namespace gorfro {

struct RootData {
    std::vector<SimpleFactor> factors;
    WeightVector weight; // concatenated fundamental-weight coordinates
};

struct SubcanonicalClassical {
    bool applies = false;
    bool holds = false;
    std::optional<int> N;
};

struct CatalogEntry {
    std::string id;
    std::string description;
    std::size_t nvars = 0;
    std::vector<Polynomial> generators;
    int expected_dim = 0;
    SubcanonicalClassical subcanonical;
    std::optional<RootData> root_data;
    /// Monomial parameterization of the catalog variables in an auxiliary
    /// ring; substituting it into every generator must give zero.
    std::vector<Polynomial> parameterization;
    /// Stretch entries run in prime-field mode with a longer budget.
    bool stretch = false;
};

/// d-th Veronese embedding of P^m: variables indexed by the degree-d
/// multi-indices on m+1 parameters (descending lexicographic), all quadratic
/// binomial relations x_u x_v - x_{u'} x_{v'} with u+v = u'+v'.
CatalogEntry veronese_ideal(int m, int d, FieldSpec fs);

/// Segre embedding of P^m1 x P^m2: 2x2 minors of the generic
/// (m1+1) x (m2+1) matrix, variables row-major.
CatalogEntry segre_ideal(int m1, int m2, FieldSpec fs);

/// Plucker-embedded Gr(2,nn): three-term relations
/// p_ij p_kl - p_ik p_jl + p_il p_jk over 1 <= i<j<k<l <= nn, variables
/// indexed by lexicographic pairs.
CatalogEntry plucker2_ideal(int nn, FieldSpec fs);

/// Complete intersection of two quadrics in four variables.
CatalogEntry ci_two_quadrics(FieldSpec fs);

/// Closed-form subcanonicity data recorded on the entry; `applies` is false
/// for entries without classical data.
SubcanonicalClassical classical_subcanonical(const CatalogEntry& entry);

/// Entry ids of the built-in catalog: 8 core entries followed by the 2
/// stretch entries.
std::vector<std::string> core_catalog_ids();
std::vector<std::string> stretch_catalog_ids();
std::vector<std::string> all_catalog_ids();

/// Builds the entry for an id like "veronese:1,3", "segre:1,2",
/// "plucker2:4" or "ci2q"; throws on unknown ids.
CatalogEntry make_entry(const std::string& id, FieldSpec fs);

} // namespace gorfro
