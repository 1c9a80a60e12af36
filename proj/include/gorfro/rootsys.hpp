#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

namespace gorfro {

/// One simple factor of a semisimple group, types A-D.
struct SimpleFactor {
    char type;
    int rank;
    bool operator==(const SimpleFactor& o) const { return type == o.type && rank == o.rank; }
};

/// Integer coordinates in the fundamental-weight basis, concatenated across
/// simple factors.
using WeightVector = std::vector<int>;

/// Semisimple root datum: block-diagonal Cartan matrix and the full list of
/// positive roots in simple-root coordinates, closed under simple-root
/// addition and listed in (height, lex) order.
class RootSystem {
public:
    static RootSystem build(const std::vector<SimpleFactor>& factors);

    std::size_t rank() const { return cartan_.size(); }
    const std::vector<SimpleFactor>& factors() const { return factors_; }
    const std::vector<std::size_t>& factor_offsets() const { return offsets_; }
    const std::vector<std::vector<int>>& cartan() const { return cartan_; }
    const std::vector<std::vector<int>>& positive_roots() const { return positive_roots_; }

    /// Pairing <gamma, alpha_j^vee> for gamma given in simple-root
    /// coordinates; the fundamental-weight coordinates of gamma.
    WeightVector to_fundamental(const std::vector<int>& root_coords) const;

private:
    std::vector<SimpleFactor> factors_;
    std::vector<std::size_t> offsets_; // starting simple-root index per factor
    std::vector<std::vector<int>> cartan_;
    std::vector<std::vector<int>> positive_roots_;
};

RootSystem build_root_system(const std::vector<SimpleFactor>& factors);

/// Simple roots orthogonal to a dominant weight: { i : lambda_i == 0 }.
std::set<std::size_t> parabolic_levi(const RootSystem& rs, const WeightVector& lambda);

/// Sum of the positive roots outside the Levi subsystem (the nilradical
/// roots of the parabolic), in fundamental-weight coordinates.
WeightVector canonical_weight(const RootSystem& rs, const std::set<std::size_t>& levi);

struct SubcanonicityVerdict {
    bool holds = false;
    std::optional<int> N;
    WeightVector kappa;
};

/// Decides whether kappa_P(levi(lambda)) equals N*lambda for a positive
/// integer N. Rejects weights vanishing identically on a simple factor.
SubcanonicityVerdict subcanonicity_test(const RootSystem& rs, const WeightVector& lambda);

/// "A3" or "A1xA2" -> simple factors.
std::vector<SimpleFactor> parse_type_string(const std::string& s);
std::string type_string(const std::vector<SimpleFactor>& factors);

/// "4*w2" style rendering of a fundamental-weight vector; "0" when zero.
std::string weight_str(const WeightVector& w);

} // namespace gorfro
