#include "gorfro/catalog.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace gorfro {

namespace {

Polynomial binomial_diff(std::size_t nvars, FieldSpec fs, const Monomial& plus,
                         const Monomial& minus) {
    Polynomial p(nvars, fs);
    p.add_term(plus, FieldElement::one(fs));
    p.add_term(minus, -FieldElement::one(fs));
    return p;
}

Monomial pair_monomial(std::size_t nvars, std::size_t a, std::size_t b) {
    std::vector<std::uint32_t> e(nvars, 0);
    e[a] += 1;
    e[b] += 1;
    return Monomial(std::move(e));
}

/// Degree-d multi-indices on `vars` parameters, descending lexicographic,
/// so the first index is (d, 0, ..., 0).
std::vector<std::vector<std::uint32_t>> multi_indices(int vars, int d) {
    std::vector<std::vector<std::uint32_t>> out;
    std::vector<std::uint32_t> cur(vars, 0);
    auto rec = [&](auto&& self, int pos, int rem) -> void {
        if (pos == vars - 1) {
            cur[pos] = static_cast<std::uint32_t>(rem);
            out.push_back(cur);
            return;
        }
        for (int e = rem; e >= 0; --e) {
            cur[pos] = static_cast<std::uint32_t>(e);
            self(self, pos + 1, rem - e);
        }
    };
    rec(rec, 0, d);
    return out;
}

} // namespace

CatalogEntry veronese_ideal(int m, int d, FieldSpec fs) {
    if (m < 1 || d < 1) throw std::invalid_argument("veronese requires m >= 1, d >= 1");
    const auto indices = multi_indices(m + 1, d);
    const std::size_t n = indices.size();

    CatalogEntry e;
    e.id = "veronese:" + std::to_string(m) + "," + std::to_string(d);
    e.description = "degree-" + std::to_string(d) + " Veronese of P^" + std::to_string(m);
    e.nvars = n;
    e.expected_dim = m + 1;

    // Group the unordered variable pairs by the sum of their multi-indices;
    // each group contributes a chain of binomials against its first pair.
    std::map<std::vector<std::uint32_t>, std::vector<Monomial>> groups;
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = a; b < n; ++b) {
            std::vector<std::uint32_t> sum(indices[a]);
            for (std::size_t k = 0; k < sum.size(); ++k) sum[k] += indices[b][k];
            groups[sum].push_back(pair_monomial(n, a, b));
        }
    }
    for (const auto& [sum, pairs] : groups)
        for (std::size_t k = 1; k < pairs.size(); ++k)
            e.generators.push_back(binomial_diff(n, fs, pairs[k], pairs[0]));

    e.subcanonical.applies = true;
    e.subcanonical.holds = (m + 1) % d == 0;
    if (e.subcanonical.holds) e.subcanonical.N = (m + 1) / d;

    RootData rd;
    rd.factors = {{'A', m}};
    rd.weight.assign(m, 0);
    rd.weight[0] = d;
    e.root_data = rd;

    // x_u -> t^u in the parameter ring k[t_0..t_m]
    for (const auto& u : indices) {
        Polynomial img(static_cast<std::size_t>(m + 1), fs);
        img.add_term(Monomial(u), FieldElement::one(fs));
        e.parameterization.push_back(std::move(img));
    }

    e.stretch = (m == 3 && d == 2);
    return e;
}

CatalogEntry segre_ideal(int m1, int m2, FieldSpec fs) {
    if (m1 < 1 || m2 < 1) throw std::invalid_argument("segre requires m1, m2 >= 1");
    const std::size_t rows = m1 + 1, cols = m2 + 1;
    const std::size_t n = rows * cols;
    auto var = [&](std::size_t i, std::size_t j) { return i * cols + j; };

    CatalogEntry e;
    e.id = "segre:" + std::to_string(m1) + "," + std::to_string(m2);
    e.description = "Segre embedding of P^" + std::to_string(m1) + " x P^" + std::to_string(m2);
    e.nvars = n;
    e.expected_dim = m1 + m2 + 1;

    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t k = i + 1; k < rows; ++k)
            for (std::size_t j = 0; j < cols; ++j)
                for (std::size_t l = j + 1; l < cols; ++l)
                    e.generators.push_back(binomial_diff(
                        n, fs, pair_monomial(n, var(i, j), var(k, l)),
                        pair_monomial(n, var(i, l), var(k, j))));

    e.subcanonical.applies = true;
    e.subcanonical.holds = m1 == m2;
    if (e.subcanonical.holds) e.subcanonical.N = m1 + 1;

    RootData rd;
    rd.factors = {{'A', m1}, {'A', m2}};
    rd.weight.assign(m1 + m2, 0);
    rd.weight[0] = 1;
    rd.weight[m1] = 1;
    e.root_data = rd;

    // x_ij -> s_i t_j in k[s_0..s_m1, t_0..t_m2]
    const std::size_t pn = rows + cols;
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j < cols; ++j) {
            std::vector<std::uint32_t> exps(pn, 0);
            exps[i] = 1;
            exps[rows + j] = 1;
            Polynomial img(pn, fs);
            img.add_term(Monomial(std::move(exps)), FieldElement::one(fs));
            e.parameterization.push_back(std::move(img));
        }
    return e;
}

CatalogEntry plucker2_ideal(int nn, FieldSpec fs) {
    if (nn < 4) throw std::invalid_argument("plucker2 requires nn >= 4");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < nn; ++i)
        for (int j = i + 1; j < nn; ++j) pairs.emplace_back(i, j);
    const std::size_t n = pairs.size();
    auto var = [&](int i, int j) {
        // lexicographic pair index for i < j
        return static_cast<std::size_t>(
            std::lower_bound(pairs.begin(), pairs.end(), std::make_pair(i, j)) -
            pairs.begin());
    };

    CatalogEntry e;
    e.id = "plucker2:" + std::to_string(nn);
    e.description = "Plucker-embedded Gr(2," + std::to_string(nn) + ")";
    e.nvars = n;
    e.expected_dim = 2 * (nn - 2) + 1;

    const FieldElement one = FieldElement::one(fs);
    for (int i = 0; i < nn; ++i)
        for (int j = i + 1; j < nn; ++j)
            for (int k = j + 1; k < nn; ++k)
                for (int l = k + 1; l < nn; ++l) {
                    Polynomial p(n, fs);
                    p.add_term(pair_monomial(n, var(i, j), var(k, l)), one);
                    p.add_term(pair_monomial(n, var(i, k), var(j, l)), -one);
                    p.add_term(pair_monomial(n, var(i, l), var(j, k)), one);
                    e.generators.push_back(std::move(p));
                }

    e.subcanonical.applies = true;
    e.subcanonical.holds = true;
    e.subcanonical.N = nn;

    RootData rd;
    rd.factors = {{'A', nn - 1}};
    rd.weight.assign(nn - 1, 0);
    rd.weight[1] = 1; // omega_2
    e.root_data = rd;

    // p_ij -> a_i b_j - a_j b_i in k[a_0..a_{nn-1}, b_0..b_{nn-1}]
    const std::size_t pn = 2 * static_cast<std::size_t>(nn);
    for (const auto& [i, j] : pairs) {
        Polynomial img(pn, fs);
        std::vector<std::uint32_t> e1(pn, 0), e2(pn, 0);
        e1[i] = 1;
        e1[nn + j] = 1;
        e2[j] = 1;
        e2[nn + i] = 1;
        img.add_term(Monomial(std::move(e1)), one);
        img.add_term(Monomial(std::move(e2)), -one);
        e.parameterization.push_back(std::move(img));
    }

    e.stretch = nn >= 5;
    return e;
}

CatalogEntry ci_two_quadrics(FieldSpec fs) {
    CatalogEntry e;
    e.id = "ci2q";
    e.description = "complete intersection of two quadrics in 4 variables";
    e.nvars = 4;
    e.expected_dim = 2;
    auto sq = [&](std::size_t i) {
        std::vector<std::uint32_t> exps(4, 0);
        exps[i] = 2;
        return Monomial(std::move(exps));
    };
    e.generators.push_back(binomial_diff(4, fs, sq(0), sq(2)));
    e.generators.push_back(binomial_diff(4, fs, sq(1), sq(3)));
    // Not a flag entry and K_X is trivial on the curve, so the classical
    // N >= 1 subcanonicity datum does not apply.
    e.subcanonical.applies = false;
    return e;
}

SubcanonicalClassical classical_subcanonical(const CatalogEntry& entry) {
    return entry.subcanonical;
}

std::vector<std::string> core_catalog_ids() {
    return {"veronese:1,2", "veronese:1,3", "veronese:1,4", "veronese:2,2",
            "segre:1,1",    "segre:1,2",    "plucker2:4",   "ci2q"};
}

std::vector<std::string> stretch_catalog_ids() { return {"plucker2:5", "veronese:3,2"}; }

std::vector<std::string> all_catalog_ids() {
    auto ids = core_catalog_ids();
    for (auto& s : stretch_catalog_ids()) ids.push_back(s);
    return ids;
}

CatalogEntry make_entry(const std::string& id, FieldSpec fs) {
    auto colon = id.find(':');
    std::string family = id.substr(0, colon);
    auto params = [&]() {
        std::vector<int> out;
        if (colon == std::string::npos) return out;
        std::string rest = id.substr(colon + 1);
        std::size_t pos = 0;
        while (pos < rest.size()) {
            std::size_t comma = rest.find(',', pos);
            std::string tok =
                comma == std::string::npos ? rest.substr(pos) : rest.substr(pos, comma - pos);
            out.push_back(std::stoi(tok));
            if (comma == std::string::npos) break;
            pos = comma + 1;
        }
        return out;
    }();

    if (family == "veronese" && params.size() == 2)
        return veronese_ideal(params[0], params[1], fs);
    if (family == "segre" && params.size() == 2) return segre_ideal(params[0], params[1], fs);
    if (family == "plucker2" && params.size() == 1) return plucker2_ideal(params[0], fs);
    if (id == "ci2q") return ci_two_quadrics(fs);
    throw std::invalid_argument("unknown catalog id: " + id);
}

} // namespace gorfro
