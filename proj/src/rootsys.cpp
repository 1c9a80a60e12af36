#include "gorfro/rootsys.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <stdexcept>

namespace gorfro {

namespace {

std::vector<std::vector<int>> cartan_matrix(char type, int rank) {
    if (rank < 1) throw std::invalid_argument("rank must be at least 1");
    if (type == 'D' && rank < 3)
        throw std::invalid_argument("type D requires rank >= 3");
    std::vector<std::vector<int>> a(rank, std::vector<int>(rank, 0));
    for (int i = 0; i < rank; ++i) a[i][i] = 2;

    auto chain = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };

    switch (type) {
        case 'A':
            chain(rank);
            break;
        case 'B':
            // last simple root short
            chain(rank);
            if (rank >= 2) {
                a[rank - 2][rank - 1] = -1;
                a[rank - 1][rank - 2] = -2;
            }
            break;
        case 'C':
            // last simple root long
            chain(rank);
            if (rank >= 2) {
                a[rank - 2][rank - 1] = -2;
                a[rank - 1][rank - 2] = -1;
            }
            break;
        case 'D':
            chain(rank - 1);
            a[rank - 3][rank - 1] = -1;
            a[rank - 1][rank - 3] = -1;
            break;
        default:
            throw std::invalid_argument(std::string("unsupported type ") + type +
                                        " (A-D only)");
    }
    return a;
}

} // namespace

RootSystem RootSystem::build(const std::vector<SimpleFactor>& factors) {
    if (factors.empty()) throw std::invalid_argument("empty factor list");
    RootSystem rs;
    rs.factors_ = factors;
    std::size_t total = 0;
    for (const auto& f : factors) {
        rs.offsets_.push_back(total);
        total += static_cast<std::size_t>(f.rank);
    }
    rs.cartan_.assign(total, std::vector<int>(total, 0));
    for (std::size_t k = 0; k < factors.size(); ++k) {
        auto block = cartan_matrix(factors[k].type, factors[k].rank);
        std::size_t off = rs.offsets_[k];
        for (int i = 0; i < factors[k].rank; ++i)
            for (int j = 0; j < factors[k].rank; ++j)
                rs.cartan_[off + i][off + j] = block[i][j];
    }

    // Close the simple roots under root-string addition: gamma + alpha_j is
    // a root iff p - <gamma, alpha_j^vee> > 0, where p is the length of the
    // alpha_j-string through gamma going down.
    std::set<std::vector<int>> roots;
    std::vector<std::vector<int>> frontier;
    for (std::size_t i = 0; i < total; ++i) {
        std::vector<int> e(total, 0);
        e[i] = 1;
        roots.insert(e);
        frontier.push_back(std::move(e));
    }
    while (!frontier.empty()) {
        std::vector<std::vector<int>> next;
        for (const auto& gamma : frontier) {
            for (std::size_t j = 0; j < total; ++j) {
                int pairing = 0;
                for (std::size_t i = 0; i < total; ++i)
                    pairing += gamma[i] * rs.cartan_[j][i];
                int p = 0;
                std::vector<int> down = gamma;
                while (true) {
                    down[j] -= 1;
                    bool nonneg = down[j] >= 0;
                    if (!nonneg || !roots.count(down)) break;
                    ++p;
                }
                if (p - pairing > 0) {
                    std::vector<int> up = gamma;
                    up[j] += 1;
                    if (roots.insert(up).second) next.push_back(std::move(up));
                }
            }
        }
        frontier = std::move(next);
    }

    rs.positive_roots_.assign(roots.begin(), roots.end());
    std::sort(rs.positive_roots_.begin(), rs.positive_roots_.end(),
              [](const std::vector<int>& a, const std::vector<int>& b) {
                  int ha = 0, hb = 0;
                  for (int x : a) ha += x;
                  for (int x : b) hb += x;
                  if (ha != hb) return ha < hb;
                  return a < b;
              });
    return rs;
}

RootSystem build_root_system(const std::vector<SimpleFactor>& factors) {
    return RootSystem::build(factors);
}

WeightVector RootSystem::to_fundamental(const std::vector<int>& root_coords) const {
    if (root_coords.size() != rank())
        throw std::invalid_argument("coordinate size does not match rank");
    WeightVector fw(rank(), 0);
    for (std::size_t j = 0; j < rank(); ++j)
        for (std::size_t i = 0; i < rank(); ++i)
            fw[j] += root_coords[i] * cartan_[j][i];
    return fw;
}

std::set<std::size_t> parabolic_levi(const RootSystem& rs, const WeightVector& lambda) {
    if (lambda.size() != rs.rank())
        throw std::invalid_argument("weight size does not match rank");
    std::set<std::size_t> levi;
    for (std::size_t i = 0; i < lambda.size(); ++i) {
        if (lambda[i] < 0) throw std::invalid_argument("weight is not dominant");
        if (lambda[i] == 0) levi.insert(i);
    }
    return levi;
}

WeightVector canonical_weight(const RootSystem& rs, const std::set<std::size_t>& levi) {
    for (std::size_t i : levi)
        if (i >= rs.rank()) throw std::invalid_argument("Levi index out of range");
    std::vector<int> sum(rs.rank(), 0);
    for (const auto& gamma : rs.positive_roots()) {
        bool inside_levi = true;
        for (std::size_t i = 0; i < rs.rank() && inside_levi; ++i)
            if (gamma[i] != 0 && !levi.count(i)) inside_levi = false;
        if (inside_levi) continue; // root of the Levi subsystem
        for (std::size_t i = 0; i < rs.rank(); ++i) sum[i] += gamma[i];
    }
    return rs.to_fundamental(sum);
}

SubcanonicityVerdict subcanonicity_test(const RootSystem& rs, const WeightVector& lambda) {
    if (lambda.size() != rs.rank())
        throw std::invalid_argument("weight size does not match rank");
    for (int v : lambda)
        if (v < 0) throw std::invalid_argument("weight is not dominant");
    for (std::size_t k = 0; k < rs.factors().size(); ++k) {
        std::size_t off = rs.factor_offsets()[k];
        std::size_t r = static_cast<std::size_t>(rs.factors()[k].rank);
        bool nonzero = false;
        for (std::size_t i = off; i < off + r; ++i)
            if (lambda[i] != 0) nonzero = true;
        if (!nonzero)
            throw std::invalid_argument(
                "ill-posed input: weight vanishes on simple factor " +
                std::string(1, rs.factors()[k].type) + std::to_string(rs.factors()[k].rank));
    }

    SubcanonicityVerdict verdict;
    verdict.kappa = canonical_weight(rs, parabolic_levi(rs, lambda));

    std::optional<int> ratio;
    bool ok = true;
    for (std::size_t i = 0; i < lambda.size() && ok; ++i) {
        if (lambda[i] == 0) {
            if (verdict.kappa[i] != 0) ok = false;
        } else {
            if (verdict.kappa[i] % lambda[i] != 0) {
                ok = false;
                break;
            }
            int r = verdict.kappa[i] / lambda[i];
            if (r <= 0 || (ratio && *ratio != r)) {
                ok = false;
                break;
            }
            ratio = r;
        }
    }
    if (ok && ratio) {
        verdict.holds = true;
        verdict.N = *ratio;
    }
    return verdict;
}

std::vector<SimpleFactor> parse_type_string(const std::string& s) {
    std::vector<SimpleFactor> factors;
    std::size_t pos = 0;
    while (pos < s.size()) {
        char t = static_cast<char>(std::toupper(static_cast<unsigned char>(s[pos])));
        ++pos;
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos)
            throw std::invalid_argument("bad type string '" + s + "': missing rank");
        int rank = std::stoi(s.substr(start, pos - start));
        factors.push_back({t, rank});
        if (pos < s.size()) {
            if (s[pos] != 'x' && s[pos] != 'X')
                throw std::invalid_argument("bad type string '" + s + "': expected 'x'");
            ++pos;
        }
    }
    if (factors.empty()) throw std::invalid_argument("empty type string");
    return factors;
}

std::string type_string(const std::vector<SimpleFactor>& factors) {
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
        if (i) s += "x";
        s += factors[i].type;
        s += std::to_string(factors[i].rank);
    }
    return s;
}

std::string weight_str(const WeightVector& w) {
    std::string s;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (w[i] == 0) continue;
        if (!s.empty()) s += w[i] > 0 ? "+" : "-";
        else if (w[i] < 0) s += "-";
        int a = std::abs(w[i]);
        if (a != 1) s += std::to_string(a) + "*";
        s += "w" + std::to_string(i + 1);
    }
    return s.empty() ? "0" : s;
}

} // namespace gorfro
