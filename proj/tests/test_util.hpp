#pragma once

#include <cstdint>
#include <vector>

#include "gorfro/polynomial.hpp"

namespace gorfro::testutil {

// Deterministic xorshift generator so property tests are reproducible.
struct Rng {
    std::uint64_t state;
    explicit Rng(std::uint64_t seed) : state(seed ? seed : 0x9e3779b97f4a7c15ull) {}

    std::uint64_t next() {
        state ^= state << 13;
        state ^= state >> 7;
        state ^= state << 17;
        return state;
    }
    // uniform in [lo, hi]
    long uniform(long lo, long hi) {
        return lo + static_cast<long>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }
};

inline Monomial random_monomial(Rng& rng, std::size_t nvars, int max_degree) {
    std::vector<std::uint32_t> exps(nvars, 0);
    int deg = static_cast<int>(rng.uniform(0, max_degree));
    for (int k = 0; k < deg; ++k)
        exps[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(nvars) - 1))] += 1;
    return Monomial(exps);
}

inline Polynomial random_polynomial(Rng& rng, std::size_t nvars, int max_degree,
                                    int max_terms, FieldSpec fs) {
    Polynomial p(nvars, fs);
    int terms = static_cast<int>(rng.uniform(0, max_terms));
    for (int t = 0; t < terms; ++t) {
        long c = rng.uniform(-5, 5);
        if (c == 0) continue;
        p.add_term(random_monomial(rng, nvars, max_degree), FieldElement::integer(c, fs));
    }
    return p;
}

// Random homogeneous polynomial of the given degree.
inline Polynomial random_homogeneous(Rng& rng, std::size_t nvars, int degree, int max_terms,
                                     FieldSpec fs) {
    Polynomial p(nvars, fs);
    int terms = 1 + static_cast<int>(rng.uniform(0, max_terms - 1));
    for (int t = 0; t < terms; ++t) {
        long c = rng.uniform(-4, 4);
        if (c == 0) c = 1;
        std::vector<std::uint32_t> exps(nvars, 0);
        for (int k = 0; k < degree; ++k)
            exps[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(nvars) - 1))] += 1;
        p.add_term(Monomial(exps), FieldElement::integer(c, fs));
    }
    return p;
}

} // namespace gorfro::testutil
