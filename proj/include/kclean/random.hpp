#ifndef KCLEAN_RANDOM_HPP
#define KCLEAN_RANDOM_HPP

#include <cstdint>
#include <random>
#include <vector>

#include "exponents.hpp"
#include "ideal.hpp"
#include "multicomplex.hpp"
#include "simplicial.hpp"

/**
 * @file random.hpp
 *
 * Seeded generators for random test instances.
 */

namespace kclean {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

/// Nonzero, non-unit ideal with 1..max_gens generators and exponents in 0..max_exp.
inline MonomialIdeal random_ideal(Rng& rng, std::size_t n, int max_exp, int max_gens) {
    const int count = uniform_int(rng, 1, max_gens);
    std::vector<ExpVec> gens;
    while (static_cast<int>(gens.size()) < count) {
        ExpVec g(n);
        for (std::size_t i = 0; i < n; ++i) {
            g[i] = uniform_int(rng, 0, max_exp);
        }
        if (!g.is_zero()) {
            gens.push_back(g);
        }
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

inline MonomialIdeal random_squarefree_ideal(Rng& rng, std::size_t n, int max_gens) {
    return random_ideal(rng, n, 1, max_gens);
}

/// Multicomplex generated by 1..max_elems elements with entries in {0..max_entry, ∞}.
inline Multicomplex random_multicomplex(Rng& rng, std::size_t n, int max_entry, int max_elems) {
    const int count = uniform_int(rng, 1, max_elems);
    std::vector<ExpVec> elems;
    for (int e = 0; e < count; ++e) {
        ExpVec v(n);
        for (std::size_t i = 0; i < n; ++i) {
            const int r = uniform_int(rng, 0, max_entry + 1);
            v[i] = r > max_entry ? kInf : Exponent(r);
        }
        elems.push_back(v);
    }
    return Multicomplex::generated_by(n, std::move(elems));
}

/// Complex on n vertices generated by 1..max_facets random nonempty faces.
inline SimplicialComplex random_complex(Rng& rng, std::size_t n, int max_facets) {
    const int count = uniform_int(rng, 1, max_facets);
    const std::uint64_t top = (std::uint64_t{1} << n) - 1;
    std::vector<VarSet> faces;
    for (int f = 0; f < count; ++f) {
        faces.emplace_back(std::uniform_int_distribution<std::uint64_t>(1, top)(rng));
    }
    return SimplicialComplex::from_facets(n, std::move(faces));
}

}  // namespace kclean

#endif
