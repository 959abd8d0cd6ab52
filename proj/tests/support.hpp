#ifndef KCLEAN_TESTS_SUPPORT_HPP
#define KCLEAN_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "kclean/kclean.hpp"

namespace kclean {

inline void PrintTo(const MonomialIdeal& I, std::ostream* os) { *os << to_string(I); }
inline void PrintTo(const ExpVec& v, std::ostream* os) { *os << to_string(v); }
inline void PrintTo(const Multicomplex& g, std::ostream* os) { *os << to_string(g); }
inline void PrintTo(const MonomialPrime& p, std::ostream* os) { *os << to_string(p); }
inline void PrintTo(VarSet s, std::ostream* os) { *os << to_string(s); }
inline void PrintTo(const SimplicialComplex& d, std::ostream* os) { *os << to_string(d); }

}  // namespace kclean

namespace kt {

using namespace kclean;

inline constexpr Exponent I = kInf;

inline MonomialIdeal ideal(std::size_t n, std::initializer_list<ExpVec> gens) {
    return MonomialIdeal::from_generators(n, std::vector<ExpVec>(gens));
}

inline Multicomplex mc(std::size_t n, std::initializer_list<ExpVec> elems) {
    return Multicomplex::generated_by(n, std::vector<ExpVec>(elems));
}

/// Vertex labels are 1-based, as in the file formats.
inline VarSet face(std::initializer_list<std::size_t> labels) {
    VarSet s;
    for (auto v : labels) {
        s.insert(v - 1);
    }
    return s;
}

inline SimplicialComplex complex(std::size_t n, std::initializer_list<std::initializer_list<std::size_t>> facets) {
    std::vector<VarSet> sets;
    for (auto f : facets) {
        sets.push_back(face(f));
    }
    return SimplicialComplex::from_facets(n, std::move(sets));
}

inline MonomialPrime prime(std::size_t n, std::initializer_list<std::size_t> labels) {
    return MonomialPrime(n, face(labels));
}

inline std::vector<std::string> strings(const std::vector<MonomialPrime>& ps) {
    std::vector<std::string> out;
    for (const auto& p : ps) {
        out.push_back(to_string(p));
    }
    return out;
}

/// (x1x2², x2x3², x1²x3)
inline MonomialIdeal three_cycle() { return ideal(3, {{1, 2, 0}, {0, 1, 2}, {2, 0, 1}}); }

/// (x1⁴, x1³x2)
inline MonomialIdeal x1_fourth() { return ideal(2, {{4, 0}, {3, 1}}); }

/// ⟨(2,∞),(3,0)⟩ = Γ((x1⁴, x1³x2))
inline Multicomplex staircase() { return mc(2, {{2, I}, {3, 0}}); }

/// Shellable, and 0-decomposable after all; see the notes in the README.
inline SimplicialComplex six_vertex() {
    return complex(6, {{1, 2, 4}, {1, 2, 5}, {1, 2, 6}, {1, 3, 5}, {1, 3, 6}, {1, 4, 5},
                       {2, 3, 6}, {2, 4, 5}, {2, 5, 6}, {3, 4, 5}, {3, 4, 6}});
}

inline SimplicialComplex triangle_boundary() { return complex(3, {{1, 2}, {2, 3}, {1, 3}}); }

}  // namespace kt

#endif
