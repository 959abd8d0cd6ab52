#ifndef KCLEAN_SIMPLICIAL_HPP
#define KCLEAN_SIMPLICIAL_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exponents.hpp"
#include "ideal.hpp"
#include "multicomplex.hpp"

/**
 * @file simplicial.hpp
 *
 * Simplicial complexes on a fixed vertex set {0,...,n-1}, the Stanley-Reisner
 * correspondence, shedding faces with the exchange property, simplicial
 * k-decomposability and shellability.
 */

namespace kclean {

/// Faces are VarSets. The void complex has no facets; {∅} has the single empty facet.
class SimplicialComplex {
public:
    SimplicialComplex() = default;

    static SimplicialComplex void_complex(std::size_t n) { return from_facets(n, {}); }
    static SimplicialComplex empty_face(std::size_t n) { return from_facets(n, {VarSet{}}); }
    static SimplicialComplex simplex(std::size_t n, VarSet face) { return from_facets(n, {face}); }

    /// Keeps the inclusion-maximal sets, in canonical order.
    static SimplicialComplex from_facets(std::size_t n, std::vector<VarSet> sets) {
        if (n > VarSet::kMaxVars) {
            throw Error("simplicial complex on " + std::to_string(n) + " vertices exceeds the 64-vertex limit");
        }
        const VarSet all = n == 0 ? VarSet{} : VarSet::full(n);
        for (const auto& s : sets) {
            if (!s.subset_of(all)) {
                throw Error("face " + to_string(s) + " uses a vertex beyond " + std::to_string(n));
            }
        }
        std::sort(sets.begin(), sets.end());
        sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
        SimplicialComplex d;
        d.n_ = n;
        for (std::size_t i = 0; i < sets.size(); ++i) {
            bool maximal = true;
            for (std::size_t j = i + 1; j < sets.size() && maximal; ++j) {
                maximal = !sets[i].proper_subset_of(sets[j]);
            }
            if (maximal) {
                d.facets_.push_back(sets[i]);
            }
        }
        return d;
    }

    std::size_t vertices() const noexcept { return n_; }
    const std::vector<VarSet>& facets() const noexcept { return facets_; }
    bool is_void() const noexcept { return facets_.empty(); }
    bool is_empty_face() const noexcept { return facets_.size() == 1 && facets_[0].empty(); }
    bool is_simplex() const noexcept { return facets_.size() == 1; }

    bool contains(VarSet face) const {
        return std::any_of(facets_.begin(), facets_.end(), [&](VarSet f) { return face.subset_of(f); });
    }

    /// Every face, in canonical order.
    std::vector<VarSet> faces() const {
        std::set<VarSet> out;
        for (VarSet f : facets_) {
            const std::uint64_t bits = f.bits();
            for (std::uint64_t sub = bits;; sub = (sub - 1) & bits) {
                out.insert(VarSet(sub));
                if (sub == 0) {
                    break;
                }
            }
        }
        return {out.begin(), out.end()};
    }

    friend bool operator==(const SimplicialComplex&, const SimplicialComplex&) = default;

private:
    std::size_t n_ = 0;
    std::vector<VarSet> facets_;
};

inline std::string to_string(const SimplicialComplex& d) {
    std::string out = "<";
    for (std::size_t i = 0; i < d.facets().size(); ++i) {
        out += (i == 0 ? "" : ",") + to_string(d.facets()[i]);
    }
    return out + ">";
}

namespace detail {

inline void require_enumerable(std::size_t n, const char* what) {
    if (n > 24) {
        throw Error(std::string(what) + ": " + std::to_string(n) + " vertices is too many to enumerate");
    }
}

inline ExpVec squarefree_monomial(std::size_t n, VarSet s) { return ExpVec::indicator(n, s); }

}  // namespace detail

/// I_Δ: generated by the minimal non-faces.
inline MonomialIdeal stanley_reisner(const SimplicialComplex& d) {
    const std::size_t n = d.vertices();
    if (n == 0) {
        throw Error("stanley_reisner: complex has no vertices");
    }
    detail::require_enumerable(n, "stanley_reisner");
    std::vector<ExpVec> gens;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        const VarSet s(bits);
        if (d.contains(s)) {
            continue;
        }
        bool minimal = true;
        for (auto v : s.indices()) {
            VarSet smaller = s;
            smaller.erase(v);
            if (!d.contains(smaller)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            gens.push_back(detail::squarefree_monomial(n, s));
        }
    }
    if (gens.empty()) {
        return MonomialIdeal::zero(n);
    }
    return MonomialIdeal::from_generators(n, std::move(gens));
}

/// Δ with I_Δ = I; the unit ideal gives the void complex.
inline SimplicialComplex from_stanley_reisner(const MonomialIdeal& I) {
    if (!is_squarefree(I)) {
        throw Error("from_stanley_reisner: " + to_string(I) + " is not squarefree");
    }
    const std::size_t n = I.nvars();
    detail::require_enumerable(n, "from_stanley_reisner");
    std::vector<VarSet> faces;
    const std::uint64_t limit = std::uint64_t{1} << n;
    for (std::uint64_t bits = 0; bits < limit; ++bits) {
        if (!contains(I, detail::squarefree_monomial(n, VarSet(bits)))) {
            faces.emplace_back(bits);
        }
    }
    return SimplicialComplex::from_facets(n, std::move(faces));
}

inline void require_face(const SimplicialComplex& d, VarSet s, const char* what) {
    if (!d.contains(s)) {
        throw Error(std::string(what) + ": " + to_string(s) + " is not a face of " + to_string(d));
    }
}

/// lk_Δ(s) = {G ∈ Δ : G ∩ s = ∅, G ∪ s ∈ Δ}
inline SimplicialComplex link_sc(const SimplicialComplex& d, VarSet s) {
    require_face(d, s, "link");
    std::vector<VarSet> out;
    for (VarSet f : d.facets()) {
        if (s.subset_of(f)) {
            out.push_back(f - s);
        }
    }
    return SimplicialComplex::from_facets(d.vertices(), std::move(out));
}

/// Δ \ s = {G ∈ Δ : s ⊄ G}
inline SimplicialComplex deletion_sc(const SimplicialComplex& d, VarSet s) {
    require_face(d, s, "deletion");
    std::vector<VarSet> out;
    for (VarSet f : d.facets()) {
        if (!s.subset_of(f)) {
            out.push_back(f);
            continue;
        }
        for (auto v : s.indices()) {
            VarSet g = f;
            g.erase(v);
            out.push_back(g);
        }
    }
    return SimplicialComplex::from_facets(d.vertices(), std::move(out));
}

/// Exchange property over every face τ ⊇ σ: for each v ∈ σ some w ∉ τ has (τ ∪ {w}) \ {v} ∈ Δ.
inline Verdict is_shedding_face_sc(const SimplicialComplex& d, VarSet sigma) {
    require_face(d, sigma, "is_shedding_face_sc");
    if (sigma.empty()) {
        throw Error("is_shedding_face_sc: the empty face cannot shed");
    }
    for (VarSet tau : d.faces()) {
        if (!sigma.subset_of(tau)) {
            continue;
        }
        for (auto v : sigma.indices()) {
            bool found = false;
            for (std::size_t w = 0; w < d.vertices() && !found; ++w) {
                if (tau.contains(w)) {
                    continue;
                }
                VarSet swapped = tau;
                swapped.insert(w);
                swapped.erase(v);
                found = d.contains(swapped);
            }
            if (!found) {
                return {false, "exchange fails at face " + to_string(tau) + " for vertex " + std::to_string(v + 1)};
            }
        }
    }
    return {true, {}};
}

struct SimplicialSheddingTree {
    SimplicialComplex complex;
    std::optional<VarSet> face;
    std::shared_ptr<const SimplicialSheddingTree> link;
    std::shared_ptr<const SimplicialSheddingTree> deletion;
};

using SimplicialSheddingTreePtr = std::shared_ptr<const SimplicialSheddingTree>;

class SimplicialDecompositionSearch {
public:
    explicit SimplicialDecompositionSearch(int k) : k_(k) {
        if (k < -1) {
            throw Error("simplicial k-decomposability requires k >= -1, got " + std::to_string(k));
        }
    }

    SimplicialSheddingTreePtr run(const SimplicialComplex& d) {
        if (d.facets().size() <= 1) {
            return std::make_shared<SimplicialSheddingTree>(SimplicialSheddingTree{d, std::nullopt, nullptr, nullptr});
        }
        auto [it, fresh] = memo_.try_emplace(d.facets());
        if (!fresh) {
            return it->second;
        }
        SimplicialSheddingTreePtr result;
        for (VarSet sigma : d.faces()) {
            if (sigma.empty() || sigma.size() > k_ + 1 || !is_shedding_face_sc(d, sigma)) {
                continue;
            }
            auto lk = run(link_sc(d, sigma));
            if (!lk) {
                continue;
            }
            auto del = run(deletion_sc(d, sigma));
            if (!del) {
                continue;
            }
            result = std::make_shared<SimplicialSheddingTree>(SimplicialSheddingTree{d, sigma, lk, del});
            break;
        }
        memo_[d.facets()] = result;
        return result;
    }

private:
    int k_;
    std::map<std::vector<VarSet>, SimplicialSheddingTreePtr> memo_;
};

/// Shedding-face certificate if Δ is k-decomposable, else null. Simplices, void and {∅} are leaves.
inline SimplicialSheddingTreePtr is_k_decomposable_sc(const SimplicialComplex& d, int k) {
    return SimplicialDecompositionSearch(k).run(d);
}

namespace detail {

/// F_j may follow the set `before` of earlier facets.
inline bool shelling_step_sc(const std::vector<VarSet>& facets, std::uint32_t before, std::size_t j) {
    const VarSet fj = facets[j];
    for (std::size_t i = 0; i < facets.size(); ++i) {
        if (((before >> i) & 1U) == 0) {
            continue;
        }
        bool ok = false;
        for (auto v : (fj - facets[i]).indices()) {
            for (std::size_t l = 0; l < facets.size() && !ok; ++l) {
                if (((before >> l) & 1U) != 0 && fj - facets[l] == VarSet::of({v})) {
                    ok = true;
                }
            }
            if (ok) {
                break;
            }
        }
        if (!ok) {
            return false;
        }
    }
    return true;
}

}  // namespace detail

inline bool is_shelling_sc(const SimplicialComplex& d, const std::vector<VarSet>& order) {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != d.facets()) {
        throw Error("is_shelling_sc: order is not a permutation of the facets");
    }
    std::vector<VarSet> facets = order;
    std::uint32_t before = 0;
    for (std::size_t j = 0; j < facets.size(); ++j) {
        if (!detail::shelling_step_sc(facets, before, j)) {
            return false;
        }
        before |= std::uint32_t{1} << j;
    }
    return true;
}

/// First shelling in canonical DFS order, or absent.
inline std::optional<std::vector<VarSet>> is_shellable_sc(const SimplicialComplex& d) {
    const auto& facets = d.facets();
    if (facets.size() > 30) {
        throw Error("is_shellable_sc: too many facets");
    }
    std::set<std::uint32_t> failed;
    std::vector<std::size_t> order;
    const std::uint32_t all = facets.size() == 32 ? ~0U : ((std::uint32_t{1} << facets.size()) - 1);
    auto dfs = [&](auto&& self, std::uint32_t used) -> bool {
        if (used == all) {
            return true;
        }
        if (failed.count(used) != 0) {
            return false;
        }
        for (std::size_t j = 0; j < facets.size(); ++j) {
            if (((used >> j) & 1U) != 0 || !detail::shelling_step_sc(facets, used, j)) {
                continue;
            }
            order.push_back(j);
            if (self(self, used | (std::uint32_t{1} << j))) {
                return true;
            }
            order.pop_back();
        }
        failed.insert(used);
        return false;
    };
    if (!dfs(dfs, 0)) {
        return std::nullopt;
    }
    std::vector<VarSet> out;
    for (auto j : order) {
        out.push_back(facets[j]);
    }
    return out;
}

/// a_F(i) = ∞ for i ∈ F, else 0.
inline Multicomplex to_multicomplex(const SimplicialComplex& d) {
    std::vector<ExpVec> elems;
    for (VarSet f : d.facets()) {
        elems.push_back(ExpVec::indicator_inf(d.vertices(), f));
    }
    return Multicomplex::generated_by(d.vertices(), std::move(elems));
}

inline SimplicialComplex from_squarefree_multicomplex(const Multicomplex& g) {
    std::vector<VarSet> faces;
    for (const auto& f : g.facets()) {
        for (std::size_t i = 0; i < f.size(); ++i) {
            if (!f[i].is_inf() && f[i] != Exponent(0)) {
                throw Error("facet " + to_string(f) + " is not a {0,inf} vector");
            }
        }
        faces.push_back(infpt(f));
    }
    return SimplicialComplex::from_facets(g.nvars(), std::move(faces));
}

/// Δ1 · Δ2 with Δ2's vertices placed after Δ1's.
inline SimplicialComplex join_sc(const SimplicialComplex& d1, const SimplicialComplex& d2) {
    const std::size_t n = d1.vertices() + d2.vertices();
    if (n > VarSet::kMaxVars) {
        throw Error("join_sc: combined vertex count exceeds 64");
    }
    std::vector<VarSet> out;
    for (VarSet a : d1.facets()) {
        for (VarSet b : d2.facets()) {
            out.push_back(a | VarSet(b.bits() << d1.vertices()));
        }
    }
    return SimplicialComplex::from_facets(n, std::move(out));
}

}  // namespace kclean

#endif
