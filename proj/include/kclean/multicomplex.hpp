#ifndef KCLEAN_MULTICOMPLEX_HPP
#define KCLEAN_MULTICOMPLEX_HPP

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exponents.hpp"
#include "ideal.hpp"

/**
 * @file multicomplex.hpp
 *
 * Multicomplexes in N^n_∞, their correspondence with monomial ideals,
 * star / deletion / link / join, Stanley sets, shedding faces,
 * k-decomposability and shellability.
 */

namespace kclean {

namespace detail {

inline std::vector<ExpVec> maximal_elements(std::vector<ExpVec> elements) {
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    std::vector<ExpVec> out;
    for (std::size_t i = 0; i < elements.size(); ++i) {
        bool dominated = false;
        for (std::size_t j = 0; j < elements.size() && !dominated; ++j) {
            dominated = j != i && leq(elements[i], elements[j]);
        }
        if (!dominated) {
            out.push_back(elements[i]);
        }
    }
    return out;
}

/// Facets from maximal elements: a is a facet iff every maximal m ⪰ a has infpt(m) = infpt(a).
inline std::vector<ExpVec> facets_from_maximal(std::size_t n, const std::vector<ExpVec>& maximal) {
    std::vector<ExpVec> facets;
    for (const auto& m : maximal) {
        const VarSet inf_m = infpt(m);
        std::vector<int> caps(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            caps[i] = m[i].is_inf() ? 0 : m[i].value();
        }
        for_each_in_box(caps, [&](const ExpVec& finite_part) {
            ExpVec a = finite_part;
            for (auto i : inf_m.indices()) {
                a[i] = kInf;
            }
            for (const auto& other : maximal) {
                if (leq(a, other) && infpt(other) != inf_m) {
                    return;
                }
            }
            facets.push_back(std::move(a));
        });
    }
    std::sort(facets.begin(), facets.end());
    facets.erase(std::unique(facets.begin(), facets.end()), facets.end());
    return facets;
}

}  // namespace detail

/**
 * A multicomplex Γ ⊆ N^n_∞ generated by finitely many elements.
 *
 * Stores both the maximal elements M(Γ) and the facet set F(Γ), each in
 * canonical order. Two multicomplexes are equal iff their maximal elements
 * agree. The empty multicomplex (no facets) corresponds to the unit ideal.
 */
class Multicomplex {
public:
    Multicomplex() = default;

    static Multicomplex empty(std::size_t n) {
        if (n == 0) {
            throw Error("multicomplex needs at least one coordinate");
        }
        Multicomplex g;
        g.n_ = n;
        return g;
    }

    /// ⟨elements⟩: the smallest multicomplex containing every element.
    static Multicomplex generated_by(std::size_t n, std::vector<ExpVec> elements) {
        Multicomplex g = empty(n);
        for (const auto& e : elements) {
            if (e.size() != n) {
                throw Error("multicomplex element " + to_string(e) + " has wrong dimension");
            }
        }
        g.maximal_ = detail::maximal_elements(std::move(elements));
        g.facets_ = detail::facets_from_maximal(n, g.maximal_);
        return g;
    }

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<ExpVec>& facets() const noexcept { return facets_; }
    const std::vector<ExpVec>& maximal() const noexcept { return maximal_; }
    bool is_empty() const noexcept { return maximal_.empty(); }

    friend bool operator==(const Multicomplex& a, const Multicomplex& b) {
        return a.n_ == b.n_ && a.maximal_ == b.maximal_;
    }

private:
    std::size_t n_ = 0;
    std::vector<ExpVec> maximal_;
    std::vector<ExpVec> facets_;
};

inline std::string to_string(const Multicomplex& g) {
    std::string out = "<";
    for (std::size_t i = 0; i < g.maximal().size(); ++i) {
        out += (i == 0 ? "" : ",") + to_string(g.maximal()[i]);
    }
    return out + ">";
}

/// a ∈ Γ iff a ⪯ some maximal element.
inline bool member(const Multicomplex& g, const ExpVec& a) {
    if (a.size() != g.nvars()) {
        throw Error("member: dimension mismatch");
    }
    return std::any_of(g.maximal().begin(), g.maximal().end(), [&](const ExpVec& m) { return leq(a, m); });
}

/// Γ(I) = {a : x^a ∉ I}; maximal elements come from the irreducible components.
inline Multicomplex from_ideal(const MonomialIdeal& I) {
    if (I.is_unit()) {
        return Multicomplex::empty(I.nvars());
    }
    std::vector<ExpVec> candidates;
    for (const auto& q : irreducible_decomposition(I)) {
        ExpVec m(I.nvars());
        for (std::size_t i = 0; i < I.nvars(); ++i) {
            m[i] = kInf;
        }
        for (const auto& g : q.gens()) {
            const std::size_t j = fpt_star(g).indices().front();
            m[j] = g[j].value() - 1;
        }
        candidates.push_back(std::move(m));
    }
    return Multicomplex::generated_by(I.nvars(), std::move(candidates));
}

/// I(⟨m⟩) = (x_j^{m_j+1} : j ∈ fpt(m)).
inline MonomialIdeal ideal_of_box(const ExpVec& m) {
    std::vector<ExpVec> gens;
    for (auto j : fpt(m).indices()) {
        gens.push_back(ExpVec::unit(m.size(), j, m[j].value() + 1));
    }
    return MonomialIdeal::from_generators(m.size(), std::move(gens));
}

/// I(Γ): the monomials outside Γ, as the intersection of the ideals of the maximal boxes.
inline MonomialIdeal to_ideal(const Multicomplex& g) {
    if (g.is_empty()) {
        return MonomialIdeal::unit(g.nvars());
    }
    MonomialIdeal out = ideal_of_box(g.maximal().front());
    for (std::size_t i = 1; i < g.maximal().size(); ++i) {
        out = intersect(out, ideal_of_box(g.maximal()[i]));
    }
    return out;
}

inline void require_finite_face(const Multicomplex& g, const ExpVec& a, const char* what) {
    if (a.size() != g.nvars()) {
        throw Error(std::string(what) + ": dimension mismatch");
    }
    if (!a.is_finite()) {
        throw Error(std::string(what) + ": face " + to_string(a) + " must be finite");
    }
}

/// Facets b of Γ with a ⪯ b. These are exactly the facets of the star lying above a.
inline std::vector<ExpVec> facets_above(const Multicomplex& g, const ExpVec& a) {
    std::vector<ExpVec> out;
    for (const auto& b : g.facets()) {
        if (leq(a, b)) {
            out.push_back(b);
        }
    }
    return out;
}

/// s_Γ(a) = ⟨b ∈ F(Γ) : a ⪯ b⟩
inline Multicomplex star(const Multicomplex& g, const ExpVec& a) {
    require_finite_face(g, a, "star");
    return Multicomplex::generated_by(g.nvars(), facets_above(g, a));
}

/// Γ \ a = ⟨b ∈ F(Γ) : a ⋠ b⟩
inline Multicomplex deletion(const Multicomplex& g, const ExpVec& a) {
    require_finite_face(g, a, "deletion");
    std::vector<ExpVec> kept;
    for (const auto& b : g.facets()) {
        if (!leq(a, b)) {
            kept.push_back(b);
        }
    }
    return Multicomplex::generated_by(g.nvars(), std::move(kept));
}

/// lk_Γ(a) = ⟨b − a : b ∈ F(Γ), a ⪯ b⟩
inline Multicomplex link(const Multicomplex& g, const ExpVec& a) {
    require_finite_face(g, a, "link");
    std::vector<ExpVec> shifted;
    for (const auto& b : g.facets()) {
        if (leq(a, b)) {
            shifted.push_back(sub(b, a));
        }
    }
    return Multicomplex::generated_by(g.nvars(), std::move(shifted));
}

/// Coordinates where some element of Γ is nonzero.
inline VarSet support(const Multicomplex& g) {
    VarSet s;
    for (const auto& m : g.maximal()) {
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != Exponent(0)) {
                s.insert(i);
            }
        }
    }
    return s;
}

/// Γ1 · Γ2 = {a + b}; the two multicomplexes must live on disjoint coordinates.
inline Multicomplex join(const Multicomplex& g1, const Multicomplex& g2) {
    if (g1.nvars() != g2.nvars()) {
        throw Error("join: dimension mismatch");
    }
    if (!support(g1).disjoint(support(g2))) {
        throw Error("join: multicomplexes share coordinates " + to_string(support(g1) & support(g2)));
    }
    std::vector<ExpVec> sums;
    for (const auto& a : g1.maximal()) {
        for (const auto& b : g2.maximal()) {
            sums.push_back(add(a, b));
        }
    }
    return Multicomplex::generated_by(g1.nvars(), std::move(sums));
}

/// dim(Γ) = max |infpt(a)| − 1.
inline int dim(const Multicomplex& g) {
    if (g.is_empty()) {
        throw Error("dim: the empty multicomplex has no dimension");
    }
    int d = -1;
    for (const auto& a : g.facets()) {
        d = std::max(d, infpt(a).size() - 1);
    }
    return d;
}

/// a + ⟨m⟩ with m ∈ {0,∞}^n; `directions` is infpt(m).
struct StanleySet {
    ExpVec degree;
    VarSet directions;

    friend bool operator==(const StanleySet&, const StanleySet&) = default;
};

inline std::string to_string(const StanleySet& s) { return to_string(s.degree) + "+<" + to_string(s.directions) + ">"; }

/**
 * Decides whether ⟨b⟩ \ (Γ \ a) = a + ⟨m⟩ with infpt(m) = infpt(b).
 *
 * With Γ' = ⟨F(Γ\a) ∪ {b}⟩ the difference is the monomial basis of
 * I(Γ\a) / I(Γ'). It is the Stanley set a + ⟨m⟩ exactly when that quotient is
 * cyclic on x^a, i.e. I(Γ\a) = I(Γ') + (x^a), with annihilator
 * I(Γ') : x^a = (x_j : j ∈ fpt(b)).
 */
inline std::optional<StanleySet> is_stanley_interval(const Multicomplex& g, const ExpVec& a, const ExpVec& b) {
    require_finite_face(g, a, "is_stanley_interval");
    if (b.size() != g.nvars()) {
        throw Error("is_stanley_interval: dimension mismatch");
    }
    if (!member(g, a)) {
        throw Error("is_stanley_interval: " + to_string(a) + " is not a face");
    }
    if (!leq(a, b) || !std::binary_search(g.facets().begin(), g.facets().end(), b)) {
        throw Error("is_stanley_interval: " + to_string(b) + " is not a facet above " + to_string(a));
    }
    const Multicomplex del = deletion(g, a);
    auto elements = del.facets();
    elements.push_back(b);
    const Multicomplex with_b = Multicomplex::generated_by(g.nvars(), std::move(elements));
    const MonomialIdeal i_del = to_ideal(del);
    const MonomialIdeal i_with_b = to_ideal(with_b);
    if (add_principal(i_with_b, a) != i_del) {
        return std::nullopt;
    }
    const auto p = is_prime(colon(i_with_b, a));
    if (!p || p->vars() != fpt(b)) {
        return std::nullopt;
    }
    return StanleySet{a, infpt(b)};
}

/**
 * Shedding-face test for a finite face a ∈ Γ:
 *  (i)  for every facet b ⪰ a, everything ⟨b⟩ loses in Γ \ a lies above a,
 *       so the removed part is a + lk_Γ(a); equivalently I(Γ \ a) = I(Γ) + (x^a);
 *  (ii) for b as in (i) and c ∈ F(Γ \ a), fpt(b) ⊆ fpt(c) implies equality.
 * Requiring each ⟨b⟩ \ (Γ \ a) to be a single Stanley set is strictly
 * stronger and rejects faces such as a = (2,0) in Γ((x1^2 x2^2)), whose
 * ideal counterpart x1^2 is a pretty cleaner.
 * The bound |fpt*(a)| <= k+1 is applied by the decider, not here.
 */
inline Verdict is_shedding_face(const Multicomplex& g, const ExpVec& a) {
    require_finite_face(g, a, "is_shedding_face");
    if (!member(g, a)) {
        throw Error("is_shedding_face: " + to_string(a) + " is not a face");
    }
    const auto above = facets_above(g, a);
    const Multicomplex del = deletion(g, a);
    const MonomialIdeal expected = add_principal(to_ideal(g), a);
    const MonomialIdeal actual = to_ideal(del);
    for (const auto& lost : actual.gens()) {
        if (!contains(expected, lost)) {
            return {false, "condition (i) fails: deleting " + to_string(a) + " also removes " + to_string(lost)};
        }
    }
    for (const auto& b : above) {
        const VarSet fb = fpt(b);
        for (const auto& c : del.facets()) {
            const VarSet fc = fpt(c);
            if (fb.proper_subset_of(fc)) {
                return {false, "condition (ii) fails for facet " + to_string(b) + " of the star and facet " +
                                   to_string(c) + " of the deletion"};
            }
        }
    }
    return {true, {}};
}

/**
 * Default per-coordinate cap for shedding-face candidates: one more than the
 * largest finite entry of coordinate i over F(Γ), or 0 if coordinate i is
 * infinite in every facet. For Γ = Γ(I) this is the largest exponent of x_i
 * among the minimal generators of I.
 */
inline std::vector<int> default_shedding_caps(const Multicomplex& g) {
    std::vector<int> caps(g.nvars(), 0);
    for (std::size_t i = 0; i < g.nvars(); ++i) {
        int best = -1;
        for (const auto& f : g.facets()) {
            if (f[i].is_finite()) {
                best = std::max(best, f[i].value());
            }
        }
        caps[i] = best + 1;
    }
    return caps;
}

/// Sorts candidates by (|support|, degree, canonical order).
inline void sort_candidates(std::vector<ExpVec>& candidates) {
    std::sort(candidates.begin(), candidates.end(), [](const ExpVec& a, const ExpVec& b) {
        const int sa = fpt_star(a).size();
        const int sb = fpt_star(b).size();
        if (sa != sb) {
            return sa < sb;
        }
        const int da = a.total_degree();
        const int db = b.total_degree();
        return da != db ? da < db : a < b;
    });
}

/// Certificate of k-decomposability. Leaves carry no face.
struct SheddingTree {
    Multicomplex complex;
    std::optional<ExpVec> face;
    std::shared_ptr<const SheddingTree> link;
    std::shared_ptr<const SheddingTree> deletion;

    bool is_leaf() const noexcept { return !face.has_value(); }
};

using SheddingTreePtr = std::shared_ptr<const SheddingTree>;

/// Search caps: fixed caps applied at every node, or the per-node default.
struct SearchBound {
    std::optional<std::vector<int>> caps;
};

/**
 * Memoized search for k-decomposability. A cache is scoped to one instance
 * of this class; reuse the instance to share results across queries with the
 * same k and bound.
 */
class DecompositionSearch {
public:
    DecompositionSearch(int k, SearchBound bound = {}) : k_(k), bound_(std::move(bound)) {
        if (k < 0) {
            throw Error("k-decomposability requires k >= 0, got " + std::to_string(k));
        }
    }

    SheddingTreePtr run(const Multicomplex& g) {
        if (bound_.caps && bound_.caps->size() != g.nvars()) {
            throw Error("search bound has " + std::to_string(bound_.caps->size()) + " entries, expected " +
                        std::to_string(g.nvars()));
        }
        return solve(g);
    }

    std::vector<int> caps_for(const Multicomplex& g) const {
        return bound_.caps ? *bound_.caps : default_shedding_caps(g);
    }

private:
    struct Entry {
        bool in_progress = true;
        SheddingTreePtr tree;
    };

    SheddingTreePtr solve(const Multicomplex& g) {
        if (g.facets().size() <= 1) {
            return std::make_shared<SheddingTree>(SheddingTree{g, std::nullopt, nullptr, nullptr});
        }
        auto [it, inserted] = memo_.try_emplace(g.maximal());
        if (!inserted) {
            return it->second.tree;  // null while in progress: a cycle never certifies
        }
        SheddingTreePtr result;
        for (const auto& a : candidates(g)) {
            if (!is_shedding_face(g, a)) {
                continue;
            }
            auto lk = solve(link(g, a));
            if (!lk) {
                continue;
            }
            auto del = solve(deletion(g, a));
            if (!del) {
                continue;
            }
            result = std::make_shared<SheddingTree>(SheddingTree{g, a, std::move(lk), std::move(del)});
            break;
        }
        auto& entry = memo_[g.maximal()];
        entry.in_progress = false;
        entry.tree = result;
        return result;
    }

    std::vector<ExpVec> candidates(const Multicomplex& g) const {
        std::vector<ExpVec> out;
        for_each_in_box(caps_for(g), [&](const ExpVec& a) {
            if (!a.is_zero() && fpt_star(a).size() <= k_ + 1 && member(g, a)) {
                out.push_back(a);
            }
        });
        sort_candidates(out);
        return out;
    }

    int k_;
    SearchBound bound_;
    std::map<std::vector<ExpVec>, Entry> memo_;
};

/// A shedding-tree certificate if Γ is k-decomposable within the search bound, else null.
inline SheddingTreePtr is_k_decomposable(const Multicomplex& g, int k, SearchBound bound = {}) {
    return DecompositionSearch(k, std::move(bound)).run(g);
}

/// Re-verifies every node of a shedding tree against the definitions.
inline Verdict verify_shedding_tree(const SheddingTree& t, int k) {
    if (t.is_leaf()) {
        if (t.complex.facets().size() > 1) {
            return {false, "leaf " + to_string(t.complex) + " has more than one facet"};
        }
        return {true, {}};
    }
    const ExpVec& a = *t.face;
    if (a.is_zero() || fpt_star(a).size() > k + 1) {
        return {false, "face " + to_string(a) + " violates the support bound"};
    }
    if (!member(t.complex, a)) {
        return {false, "face " + to_string(a) + " is not in the multicomplex"};
    }
    if (auto c = is_shedding_face(t.complex, a); !c) {
        return {false, "face " + to_string(a) + ": " + c.reason};
    }
    if (!t.link || !t.deletion) {
        return {false, "internal node missing a child"};
    }
    if (t.link->complex != link(t.complex, a) || t.deletion->complex != deletion(t.complex, a)) {
        return {false, "children do not match link/deletion of " + to_string(a)};
    }
    if (auto c = verify_shedding_tree(*t.link, k); !c) {
        return c;
    }
    return verify_shedding_tree(*t.deletion, k);
}

// ---------------------------------------------------------------------------
// Shellings

namespace detail {

/// Direction set of S_i = Γ_i \ Γ_{i-1} if it is a Stanley set.
inline std::optional<VarSet> stanley_step(const MonomialIdeal& before, const MonomialIdeal& after) {
    const ExpVec* generator = nullptr;
    for (const auto& g : before.gens()) {
        if (!contains(after, g)) {
            if (generator != nullptr) {
                return std::nullopt;
            }
            generator = &g;
        }
    }
    if (generator == nullptr) {
        return std::nullopt;
    }
    const auto p = is_prime(colon(after, *generator));
    if (!p) {
        return std::nullopt;
    }
    return VarSet::full(after.nvars()) - p->vars();
}

}  // namespace detail

/**
 * Checks that `order` (a permutation of F(Γ)) is a shelling:
 * each S_i = ⟨a_i⟩ \ ⟨a_1..a_{i-1}⟩ is a Stanley set, and S*_i ⊆ S*_j with i < j
 * forces S*_i = S*_j.
 */
inline bool is_shelling(const Multicomplex& g, const std::vector<ExpVec>& order) {
    auto sorted = order;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.facets()) {
        throw Error("is_shelling: order is not a permutation of the facets");
    }
    MonomialIdeal current = MonomialIdeal::unit(g.nvars());
    std::vector<VarSet> directions;
    for (const auto& a : order) {
        MonomialIdeal next = intersect(current, ideal_of_box(a));
        const auto dirs = detail::stanley_step(current, next);
        if (!dirs) {
            return false;
        }
        for (const auto& earlier : directions) {
            if (earlier.proper_subset_of(*dirs)) {
                return false;
            }
        }
        directions.push_back(*dirs);
        current = std::move(next);
    }
    return true;
}

namespace detail {

class ShellingSearch {
public:
    explicit ShellingSearch(const Multicomplex& g) : g_(g), n_facets_(g.facets().size()) {
        for (const auto& f : g.facets()) {
            boxes_.push_back(ideal_of_box(f));
            dirs_.push_back(infpt(f));
        }
    }

    std::optional<std::vector<ExpVec>> run() {
        if (n_facets_ > 63) {
            throw Error("find_shelling: more than 63 facets");
        }
        std::vector<std::size_t> order;
        if (!extend(0, MonomialIdeal::unit(g_.nvars()), order)) {
            return std::nullopt;
        }
        std::vector<ExpVec> out;
        for (auto i : order) {
            out.push_back(g_.facets()[i]);
        }
        return out;
    }

private:
    bool extend(std::uint64_t used, const MonomialIdeal& current, std::vector<std::size_t>& order) {
        if (order.size() == n_facets_) {
            return true;
        }
        if (failed_.count(used) != 0) {
            return false;
        }
        for (std::size_t j = 0; j < n_facets_; ++j) {
            if ((used >> j) & 1U) {
                continue;
            }
            // A later facet may not have a strictly larger direction set than an earlier one.
            bool blocked = false;
            for (auto i : order) {
                if (dirs_[i].proper_subset_of(dirs_[j])) {
                    blocked = true;
                    break;
                }
            }
            if (blocked) {
                continue;
            }
            MonomialIdeal next = intersect(current, boxes_[j]);
            if (!stanley_step(current, next)) {
                continue;
            }
            order.push_back(j);
            if (extend(used | (std::uint64_t{1} << j), next, order)) {
                return true;
            }
            order.pop_back();
        }
        failed_.insert(used);
        return false;
    }

    const Multicomplex& g_;
    std::size_t n_facets_;
    std::vector<MonomialIdeal> boxes_;
    std::vector<VarSet> dirs_;
    std::set<std::uint64_t> failed_;
};

}  // namespace detail

/// First shelling in canonical backtracking order, or nullopt.
inline std::optional<std::vector<ExpVec>> find_shelling(const Multicomplex& g) {
    if (g.is_empty()) {
        return std::vector<ExpVec>{};
    }
    return detail::ShellingSearch(g).run();
}

}  // namespace kclean

#endif
