#ifndef KCLEAN_CLEANNESS_HPP
#define KCLEAN_CLEANNESS_HPP

#include <algorithm>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "exponents.hpp"
#include "ideal.hpp"
#include "multicomplex.hpp"

/**
 * @file cleanness.hpp
 *
 * Cleaner and pretty cleaner monomials, the k-clean and pretty k-clean
 * deciders with ideal-tree certificates, prime filtrations built from those
 * trees, and the cleanness length.
 */

namespace kclean {

enum class CleanMode { k_clean, pretty_k_clean };

inline const char* to_string(CleanMode mode) {
    return mode == CleanMode::k_clean ? "k-clean" : "pretty-k-clean";
}

/// Memoized Ass computations keyed by ideal.
class PrimeCache {
public:
    const std::vector<MonomialPrime>& ass(const MonomialIdeal& I) {
        auto it = ass_.find(I);
        if (it == ass_.end()) {
            it = ass_.emplace(I, detail::ass_proper(I)).first;
        }
        return it->second;
    }

    const std::vector<MonomialPrime>& min(const MonomialIdeal& I) {
        auto it = min_.find(I);
        if (it == min_.end()) {
            it = min_.emplace(I, minimal_primes_of(ass(I))).first;
        }
        return it->second;
    }

private:
    std::map<MonomialIdeal, std::vector<MonomialPrime>> ass_;
    std::map<MonomialIdeal, std::vector<MonomialPrime>> min_;
};

namespace detail {

inline void require_cleaner_candidate(const MonomialIdeal& I, const ExpVec& u) {
    require_same_ring(I, u);
    require_finite(u, "cleaner test");
    if (u.is_zero()) {
        throw Error("cleaner test: u must not be the unit monomial");
    }
    if (contains(I, u)) {
        throw Error("cleaner test: " + monomial_string(u) + " lies in the ideal");
    }
}

inline bool is_cleaner_unchecked(const MonomialIdeal& I, const ExpVec& u, PrimeCache& cache) {
    const auto& lower = cache.min(I);
    for (const auto& p : cache.min(add_principal(I, u))) {
        if (std::find(lower.begin(), lower.end(), p) == lower.end()) {
            return false;
        }
    }
    return true;
}

inline bool is_pretty_cleaner_unchecked(const MonomialIdeal& I, const ExpVec& u, PrimeCache& cache) {
    const auto colon_primes = cache.ass(colon(I, u));
    const auto& sum_primes = cache.ass(add_principal(I, u));
    for (const auto& p : colon_primes) {
        for (const auto& q : sum_primes) {
            if (p.vars().proper_subset_of(q.vars())) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace detail

/// min(Ass(I + (u))) ⊆ min(Ass(I))
inline bool is_cleaner(const MonomialIdeal& I, const ExpVec& u) {
    detail::require_cleaner_candidate(I, u);
    PrimeCache cache;
    return detail::is_cleaner_unchecked(I, u, cache);
}

/// No P ∈ Ass(I : u) lies strictly inside a Q ∈ Ass(I + (u)).
inline bool is_pretty_cleaner(const MonomialIdeal& I, const ExpVec& u) {
    detail::require_cleaner_candidate(I, u);
    PrimeCache cache;
    return detail::is_pretty_cleaner_unchecked(I, u, cache);
}

/// Ideal tree: internal nodes split I by u into I : u and I + (u); leaves are primes or the unit ideal.
struct IdealTree {
    MonomialIdeal ideal;
    std::optional<ExpVec> monomial;
    std::shared_ptr<const IdealTree> colon;
    std::shared_ptr<const IdealTree> sum;

    bool is_leaf() const noexcept { return !monomial.has_value(); }
};

using IdealTreePtr = std::shared_ptr<const IdealTree>;

/// Number of monomials in the tree, l(T).
inline int tree_length(const IdealTree& t) {
    if (t.is_leaf()) {
        return 0;
    }
    return 1 + tree_length(*t.colon) + tree_length(*t.sum);
}

/// Candidate monomials for a node: 1 ≠ u ∉ I, |supp(u)| <= k+1, u ⪯ caps, in canonical search order.
inline std::vector<ExpVec> cleaner_candidates(const MonomialIdeal& I, int k, const std::vector<int>& caps) {
    std::vector<ExpVec> out;
    for_each_in_box(caps, [&](const ExpVec& u) {
        if (!u.is_zero() && fpt_star(u).size() <= k + 1 && !contains(I, u)) {
            out.push_back(u);
        }
    });
    sort_candidates(out);
    return out;
}

/**
 * Shared memo table for the cleanness deciders, keyed by (mode, k, ideal).
 * Entries also remember the caps in effect so that a table is never reused
 * across different bounds.
 */
class CleanMemo {
public:
    struct Entry {
        bool in_progress = true;
        IdealTreePtr tree;
    };

    std::pair<Entry*, bool> find_or_start(CleanMode mode, int k, const std::optional<std::vector<int>>& caps,
                                          const MonomialIdeal& I) {
        auto [it, inserted] = table_.try_emplace(Key{mode, k, caps, I});
        return {&it->second, inserted};
    }

    PrimeCache& primes() noexcept { return primes_; }

private:
    using Key = std::tuple<CleanMode, int, std::optional<std::vector<int>>, MonomialIdeal>;
    std::map<Key, Entry> table_;
    PrimeCache primes_;
};

/// Recursive search for a (pretty) k-clean ideal tree.
class CleanSearch {
public:
    CleanSearch(CleanMode mode, int k, SearchBound bound = {}, CleanMemo* memo = nullptr)
        : mode_(mode), k_(k), bound_(std::move(bound)), memo_(memo != nullptr ? memo : &own_memo_) {
        if (k < 0) {
            throw Error(std::string(to_string(mode)) + " requires k >= 0, got " + std::to_string(k));
        }
    }

    IdealTreePtr run(const MonomialIdeal& I) {
        if (bound_.caps && bound_.caps->size() != I.nvars()) {
            throw Error("search bound has " + std::to_string(bound_.caps->size()) + " entries, expected " +
                        std::to_string(I.nvars()));
        }
        return solve(I);
    }

    std::vector<int> caps_for(const MonomialIdeal& I) const { return bound_.caps ? *bound_.caps : I.max_exponents(); }

private:
    IdealTreePtr solve(const MonomialIdeal& I) {
        if (I.is_unit() || is_prime(I)) {
            return std::make_shared<IdealTree>(IdealTree{I, std::nullopt, nullptr, nullptr});
        }
        auto [entry, fresh] = memo_->find_or_start(mode_, k_, bound_.caps, I);
        if (!fresh) {
            return entry->tree;
        }
        PrimeCache& cache = memo_->primes();
        IdealTreePtr result;
        const bool node_ok = mode_ == CleanMode::pretty_k_clean || cache.ass(I) == cache.min(I);
        if (node_ok) {
            for (const auto& u : cleaner_candidates(I, k_, caps_for(I))) {
                const bool step_ok = mode_ == CleanMode::pretty_k_clean
                                         ? detail::is_pretty_cleaner_unchecked(I, u, cache)
                                         : detail::is_cleaner_unchecked(I, u, cache);
                if (!step_ok) {
                    continue;
                }
                auto left = solve(colon(I, u));
                if (!left) {
                    continue;
                }
                auto right = solve(add_principal(I, u));
                if (!right) {
                    continue;
                }
                result = std::make_shared<IdealTree>(IdealTree{I, u, std::move(left), std::move(right)});
                break;
            }
        }
        entry->in_progress = false;
        entry->tree = result;
        return result;
    }

    CleanMode mode_;
    int k_;
    SearchBound bound_;
    CleanMemo own_memo_;
    CleanMemo* memo_;
};

/// Pretty k-clean ideal tree within the search bound, or null.
inline IdealTreePtr is_pretty_k_clean(const MonomialIdeal& I, int k, SearchBound bound = {}, CleanMemo* memo = nullptr) {
    return CleanSearch(CleanMode::pretty_k_clean, k, std::move(bound), memo).run(I);
}

/// k-clean ideal tree within the search bound, or null.
inline IdealTreePtr is_k_clean(const MonomialIdeal& I, int k, SearchBound bound = {}, CleanMemo* memo = nullptr) {
    return CleanSearch(CleanMode::k_clean, k, std::move(bound), memo).run(I);
}

/// Re-checks every node of an ideal tree for the given mode and k.
inline Verdict verify_ideal_tree(const IdealTree& t, CleanMode mode, int k) {
    if (t.is_leaf()) {
        if (t.ideal.is_unit() || is_prime(t.ideal)) {
            return {true, {}};
        }
        return {false, "leaf " + to_string(t.ideal) + " is neither prime nor the unit ideal"};
    }
    const ExpVec& u = *t.monomial;
    if (u.is_zero() || contains(t.ideal, u) || fpt_star(u).size() > k + 1) {
        return {false, "monomial " + monomial_string(u) + " is not an admissible choice at " + to_string(t.ideal)};
    }
    PrimeCache cache;
    if (mode == CleanMode::pretty_k_clean) {
        if (!detail::is_pretty_cleaner_unchecked(t.ideal, u, cache)) {
            return {false, monomial_string(u) + " is not pretty cleaner for " + to_string(t.ideal)};
        }
    } else {
        if (cache.ass(t.ideal) != cache.min(t.ideal)) {
            return {false, to_string(t.ideal) + " has embedded primes"};
        }
        if (!detail::is_cleaner_unchecked(t.ideal, u, cache)) {
            return {false, monomial_string(u) + " is not cleaner for " + to_string(t.ideal)};
        }
    }
    if (!t.colon || !t.sum || t.colon->ideal != colon(t.ideal, u) || t.sum->ideal != add_principal(t.ideal, u)) {
        return {false, "children of " + to_string(t.ideal) + " do not match I:u and I+(u)"};
    }
    if (auto v = verify_ideal_tree(*t.colon, mode, k); !v) {
        return v;
    }
    return verify_ideal_tree(*t.sum, mode, k);
}

// ---------------------------------------------------------------------------
// Prime filtrations

/// One step I_{i-1} ⊂ I_i = I_{i-1} + (u_i) with I_{i-1} : u_i = P_i. The shift is deg(u_i).
struct FiltrationStep {
    MonomialIdeal before;
    ExpVec witness;
    MonomialIdeal after;
    MonomialPrime prime;
};

struct PrimeFiltration {
    MonomialIdeal ideal;
    std::vector<FiltrationStep> steps;

    /// Supp(F) as a sorted set of distinct primes.
    std::vector<MonomialPrime> support() const {
        std::vector<MonomialPrime> out;
        for (const auto& s : steps) {
            out.push_back(s.prime);
        }
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    }
};

namespace detail {

struct Witness {
    ExpVec monomial;
    MonomialPrime prime;
};

inline std::vector<Witness> stack_witnesses(const IdealTree& t) {
    if (t.is_leaf()) {
        if (t.ideal.is_unit()) {
            return {};
        }
        const auto p = is_prime(t.ideal);
        if (!p) {
            throw Error("filtration_from_tree: leaf " + to_string(t.ideal) + " is not prime");
        }
        return {Witness{ExpVec::zero(t.ideal.nvars()), *p}};
    }
    if (!t.colon || !t.sum) {
        throw Error("filtration_from_tree: internal node without two children");
    }
    const ExpVec& u = *t.monomial;
    std::vector<Witness> out;
    for (auto& w : stack_witnesses(*t.colon)) {
        out.push_back(Witness{add(u, w.monomial), w.prime});
    }
    for (auto& w : stack_witnesses(*t.sum)) {
        out.push_back(std::move(w));
    }
    return out;
}

}  // namespace detail

/**
 * Prime filtration obtained by stacking: the filtration of I : u, shifted by
 * u, followed by the filtration of I + (u). A prime leaf P contributes the
 * single step P ⊂ S with witness 1.
 */
inline PrimeFiltration filtration_from_tree(const IdealTree& t) {
    PrimeFiltration f{t.ideal, {}};
    MonomialIdeal current = t.ideal;
    for (auto& w : detail::stack_witnesses(t)) {
        MonomialIdeal next = add_principal(current, w.monomial);
        f.steps.push_back(FiltrationStep{current, std::move(w.monomial), next, w.prime});
        current = std::move(next);
    }
    return f;
}

enum class FiltrationMode { clean, pretty_clean };

/// Checks the chain algebra of a filtration and the mode's condition on Supp(F).
inline Verdict verify_filtration(const MonomialIdeal& I, const PrimeFiltration& f, FiltrationMode mode) {
    MonomialIdeal current = I;
    for (std::size_t i = 0; i < f.steps.size(); ++i) {
        const auto& s = f.steps[i];
        const std::string where = "step " + std::to_string(i + 1) + ": ";
        if (s.before != current) {
            return {false, where + "chain does not continue from " + to_string(current)};
        }
        if (s.witness.size() != I.nvars() || !s.witness.is_finite()) {
            return {false, where + "malformed witness"};
        }
        if (contains(current, s.witness)) {
            return {false, where + "witness lies in the previous ideal"};
        }
        if (s.after != add_principal(current, s.witness)) {
            return {false, where + "ideal is not the previous ideal plus the witness"};
        }
        if (colon(current, s.witness) != s.prime.ideal()) {
            return {false, where + "colon is not the recorded prime " + to_string(s.prime)};
        }
        current = s.after;
    }
    if (!current.is_unit()) {
        return {false, "chain does not end at the unit ideal"};
    }
    if (mode == FiltrationMode::pretty_clean) {
        for (std::size_t i = 0; i < f.steps.size(); ++i) {
            for (std::size_t j = i + 1; j < f.steps.size(); ++j) {
                if (f.steps[i].prime.vars().proper_subset_of(f.steps[j].prime.vars())) {
                    return {false, "P_" + std::to_string(i + 1) + " is strictly inside P_" + std::to_string(j + 1)};
                }
            }
        }
    } else {
        PrimeCache cache;
        if (I.is_unit()) {
            return {f.steps.empty(), "unit ideal has the empty filtration"};
        }
        if (f.support() != cache.min(I)) {
            return {false, "Supp(F) differs from the minimal primes"};
        }
    }
    return {true, {}};
}

/**
 * l(I): the fewest monomials over all pretty k-clean ideal trees whose
 * choices stay within the search bound. Absent if there is none.
 */
class CleannessLength {
public:
    CleannessLength(int k, SearchBound bound = {}) : k_(k), bound_(std::move(bound)) {
        if (k < 0) {
            throw Error("cleanness length requires k >= 0");
        }
    }

    std::optional<int> run(const MonomialIdeal& I) {
        const int v = solve(I);
        if (v == kNone) {
            return std::nullopt;
        }
        return v;
    }

private:
    static constexpr int kNone = std::numeric_limits<int>::max();
    static constexpr int kBusy = -1;

    int solve(const MonomialIdeal& I) {
        if (I.is_unit() || is_prime(I)) {
            return 0;
        }
        auto [it, fresh] = memo_.try_emplace(I, kBusy);
        if (!fresh) {
            return it->second == kBusy ? kNone : it->second;
        }
        int best = kNone;
        const auto caps = bound_.caps ? *bound_.caps : I.max_exponents();
        for (const auto& u : cleaner_candidates(I, k_, caps)) {
            if (!detail::is_pretty_cleaner_unchecked(I, u, cache_)) {
                continue;
            }
            const int left = solve(colon(I, u));
            if (left == kNone) {
                continue;
            }
            const int right = solve(add_principal(I, u));
            if (right == kNone) {
                continue;
            }
            best = std::min(best, 1 + left + right);
        }
        memo_[I] = best;
        return best;
    }

    int k_;
    SearchBound bound_;
    std::map<MonomialIdeal, int> memo_;
    PrimeCache cache_;
};

inline std::optional<int> cleanness_length(const MonomialIdeal& I, int k, SearchBound bound = {}) {
    return CleannessLength(k, std::move(bound)).run(I);
}

}  // namespace kclean

#endif
