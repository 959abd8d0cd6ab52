#ifndef KCLEAN_ORACLES_HPP
#define KCLEAN_ORACLES_HPP

#include <algorithm>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "exponents.hpp"

/**
 * @file oracles.hpp
 *
 * Brute-force reference deciders. Everything here works on plain generator
 * and facet lists by scanning finite grids, and depends only on exponents.hpp.
 * Nothing is memoized and nothing is pruned.
 */

namespace kclean {

/// The grid {0..B_1} × ... × {0..B_n}.
struct TruncationBox {
    std::vector<int> bound;

    static TruncationBox uniform(std::size_t n, int b) { return {std::vector<int>(n, b)}; }
    std::size_t size() const noexcept { return bound.size(); }
};

namespace oracle {

inline void check_box(const TruncationBox& box, std::size_t n) {
    if (box.size() != n) {
        throw Error("oracle: box has " + std::to_string(box.size()) + " coordinates, expected " + std::to_string(n));
    }
}

inline bool in_ideal(const std::vector<ExpVec>& gens, const ExpVec& w) {
    for (const auto& g : gens) {
        if (leq(g, w)) {
            return true;
        }
    }
    return false;
}

inline bool in_complex(const std::vector<ExpVec>& elements, const ExpVec& w) {
    for (const auto& e : elements) {
        if (leq(w, e)) {
            return true;
        }
    }
    return false;
}

/// Minimal elements of {w ∈ box : pred(w)}, found by scanning.
template <class Pred>
std::vector<ExpVec> minimal_in_box(const std::vector<int>& box, Pred pred) {
    std::vector<ExpVec> hits;
    for_each_in_box(box, [&](const ExpVec& w) {
        if (pred(w)) {
            hits.push_back(w);
        }
    });
    std::vector<ExpVec> out;
    for (const auto& w : hits) {
        bool minimal = true;
        for (const auto& v : hits) {
            if (v != w && leq(v, w)) {
                minimal = false;
                break;
            }
        }
        if (minimal) {
            out.push_back(w);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

inline std::vector<int> gen_box(std::size_t n, const std::vector<ExpVec>& gens) {
    std::vector<int> box(n, 0);
    for (const auto& g : gens) {
        for (std::size_t i = 0; i < n; ++i) {
            box[i] = std::max(box[i], g[i].value());
        }
    }
    return box;
}

/// Generators of I : u, recomputed by scanning.
inline std::vector<ExpVec> colon(std::size_t n, const std::vector<ExpVec>& gens, const ExpVec& u) {
    return minimal_in_box(gen_box(n, gens), [&](const ExpVec& w) { return in_ideal(gens, add(w, u)); });
}

/// Generators of I + (u), recomputed by scanning.
inline std::vector<ExpVec> plus(std::size_t n, std::vector<ExpVec> gens, const ExpVec& u) {
    gens.push_back(u);
    return minimal_in_box(gen_box(n, gens), [&](const ExpVec& w) { return in_ideal(gens, w); });
}

inline bool is_unit(const std::vector<ExpVec>& gens) {
    return std::any_of(gens.begin(), gens.end(), [](const ExpVec& g) { return g.is_zero(); });
}

/// Variables of the prime when the generators are all single variables.
inline bool is_prime(const std::vector<ExpVec>& gens) {
    for (const auto& g : gens) {
        if (g.total_degree() != 1) {
            return false;
        }
    }
    return true;
}

}  // namespace oracle

/**
 * Ass(S/I) as the set of prime colons I : u with u in the box. The box must
 * reach at least one past every generator exponent. Returns variable sets in
 * canonical order; the zero ideal gives {∅} and the unit ideal gives {}.
 */
inline std::vector<VarSet> oracle_ass(std::size_t n, const std::vector<ExpVec>& gens, const TruncationBox& box) {
    oracle::check_box(box, n);
    std::set<VarSet> out;
    for_each_in_box(box.bound, [&](const ExpVec& u) {
        if (oracle::in_ideal(gens, u)) {
            return;
        }
        VarSet vars;
        for (std::size_t j = 0; j < n; ++j) {
            if (oracle::in_ideal(gens, add(u, ExpVec::unit(n, j)))) {
                vars.insert(j);
            }
        }
        bool prime = true;
        for_each_in_box(box.bound, [&](const ExpVec& w) {
            if (!prime) {
                return;
            }
            bool in_prime = false;
            for (auto j : vars.indices()) {
                in_prime = in_prime || w[j] != Exponent(0);
            }
            if (oracle::in_ideal(gens, add(u, w)) != in_prime) {
                prime = false;
            }
        });
        if (prime) {
            out.insert(vars);
        }
    });
    return {out.begin(), out.end()};
}

namespace oracle {

/// Every element of ⟨elements⟩ that passes the facet test.
inline std::vector<ExpVec> facets(std::size_t n, const std::vector<ExpVec>& elements) {
    std::vector<ExpVec> maximal;
    for (const auto& e : elements) {
        bool dominated = false;
        for (const auto& f : elements) {
            if (f != e && leq(e, f)) {
                dominated = true;
                break;
            }
        }
        if (!dominated && std::find(maximal.begin(), maximal.end(), e) == maximal.end()) {
            maximal.push_back(e);
        }
    }
    std::set<ExpVec> out;
    for (const auto& m : maximal) {
        std::vector<int> caps(n, 0);
        for (std::size_t i = 0; i < n; ++i) {
            caps[i] = m[i].is_inf() ? 0 : m[i].value();
        }
        for_each_in_box(caps, [&](const ExpVec& finite) {
            ExpVec a = finite;
            for (std::size_t i = 0; i < n; ++i) {
                if (m[i].is_inf()) {
                    a[i] = kInf;
                }
            }
            bool facet = true;
            for (const auto& other : maximal) {
                if (leq(a, other) && infpt(other) != infpt(a)) {
                    facet = false;
                    break;
                }
            }
            if (facet) {
                out.insert(a);
            }
        });
    }
    return {out.begin(), out.end()};
}

inline bool is_finite_face(const std::vector<ExpVec>& elements, const ExpVec& a) {
    return a.is_finite() && in_complex(elements, a);
}

/// Grid box for set comparisons: two past the largest finite entry anywhere.
inline std::vector<int> enumeration_box(std::size_t n, const std::vector<ExpVec>& facets, const ExpVec& a,
                                        const TruncationBox& box) {
    std::vector<int> out(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
        int top = a[i].value();
        for (const auto& f : facets) {
            if (f[i].is_finite()) {
                top = std::max(top, f[i].value());
            }
        }
        out[i] = std::max(top + 2, box.bound[i]);
    }
    return out;
}

inline std::vector<ExpVec> facets_not_above(const std::vector<ExpVec>& facets, const ExpVec& a) {
    std::vector<ExpVec> out;
    for (const auto& f : facets) {
        if (!leq(a, f)) {
            out.push_back(f);
        }
    }
    return out;
}

}  // namespace oracle

/**
 * ⟨b⟩ \ (Γ \ a) = a + ⟨m⟩ with infpt(m) = infpt(b), checked point by point
 * inside the box after truncating ∞ coordinates.
 */
inline bool oracle_stanley_interval(std::size_t n, const std::vector<ExpVec>& facets, const ExpVec& a, const ExpVec& b,
                                    const TruncationBox& box) {
    oracle::check_box(box, n);
    const auto grid = oracle::enumeration_box(n, facets, a, box);
    const auto del = oracle::facets_not_above(facets, a);
    const VarSet free = infpt(b);
    bool equal = true;
    for_each_in_box(grid, [&](const ExpVec& u) {
        if (!equal || !leq(u, b)) {
            return;
        }
        const bool in_difference = !oracle::in_complex(del, u);
        bool in_interval = leq(a, u);
        for (std::size_t i = 0; i < n && in_interval; ++i) {
            if (!free.contains(i) && u[i] != a[i]) {
                in_interval = false;
            }
        }
        if (in_difference != in_interval) {
            equal = false;
        }
    });
    return equal;
}

namespace oracle {

inline void refuse_large(std::size_t n, const std::vector<ExpVec>& items) {
    if (n > 3) {
        throw Error("oracle refuses instances with more than 3 variables");
    }
    for (const auto& e : items) {
        for (std::size_t i = 0; i < n; ++i) {
            if (e[i].is_finite() && e[i].value() > 3) {
                throw Error("oracle refuses entries above 3");
            }
        }
    }
}

class Decomposable {
public:
    Decomposable(std::size_t n, int k, TruncationBox box) : n_(n), k_(k), box_(std::move(box)) {}

    bool run(const std::vector<ExpVec>& elements) {
        const auto fs = facets(n_, elements);
        if (fs.size() <= 1) {
            return true;
        }
        if (std::find(path_.begin(), path_.end(), fs) != path_.end()) {
            return false;
        }
        path_.push_back(fs);
        bool found = false;
        for_each_in_box(box_.bound, [&](const ExpVec& a) {
            if (found || a.is_zero() || fpt_star(a).size() > k_ + 1 || !is_finite_face(fs, a)) {
                return;
            }
            if (!shedding(fs, a)) {
                return;
            }
            std::vector<ExpVec> lk;
            for (const auto& b : fs) {
                if (leq(a, b)) {
                    lk.push_back(sub(b, a));
                }
            }
            found = run(lk) && run(facets_not_above(fs, a));
        });
        path_.pop_back();
        return found;
    }

private:
    /// (i) the facet deletion loses only points above a; (ii) the fpt comparison.
    bool shedding(const std::vector<ExpVec>& fs, const ExpVec& a) const {
        const auto del_gens = facets_not_above(fs, a);
        const auto grid = enumeration_box(n_, fs, a, box_);
        bool ok = true;
        for_each_in_box(grid, [&](const ExpVec& u) {
            if (!ok || !in_complex(fs, u)) {
                return;
            }
            const bool kept = in_complex(del_gens, u);
            if (kept == leq(a, u)) {
                ok = false;
            }
        });
        if (!ok) {
            return false;
        }
        const auto del_facets = facets(n_, del_gens);
        for (const auto& b : fs) {
            if (!leq(a, b)) {
                continue;
            }
            for (const auto& c : del_facets) {
                if (fpt(b).proper_subset_of(fpt(c))) {
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t n_;
    int k_;
    TruncationBox box_;
    std::vector<std::vector<ExpVec>> path_;
};

class PrettyClean {
public:
    PrettyClean(std::size_t n, int k, TruncationBox box) : n_(n), k_(k), box_(std::move(box)) {}

    bool run(const std::vector<ExpVec>& gens) {
        if (gens.empty() || is_unit(gens) || is_prime(gens)) {
            return true;
        }
        if (std::find(path_.begin(), path_.end(), gens) != path_.end()) {
            return false;
        }
        path_.push_back(gens);
        bool found = false;
        for_each_in_box(box_.bound, [&](const ExpVec& u) {
            if (found || u.is_zero() || fpt_star(u).size() > k_ + 1 || in_ideal(gens, u)) {
                return;
            }
            const auto c = colon(n_, gens, u);
            const auto s = plus(n_, gens, u);
            if (!pretty_cleaner(c, s)) {
                return;
            }
            found = run(c) && run(s);
        });
        path_.pop_back();
        return found;
    }

private:
    std::vector<VarSet> ass_of(const std::vector<ExpVec>& gens) const {
        auto box = gen_box(n_, gens);
        for (auto& b : box) {
            b += 1;
        }
        return oracle_ass(n_, gens, TruncationBox{box});
    }

    bool pretty_cleaner(const std::vector<ExpVec>& colon_gens, const std::vector<ExpVec>& sum_gens) const {
        for (VarSet p : ass_of(colon_gens)) {
            for (VarSet q : ass_of(sum_gens)) {
                if (p.proper_subset_of(q)) {
                    return false;
                }
            }
        }
        return true;
    }

    std::size_t n_;
    int k_;
    TruncationBox box_;
    std::vector<std::vector<ExpVec>> path_;
};

}  // namespace oracle

/// k-decomposability of ⟨facets⟩ with shedding candidates drawn from the box.
inline bool oracle_decomposable(std::size_t n, const std::vector<ExpVec>& facets, int k, const TruncationBox& box) {
    oracle::check_box(box, n);
    oracle::refuse_large(n, facets);
    if (k < 0) {
        throw Error("oracle_decomposable: k must be >= 0");
    }
    return oracle::Decomposable(n, k, box).run(facets);
}

/// Pretty k-cleanness of the ideal generated by gens with cleaner candidates drawn from the box.
inline bool oracle_pretty_k_clean(std::size_t n, const std::vector<ExpVec>& gens, int k, const TruncationBox& box) {
    oracle::check_box(box, n);
    oracle::refuse_large(n, gens);
    if (k < 0) {
        throw Error("oracle_pretty_k_clean: k must be >= 0");
    }
    const auto minimal = oracle::minimal_in_box(oracle::gen_box(n, gens),
                                                [&](const ExpVec& w) { return oracle::in_ideal(gens, w); });
    return oracle::PrettyClean(n, k, box).run(minimal);
}

}  // namespace kclean

#endif
