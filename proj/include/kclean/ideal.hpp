#ifndef KCLEAN_IDEAL_HPP
#define KCLEAN_IDEAL_HPP

#include <algorithm>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "exponents.hpp"

namespace kclean {

/**
 * Monomial ideal of K[x_1..x_n], stored as its unique minimal generating set
 * in canonical order.
 *
 * The zero ideal has no generators. The unit ideal is the single generator
 * 0 (the monomial 1).
 */
class MonomialIdeal {
public:
    MonomialIdeal() = default;

    static MonomialIdeal zero(std::size_t n) {
        check_dim(n);
        return MonomialIdeal(n, {});
    }

    static MonomialIdeal unit(std::size_t n) {
        check_dim(n);
        return MonomialIdeal(n, {ExpVec::zero(n)});
    }

    /// Prunes divisible generators; the result is the canonical form.
    static MonomialIdeal from_generators(std::size_t n, std::vector<ExpVec> raw) {
        check_dim(n);
        for (const auto& g : raw) {
            if (g.size() != n) {
                throw Error("generator " + to_string(g) + " has wrong dimension, expected " + std::to_string(n));
            }
            if (!g.is_finite()) {
                throw Error("generator " + to_string(g) + " has an infinite entry");
            }
        }
        std::sort(raw.begin(), raw.end(), [](const ExpVec& a, const ExpVec& b) {
            const int da = a.total_degree();
            const int db = b.total_degree();
            return da != db ? da < db : a < b;
        });
        raw.erase(std::unique(raw.begin(), raw.end()), raw.end());
        std::vector<ExpVec> kept;
        for (auto& g : raw) {
            // Divisors of g have degree <= deg(g), so they are already in kept.
            const bool divisible = std::any_of(kept.begin(), kept.end(), [&](const ExpVec& h) { return leq(h, g); });
            if (!divisible) {
                kept.push_back(std::move(g));
            }
        }
        std::sort(kept.begin(), kept.end());
        return MonomialIdeal(n, std::move(kept));
    }

    std::size_t nvars() const noexcept { return n_; }
    const std::vector<ExpVec>& gens() const noexcept { return gens_; }

    bool is_zero() const noexcept { return gens_.empty(); }
    bool is_unit() const noexcept { return gens_.size() == 1 && gens_.front().is_zero(); }

    /// Largest exponent of x_i over the minimal generators, per variable.
    std::vector<int> max_exponents() const {
        std::vector<int> t(n_, 0);
        for (const auto& g : gens_) {
            for (std::size_t i = 0; i < n_; ++i) {
                t[i] = std::max(t[i], g[i].value());
            }
        }
        return t;
    }

    /// Union of the supports of the generators.
    VarSet support() const {
        VarSet s;
        for (const auto& g : gens_) {
            s = s | fpt_star(g);
        }
        return s;
    }

    friend bool operator==(const MonomialIdeal&, const MonomialIdeal&) = default;
    friend auto operator<=>(const MonomialIdeal& a, const MonomialIdeal& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.gens_ <=> b.gens_;
    }

private:
    MonomialIdeal(std::size_t n, std::vector<ExpVec> minimal) : n_(n), gens_(std::move(minimal)) {}

    static void check_dim(std::size_t n) {
        if (n == 0) {
            throw Error("monomial ideal needs at least one variable");
        }
    }

    std::size_t n_ = 0;
    std::vector<ExpVec> gens_;
};

/// Monomial prime (x_i : i in vars); empty vars is the zero ideal.
class MonomialPrime {
public:
    MonomialPrime() = default;
    MonomialPrime(std::size_t n, VarSet vars) : n_(n), vars_(vars) {
        if (!vars.subset_of(VarSet::full(n))) {
            throw Error("prime variables exceed the ring dimension");
        }
    }

    std::size_t nvars() const noexcept { return n_; }
    VarSet vars() const noexcept { return vars_; }

    MonomialIdeal ideal() const {
        std::vector<ExpVec> gens;
        for (auto i : vars_.indices()) {
            gens.push_back(ExpVec::unit(n_, i));
        }
        return MonomialIdeal::from_generators(n_, std::move(gens));
    }

    friend bool operator==(const MonomialPrime&, const MonomialPrime&) = default;
    friend std::strong_ordering operator<=>(const MonomialPrime& a, const MonomialPrime& b) {
        if (auto c = a.n_ <=> b.n_; c != 0) {
            return c;
        }
        return a.vars_ <=> b.vars_;
    }

private:
    std::size_t n_ = 0;
    VarSet vars_;
};

inline std::string to_string(const MonomialPrime& p) {
    if (p.vars().empty()) {
        return "(0)";
    }
    std::string out = "(";
    bool first = true;
    for (auto i : p.vars().indices()) {
        out += (first ? "x" : ",x") + std::to_string(i + 1);
        first = false;
    }
    return out + ")";
}

inline std::string to_string(const MonomialIdeal& I) {
    if (I.is_zero()) {
        return "(0)";
    }
    std::string out = "(";
    for (std::size_t i = 0; i < I.gens().size(); ++i) {
        out += (i == 0 ? "" : ", ") + monomial_string(I.gens()[i]);
    }
    return out + ")";
}

inline MonomialIdeal minimize(std::size_t n, std::vector<ExpVec> raw) {
    return MonomialIdeal::from_generators(n, std::move(raw));
}

inline void require_same_ring(const MonomialIdeal& I, const ExpVec& m) {
    if (I.nvars() != m.size()) {
        throw Error("dimension mismatch between ideal (" + std::to_string(I.nvars()) + ") and monomial (" +
                    std::to_string(m.size()) + ")");
    }
}

inline void require_same_ring(const MonomialIdeal& I, const MonomialIdeal& J) {
    if (I.nvars() != J.nvars()) {
        throw Error("dimension mismatch between ideals");
    }
}

inline void require_finite(const ExpVec& m, const char* what) {
    if (!m.is_finite()) {
        throw Error(std::string(what) + ": monomial " + to_string(m) + " has an infinite entry");
    }
}

/// x^m ∈ I
inline bool contains(const MonomialIdeal& I, const ExpVec& m) {
    require_same_ring(I, m);
    require_finite(m, "contains");
    return std::any_of(I.gens().begin(), I.gens().end(), [&](const ExpVec& g) { return leq(g, m); });
}

/// J ⊆ I
inline bool is_subideal(const MonomialIdeal& J, const MonomialIdeal& I) {
    require_same_ring(I, J);
    return std::all_of(J.gens().begin(), J.gens().end(), [&](const ExpVec& g) { return contains(I, g); });
}

/// I : x^u, generated by lcm(g, x^u) / x^u.
inline MonomialIdeal colon(const MonomialIdeal& I, const ExpVec& u) {
    require_same_ring(I, u);
    require_finite(u, "colon");
    std::vector<ExpVec> raw;
    raw.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
        raw.push_back(monus(g, u));
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(raw));
}

/// I + (x^u)
inline MonomialIdeal add_principal(const MonomialIdeal& I, const ExpVec& u) {
    require_same_ring(I, u);
    require_finite(u, "add_principal");
    auto raw = I.gens();
    raw.push_back(u);
    return MonomialIdeal::from_generators(I.nvars(), std::move(raw));
}

inline MonomialIdeal sum(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    auto raw = I.gens();
    raw.insert(raw.end(), J.gens().begin(), J.gens().end());
    return MonomialIdeal::from_generators(I.nvars(), std::move(raw));
}

/// I ∩ J, generated by pairwise lcms.
inline MonomialIdeal intersect(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    std::vector<ExpVec> raw;
    raw.reserve(I.gens().size() * J.gens().size());
    for (const auto& g : I.gens()) {
        for (const auto& h : J.gens()) {
            raw.push_back(join(g, h));
        }
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(raw));
}

/// √I: squarefree part of every generator.
inline MonomialIdeal radical(const MonomialIdeal& I) {
    std::vector<ExpVec> raw;
    raw.reserve(I.gens().size());
    for (const auto& g : I.gens()) {
        raw.push_back(ExpVec::indicator(I.nvars(), fpt_star(g)));
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(raw));
}

inline bool is_squarefree(const MonomialIdeal& I) {
    return std::all_of(I.gens().begin(), I.gens().end(), [](const ExpVec& g) {
        return std::all_of(g.begin(), g.end(), [](Exponent e) { return e <= Exponent(1); });
    });
}

/// The variable set when every generator is a single variable; the zero ideal is prime.
inline std::optional<MonomialPrime> is_prime(const MonomialIdeal& I) {
    VarSet vars;
    for (const auto& g : I.gens()) {
        if (g.total_degree() != 1) {
            return std::nullopt;
        }
        vars = vars | fpt_star(g);
    }
    return MonomialPrime(I.nvars(), vars);
}

/// Ideal generated by pure powers of variables.
inline bool is_irreducible(const MonomialIdeal& I) {
    return std::all_of(I.gens().begin(), I.gens().end(), [](const ExpVec& g) { return fpt_star(g).size() == 1; });
}

/// I·J for ideals living on disjoint sets of variables.
inline MonomialIdeal product_disjoint(const MonomialIdeal& I, const MonomialIdeal& J) {
    require_same_ring(I, J);
    if (!I.support().disjoint(J.support())) {
        throw Error("product_disjoint: ideals share variables " + to_string(I.support() & J.support()));
    }
    std::vector<ExpVec> raw;
    for (const auto& g : I.gens()) {
        for (const auto& h : J.gens()) {
            raw.push_back(add(g, h));
        }
    }
    return MonomialIdeal::from_generators(I.nvars(), std::move(raw));
}

namespace detail {

inline void split_irreducible(const MonomialIdeal& I, std::map<MonomialIdeal, bool>& seen,
                              std::vector<MonomialIdeal>& out) {
    if (!seen.emplace(I, true).second) {
        return;
    }
    const auto pivot = std::find_if(I.gens().begin(), I.gens().end(),
                                    [](const ExpVec& g) { return fpt_star(g).size() >= 2; });
    if (pivot == I.gens().end()) {
        out.push_back(I);
        return;
    }
    // g = x_j^{g_j} * g'' with j the first variable of the support.
    const std::size_t j = fpt_star(*pivot).indices().front();
    const ExpVec head = ExpVec::unit(I.nvars(), j, (*pivot)[j]);
    ExpVec tail = *pivot;
    tail[j] = 0;
    split_irreducible(add_principal(I, head), seen, out);
    split_irreducible(add_principal(I, tail), seen, out);
}

}  // namespace detail

/**
 * Irredundant decomposition of I into ideals generated by pure powers.
 *
 * Splits the canonically first generator with two or more variables,
 * g = x_j^{g_j} · g'', into I + (x_j^{g_j}) and I + (g''), then discards
 * components that contain another component.
 */
inline std::vector<MonomialIdeal> irreducible_decomposition(const MonomialIdeal& I) {
    if (I.is_unit()) {
        throw Error("irreducible_decomposition: the unit ideal has no decomposition");
    }
    std::map<MonomialIdeal, bool> seen;
    std::vector<MonomialIdeal> parts;
    detail::split_irreducible(I, seen, parts);
    std::sort(parts.begin(), parts.end());
    parts.erase(std::unique(parts.begin(), parts.end()), parts.end());
    std::vector<MonomialIdeal> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        bool redundant = false;
        for (std::size_t j = 0; j < parts.size() && !redundant; ++j) {
            redundant = j != i && is_subideal(parts[j], parts[i]);
        }
        if (!redundant) {
            out.push_back(parts[i]);
        }
    }
    return out;
}

namespace detail {

/// Ass(S/I) for a proper ideal; the zero ideal gives {(0)}.
inline std::vector<MonomialPrime> ass_proper(const MonomialIdeal& I) {
    std::vector<MonomialPrime> out;
    for (const auto& q : irreducible_decomposition(I)) {
        out.emplace_back(I.nvars(), q.support());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace detail

/**
 * Associated primes of S/I.
 *
 * The irredundant irreducible components of I correspond one-to-one to the
 * maximal elements of the multicomplex Γ(I); the primes are the radicals of
 * the components, i.e. (x_i : i ∈ fpt(m)) over maximal m.
 */
inline std::vector<MonomialPrime> ass(const MonomialIdeal& I) {
    if (I.is_unit() || I.is_zero()) {
        throw Error("ass: requires a proper nonzero ideal");
    }
    return detail::ass_proper(I);
}

/// Inclusion-minimal elements of a set of primes.
inline std::vector<MonomialPrime> minimal_primes_of(const std::vector<MonomialPrime>& primes) {
    std::vector<MonomialPrime> out;
    for (const auto& p : primes) {
        const bool dominated = std::any_of(primes.begin(), primes.end(), [&](const MonomialPrime& q) {
            return q.vars().proper_subset_of(p.vars());
        });
        if (!dominated) {
            out.push_back(p);
        }
    }
    return out;
}

inline std::vector<MonomialPrime> min_primes(const MonomialIdeal& I) { return minimal_primes_of(ass(I)); }

}  // namespace kclean

#endif
