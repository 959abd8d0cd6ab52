#ifndef KCLEAN_POLARIZATION_HPP
#define KCLEAN_POLARIZATION_HPP

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "exponents.hpp"
#include "ideal.hpp"
#include "multicomplex.hpp"

/**
 * @file polarization.hpp
 *
 * Polarization of monomial ideals and of multicomplexes. Polarized variables
 * are ordered block-wise: x_{1,1},...,x_{1,t_1},x_{2,1},...
 */

namespace kclean {

class PolarizationMap {
public:
    PolarizationMap() = default;

    /// t_i = largest exponent of x_i over G(I), or 1 if x_i does not occur.
    static PolarizationMap for_ideal(const MonomialIdeal& I) {
        auto t = I.max_exponents();
        for (auto& ti : t) {
            ti = std::max(ti, 1);
        }
        return from_blocks(std::move(t));
    }

    static PolarizationMap from_blocks(std::vector<int> blocks) {
        if (blocks.empty()) {
            throw Error("polarization map needs at least one block");
        }
        PolarizationMap pm;
        int offset = 0;
        for (int ti : blocks) {
            if (ti < 1) {
                throw Error("polarization block sizes must be >= 1");
            }
            pm.offsets_.push_back(offset);
            offset += ti;
        }
        pm.blocks_ = std::move(blocks);
        pm.total_ = static_cast<std::size_t>(offset);
        return pm;
    }

    std::size_t source_vars() const noexcept { return blocks_.size(); }
    std::size_t target_vars() const noexcept { return total_; }
    const std::vector<int>& blocks() const noexcept { return blocks_; }

    /// 0-based position of x_{i,j} (both 0-based).
    std::size_t position(std::size_t i, int j) const {
        if (i >= blocks_.size() || j < 0 || j >= blocks_[i]) {
            throw Error("polarization index out of range");
        }
        return static_cast<std::size_t>(offsets_[i] + j);
    }

    friend bool operator==(const PolarizationMap&, const PolarizationMap&) = default;

private:
    std::vector<int> blocks_;
    std::vector<int> offsets_;
    std::size_t total_ = 0;
};

/// x^u ↦ ∏_i x_{i,1} ⋯ x_{i,u_i}
inline ExpVec polarize_monomial(const ExpVec& u, const PolarizationMap& pm) {
    if (u.size() != pm.source_vars() || !u.is_finite()) {
        throw Error("polarize_monomial: " + to_string(u) + " does not fit the map");
    }
    ExpVec v(pm.target_vars());
    for (std::size_t i = 0; i < u.size(); ++i) {
        const int e = u[i].value();
        if (e > pm.blocks()[i]) {
            throw Error("polarize_monomial: exponent of x" + std::to_string(i + 1) + " exceeds its block");
        }
        for (int j = 0; j < e; ++j) {
            v[pm.position(i, j)] = 1;
        }
    }
    return v;
}

inline std::pair<MonomialIdeal, PolarizationMap> polarize_ideal(const MonomialIdeal& I) {
    if (I.is_zero() || I.is_unit()) {
        throw Error("polarize_ideal: the zero and unit ideals have no polarization");
    }
    auto pm = PolarizationMap::for_ideal(I);
    std::vector<ExpVec> gens;
    for (const auto& g : I.gens()) {
        gens.push_back(polarize_monomial(g, pm));
    }
    return {MonomialIdeal::from_generators(pm.target_vars(), std::move(gens)), pm};
}

/**
 * β on one facet: an ∞ entry fills its block with ∞; a finite entry a_i < t_i
 * becomes 0 at x_{i,a_i+1} and ∞ elsewhere in the block.
 */
inline ExpVec polarize_facet(const ExpVec& a, const PolarizationMap& pm) {
    if (a.size() != pm.source_vars()) {
        throw Error("polarize_facet: dimension mismatch");
    }
    ExpVec out(pm.target_vars());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int t = pm.blocks()[i];
        if (a[i].is_inf()) {
            for (int j = 0; j < t; ++j) {
                out[pm.position(i, j)] = kInf;
            }
            continue;
        }
        const int e = a[i].value();
        if (e >= t) {
            throw Error("polarize_facet: entry " + std::to_string(e) + " of " + to_string(a) + " is not below t_" +
                        std::to_string(i + 1) + " = " + std::to_string(t));
        }
        for (int j = 0; j < t; ++j) {
            out[pm.position(i, j)] = j == e ? Exponent(0) : kInf;
        }
    }
    return out;
}

/// Γ^p with blocks taken from I(Γ). The empty multicomplex and N^n_∞ are rejected like their ideals.
inline std::pair<Multicomplex, PolarizationMap> polarize_multicomplex(const Multicomplex& g) {
    const MonomialIdeal I = to_ideal(g);
    if (I.is_zero() || I.is_unit()) {
        throw Error("polarize_multicomplex: Γ corresponds to the zero or unit ideal");
    }
    auto pm = PolarizationMap::for_ideal(I);
    std::vector<ExpVec> facets;
    for (const auto& f : g.facets()) {
        facets.push_back(polarize_facet(f, pm));
    }
    return {Multicomplex::generated_by(pm.target_vars(), std::move(facets)), pm};
}

/// a ↦ a′ with a′(i,j) = 1 for j <= a_i and 0 otherwise.
inline ExpVec transport_shedding(const ExpVec& a, const PolarizationMap& pm) {
    return polarize_monomial(a, pm);
}

/// Block sums a(i) = Σ_j a′(i,j).
inline ExpVec transport_shedding_inverse(const ExpVec& a, const PolarizationMap& pm) {
    if (a.size() != pm.target_vars() || !a.is_finite()) {
        throw Error("transport_shedding_inverse: " + to_string(a) + " does not fit the map");
    }
    ExpVec out(pm.source_vars());
    for (std::size_t i = 0; i < pm.source_vars(); ++i) {
        int sum = 0;
        for (int j = 0; j < pm.blocks()[i]; ++j) {
            sum += a[pm.position(i, j)].value();
        }
        out[i] = sum;
    }
    return out;
}

}  // namespace kclean

#endif
