#ifndef KCLEAN_EXPONENTS_HPP
#define KCLEAN_EXPONENTS_HPP

#include <bit>
#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

/**
 * @file exponents.hpp
 *
 * Exponent vectors over N ∪ {∞} and their componentwise order. Every other
 * header in the library computes over these values.
 */

namespace kclean {

/// Thrown on precondition violations and malformed input.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Outcome of a check that explains failures.
struct Verdict {
    bool ok = false;
    std::string reason;

    explicit operator bool() const noexcept { return ok; }
};

/**
 * A single coordinate of an exponent vector: a natural number or infinity.
 *
 * Infinity is a tag, not a large number. All arithmetic on it is explicit and
 * finite arithmetic is overflow-checked.
 */
class Exponent {
public:
    constexpr Exponent() noexcept = default;

    constexpr Exponent(int value) : raw_(value) {
        if (value < 0) {
            throw Error("exponent must be non-negative, got " + std::to_string(value));
        }
    }

    static constexpr Exponent inf() noexcept {
        Exponent e;
        e.raw_ = kInfTag;
        return e;
    }

    constexpr bool is_inf() const noexcept { return raw_ == kInfTag; }
    constexpr bool is_finite() const noexcept { return raw_ != kInfTag; }

    /// Finite value; throws on infinity.
    int value() const {
        if (is_inf()) {
            throw Error("value() called on an infinite exponent");
        }
        return raw_;
    }

    /// Representation used for hashing only.
    constexpr std::int32_t raw() const noexcept { return raw_; }

    friend constexpr bool operator==(Exponent a, Exponent b) noexcept { return a.raw_ == b.raw_; }

    /// Finite values compare numerically; infinity is above every finite value.
    friend constexpr std::strong_ordering operator<=>(Exponent a, Exponent b) noexcept {
        if (a.is_inf() || b.is_inf()) {
            return static_cast<int>(a.is_inf()) <=> static_cast<int>(b.is_inf());
        }
        return a.raw_ <=> b.raw_;
    }

private:
    static constexpr std::int32_t kInfTag = -1;
    std::int32_t raw_ = 0;
};

inline constexpr Exponent kInf = Exponent::inf();

inline Exponent operator+(Exponent a, Exponent b) {
    if (a.is_inf() || b.is_inf()) {
        return kInf;
    }
    int out = 0;
    if (__builtin_add_overflow(a.value(), b.value(), &out)) {
        throw Error("exponent overflow");
    }
    return Exponent(out);
}

inline std::ostream& operator<<(std::ostream& os, Exponent e) {
    if (e.is_inf()) {
        return os << "inf";
    }
    return os << e.value();
}

/**
 * Set of variable indices (0-based) over at most 64 variables.
 *
 * Used for supports, fpt/infpt partitions, prime ideals and simplicial faces.
 */
class VarSet {
public:
    static constexpr std::size_t kMaxVars = 64;

    constexpr VarSet() noexcept = default;
    explicit constexpr VarSet(std::uint64_t bits) noexcept : bits_(bits) {}

    static VarSet of(std::initializer_list<std::size_t> indices) {
        VarSet s;
        for (auto i : indices) {
            s.insert(i);
        }
        return s;
    }

    /// {0, ..., n-1}
    static VarSet full(std::size_t n) {
        check_index(n == 0 ? 0 : n - 1);
        return VarSet(n == kMaxVars ? ~std::uint64_t{0} : ((std::uint64_t{1} << n) - 1));
    }

    constexpr std::uint64_t bits() const noexcept { return bits_; }
    constexpr bool empty() const noexcept { return bits_ == 0; }
    int size() const noexcept { return std::popcount(bits_); }

    bool contains(std::size_t i) const noexcept { return i < kMaxVars && ((bits_ >> i) & 1U) != 0; }

    void insert(std::size_t i) {
        check_index(i);
        bits_ |= std::uint64_t{1} << i;
    }

    void erase(std::size_t i) {
        check_index(i);
        bits_ &= ~(std::uint64_t{1} << i);
    }

    constexpr bool subset_of(VarSet other) const noexcept { return (bits_ & ~other.bits_) == 0; }
    constexpr bool proper_subset_of(VarSet other) const noexcept { return subset_of(other) && bits_ != other.bits_; }
    constexpr bool disjoint(VarSet other) const noexcept { return (bits_ & other.bits_) == 0; }

    constexpr VarSet operator|(VarSet o) const noexcept { return VarSet(bits_ | o.bits_); }
    constexpr VarSet operator&(VarSet o) const noexcept { return VarSet(bits_ & o.bits_); }
    /// Set difference.
    constexpr VarSet operator-(VarSet o) const noexcept { return VarSet(bits_ & ~o.bits_); }

    std::vector<std::size_t> indices() const {
        std::vector<std::size_t> out;
        for (std::uint64_t b = bits_; b != 0; b &= b - 1) {
            out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
        }
        return out;
    }

    friend constexpr bool operator==(VarSet, VarSet) noexcept = default;

    /// Canonical order: by cardinality, then by the sorted index sequence.
    friend std::strong_ordering operator<=>(VarSet a, VarSet b) noexcept {
        if (auto c = a.size() <=> b.size(); c != 0) {
            return c;
        }
        // Among equal-size sets, the one whose lowest differing index is
        // present comes first.
        const std::uint64_t diff = a.bits_ ^ b.bits_;
        if (diff == 0) {
            return std::strong_ordering::equal;
        }
        const std::uint64_t low = diff & (~diff + 1);
        return (a.bits_ & low) != 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    }

    static void check_index(std::size_t i) {
        if (i >= kMaxVars) {
            throw Error("variable index " + std::to_string(i) + " exceeds the 64-variable limit");
        }
    }

private:
    std::uint64_t bits_ = 0;
};

/// 1-based set notation, e.g. {1,3}.
inline std::string to_string(VarSet s) {
    std::string out = "{";
    bool first = true;
    for (auto i : s.indices()) {
        if (!first) {
            out += ",";
        }
        out += std::to_string(i + 1);
        first = false;
    }
    return out + "}";
}

/**
 * A point of N^n_∞.
 *
 * Ordered lexicographically with finite < ∞ in each coordinate; this order is
 * the canonical order for every sorted collection in the library.
 */
class ExpVec {
public:
    ExpVec() = default;

    explicit ExpVec(std::size_t n) : entries_(n) { check_nonempty(); }

    ExpVec(std::initializer_list<Exponent> entries) : entries_(entries) { check_nonempty(); }

    explicit ExpVec(std::vector<Exponent> entries) : entries_(std::move(entries)) { check_nonempty(); }

    static ExpVec zero(std::size_t n) { return ExpVec(n); }

    /// The vector with `value` at position i and 0 elsewhere.
    static ExpVec unit(std::size_t n, std::size_t i, Exponent value = 1) {
        ExpVec v(n);
        v.entries_.at(i) = value;
        return v;
    }

    /// a_F: ∞ on F, 0 elsewhere.
    static ExpVec indicator_inf(std::size_t n, VarSet f) {
        ExpVec v(n);
        for (auto i : f.indices()) {
            v.entries_.at(i) = kInf;
        }
        return v;
    }

    /// 1 on F, 0 elsewhere.
    static ExpVec indicator(std::size_t n, VarSet f) {
        ExpVec v(n);
        for (auto i : f.indices()) {
            v.entries_.at(i) = 1;
        }
        return v;
    }

    std::size_t size() const noexcept { return entries_.size(); }
    Exponent operator[](std::size_t i) const { return entries_[i]; }
    Exponent& operator[](std::size_t i) { return entries_[i]; }
    Exponent at(std::size_t i) const { return entries_.at(i); }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool is_finite() const noexcept {
        for (auto e : entries_) {
            if (e.is_inf()) {
                return false;
            }
        }
        return true;
    }

    bool is_zero() const noexcept {
        for (auto e : entries_) {
            if (e != Exponent(0)) {
                return false;
            }
        }
        return true;
    }

    /// Sum of the entries; requires a finite vector.
    int total_degree() const {
        int d = 0;
        for (auto e : entries_) {
            d += e.value();
        }
        return d;
    }

    friend bool operator==(const ExpVec&, const ExpVec&) = default;
    friend auto operator<=>(const ExpVec& a, const ExpVec& b) { return a.entries_ <=> b.entries_; }

private:
    void check_nonempty() const {
        if (entries_.empty()) {
            throw Error("exponent vector must have at least one coordinate");
        }
    }

    std::vector<Exponent> entries_;
};

inline void require_same_size(const ExpVec& a, const ExpVec& b) {
    if (a.size() != b.size()) {
        throw Error("dimension mismatch: " + std::to_string(a.size()) + " vs " + std::to_string(b.size()));
    }
}

/// a ⪯ b componentwise (every finite value ⪯ ∞).
inline bool leq(const ExpVec& a, const ExpVec& b) {
    require_same_size(a, b);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            return false;
        }
    }
    return true;
}

/// Componentwise max.
inline ExpVec join(const ExpVec& a, const ExpVec& b) {
    require_same_size(a, b);
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = std::max(a[i], b[i]);
    }
    return out;
}

/// Componentwise min.
inline ExpVec meet(const ExpVec& a, const ExpVec& b) {
    require_same_size(a, b);
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = std::min(a[i], b[i]);
    }
    return out;
}

/// Componentwise sum, ∞ absorbing.
inline ExpVec add(const ExpVec& a, const ExpVec& b) {
    require_same_size(a, b);
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        out[i] = a[i] + b[i];
    }
    return out;
}

/// b − a for finite a ⪯ b; ∞ − finite = ∞.
inline ExpVec sub(const ExpVec& b, const ExpVec& a) {
    require_same_size(a, b);
    if (!a.is_finite()) {
        throw Error("sub: subtrahend must be finite");
    }
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] > b[i]) {
            throw Error("sub: subtrahend is not below the minuend");
        }
        out[i] = b[i].is_inf() ? kInf : Exponent(b[i].value() - a[i].value());
    }
    return out;
}

/// max(b − a, 0) for finite vectors: the exponent of lcm(x^a, x^b) / x^a.
inline ExpVec monus(const ExpVec& b, const ExpVec& a) {
    require_same_size(a, b);
    ExpVec out(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) {
        const int d = b[i].value() - a[i].value();
        out[i] = d > 0 ? d : 0;
    }
    return out;
}

/// {i : a(i) finite}
inline VarSet fpt(const ExpVec& a) {
    VarSet s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_finite()) {
            s.insert(i);
        }
    }
    return s;
}

/// {i : a(i) = ∞}
inline VarSet infpt(const ExpVec& a) {
    VarSet s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_inf()) {
            s.insert(i);
        }
    }
    return s;
}

/// {i : 0 < a(i) < ∞}; for finite vectors this is the support of x^a.
inline VarSet fpt_star(const ExpVec& a) {
    VarSet s;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].is_finite() && a[i].value() > 0) {
            s.insert(i);
        }
    }
    return s;
}

struct SupportPartition {
    VarSet fpt;
    VarSet infpt;
    VarSet fpt_star;
};

inline SupportPartition support_partition(const ExpVec& a) { return {fpt(a), infpt(a), fpt_star(a)}; }

/// Calls fn(v) for every finite v with 0 ⪯ v ⪯ caps, in lexicographic order.
template <typename Fn>
void for_each_in_box(const std::vector<int>& caps, Fn&& fn) {
    if (caps.empty()) {
        return;
    }
    ExpVec v(caps.size());
    std::vector<int> cur(caps.size(), 0);
    while (true) {
        for (std::size_t i = 0; i < caps.size(); ++i) {
            v[i] = cur[i];
        }
        fn(static_cast<const ExpVec&>(v));
        std::size_t pos = caps.size();
        while (pos > 0) {
            --pos;
            if (cur[pos] < caps[pos]) {
                ++cur[pos];
                break;
            }
            cur[pos] = 0;
            if (pos == 0) {
                return;
            }
        }
    }
}

/// (2,inf)
inline std::string to_string(const ExpVec& a) {
    std::string out = "(";
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (i != 0) {
            out += ",";
        }
        out += a[i].is_inf() ? std::string("inf") : std::to_string(a[i].value());
    }
    return out + ")";
}

/// x1*x2^2 notation for a finite vector; "1" for the zero vector.
inline std::string monomial_string(const ExpVec& a) {
    std::string out;
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == Exponent(0)) {
            continue;
        }
        if (!out.empty()) {
            out += "*";
        }
        out += "x" + std::to_string(i + 1);
        if (a[i].is_inf()) {
            out += "^inf";
        } else if (a[i].value() > 1) {
            out += "^" + std::to_string(a[i].value());
        }
    }
    return out.empty() ? std::string("1") : out;
}

inline std::ostream& operator<<(std::ostream& os, const ExpVec& a) { return os << to_string(a); }

struct ExpVecHash {
    std::size_t operator()(const ExpVec& a) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (auto e : a) {
            h ^= static_cast<std::size_t>(static_cast<std::uint32_t>(e.raw()));
            h *= 1099511628211ULL;
        }
        return h;
    }
};

struct ExpVecListHash {
    std::size_t operator()(const std::vector<ExpVec>& list) const noexcept {
        std::size_t h = list.size();
        ExpVecHash inner;
        for (const auto& a : list) {
            h = h * 31 + inner(a);
        }
        return h;
    }
};

}  // namespace kclean

#endif
