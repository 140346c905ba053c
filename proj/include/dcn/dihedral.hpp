#pragma once

// Exact arithmetic in the infinite dihedral group D_inf = <s0, s1 | s0^2 = s1^2 = 1>.
//
// Elements are kept in the rotation / reflection normal form r(k), sr(k) with the
// multiplication table
//
//   r(i)  * r(j)  = r(i + j)        r(i)  * sr(j) = sr(j - i)
//   sr(i) * r(j)  = sr(i + j)       sr(i) * sr(j) = r(j - i)
//
// and the generators identified as s0 = sr(0), s1 = sr(1).  With these
// conventions (s0 s1)^k = r(k), so rotations have length 2|k| and reflections
// have odd length.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace dcn {

/// Raised when a group coefficient or a degree leaves the 64-bit range.
class overflow_error : public std::overflow_error {
public:
    using std::overflow_error::overflow_error;
};

/// A degree-parity identity failed.  These identities hold for every input,
/// so this always indicates a bug rather than bad data.
class lemma_violation : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

namespace checked {

inline std::int64_t add(std::int64_t x, std::int64_t y)
{
    std::int64_t out;
    if (__builtin_add_overflow(x, y, &out))
        throw overflow_error("integer overflow in group coefficient");
    return out;
}

inline std::int64_t sub(std::int64_t x, std::int64_t y)
{
    std::int64_t out;
    if (__builtin_sub_overflow(x, y, &out))
        throw overflow_error("integer overflow in group coefficient");
    return out;
}

inline std::uint64_t add(std::uint64_t x, std::uint64_t y)
{
    std::uint64_t out;
    if (__builtin_add_overflow(x, y, &out))
        throw overflow_error("integer overflow in degree");
    return out;
}

inline std::int64_t neg(std::int64_t x) { return sub(0, x); }

inline std::uint64_t abs(std::int64_t x)
{
    // |INT64_MIN| fits in uint64_t, so this one never throws.
    return x < 0 ? std::uint64_t(0) - static_cast<std::uint64_t>(x) : static_cast<std::uint64_t>(x);
}

inline std::uint64_t twice(std::uint64_t x)
{
    if (x > std::numeric_limits<std::uint64_t>::max() / 2)
        throw overflow_error("integer overflow in length");
    return 2 * x;
}

} // namespace checked

enum class Kind : std::uint8_t { Rotation = 0, Reflection = 1 };

/// An element of D_inf in normal form.  Two values compare equal iff they
/// denote the same group element.
struct GroupElement {
    Kind kind = Kind::Rotation;
    std::int64_t k = 0;

    static constexpr GroupElement rotation(std::int64_t k) { return {Kind::Rotation, k}; }
    static constexpr GroupElement reflection(std::int64_t k) { return {Kind::Reflection, k}; }
    static constexpr GroupElement identity() { return rotation(0); }

    constexpr bool is_rotation() const { return kind == Kind::Rotation; }
    constexpr bool is_reflection() const { return kind == Kind::Reflection; }

    friend constexpr bool operator==(const GroupElement&, const GroupElement&) = default;
};

constexpr GroupElement r(std::int64_t k) { return GroupElement::rotation(k); }
constexpr GroupElement sr(std::int64_t k) { return GroupElement::reflection(k); }

enum class Generator : std::uint8_t { S0 = 0, S1 = 1 };

using Word = std::vector<Generator>;

constexpr GroupElement embed(Generator g) { return g == Generator::S0 ? sr(0) : sr(1); }

/// Pair of non-negative counts (a, b).  Used both for curve degrees and for
/// values of the degree map phi.  Ordered componentwise, so two degrees can be
/// incomparable; operator<= is the partial order, not a total one.
struct Degree {
    std::uint64_t a = 0;
    std::uint64_t b = 0;

    friend constexpr bool operator==(const Degree&, const Degree&) = default;

    friend Degree operator+(const Degree& x, const Degree& y)
    {
        return {checked::add(x.a, y.a), checked::add(x.b, y.b)};
    }
    Degree& operator+=(const Degree& y) { return *this = *this + y; }

    friend constexpr bool operator<=(const Degree& x, const Degree& y)
    {
        return x.a <= y.a && x.b <= y.b;
    }
    friend constexpr bool operator>=(const Degree& x, const Degree& y) { return y <= x; }
    friend constexpr bool operator<(const Degree& x, const Degree& y) { return x <= y && x != y; }
    friend constexpr bool operator>(const Degree& x, const Degree& y) { return y < x; }

    /// Componentwise difference; requires y <= x.
    friend Degree operator-(const Degree& x, const Degree& y)
    {
        if (!(y <= x))
            throw std::domain_error("degree subtraction would go negative");
        return {x.a - y.a, x.b - y.b};
    }

    std::uint64_t total() const { return checked::add(a, b); }
};

// ---------------------------------------------------------------------------
// group law

inline GroupElement mul(const GroupElement& g, const GroupElement& h)
{
    if (g.is_rotation())
        return h.is_rotation() ? r(checked::add(g.k, h.k)) : sr(checked::sub(h.k, g.k));
    return h.is_rotation() ? sr(checked::add(g.k, h.k)) : r(checked::sub(h.k, g.k));
}

inline GroupElement operator*(const GroupElement& g, const GroupElement& h) { return mul(g, h); }

inline GroupElement inverse(const GroupElement& g)
{
    return g.is_rotation() ? r(checked::neg(g.k)) : g;
}

/// Coxeter length, in closed form.
inline std::uint64_t explicit_length(const GroupElement& g)
{
    const std::uint64_t twice_abs = checked::twice(checked::abs(g.k));
    if (g.is_rotation())
        return twice_abs;
    return g.k > 0 ? twice_abs - 1 : checked::add(twice_abs, std::uint64_t{1});
}

/// The length-n word alternating between `first` and `second` that ends with
/// `second`.
inline Word alternating_word(Generator first, Generator second, std::size_t n)
{
    if (first == second)
        throw std::invalid_argument("alternating_word needs two distinct generators");
    Word w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = ((n - 1 - i) % 2 == 0) ? second : first;
    return w;
}

inline GroupElement word_product(const Word& w)
{
    GroupElement acc = GroupElement::identity();
    for (Generator g : w)
        acc = mul(acc, embed(g));
    return acc;
}

/// A reduced word for g:
///   r(k),  k > 0  ->  (s0 s1)^k
///   r(k),  k < 0  ->  (s1 s0)^|k|
///   sr(k), k > 0  ->  s1 (s0 s1)^(k-1)
///   sr(k), k <= 0 ->  s0 (s1 s0)^|k|
inline Word reduced_word(const GroupElement& g)
{
    const std::size_t n = explicit_length(g);
    using enum Generator;
    if (g.is_rotation())
        return g.k >= 0 ? alternating_word(S0, S1, n) : alternating_word(S1, S0, n);
    // A reflection word has odd length and starts and ends with the same letter.
    const Generator edge = g.k > 0 ? S1 : S0;
    Word w(n);
    for (std::size_t i = 0; i < n; ++i)
        w[i] = (i % 2 == 0) ? edge : (edge == S0 ? S1 : S0);
    return w;
}

/// Degree map: letter counts (#s0, #s1) of a reduced word.
inline Degree phi(const GroupElement& g)
{
    const std::uint64_t m = checked::abs(g.k);
    if (g.is_rotation())
        return {m, m};
    if (g.k > 0)
        return {m - 1, m};
    return {checked::add(m, std::uint64_t{1}), m};
}

inline bool is_left_descent(Generator i, const GroupElement& g)
{
    return explicit_length(mul(embed(i), g)) < explicit_length(g);
}

// In D_inf the Bruhat order is the length order: u < v iff l(u) < l(v).
inline bool bruhat_lt(const GroupElement& u, const GroupElement& v)
{
    return explicit_length(u) < explicit_length(v);
}

inline bool bruhat_le(const GroupElement& u, const GroupElement& v)
{
    return u == v || bruhat_lt(u, v);
}

/// Halved componentwise excess of `total` over `base`: the unique (r, s) with
/// total = base + 2(r, s).  Throws lemma_violation when no such non-negative
/// pair exists.
struct ParityWitness {
    std::uint64_t r = 0;
    std::uint64_t s = 0;
    friend constexpr bool operator==(const ParityWitness&, const ParityWitness&) = default;
};

inline ParityWitness parity_excess(const Degree& total, const Degree& base)
{
    if (!(base <= total))
        throw lemma_violation("degree excess is negative");
    const Degree diff = total - base;
    if (diff.a % 2 != 0 || diff.b % 2 != 0)
        throw lemma_violation("degree excess is odd");
    return {diff.a / 2, diff.b / 2};
}

// ---------------------------------------------------------------------------
// canonical ordering and sets

/// Total order used for listings: by length, rotations before reflections,
/// then k descending, so r(2) is listed before r(-2).  Unrelated to the Bruhat
/// order.
struct CanonicalLess {
    bool operator()(const GroupElement& x, const GroupElement& y) const
    {
        const auto lx = explicit_length(x), ly = explicit_length(y);
        if (lx != ly)
            return lx < ly;
        if (x.kind != y.kind)
            return x.kind < y.kind;
        return x.k > y.k;
    }
};

/// Finite set of group elements, kept sorted in canonical order without
/// duplicates so that equality is plain vector equality.
using ElementSet = std::vector<GroupElement>;

inline ElementSet make_set(std::vector<GroupElement> elems)
{
    std::sort(elems.begin(), elems.end(), CanonicalLess{});
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    return elems;
}

inline bool contains(const ElementSet& s, const GroupElement& g)
{
    return std::binary_search(s.begin(), s.end(), g, CanonicalLess{});
}

} // namespace dcn
