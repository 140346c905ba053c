#pragma once

// Curve neighborhoods in closed form:
//
//   A_d(u)      = { v : l(uv) = l(u) + l(v), phi(v) <= d }
//   Gamma_d(u)  = { u w : w Bruhat-maximal in A_d(u) }
//
// A_d(u) is finite because phi(v) <= d bounds l(v) = phi(v).a + phi(v).b by
// d.a + d.b; candidates are drawn from all elements up to length d.a + d.b + 1.

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "dihedral.hpp"

namespace dcn {

/// All elements of length <= n: the products of both alternating words of
/// each length 0..n.
inline ElementSet enumerate_up_to_length(std::uint64_t n)
{
    using enum Generator;
    std::vector<GroupElement> out;
    out.reserve(2 * n + 2);
    for (std::uint64_t len = 0; len <= n; ++len) {
        out.push_back(word_product(alternating_word(S0, S1, len)));
        out.push_back(word_product(alternating_word(S1, S0, len)));
    }
    return make_set(std::move(out));
}

inline ElementSet ad_set(const GroupElement& u, const Degree& d)
{
    const std::uint64_t limit = checked::add(d.total(), std::uint64_t{1});
    const std::uint64_t lu = explicit_length(u);
    ElementSet out;
    for (const GroupElement& v : enumerate_up_to_length(limit)) {
        if (explicit_length(mul(u, v)) == lu + explicit_length(v) && phi(v) <= d)
            out.push_back(v);
    }
    return out;
}

/// Elements of S not strictly below (in length) any other element of S.
inline ElementSet maximal_elements(const ElementSet& s)
{
    if (s.empty())
        throw std::invalid_argument("maximal_elements of an empty set");
    std::uint64_t top = 0;
    for (const GroupElement& w : s)
        top = std::max(top, explicit_length(w));
    ElementSet out;
    for (const GroupElement& w : s)
        if (explicit_length(w) == top)
            out.push_back(w);
    return out;
}

/// Snapshot of every intermediate set in the closed-form computation.
struct NeighborhoodResult {
    GroupElement u;
    Degree d;
    ElementSet ad;
    ElementSet maximal;
    ElementSet gamma;
};

inline NeighborhoodResult compute_neighborhood(const GroupElement& u, const Degree& d)
{
    NeighborhoodResult res{u, d, ad_set(u, d), {}, {}};
    res.maximal = maximal_elements(res.ad);
    std::vector<GroupElement> gamma;
    for (const GroupElement& w : res.maximal)
        gamma.push_back(mul(u, w));
    res.gamma = make_set(std::move(gamma));
    return res;
}

inline ElementSet curve_neighborhood(const GroupElement& u, const Degree& d)
{
    return compute_neighborhood(u, d).gamma;
}

/// (r, s) with phi(g) + phi(h) = phi(gh) + 2(r, s).
inline ParityWitness parity_witness(const GroupElement& g, const GroupElement& h)
{
    return parity_excess(phi(g) + phi(h), phi(mul(g, h)));
}

} // namespace dcn
