#pragma once

// Moment graph of D_inf.
//
// Vertices are group elements.  For every root alpha = (a, b), |a - b| = 1,
// there is an edge u -> u * s_alpha of degree (a, b), where s_alpha is the
// unique reflection with phi(s_alpha) = (a, b).  Chains only follow edges that
// strictly increase length.

#include <cstdint>
#include <deque>
#include <map>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dihedral.hpp"
#include "format.hpp"

namespace dcn {

class Root {
public:
    /// Throws std::invalid_argument unless |a - b| = 1.
    Root(std::uint64_t a, std::uint64_t b) : a_(a), b_(b)
    {
        if (!(a + 1 == b || b + 1 == a))
            throw std::invalid_argument("not a root: (" + std::to_string(a) + "," + std::to_string(b) + ")");
    }

    std::uint64_t a() const { return a_; }
    std::uint64_t b() const { return b_; }
    Degree to_degree() const { return {a_, b_}; }

    friend bool operator==(const Root&, const Root&) = default;

private:
    std::uint64_t a_;
    std::uint64_t b_;
};

inline std::string to_string(const Root& alpha) { return to_string(alpha.to_degree()); }

inline GroupElement root_reflection(const Root& alpha)
{
    if (alpha.b() == alpha.a() + 1)
        return sr(static_cast<std::int64_t>(alpha.b()));
    return sr(-static_cast<std::int64_t>(alpha.b()));
}

inline Root root_of_reflection(const GroupElement& g)
{
    if (!g.is_reflection())
        throw std::invalid_argument("root_of_reflection: " + to_string(g) + " is a rotation");
    const Degree d = phi(g);
    return Root(d.a, d.b);
}

/// All roots alpha with toDegree(alpha) <= limit, ordered by a + b, then a.
inline std::vector<Root> roots_bounded(const Degree& limit)
{
    std::vector<Root> out;
    const std::uint64_t max_height = limit.total();
    for (std::uint64_t h = 1; h <= max_height; h += 2) {
        const std::uint64_t lo = h / 2, hi = h / 2 + 1;
        if (lo <= limit.a && hi <= limit.b)
            out.emplace_back(lo, hi);
        if (hi <= limit.a && lo <= limit.b)
            out.emplace_back(hi, lo);
    }
    return out;
}

inline bool is_edge(const GroupElement& u, const GroupElement& v, const Root& alpha)
{
    return v == mul(u, root_reflection(alpha));
}

struct Step {
    Root root;
    GroupElement target;
};

/// Length-increasing outgoing edges of u whose degree fits in `remaining`.
inline std::vector<Step> successors(const GroupElement& u, const Degree& remaining)
{
    std::vector<Step> out;
    const auto len = explicit_length(u);
    for (const Root& alpha : roots_bounded(remaining)) {
        const GroupElement v = mul(u, root_reflection(alpha));
        if (explicit_length(v) > len)
            out.push_back({alpha, v});
    }
    return out;
}

/// An increasing chain start -> ... -> end in the moment graph.
struct Chain {
    GroupElement start;
    std::vector<Step> steps;

    GroupElement end() const { return steps.empty() ? start : steps.back().target; }

    Degree degree() const
    {
        Degree d;
        for (const Step& s : steps)
            d += s.root.to_degree();
        return d;
    }

    /// Checks the edge relation and strict length increase along the chain.
    bool is_valid() const
    {
        GroupElement at = start;
        for (const Step& s : steps) {
            if (!is_edge(at, s.target, s.root) || !bruhat_lt(at, s.target))
                return false;
            at = s.target;
        }
        return true;
    }
};

inline std::string to_string(const Chain& c)
{
    std::string out = to_string(c.start);
    for (const Step& s : c.steps)
        out += " -" + to_string(s.root) + "-> " + to_string(s.target);
    return out;
}

/// Every v reachable from u by an increasing chain of degree <= d.  Includes u.
///
/// Breadth-first over (vertex, consumed degree).  At each vertex only the
/// componentwise-minimal consumed degrees are kept, since a state with a
/// smaller consumption can follow every chain a dominated one can.  Lengths
/// strictly increase and every edge consumes at least one unit, so the search
/// is confined to lengths <= l(u) + d.a + d.b.
///
/// `max_length`, when given, drops vertices longer than it; membership of any
/// vertex within that bound is unaffected.
inline ElementSet reachable_set(const GroupElement& u, const Degree& d,
                                std::optional<std::uint64_t> max_length = std::nullopt)
{
    std::map<GroupElement, std::vector<Degree>, CanonicalLess> frontier;
    std::deque<std::pair<GroupElement, Degree>> queue;

    frontier[u].push_back({});
    queue.emplace_back(u, Degree{});

    while (!queue.empty()) {
        const auto [at, used] = queue.front();
        queue.pop_front();
        for (const Step& step : successors(at, d - used)) {
            if (max_length && explicit_length(step.target) > *max_length)
                continue;
            const Degree next = used + step.root.to_degree();
            auto& kept = frontier[step.target];
            bool dominated = false;
            for (const Degree& k : kept)
                dominated = dominated || k <= next;
            if (dominated)
                continue;
            std::erase_if(kept, [&](const Degree& k) { return next <= k; });
            kept.push_back(next);
            queue.emplace_back(step.target, next);
        }
    }

    ElementSet out;
    out.reserve(frontier.size());
    for (const auto& [v, _] : frontier)
        out.push_back(v);
    return out;
}

namespace detail {

inline void extend_chains(Chain& current, const Degree& remaining, std::vector<Chain>& out)
{
    out.push_back(current);
    for (const Step& step : successors(current.end(), remaining)) {
        current.steps.push_back(step);
        extend_chains(current, remaining - step.root.to_degree(), out);
        current.steps.pop_back();
    }
}

} // namespace detail

/// Every increasing chain from u of degree <= d, the empty chain first.
/// Distinct chains with the same endpoint are all listed.
inline std::vector<Chain> enumerate_chains(const GroupElement& u, const Degree& d)
{
    std::vector<Chain> out;
    Chain current{u, {}};
    detail::extend_chains(current, d, out);
    return out;
}

/// (r, s) with degree(c) = phi(u^-1 v) + 2(r, s) for the endpoints u, v of c.
inline ParityWitness chain_parity_witness(const Chain& c)
{
    return parity_excess(c.degree(), phi(mul(inverse(c.start), c.end())));
}

/// Whether some increasing chain joins u to v.  Searches with budget
/// (l(u) + l(v), l(u) + l(v)).
inline bool has_increasing_chain(const GroupElement& u, const GroupElement& v)
{
    const std::uint64_t lu = explicit_length(u), lv = explicit_length(v);
    const std::uint64_t budget = lu + lv;
    return contains(reachable_set(u, {budget, budget}, lv), v);
}

// ---------------------------------------------------------------------------
// finite slices

struct Edge {
    GroupElement from;
    GroupElement to;
    Root root;
};

struct GraphSlice {
    ElementSet vertices;
    std::vector<Edge> edges;
};

/// Vertices of length <= max_length with every length-increasing edge among
/// them.  Edges are ordered by source, then target, in canonical order.
inline GraphSlice moment_graph_slice(std::uint64_t max_length)
{
    GraphSlice slice;
    const auto bound = static_cast<std::int64_t>(max_length);
    for (std::int64_t k = -bound; k <= bound; ++k) {
        for (const GroupElement g : {r(k), sr(k)})
            if (explicit_length(g) <= max_length)
                slice.vertices.push_back(g);
    }
    slice.vertices = make_set(std::move(slice.vertices));

    for (const GroupElement& u : slice.vertices) {
        for (const GroupElement& v : slice.vertices) {
            const GroupElement t = mul(inverse(u), v);
            if (t.is_reflection() && bruhat_lt(u, v))
                slice.edges.push_back({u, v, root_of_reflection(t)});
        }
    }
    return slice;
}

/// Graphviz rendering of moment_graph_slice(max_length).  Edge labels are
/// "a,b"; vertices of equal length share a rank.
inline void write_dot(std::ostream& os, std::uint64_t max_length)
{
    const GraphSlice slice = moment_graph_slice(max_length);
    os << "digraph moment_graph {\n";
    os << "  rankdir=BT;\n";
    std::uint64_t rank = 0;
    bool open = false;
    for (const GroupElement& v : slice.vertices) {
        const auto len = explicit_length(v);
        if (!open || len != rank) {
            if (open)
                os << " }\n";
            os << "  { rank=same;";
            rank = len;
            open = true;
        }
        os << " \"" << to_string(v) << "\";";
    }
    if (open)
        os << " }\n";
    for (const Edge& e : slice.edges) {
        os << "  \"" << to_string(e.from) << "\" -> \"" << to_string(e.to) << "\" [label=\""
           << e.root.a() << "," << e.root.b() << "\"];\n";
    }
    os << "}\n";
}

} // namespace dcn
