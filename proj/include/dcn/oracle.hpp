#pragma once

// Curve neighborhoods straight from the chain definition, and a harness that
// compares them against the closed form in neighborhood.hpp.
//
// Nothing here uses A_d(u): the oracle searches the moment graph for every
// vertex reachable under the degree budget and keeps the Bruhat-maximal ones.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <optional>
#include <thread>
#include <vector>

#include "dihedral.hpp"
#include "moment_graph.hpp"
#include "neighborhood.hpp"

namespace dcn {

inline ElementSet curve_neighborhood_oracle(const GroupElement& u, const Degree& d)
{
    const ElementSet reach = reachable_set(u, d);
    ElementSet out;
    for (const GroupElement& v : reach) {
        const bool dominated = std::any_of(reach.begin(), reach.end(),
                                           [&](const GroupElement& w) { return bruhat_lt(v, w); });
        if (!dominated)
            out.push_back(v);
    }
    return out;
}

struct Mismatch {
    GroupElement u;
    Degree d;
    ElementSet closed;
    ElementSet oracle;
};

struct DiffReport {
    std::size_t cases_total = 0;
    std::size_t cases_passed = 0;
    std::vector<Mismatch> mismatches;

    bool ok() const { return mismatches.empty(); }
};

/// Compares closed form and oracle for every u with l(u) <= max_u_length and
/// every d <= max_d.  Cases are independent; with jobs > 1 they are split
/// across threads and the report is assembled in case order, so the result
/// does not depend on `jobs`.
inline DiffReport differential_check(std::uint64_t max_u_length, const Degree& max_d, unsigned jobs = 1)
{
    struct Case {
        GroupElement u;
        Degree d;
    };
    std::vector<Case> cases;
    for (const GroupElement& u : enumerate_up_to_length(max_u_length))
        for (std::uint64_t a = 0; a <= max_d.a; ++a)
            for (std::uint64_t b = 0; b <= max_d.b; ++b)
                cases.push_back({u, {a, b}});

    std::vector<std::optional<Mismatch>> results(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < cases.size(); i = next++) {
            const auto& [u, d] = cases[i];
            ElementSet closed = curve_neighborhood(u, d);
            ElementSet oracle = curve_neighborhood_oracle(u, d);
            if (closed != oracle)
                results[i] = Mismatch{u, d, std::move(closed), std::move(oracle)};
        }
    };

    jobs = std::max(1u, jobs);
    if (jobs == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        for (unsigned j = 0; j < jobs; ++j)
            pool.emplace_back(worker);
    }

    DiffReport report;
    report.cases_total = cases.size();
    for (auto& r : results)
        if (r)
            report.mismatches.push_back(std::move(*r));
    report.cases_passed = report.cases_total - report.mismatches.size();
    return report;
}

} // namespace dcn
