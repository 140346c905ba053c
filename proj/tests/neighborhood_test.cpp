#include <algorithm>

#include <gtest/gtest.h>

#include <dcn/format.hpp>
#include <dcn/neighborhood.hpp>

#include "oracles.hpp"

using namespace dcn;

namespace {

std::vector<Degree> degrees_up_to(Degree max)
{
    std::vector<Degree> out;
    for (std::uint64_t a = 0; a <= max.a; ++a)
        for (std::uint64_t b = 0; b <= max.b; ++b)
            out.push_back({a, b});
    return out;
}

// A_d(u) straight from its definition, over a BFS ball comfortably larger
// than any member can be.
ElementSet ad_by_definition(const GroupElement& u, const Degree& d)
{
    const std::uint64_t lu = explicit_length(u);
    const oracle::CayleyTable table(lu + d.a + d.b + 4);
    std::vector<GroupElement> out;
    for (const auto& v : table.elements()) {
        if (table.length(v) + lu > table.radius())
            continue;
        const Degree dv = table.degree(v);
        if (table.length(oracle::product(u, v)) == lu + table.length(v) && dv.a <= d.a && dv.b <= d.b)
            out.push_back(v);
    }
    return make_set(out);
}

GroupElement mirror(const GroupElement& g)
{
    return g.is_rotation() ? r(-g.k) : sr(1 - g.k);
}

} // namespace

TEST(EnumerateUpToLength, Examples)
{
    EXPECT_EQ(enumerate_up_to_length(0), ElementSet{r(0)});
    EXPECT_EQ(enumerate_up_to_length(1), make_set({r(0), sr(0), sr(1)}));
    EXPECT_EQ(enumerate_up_to_length(3), make_set({r(0), sr(0), sr(1), r(1), r(-1), sr(2), sr(-1)}));
}

TEST(EnumerateUpToLength, TwoElementsPerPositiveLength)
{
    const oracle::CayleyTable table(30);
    for (std::uint64_t n = 1; n <= 30; ++n) {
        const ElementSet s = enumerate_up_to_length(n);
        ASSERT_EQ(s.size(), 2 * n + 1);
        for (const auto& g : s)
            ASSERT_LE(table.length(g), n);
    }
    const ElementSet all = enumerate_up_to_length(30);
    for (std::uint64_t len = 1; len <= 30; ++len)
        ASSERT_EQ(std::count_if(all.begin(), all.end(), [&](const GroupElement& g) { return explicit_length(g) == len; }), 2);
}

TEST(AdSet, Examples)
{
    EXPECT_EQ(ad_set(sr(7), {0, 0}), ElementSet{r(0)});
    EXPECT_EQ(ad_set(r(0), {1, 1}), make_set({r(0), sr(0), sr(1), r(1), r(-1)}));
    EXPECT_EQ(ad_set(sr(0), {2, 3}), make_set({r(0), r(-1), r(-2), sr(1), sr(2), sr(3)}));
}

TEST(AdSet, MatchesDefinition)
{
    for (const GroupElement& u : enumerate_up_to_length(6))
        for (const Degree& d : degrees_up_to({4, 4}))
            ASSERT_EQ(ad_set(u, d), ad_by_definition(u, d)) << "u=" << to_string(u) << " d=" << to_string(d);
}

TEST(AdSet, LengthBoundedByDegreeTotal)
{
    for (const GroupElement& u : enumerate_up_to_length(6)) {
        for (const Degree& d : degrees_up_to({5, 5})) {
            const ElementSet a = ad_set(u, d);
            ASSERT_TRUE(contains(a, r(0)));
            for (const GroupElement& v : a) {
                ASSERT_EQ(explicit_length(v), phi(v).a + phi(v).b);
                ASSERT_LE(explicit_length(v), d.a + d.b);
            }
        }
    }
}

TEST(MaximalElements, Examples)
{
    EXPECT_EQ(maximal_elements({r(0)}), ElementSet{r(0)});
    EXPECT_EQ(maximal_elements(make_set({r(0), sr(0), sr(1), r(1), r(-1)})), make_set({r(1), r(-1)}));
    EXPECT_EQ(maximal_elements(ad_set(sr(0), {2, 3})), ElementSet{sr(3)});
    EXPECT_THROW(maximal_elements({}), std::invalid_argument);
}

TEST(CurveNeighborhood, Examples)
{
    // Printed in the original evaluation: {r(2), r(-2)}.
    EXPECT_EQ(to_string(curve_neighborhood(r(0), {2, 2})), "{r(2), r(-2)}");
    EXPECT_EQ(curve_neighborhood(sr(-4), {0, 0}), ElementSet{sr(-4)});
    EXPECT_EQ(curve_neighborhood(r(0), {1, 1}), make_set({r(1), r(-1)}));
    // The original evaluation printed {sr(-3)} here.  sr(-3) has length 7 and
    // s0^-1 sr(-3) = r(-3) has phi = (3,3), which is not <= (2,3), so no chain of
    // degree <= (2,3) can reach it.  Both routes give {r(3)}; see oracle_test.
    EXPECT_EQ(curve_neighborhood(sr(0), {2, 3}), ElementSet{r(3)});
}

TEST(CurveNeighborhood, ResultSnapshotIsConsistent)
{
    const NeighborhoodResult res = compute_neighborhood(sr(0), {2, 3});
    EXPECT_EQ(res.ad, ad_set(sr(0), {2, 3}));
    EXPECT_EQ(res.maximal, ElementSet{sr(3)});
    EXPECT_EQ(res.gamma, ElementSet{r(3)});
    for (const auto& w : res.maximal)
        EXPECT_TRUE(contains(res.ad, w));
}

TEST(CurveNeighborhood, StructuralInvariants)
{
    for (const GroupElement& u : enumerate_up_to_length(6)) {
        for (const Degree& d : degrees_up_to({4, 4})) {
            const NeighborhoodResult res = compute_neighborhood(u, d);
            ASSERT_GE(res.gamma.size(), 1u);
            ASSERT_LE(res.gamma.size(), 2u);
            std::uint64_t top = 0;
            for (const auto& v : res.ad)
                top = std::max(top, explicit_length(v));
            for (const auto& g : res.gamma)
                ASSERT_EQ(explicit_length(g), explicit_length(u) + top);
            for (const auto& z : res.ad)
                ASSERT_TRUE(std::any_of(res.maximal.begin(), res.maximal.end(),
                                        [&](const GroupElement& w) { return bruhat_le(z, w); }));
        }
    }
}

TEST(CurveNeighborhood, IdentityNeighborhoodIsMirrorSymmetric)
{
    for (std::uint64_t n = 0; n <= 4; ++n) {
        const ElementSet gamma = curve_neighborhood(r(0), {n, n});
        for (const auto& v : gamma)
            ASSERT_TRUE(contains(gamma, mirror(v))) << to_string(v) << " in Gamma_" << n;
    }
}

TEST(ParityWitness, Examples)
{
    EXPECT_EQ(parity_witness(r(0), sr(9)), (ParityWitness{0, 0}));
    EXPECT_EQ(parity_witness(sr(0), sr(0)), (ParityWitness{1, 0}));
    EXPECT_EQ(parity_witness(r(2), r(-1)), (ParityWitness{1, 1}));
}

TEST(ParityWitness, HoldsOnFullGrid)
{
    for (std::int64_t i = -100; i <= 100; ++i) {
        for (const GroupElement g : {r(i), sr(i)}) {
            for (std::int64_t j = -100; j <= 100; ++j) {
                for (const GroupElement h : {r(j), sr(j)}) {
                    const ParityWitness w = parity_witness(g, h);
                    ASSERT_EQ(phi(g) + phi(h), phi(mul(g, h)) + (Degree{2 * w.r, 2 * w.s}));
                }
            }
        }
    }
}
