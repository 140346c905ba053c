#include <gtest/gtest.h>

#include <dcn/format.hpp>
#include <dcn/oracle.hpp>

using namespace dcn;

TEST(Oracle, Examples)
{
    EXPECT_EQ(curve_neighborhood_oracle(r(3), {0, 0}), ElementSet{r(3)});
    EXPECT_EQ(to_string(curve_neighborhood_oracle(r(0), {2, 2})), "{r(2), r(-2)}");
    // The original evaluation printed {sr(-3)} for this input; the chain search
    // finds the single length-6 rotation r(3) instead.
    EXPECT_EQ(curve_neighborhood_oracle(sr(0), {2, 3}), ElementSet{r(3)});
}

TEST(Oracle, MaximalAmongReachable)
{
    for (const GroupElement& u : enumerate_up_to_length(4)) {
        for (std::uint64_t a = 0; a <= 3; ++a) {
            for (std::uint64_t b = 0; b <= 3; ++b) {
                const Degree d{a, b};
                const ElementSet reach = reachable_set(u, d);
                const ElementSet top = curve_neighborhood_oracle(u, d);
                ASSERT_FALSE(top.empty());
                for (const auto& v : top) {
                    ASSERT_TRUE(contains(reach, v));
                    for (const auto& w : reach)
                        ASSERT_FALSE(bruhat_lt(v, w));
                }
                for (const auto& v : reach)
                    ASSERT_TRUE(phi(mul(inverse(u), v)) <= d)
                        << "u=" << to_string(u) << " v=" << to_string(v) << " d=" << to_string(d);
            }
        }
    }
}

TEST(DifferentialCheck, CaseCounts)
{
    const DiffReport trivial = differential_check(0, {0, 0});
    EXPECT_EQ(trivial.cases_total, 1u);
    EXPECT_TRUE(trivial.mismatches.empty());

    const DiffReport small = differential_check(2, {1, 1});
    EXPECT_EQ(small.cases_total, 20u);
    EXPECT_EQ(small.cases_passed, 20u);
    EXPECT_TRUE(small.ok());
}

TEST(DifferentialCheck, ThreadCountDoesNotChangeReport)
{
    const DiffReport serial = differential_check(4, {3, 3}, 1);
    const DiffReport parallel = differential_check(4, {3, 3}, 4);
    EXPECT_EQ(serial.cases_total, 9u * 16u);
    EXPECT_EQ(serial.cases_total, parallel.cases_total);
    EXPECT_EQ(serial.cases_passed, parallel.cases_passed);
    EXPECT_EQ(serial.mismatches.size(), parallel.mismatches.size());
    EXPECT_EQ(serial.cases_passed + serial.mismatches.size(), serial.cases_total);
}

TEST(DifferentialCheck, DeskScaleHasNoMismatches)
{
    const DiffReport report = differential_check(6, {4, 4}, 2);
    EXPECT_EQ(report.cases_total, 325u);
    EXPECT_EQ(report.cases_passed, 325u);
    for (const Mismatch& m : report.mismatches)
        ADD_FAILURE() << "u=" << to_string(m.u) << " d=" << to_string(m.d) << " closed=" << to_string(m.closed)
                      << " oracle=" << to_string(m.oracle);
}
