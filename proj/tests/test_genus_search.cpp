#include <gtest/gtest.h>

#include <algorithm>

#include "dicyclic/covering.hpp"
#include "dicyclic/genus_search.hpp"

using namespace dicyclic;

namespace {

bool contains(const std::vector<SignatureCandidate>& v, int gamma, std::vector<int> orders)
{
    std::sort(orders.begin(), orders.end());
    return std::any_of(v.begin(), v.end(),
                       [&](const SignatureCandidate& c) { return c.quotient_genus == gamma && c.cone_orders == orders; });
}

} // namespace

TEST(Candidates, Examples)
{
    EXPECT_TRUE(contains(signature_candidates(2, 2), 0, {4, 4, 4}));
    EXPECT_TRUE(contains(signature_candidates(3, 2), 0, {4, 4, 3}));
    EXPECT_TRUE(signature_candidates(3, -20).empty());
    for (int n = 2; n <= 6; ++n)
        for (long long g = 2; g <= 8; ++g)
            for (const auto& c : signature_candidates(n, g))
                EXPECT_EQ(rh_genus(4LL * n, c.signature()), g);
}

TEST(GeneratingVectors, Existence)
{
    EXPECT_TRUE(exists_generating_vector(2, {2, 0, {4, 4, 4}}).has_value());
    EXPECT_FALSE(exists_generating_vector(2, {0, 0, {2, 2, 2}}).has_value());
    const auto v = exists_generating_vector(3, {3, 0, {4, 4, 6}});
    ASSERT_TRUE(v.has_value());
    EXPECT_TRUE(v->is_valid());
}

TEST(GenusSearch, StrongAndPure)
{
    for (int n = 2; n <= 7; ++n) {
        const auto strong = strong_symmetric_genus(n, 4 * n);
        const auto pure = pure_symmetric_genus(n, 4 * n);
        EXPECT_EQ(strong.genus, n % 2 == 0 ? n : n - 1) << n;
        EXPECT_EQ(pure.genus, n) << n;
        EXPECT_GE(pure.genus, strong.genus);
        EXPECT_TRUE(strong.witness.is_valid());
        EXPECT_TRUE(pure.witness.is_valid());
        EXPECT_EQ(rh_genus(4LL * n, pure.witness.signature()), pure.genus);
        EXPECT_TRUE(is_purely_non_free(pure.witness).purely_non_free);
    }
    EXPECT_THROW(pure_symmetric_genus(2, 1), SearchExhausted);
}

TEST(GenusSearch, PurityTestAgreesWithFixedPoints)
{
    for (int n = 2; n <= 5; ++n) {
        const DicyclicGroup G(n);
        for (long long g = 2; g <= n + 1; ++g)
            for (const auto& cand : signature_candidates(n, g))
                for_each_generating_vector(G, cand, [&](const GeneratingVector& v) {
                    EXPECT_EQ(covered_by_cone_conjugates(v), is_purely_non_free(v).purely_non_free);
                    return true;
                });
    }
}

TEST(GenusSearch, NoSphereOrTorusActions)
{
    EXPECT_EQ(torus_signatures().size(), 5u);
    for (const auto& s : torus_signatures())
        EXPECT_EQ(rh_genus(12, s.signature()), 1);
    for (int n = 2; n <= 8; ++n) {
        EXPECT_TRUE(torus_exclusion(n).empty()) << n;
        EXPECT_TRUE(sphere_exclusion(n).empty()) << n;
    }
}
