#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <set>

#include "dicyclic/covering.hpp"
#include "oracle.hpp"

using namespace dicyclic;

namespace {

std::vector<std::size_t> cone_indices(const DicyclicGroup& G, const TriangularAction& act)
{
    std::vector<std::size_t> out;
    for (const auto& c : act.branch_generators())
        out.push_back(G.index(c));
    return out;
}

// Genus of S/H from Riemann-Hurwitz applied to S -> S/H with oracle fixed-point counts.
long long oracle_quotient_genus(const oracle::MatrixGroup& M, const std::vector<std::size_t>& cones, long long g,
                                const Subgroup& H, const DicyclicGroup& G)
{
    long long fixed = 0;
    for (const auto& h : H.members())
        if (!is_identity(h))
            fixed += M.fixed_points(G.index(h), cones);
    const long long order = static_cast<long long>(H.order());
    const long long euler = 2 * g - 2 - fixed; // |H| (2h - 2)
    EXPECT_EQ(euler % order, 0);
    return (euler / order + 2) / 2;
}

} // namespace

TEST(RiemannHurwitz, Examples)
{
    for (int n = 2; n <= 20; ++n) {
        EXPECT_EQ(rh_genus(4 * n, {0, {4, 4, 2 * n}}), n);
        if (n % 2 == 1) {
            EXPECT_EQ(rh_genus(4 * n, {0, {4, 4, n}}), n - 1);
        }
        EXPECT_EQ(rh_genus(8 * n, {0, {2, 4, 4 * n}}), n);
    }
    EXPECT_EQ(rh_genus(1, {3, {}}), 3);
    EXPECT_EQ(rh_genus(4, {1, {}}), 1);
}

TEST(RiemannHurwitz, InadmissibleSignatures)
{
    EXPECT_THROW(rh_genus(8, {0, {3, 3, 3}}), InadmissibleSignature);
    EXPECT_THROW(rh_genus(8, {0, {2, 2}}), InadmissibleSignature);
    EXPECT_THROW(rh_genus(8, {0, {1, 4, 4}}), InadmissibleSignature);
    EXPECT_THROW(rh_genus(0, {0, {4, 4, 4}}), InadmissibleSignature);
}

TEST(TriangularActions, CanonicalActions)
{
    for (int n = 2; n <= 12; ++n) {
        const DicyclicGroup G(n);
        const auto one = case_one_action(G);
        EXPECT_TRUE(is_identity(one.c(0) * one.c(1) * one.c(2)));
        EXPECT_EQ(one.signature(), (OrbifoldSignature{0, {4, 4, 2 * n}}));
        EXPECT_EQ(one.genus(), n);
        EXPECT_TRUE(one.as_generating_vector().is_valid());
        if (n % 2 == 1) {
            const auto two = case_two_action(G);
            EXPECT_EQ(two.signature(), (OrbifoldSignature{0, {4, 4, n}}));
            EXPECT_EQ(two.genus(), n - 1);
        } else {
            EXPECT_THROW(case_two_action(G), DomainError);
        }
    }
}

TEST(TriangularActions, RejectsNonGeneratingPairs)
{
    const DicyclicGroup G(4);
    EXPECT_THROW(TriangularAction(G, G.x(), G.element(2)), ParameterError);
    EXPECT_THROW(TriangularAction(G, G.y(), inverse(G.y())), ParameterError);
}

TEST(GeneratingVectors, Violations)
{
    const DicyclicGroup G(3);
    GeneratingVector bad{G, 0, {}, {G.y(), G.y(), G.x()}};
    EXPECT_FALSE(bad.is_valid());
    GeneratingVector trivial_cone{G, 0, {}, {G.identity(), G.y(), inverse(G.y())}};
    EXPECT_FALSE(trivial_cone.is_valid());
    GeneratingVector wrong_count{G, 1, {G.x()}, {}};
    EXPECT_FALSE(wrong_count.is_valid());
}

TEST(FixedPoints, CaseOneValues)
{
    for (int n = 2; n <= 12; ++n) {
        const DicyclicGroup G(n);
        const auto act = case_one_action(G);
        EXPECT_EQ(fixed_point_count(act, G.x()), 2);
        EXPECT_EQ(fixed_point_count(act, G.element(n)), 2 + 2 * n);
        EXPECT_EQ(fixed_point_count(act, G.y()), 2);
        EXPECT_EQ(fixed_point_count(act, G.x() * G.y()), 2);
        EXPECT_THROW(fixed_point_count(act, G.identity()), DomainError);
        const auto purity = is_purely_non_free(act);
        EXPECT_TRUE(purity.purely_non_free);
        EXPECT_TRUE(purity.free_elements.empty());
    }
}

TEST(FixedPoints, CaseTwoFreeElements)
{
    for (int n = 3; n <= 13; n += 2) {
        const DicyclicGroup G(n);
        const auto act = case_two_action(G);
        EXPECT_EQ(fixed_point_count(act, G.x()), 0);
        const auto purity = is_purely_non_free(act);
        EXPECT_FALSE(purity.purely_non_free);
        std::set<Element> want;
        for (int k = 1; k < 2 * n; k += 2)
            if (k != n)
                want.insert(G.element(k));
        EXPECT_EQ(std::set<Element>(purity.free_elements.begin(), purity.free_elements.end()), want) << n;
    }
    const DicyclicGroup G3(3);
    EXPECT_EQ(is_purely_non_free(case_two_action(G3)).free_elements,
              (std::vector<Element>{G3.element(1), G3.element(5)}));
}

TEST(FixedPoints, AgreeWithCentralizerOracle)
{
    for (int n = 2; n <= 9; ++n) {
        const DicyclicGroup G(n);
        const oracle::MatrixGroup M(n);
        std::vector<TriangularAction> acts{case_one_action(G)};
        if (n % 2 == 1)
            acts.push_back(case_two_action(G));
        for (const auto& act : acts) {
            const auto cones = cone_indices(G, act);
            for (std::size_t i = 1; i < G.size(); ++i)
                ASSERT_EQ(fixed_point_count(act, G.at(i)), M.fixed_points(i, cones)) << n << " " << to_string(G.at(i));
        }
    }
}

TEST(FixedPoints, BranchBookkeepingAndClassFunction)
{
    for (int n = 2; n <= 10; ++n) {
        const DicyclicGroup G(n);
        const auto census = triangular_census(n);
        for (const auto& e : census.ordered) {
            const auto& act = e.representative;
            long long total = 0;
            for (std::size_t i = 1; i < G.size(); ++i)
                total += fixed_point_count(act, G.at(i));
            long long want = 0;
            for (int m : act.order_type())
                want += (4LL * n / m) * (m - 1);
            EXPECT_EQ(total, want);
            for (const auto& cls : conjugacy_classes(G))
                if (!is_identity(cls.representative)) {
                    for (const auto& g : cls.members)
                        EXPECT_EQ(fixed_point_count(act, g), fixed_point_count(act, cls.representative));
                }
        }
    }
}

TEST(QuotientGenus, Examples)
{
    for (int n = 2; n <= 10; ++n) {
        const DicyclicGroup G(n);
        const auto act = case_one_action(G);
        EXPECT_EQ(quotient_genus(act, Subgroup(G, G.elements())), 0);
        EXPECT_EQ(quotient_genus(act, Subgroup(G, {})), n);
        EXPECT_EQ(quotient_genus(act, cyclic_subgroup(G, G.element(n))), 0);

        std::vector<int> twos(static_cast<std::size_t>(n), 2);
        std::vector<int> want{4, 4};
        want.insert(want.end(), twos.begin(), twos.end());
        EXPECT_EQ(quotient_signature(act, cyclic_subgroup(G, G.y())), (OrbifoldSignature{0, want}));
        EXPECT_EQ(quotient_signature(act, cyclic_subgroup(G, G.x())), (OrbifoldSignature{0, {2 * n, 2 * n, 2, 2}}));
        if (n % 2 == 1) {
            const auto two = case_two_action(G);
            EXPECT_EQ(quotient_signature(two, cyclic_subgroup(G, G.element(n))),
                      (OrbifoldSignature{0, std::vector<int>(2 * static_cast<std::size_t>(n), 2)}));
        }
    }
}

TEST(QuotientGenus, AgreesWithFixedPointOracle)
{
    for (int n = 2; n <= 10; ++n) {
        const DicyclicGroup G(n);
        const oracle::MatrixGroup M(n);
        std::vector<TriangularAction> acts{case_one_action(G)};
        if (n % 2 == 1)
            acts.push_back(case_two_action(G));
        for (const auto& act : acts) {
            const auto cones = cone_indices(G, act);
            for (const auto& H : all_subgroups(G))
                EXPECT_EQ(quotient_genus(act, H), oracle_quotient_genus(M, cones, act.genus(), H, G))
                    << "n=" << n << " |H|=" << H.order();
        }
    }
}

TEST(QuotientGenus, OddOrderCyclicSubgroupsOnTheGenusNAction)
{
    // A subgroup H of <x> of odd order d > 1 misses x^n; each of its nontrivial elements
    // fixes only the two points over z = 0 and z = infinity, so S/H has genus n/d.
    for (int n = 2; n <= 12; ++n) {
        const DicyclicGroup G(n);
        const auto act = case_one_action(G);
        for (int d = 3; d <= n; d += 2) {
            if ((2 * n) % d != 0)
                continue;
            const Subgroup H = cyclic_subgroup(G, G.element(2 * n / d));
            ASSERT_EQ(H.order(), static_cast<std::size_t>(d));
            EXPECT_EQ(quotient_genus(act, H), n / d) << "n=" << n << " d=" << d;
        }
        const bool power_of_two = (n & (n - 1)) == 0;
        bool all_zero = true;
        for (const auto& H : all_subgroups(G))
            if (!H.is_trivial())
                all_zero = all_zero && quotient_genus(act, H) == 0;
        EXPECT_EQ(all_zero, power_of_two) << n;
    }
}

TEST(QuotientGenus, CaseTwoOddOrderSubgroups)
{
    // On the genus n-1 action an odd-order subgroup H of order d lies in <x^2>; its elements
    // fix 4 points each, giving genus n/d - 1. Only odd composite n produce a positive genus.
    for (int n = 3; n <= 21; n += 2) {
        const DicyclicGroup G(n);
        const auto act = case_two_action(G);
        bool all_zero = true;
        for (const auto& H : all_subgroups(G)) {
            if (H.is_trivial())
                continue;
            const auto d = static_cast<int>(H.order());
            const long long want = d % 2 == 1 ? n / d - 1 : 0;
            EXPECT_EQ(quotient_genus(act, H), want) << "n=" << n << " |H|=" << d;
            all_zero = all_zero && want == 0;
        }
        bool prime = true;
        for (int p = 3; p * p <= n; p += 2)
            prime = prime && n % p != 0;
        EXPECT_EQ(all_zero, prime) << n;
    }
}

TEST(QuotientGenus, ConstantOnConjugateSubgroups)
{
    const DicyclicGroup G(6);
    const auto act = case_one_action(G);
    for (const auto& H : all_subgroups(G))
        for (const auto& t : G.elements()) {
            std::vector<Element> gens;
            for (const auto& h : H.generators())
                gens.push_back(conjugate(t, h));
            EXPECT_EQ(quotient_genus(act, Subgroup(G, gens)), quotient_genus(act, H));
        }
}

TEST(Census, SmallCases)
{
    const auto c2 = triangular_census(2);
    EXPECT_EQ(c2.generating_pairs, 24u);
    ASSERT_EQ(c2.unordered.size(), 1u);
    EXPECT_EQ(c2.unordered[0].type, (OrderType{4, 4, 4}));
    EXPECT_EQ(c2.unordered[0].automorphism_orbits, 1u);
    EXPECT_EQ(c2.unordered[0].conjugacy_orbits, 6u);

    const auto c4 = triangular_census(4);
    ASSERT_EQ(c4.unordered.size(), 1u);
    EXPECT_EQ(c4.unordered[0].type, (OrderType{8, 4, 4}));
    ASSERT_NE(c4.find({4, 4, 8}), nullptr);
    EXPECT_EQ(c4.find({4, 4, 8})->automorphism_orbits, 1u);

    const auto c3 = triangular_census(3);
    ASSERT_EQ(c3.unordered.size(), 2u);
    for (const auto& e : c3.ordered)
        EXPECT_EQ(e.automorphism_orbits, 1u);
}

TEST(Census, CountsAgreeWithOracle)
{
    // Aut(G) and Inn(G) = G/Z act freely on generating pairs, so the orbit counts are the
    // pair counts divided by |Aut| and by 2n.
    for (int n = 2; n <= 9; ++n) {
        const oracle::MatrixGroup M(n);
        const std::size_t aut = M.automorphism_count();
        std::map<OrderType, std::size_t> pairs;
        for (std::size_t a = 0; a < M.size(); ++a)
            for (std::size_t b = 0; b < M.size(); ++b)
                if (M.generates(a, b))
                    ++pairs[{M.order(a), M.order(b), M.order(M.inv(M.mul(a, b)))}];
        const auto census = triangular_census(n);
        EXPECT_EQ(census.automorphism_group_order, aut);
        ASSERT_EQ(census.ordered.size(), pairs.size());
        std::size_t total = 0;
        for (const auto& [type, count] : pairs) {
            const auto* e = census.find(type);
            ASSERT_NE(e, nullptr);
            EXPECT_EQ(e->pair_count, count);
            EXPECT_EQ(e->automorphism_orbits, count / aut);
            EXPECT_EQ(e->conjugacy_orbits, count / (2 * static_cast<std::size_t>(n)));
            std::size_t via_stabilizers = 0;
            for (auto s : e->automorphism_stabilizers)
                via_stabilizers += aut / s;
            EXPECT_EQ(via_stabilizers, e->pair_count);
            total += count;
        }
        EXPECT_EQ(census.generating_pairs, total);
    }
}

TEST(Census, TypesAcrossRange)
{
    for (int n = 2; n <= 10; ++n) {
        const auto census = triangular_census(n);
        std::set<OrderType> types;
        for (const auto& u : census.unordered) {
            types.insert(u.type);
            EXPECT_EQ(u.automorphism_orbits, u.ordered_types.size());
        }
        std::set<OrderType> want{{2 * n, 4, 4}};
        if (n % 2 == 1) {
            OrderType t{4, 4, n};
            std::sort(t.rbegin(), t.rend());
            want.insert(t);
        }
        EXPECT_EQ(types, want) << n;
        for (const auto& e : census.ordered) {
            EXPECT_EQ(e.automorphism_orbits, 1u);
            EXPECT_TRUE(e.representative.as_generating_vector().is_valid());
        }
    }
}
