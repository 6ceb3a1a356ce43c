#pragma once
// Minimal genus searches over orientable signatures: strong symmetric genus (any conformal
// action) and pure symmetric genus (purely-non-free conformal action), by exhaustive
// enumeration of generating vectors of G_n.

#include <algorithm>
#include <functional>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dicyclic/covering.hpp"
#include "dicyclic/errors.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/real_forms.hpp"

namespace dicyclic {

struct SignatureCandidate {
    long long target_genus = 0;
    int quotient_genus = 0;
    std::vector<int> cone_orders;

    OrbifoldSignature signature() const { return OrbifoldSignature{quotient_genus, cone_orders}; }
    bool operator==(const SignatureCandidate&) const = default;
};

/// All (gamma'; m_1 <= ... <= m_r) with m_j among the element orders of G_n and
/// 2g - 2 = 4n (2 gamma' - 2 + sum (1 - 1/m_j)), sorted by r, then gamma', then orders.
inline std::vector<SignatureCandidate> signature_candidates(int n, long long g)
{
    detail::check_parameter(n);
    std::vector<SignatureCandidate> out;
    const long long group_order = 4LL * n;
    const long long euler = 2 * g - 2;
    if (euler < -2 * group_order)
        return out;
    const auto orders = available_cone_orders(n);
    // each cone contributes at least 1/2, so 4n (2 gamma' - 2 + r/2) <= 2g - 2
    for (int gamma = 0; group_order * (2LL * gamma - 2) <= euler; ++gamma) {
        for (int r = 0; group_order * (4LL * gamma - 4 + r) <= 2 * euler; ++r) {
            std::vector<std::vector<int>> multisets;
            std::vector<int> cur;
            detail::nondecreasing_multisets(orders, static_cast<std::size_t>(r), 0, cur, multisets);
            for (auto& ms : multisets) {
                OrbifoldSignature sig{gamma, ms};
                try {
                    if (rh_genus(group_order, sig) == g)
                        out.push_back(SignatureCandidate{g, gamma, ms});
                } catch (const InadmissibleSignature&) {
                }
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const SignatureCandidate& l, const SignatureCandidate& r) {
        return std::make_tuple(l.cone_orders.size(), l.quotient_genus, l.cone_orders) <
               std::make_tuple(r.cone_orders.size(), r.quotient_genus, r.cone_orders);
    });
    return out;
}

/// Visits every generating vector realizing the candidate, in lexicographic order of image
/// indices; stops when visit returns false.
inline void for_each_generating_vector(const DicyclicGroup& G, const SignatureCandidate& cand,
                                       const std::function<bool(const GeneratingVector&)>& visit)
{
    const std::size_t N = G.size();
    const std::size_t hyp = 2 * static_cast<std::size_t>(cand.quotient_genus);
    const std::size_t r = cand.cone_orders.size();
    std::vector<std::vector<std::size_t>> pools;
    for (int m : cand.cone_orders) {
        std::vector<std::size_t> pool;
        for (std::size_t i = 0; i < N; ++i)
            if (G.order_at(i) == m)
                pool.push_back(i);
        if (pool.empty())
            return;
        pools.push_back(std::move(pool));
    }
    std::vector<std::size_t> hyperbolic(hyp), cones(r);
    bool keep_going = true;

    auto finish = [&](std::size_t product) {
        if (r == 0) {
            if (product != 0)
                return;
        } else {
            const std::size_t last = G.inv(product);
            if (G.order_at(last) != cand.cone_orders[r - 1])
                return;
            cones[r - 1] = last;
        }
        std::vector<std::size_t> gens(hyperbolic);
        gens.insert(gens.end(), cones.begin(), cones.end());
        if (closure_size(G, gens) != N)
            return;
        GeneratingVector v{G, cand.quotient_genus, {}, {}};
        for (auto h : hyperbolic)
            v.hyperbolic.push_back(G.at(h));
        for (auto c : cones)
            v.cones.push_back(G.at(c));
        keep_going = visit(v);
    };

    std::function<void(std::size_t, std::size_t)> choose_cone = [&](std::size_t j, std::size_t product) {
        if (r == 0 || j == r - 1) {
            finish(product);
            return;
        }
        for (auto c : pools[j]) {
            cones[j] = c;
            choose_cone(j + 1, G.mul(product, c));
            if (!keep_going)
                return;
        }
    };
    std::function<void(std::size_t, std::size_t)> choose_pair = [&](std::size_t i, std::size_t product) {
        if (i == hyp) {
            choose_cone(0, product);
            return;
        }
        for (std::size_t a = 0; a < N && keep_going; ++a) {
            for (std::size_t b = 0; b < N && keep_going; ++b) {
                hyperbolic[i] = a;
                hyperbolic[i + 1] = b;
                const std::size_t comm = G.mul(G.mul(a, b), G.mul(G.inv(a), G.inv(b)));
                choose_pair(i + 2, G.mul(product, comm));
            }
        }
    };
    choose_pair(0, 0);
}

inline std::optional<GeneratingVector> exists_generating_vector(const DicyclicGroup& G,
                                                                const SignatureCandidate& cand)
{
    std::optional<GeneratingVector> found;
    for_each_generating_vector(G, cand, [&](const GeneratingVector& v) {
        found = v;
        return false;
    });
    return found;
}

inline std::optional<GeneratingVector> exists_generating_vector(int n, const SignatureCandidate& cand)
{
    return exists_generating_vector(DicyclicGroup(n), cand);
}

/// Every nontrivial element is conjugate into some <c_j>; decided without counting fixed points.
inline bool covered_by_cone_conjugates(const GeneratingVector& v)
{
    const DicyclicGroup& G = v.group;
    std::vector<bool> covered(G.size(), false);
    for (const auto& c : v.cones) {
        const Subgroup C = cyclic_subgroup(G, c);
        for (const auto& e : C.members())
            for (std::size_t h = 0; h < G.size(); ++h)
                covered[G.mul(G.mul(h, G.index(e)), G.inv(h))] = true;
    }
    for (std::size_t i = 1; i < G.size(); ++i)
        if (!covered[i])
            return false;
    return true;
}

struct GenusSearchResult {
    long long genus = 0;
    SignatureCandidate signature;
    GeneratingVector witness;
    std::size_t candidates_examined = 0;
};

namespace detail {

inline GenusSearchResult least_genus(int n, long long g_max, const std::function<bool(const GeneratingVector&)>& accept,
                                     const std::string& what)
{
    const DicyclicGroup G(n);
    std::size_t examined = 0;
    for (long long g = 2; g <= g_max; ++g) {
        for (const auto& cand : signature_candidates(n, g)) {
            ++examined;
            std::optional<GeneratingVector> hit;
            for_each_generating_vector(G, cand, [&](const GeneratingVector& v) {
                if (!accept(v))
                    return true;
                hit = v;
                return false;
            });
            if (hit)
                return GenusSearchResult{g, cand, *hit, examined};
        }
    }
    throw SearchExhausted("no " + what + " action of G_" + std::to_string(n) + " with genus in 2.." +
                          std::to_string(g_max));
}

} // namespace detail

/// Least genus g >= 2 admitting a conformal action of G_n.
inline GenusSearchResult strong_symmetric_genus(int n, long long g_max)
{
    return detail::least_genus(n, g_max, [](const GeneratingVector&) { return true; }, "conformal");
}

/// Least genus g >= 2 admitting a purely-non-free conformal action of G_n.
inline GenusSearchResult pure_symmetric_genus(int n, long long g_max)
{
    return detail::least_genus(n, g_max, covered_by_cone_conjugates, "purely-non-free");
}

/// The five signatures of orientable Euclidean orbifolds.
inline std::vector<SignatureCandidate> torus_signatures()
{
    return {
        {1, 0, {2, 2, 2, 2}},
        {1, 0, {3, 3, 3}},
        {1, 0, {2, 4, 4}},
        {1, 0, {2, 3, 6}},
        {1, 1, {}},
    };
}

/// Torus signatures realized by some generating vector of G_n (expected: none).
inline std::vector<SignatureCandidate> torus_exclusion(int n)
{
    const DicyclicGroup G(n);
    std::vector<SignatureCandidate> realized;
    for (const auto& cand : torus_signatures())
        if (exists_generating_vector(G, cand))
            realized.push_back(cand);
    return realized;
}

/// Genus-zero signatures realized by some generating vector of G_n (expected: none).
inline std::vector<SignatureCandidate> sphere_exclusion(int n)
{
    const DicyclicGroup G(n);
    std::vector<SignatureCandidate> realized;
    for (const auto& cand : signature_candidates(n, 0))
        if (exists_generating_vector(G, cand))
            realized.push_back(cand);
    return realized;
}

} // namespace dicyclic
