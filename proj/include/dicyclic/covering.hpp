#pragma once
// Covering-space calculus for actions of G_n given by generating vectors:
// Riemann-Hurwitz genus, fixed points via coset stabilizers, intermediate quotients,
// and the census of triangular actions (generating pairs) up to conjugation and
// up to automorphisms.

#include <array>
#include <cstdint>
#include <map>
#include <numeric>
#include <optional>
#include <string>
#include <vector>

#include "dicyclic/errors.hpp"
#include "dicyclic/group.hpp"

namespace dicyclic {

/// (quotient genus; m_1, ..., m_r) of an orientable quotient orbifold.
struct OrbifoldSignature {
    int quotient_genus = 0;
    std::vector<int> cone_orders;

    bool operator==(const OrbifoldSignature&) const = default;
};

inline std::string to_string(const OrbifoldSignature& sig)
{
    std::string s = "(" + std::to_string(sig.quotient_genus) + ";";
    for (std::size_t i = 0; i < sig.cone_orders.size(); ++i)
        s += (i ? "," : "") + std::to_string(sig.cone_orders[i]);
    return s + ")";
}

/// Genus g with 2g - 2 = |G| (2 gamma - 2 + sum (1 - 1/m_i)), computed exactly.
inline long long rh_genus(long long group_order, const OrbifoldSignature& sig)
{
    if (group_order < 1)
        throw InadmissibleSignature("group order must be positive");
    if (sig.quotient_genus < 0)
        throw InadmissibleSignature("quotient genus must be non-negative");
    long long lcm = 1;
    for (int m : sig.cone_orders) {
        if (m < 2)
            throw InadmissibleSignature("cone orders must be >= 2 in " + to_string(sig));
        if (group_order % m != 0)
            throw InadmissibleSignature("cone order " + std::to_string(m) + " does not divide |G|=" +
                                        std::to_string(group_order));
        lcm = std::lcm(lcm, static_cast<long long>(m));
    }
    const long long r = static_cast<long long>(sig.cone_orders.size());
    // (2g - 2) * lcm
    long long scaled = group_order * lcm * (2LL * sig.quotient_genus - 2 + r);
    for (int m : sig.cone_orders)
        scaled -= group_order * (lcm / m);
    if (scaled % lcm != 0)
        throw InadmissibleSignature("non-integral genus for " + to_string(sig) + " with |G|=" +
                                    std::to_string(group_order));
    const long long euler = scaled / lcm; // 2g - 2
    if (euler % 2 != 0 || euler < -2)
        throw InadmissibleSignature("inadmissible genus for " + to_string(sig) + " with |G|=" +
                                    std::to_string(group_order));
    return euler / 2 + 1;
}

/// Images of the canonical generators of a Fuchsian group of signature
/// (quotient_genus; order(c_1), ..., order(c_r)): hyperbolic pairs a_1, b_1, ... and cone images.
struct GeneratingVector {
    DicyclicGroup group;
    int quotient_genus = 0;
    std::vector<Element> hyperbolic; ///< a_1, b_1, ..., a_g', b_g'
    std::vector<Element> cones;

    OrbifoldSignature signature() const
    {
        OrbifoldSignature sig{quotient_genus, {}};
        for (const auto& c : cones)
            sig.cone_orders.push_back(order(c));
        return sig;
    }

    /// prod [a_i, b_i] * prod c_j
    Element long_relation() const
    {
        Element acc = group.identity();
        for (std::size_t i = 0; i + 1 < hyperbolic.size(); i += 2) {
            const Element& a = hyperbolic[i];
            const Element& b = hyperbolic[i + 1];
            acc = acc * a * b * inverse(a) * inverse(b);
        }
        for (const auto& c : cones)
            acc = acc * c;
        return acc;
    }

    /// Empty when the vector is a valid surface-kernel datum; otherwise the reasons it is not.
    std::vector<std::string> violations() const
    {
        std::vector<std::string> out;
        if (hyperbolic.size() != static_cast<std::size_t>(2 * quotient_genus))
            out.push_back("expected " + std::to_string(2 * quotient_genus) + " hyperbolic images");
        for (const auto& e : hyperbolic)
            if (!group.owns(e))
                out.push_back("hyperbolic image from another group");
        for (const auto& c : cones) {
            if (!group.owns(c))
                out.push_back("cone image from another group");
            else if (is_identity(c))
                out.push_back("cone image is the identity");
        }
        if (!out.empty())
            return out;
        if (!is_identity(long_relation()))
            out.push_back("long relation fails");
        std::vector<Element> all = hyperbolic;
        all.insert(all.end(), cones.begin(), cones.end());
        if (!generates(group, all))
            out.push_back("images do not generate the group");
        return out;
    }

    bool is_valid() const { return violations().empty(); }
};

/// A triangular action: c1 c2 c3 = 1 with <c1, c2> = G.
class TriangularAction {
public:
    TriangularAction(const DicyclicGroup& G, const Element& g0, const Element& g1)
        : group_(G), c_{g0, g1, inverse(G.multiply(g0, g1))}
    {
        const Element gens[] = {g0, g1};
        if (!generates(G, gens))
            throw ParameterError("(" + to_string(g0) + ", " + to_string(g1) + ") does not generate G_" +
                                 std::to_string(G.n()));
        for (const auto& c : c_)
            if (is_identity(c))
                throw ParameterError("triangular action needs three nontrivial branch generators");
    }

    const DicyclicGroup& group() const { return group_; }
    const std::array<Element, 3>& branch_generators() const { return c_; }
    const Element& c(std::size_t i) const { return c_.at(i); }

    std::array<int, 3> order_type() const { return {order(c_[0]), order(c_[1]), order(c_[2])}; }

    OrbifoldSignature signature() const
    {
        auto t = order_type();
        return OrbifoldSignature{0, {t[0], t[1], t[2]}};
    }

    long long genus() const { return rh_genus(group_.order(), signature()); }

    GeneratingVector as_generating_vector() const
    {
        return GeneratingVector{group_, 0, {}, {c_[0], c_[1], c_[2]}};
    }

private:
    DicyclicGroup group_;
    std::array<Element, 3> c_;
};

/// The action with S/G_n of signature (0;4,4,2n): c = (y, y^{-1} x^{-1}, x).
inline TriangularAction case_one_action(const DicyclicGroup& G)
{
    return TriangularAction(G, G.y(), inverse(G.y()) * inverse(G.x()));
}

/// For n odd, the action with signature (0;4,4,n): c = (y, y^{-1} x^{-2}, x^2).
inline TriangularAction case_two_action(const DicyclicGroup& G)
{
    if (G.n() % 2 == 0)
        throw DomainError("the (0;4,4,n) action exists only for odd n");
    return TriangularAction(G, G.y(), inverse(G.y()) * G.element(-2));
}

/// Number of fixed points of g on the covering surface:
/// sum over cone images c_i of #{cosets h<c_i> : h^{-1} g h in <c_i>}.
inline long long fixed_point_count(const GeneratingVector& act, const Element& g)
{
    const DicyclicGroup& G = act.group;
    const std::size_t gi = G.index(g);
    if (gi == 0)
        throw DomainError("the identity fixes every point");
    long long total = 0;
    for (const auto& c : act.cones) {
        const Subgroup C = cyclic_subgroup(G, c);
        long long hits = 0;
        for (std::size_t h = 0; h < G.size(); ++h)
            if (C.mask()[G.mul(G.mul(G.inv(h), gi), h)])
                ++hits;
        // the condition is constant on each coset h<c>
        total += hits / static_cast<long long>(C.order());
    }
    return total;
}

inline long long fixed_point_count(const TriangularAction& act, const Element& g)
{
    return fixed_point_count(act.as_generating_vector(), g);
}

struct PurityReport {
    bool purely_non_free = false;
    std::vector<Element> free_elements; ///< nontrivial elements without fixed points
};

inline PurityReport is_purely_non_free(const GeneratingVector& act)
{
    PurityReport report;
    for (const auto& g : act.group.elements()) {
        if (is_identity(g))
            continue;
        if (fixed_point_count(act, g) == 0)
            report.free_elements.push_back(g);
    }
    report.purely_non_free = report.free_elements.empty();
    return report;
}

inline PurityReport is_purely_non_free(const TriangularAction& act)
{
    return is_purely_non_free(act.as_generating_vector());
}

namespace detail {

/// Cycle lengths of left multiplication by c on the left cosets G/H.
inline std::vector<std::size_t> coset_cycle_lengths(const DicyclicGroup& G, const Subgroup& H,
                                                    std::size_t c)
{
    // label each element by the least index in its coset gH
    std::vector<std::size_t> label(G.size(), G.size());
    std::vector<std::size_t> reps;
    for (std::size_t g = 0; g < G.size(); ++g) {
        if (label[g] != G.size())
            continue;
        for (const auto& h : H.members())
            label[G.mul(g, G.index(h))] = reps.size();
        reps.push_back(g);
    }
    std::vector<bool> visited(reps.size(), false);
    std::vector<std::size_t> lengths;
    for (std::size_t start = 0; start < reps.size(); ++start) {
        if (visited[start])
            continue;
        std::size_t len = 0;
        std::size_t cur = start;
        while (!visited[cur]) {
            visited[cur] = true;
            ++len;
            cur = label[G.mul(c, reps[cur])];
        }
        lengths.push_back(len);
    }
    return lengths;
}

inline void check_subgroup(const GeneratingVector& act, const Subgroup& H)
{
    if (H.n() != act.group.n())
        throw ParameterError("subgroup belongs to a different group");
}

} // namespace detail

/// Signature of S/H, read off from the cycles of each cone image on G/H.
/// Cone orders are listed in decreasing order.
inline OrbifoldSignature quotient_signature(const GeneratingVector& act, const Subgroup& H)
{
    detail::check_subgroup(act, H);
    const DicyclicGroup& G = act.group;
    const long long degree = static_cast<long long>(H.index_in_group());
    long long ramification = 0;
    std::vector<int> cones;
    for (const auto& c : act.cones) {
        const int m = order(c);
        for (std::size_t len : detail::coset_cycle_lengths(G, H, G.index(c))) {
            ramification += static_cast<long long>(len) - 1;
            const int cone = m / static_cast<int>(len);
            if (cone > 1)
                cones.push_back(cone);
        }
    }
    const long long euler = degree * (2LL * act.quotient_genus - 2) + ramification; // 2h - 2
    if (euler % 2 != 0)
        throw InvariantViolation("odd Euler characteristic for a quotient surface");
    std::sort(cones.rbegin(), cones.rend());
    return OrbifoldSignature{static_cast<int>(euler / 2 + 1), std::move(cones)};
}

inline long long quotient_genus(const GeneratingVector& act, const Subgroup& H)
{
    return quotient_signature(act, H).quotient_genus;
}

inline OrbifoldSignature quotient_signature(const TriangularAction& act, const Subgroup& H)
{
    return quotient_signature(act.as_generating_vector(), H);
}

inline long long quotient_genus(const TriangularAction& act, const Subgroup& H)
{
    return quotient_genus(act.as_generating_vector(), H);
}

// ---------------------------------------------------------------------------
// Census of triangular actions

using OrderType = std::array<int, 3>;

struct OrderedTypeEntry {
    OrderType type{};
    std::size_t pair_count = 0;
    std::size_t conjugacy_orbits = 0;
    std::size_t automorphism_orbits = 0;
    std::vector<std::size_t> automorphism_stabilizers; ///< one per automorphism orbit
    TriangularAction representative;
};

struct UnorderedTypeEntry {
    OrderType type{}; ///< sorted decreasingly, e.g. {2n,4,4}
    std::size_t pair_count = 0;
    std::size_t conjugacy_orbits = 0;
    std::size_t automorphism_orbits = 0;
    std::vector<OrderType> ordered_types;
};

struct ActionCensus {
    int n = 0;
    std::size_t generating_pairs = 0;
    std::size_t automorphism_group_order = 0;
    std::size_t inner_action_size = 0; ///< |G| (conjugation is by every element)
    std::vector<OrderedTypeEntry> ordered;
    std::vector<UnorderedTypeEntry> unordered;

    const OrderedTypeEntry* find(const OrderType& t) const
    {
        for (const auto& e : ordered)
            if (e.type == t)
                return &e;
        return nullptr;
    }
};

namespace detail {

/// Orbits of a set of pairs (encoded as i * |G| + j) under a list of element maps.
/// Returns, for each orbit, (least member, orbit size).
inline std::vector<std::pair<std::size_t, std::size_t>>
pair_orbits(const std::vector<std::size_t>& pairs, std::size_t group_size,
            const std::vector<std::vector<std::size_t>>& maps)
{
    std::vector<bool> in_set(group_size * group_size, false);
    for (auto p : pairs)
        in_set[p] = true;
    std::vector<bool> done(group_size * group_size, false);
    std::vector<std::pair<std::size_t, std::size_t>> orbits;
    for (auto p : pairs) {
        if (done[p])
            continue;
        std::vector<std::size_t> members{p};
        done[p] = true;
        for (std::size_t head = 0; head < members.size(); ++head) {
            const std::size_t i = members[head] / group_size;
            const std::size_t j = members[head] % group_size;
            for (const auto& f : maps) {
                const std::size_t q = f[i] * group_size + f[j];
                if (!in_set[q])
                    throw InvariantViolation("orbit left the set of generating pairs");
                if (!done[q]) {
                    done[q] = true;
                    members.push_back(q);
                }
            }
        }
        orbits.emplace_back(*std::min_element(members.begin(), members.end()), members.size());
    }
    return orbits;
}

} // namespace detail

/// Every ordered generating pair (g0, g1) of G_n, grouped by the order type of
/// (g0, g1, (g0 g1)^{-1}), with orbit counts under simultaneous conjugation and
/// under Aut(G_n).
inline ActionCensus triangular_census(int n)
{
    const DicyclicGroup G(n);
    const std::size_t N = G.size();
    ActionCensus census;
    census.n = n;

    std::map<OrderType, std::vector<std::size_t>> by_type;
    for (std::size_t i = 0; i < N; ++i) {
        for (std::size_t j = 0; j < N; ++j) {
            const std::size_t gens[] = {i, j};
            if (closure_size(G, gens) != N)
                continue;
            const std::size_t k = G.inv(G.mul(i, j));
            OrderType t{G.order_at(i), G.order_at(j), G.order_at(k)};
            if (t[0] < 2 || t[1] < 2 || t[2] < 2)
                throw InvariantViolation("generating pair with a trivial branch generator");
            by_type[t].push_back(i * N + j);
            ++census.generating_pairs;
        }
    }

    const auto auts = automorphism_group(G);
    census.automorphism_group_order = auts.size();
    census.inner_action_size = N;
    std::vector<std::vector<std::size_t>> aut_maps;
    for (const auto& f : auts) {
        std::vector<std::size_t> m(N);
        for (std::size_t e = 0; e < N; ++e)
            m[e] = G.index(f.apply(G.at(e)));
        aut_maps.push_back(std::move(m));
    }
    std::vector<std::vector<std::size_t>> conj_maps;
    for (std::size_t g = 0; g < N; ++g) {
        std::vector<std::size_t> m(N);
        for (std::size_t e = 0; e < N; ++e)
            m[e] = G.mul(G.mul(g, e), G.inv(g));
        conj_maps.push_back(std::move(m));
    }

    std::map<OrderType, UnorderedTypeEntry> unordered;
    for (const auto& [type, pairs] : by_type) {
        const auto aut_orbits = detail::pair_orbits(pairs, N, aut_maps);
        const auto conj_orbits = detail::pair_orbits(pairs, N, conj_maps);
        const std::size_t rep = aut_orbits.front().first;
        OrderedTypeEntry entry{type, pairs.size(), conj_orbits.size(), aut_orbits.size(), {},
                               TriangularAction(G, G.at(rep / N), G.at(rep % N))};
        for (const auto& [least, size] : aut_orbits)
            entry.automorphism_stabilizers.push_back(auts.size() / size);

        OrderType key = type;
        std::sort(key.rbegin(), key.rend());
        auto& u = unordered[key];
        u.type = key;
        u.pair_count += entry.pair_count;
        u.conjugacy_orbits += entry.conjugacy_orbits;
        u.automorphism_orbits += entry.automorphism_orbits;
        u.ordered_types.push_back(type);
        census.ordered.push_back(std::move(entry));
    }
    for (auto& [key, u] : unordered)
        census.unordered.push_back(std::move(u));
    return census;
}

} // namespace dicyclic
