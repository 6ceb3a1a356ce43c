#pragma once
// Conformal/anticonformal actions of G_n: NEC signatures without reflections, surjections
// Theta onto G_n with torsion-free kernel, minimal genus search, and the pseudo-real family.
//
// An NEC signature here has gamma+1 glide-reflection generators alpha_i and r elliptic
// generators beta_j with alpha_1^2 ... alpha_{gamma+1}^2 beta_1 ... beta_r = 1.
// Signatures with reflections are not searched.

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "dicyclic/covering.hpp"
#include "dicyclic/errors.hpp"
#include "dicyclic/group.hpp"

namespace dicyclic {

struct NECSignature {
    int gamma = 0; ///< quotient is a connected sum of gamma+1 projective planes
    std::vector<int> cone_orders;

    bool operator==(const NECSignature&) const = default;
};

inline std::string to_string(const NECSignature& sig)
{
    std::string s = "(gamma=" + std::to_string(sig.gamma) + ";";
    for (std::size_t i = 0; i < sig.cone_orders.size(); ++i)
        s += (i ? "," : "") + std::to_string(sig.cone_orders[i]);
    return s + ")";
}

/// g = 1 + 2n (gamma + r - 1 - sum 1/m_j), exactly.
inline long long nec_genus(int n, const NECSignature& sig)
{
    detail::check_parameter(n);
    if (sig.gamma < 0)
        throw InadmissibleSignature("gamma must be non-negative");
    long long lcm = 1;
    for (int m : sig.cone_orders) {
        if (m < 2)
            throw InadmissibleSignature("cone orders must be >= 2 in " + to_string(sig));
        lcm = std::lcm(lcm, static_cast<long long>(m));
    }
    const long long two_n = 2LL * n;
    const long long r = static_cast<long long>(sig.cone_orders.size());
    long long scaled = two_n * lcm * (sig.gamma + r - 1);
    for (int m : sig.cone_orders)
        scaled -= two_n * (lcm / m);
    if (scaled % lcm != 0)
        throw InadmissibleSignature("non-integral genus for " + to_string(sig) + " with n=" + std::to_string(n));
    const long long g = 1 + scaled / lcm;
    if (g < 0)
        throw InadmissibleSignature("negative genus for " + to_string(sig) + " with n=" + std::to_string(n));
    return g;
}

/// Orientable signature of the conformal quotient S/G^+: (gamma; m_1, m_1, ..., m_r, m_r).
inline OrbifoldSignature orientable_double(const NECSignature& sig)
{
    OrbifoldSignature out{sig.gamma, {}};
    for (int m : sig.cone_orders) {
        out.cone_orders.push_back(m);
        out.cone_orders.push_back(m);
    }
    return out;
}

/// A surjection Theta from an NEC group onto G_n, given by generator images.
struct NECActionData {
    DicyclicGroup group;
    Subgroup plus_part;
    NECSignature sig;
    std::vector<Element> alpha_images;
    std::vector<Element> beta_images;

    Element long_relation() const
    {
        Element acc = group.identity();
        for (const auto& a : alpha_images)
            acc = acc * a * a;
        for (const auto& b : beta_images)
            acc = acc * b;
        return acc;
    }

    /// Images of Schreier generators of the orientation-preserving half (transversal {1, alpha_1}).
    std::vector<Element> orientation_preserving_images() const
    {
        std::vector<Element> out;
        if (alpha_images.empty())
            return beta_images;
        const Element& a1 = alpha_images.front();
        for (const auto& b : beta_images) {
            out.push_back(b);
            out.push_back(a1 * b * inverse(a1));
        }
        for (const auto& a : alpha_images) {
            out.push_back(a * inverse(a1));
            out.push_back(a1 * a);
        }
        return out;
    }

    /// Generating vector of the conformal action of plus_part, with cone images
    /// beta_j and alpha_1 beta_j alpha_1^{-1} (the cone points of S/G^+).
    std::vector<Element> conformal_cone_images() const
    {
        std::vector<Element> out;
        for (const auto& b : beta_images) {
            out.push_back(b);
            if (!alpha_images.empty())
                out.push_back(alpha_images.front() * b * inverse(alpha_images.front()));
        }
        return out;
    }

    std::vector<std::string> violations() const
    {
        std::vector<std::string> out;
        if (plus_part.n() != group.n() || plus_part.index_in_group() != 2)
            out.push_back("plus part is not an index-two subgroup");
        if (alpha_images.size() != static_cast<std::size_t>(sig.gamma + 1))
            out.push_back("expected gamma+1 alpha images");
        if (beta_images.size() != sig.cone_orders.size())
            out.push_back("expected one beta image per cone order");
        if (!out.empty())
            return out;
        for (const auto& a : alpha_images)
            if (!group.owns(a) || plus_part.contains(a))
                out.push_back("alpha image " + to_string(a) + " is not orientation reversing");
        for (std::size_t j = 0; j < beta_images.size(); ++j) {
            const auto& b = beta_images[j];
            if (!group.owns(b) || !plus_part.contains(b))
                out.push_back("beta image " + to_string(b) + " is not orientation preserving");
            else if (order(b) != sig.cone_orders[j])
                out.push_back("beta image " + to_string(b) + " does not have order " +
                              std::to_string(sig.cone_orders[j]));
        }
        if (!out.empty())
            return out;
        if (!is_identity(long_relation()))
            out.push_back("long relation fails");
        std::vector<Element> all = alpha_images;
        all.insert(all.end(), beta_images.begin(), beta_images.end());
        if (!generates(group, all))
            out.push_back("images do not generate the group");
        else if (Subgroup(group, orientation_preserving_images()) != plus_part)
            out.push_back("orientation-preserving half does not map onto the plus part");
        return out;
    }

    bool is_valid() const { return violations().empty(); }
};

/// Element orders available in G_n: divisors >= 2 of 2n, together with 4.
inline std::vector<int> available_cone_orders(int n)
{
    std::vector<int> out;
    for (int d = 2; d <= 2 * n; ++d)
        if ((2 * n) % d == 0)
            out.push_back(d);
    if (std::find(out.begin(), out.end(), 4) == out.end())
        out.push_back(4);
    std::sort(out.begin(), out.end());
    return out;
}

/// Visits admissible data in lexicographic order of (alpha indices, beta indices);
/// stops when visit returns false.
inline void for_each_admissible(const DicyclicGroup& G, const Subgroup& plus, const NECSignature& sig,
                                const std::function<bool(const NECActionData&)>& visit)
{
    if (plus.n() != G.n() || plus.index_in_group() != 2)
        throw ParameterError("plus part must be an index-two subgroup of G_" + std::to_string(G.n()));
    for (int m : sig.cone_orders)
        if (m < 2)
            throw InadmissibleSignature("cone orders must be >= 2");

    std::vector<std::size_t> outside;
    for (std::size_t i = 0; i < G.size(); ++i)
        if (!plus.mask()[i])
            outside.push_back(i);
    auto inside_of_order = [&](int m) {
        std::vector<std::size_t> v;
        for (std::size_t i = 0; i < G.size(); ++i)
            if (plus.mask()[i] && G.order_at(i) == m)
                v.push_back(i);
        return v;
    };
    std::vector<std::vector<std::size_t>> beta_pool;
    for (int m : sig.cone_orders)
        beta_pool.push_back(inside_of_order(m));
    for (const auto& pool : beta_pool)
        if (pool.empty())
            return;

    const std::size_t alpha_count = static_cast<std::size_t>(sig.gamma + 1);
    const std::size_t r = sig.cone_orders.size();
    std::vector<std::size_t> alphas(alpha_count), betas(r);
    bool keep_going = true;

    auto finish = [&](std::size_t product) {
        // product = alpha_1^2 ... alpha_k^2 beta_1 ... beta_{r-1}
        if (r == 0) {
            if (product != 0)
                return;
        } else {
            const std::size_t last = G.inv(product);
            if (!plus.mask()[last] || G.order_at(last) != sig.cone_orders[r - 1])
                return;
            betas[r - 1] = last;
        }
        std::vector<std::size_t> gens(alphas);
        gens.insert(gens.end(), betas.begin(), betas.end());
        if (closure_size(G, gens) != G.size())
            return;
        NECActionData data{G, plus, sig, {}, {}};
        for (auto a : alphas)
            data.alpha_images.push_back(G.at(a));
        for (auto b : betas)
            data.beta_images.push_back(G.at(b));
        keep_going = visit(data);
    };

    std::function<void(std::size_t, std::size_t)> choose_beta = [&](std::size_t j, std::size_t product) {
        if (!keep_going)
            return;
        if (r == 0 || j == r - 1) {
            finish(product);
            return;
        }
        for (auto b : beta_pool[j]) {
            betas[j] = b;
            choose_beta(j + 1, G.mul(product, b));
            if (!keep_going)
                return;
        }
    };
    std::function<void(std::size_t, std::size_t)> choose_alpha = [&](std::size_t i, std::size_t product) {
        if (!keep_going)
            return;
        if (i == alpha_count) {
            choose_beta(0, product);
            return;
        }
        for (auto a : outside) {
            alphas[i] = a;
            choose_alpha(i + 1, G.mul(product, G.mul(a, a)));
            if (!keep_going)
                return;
        }
    };
    choose_alpha(0, 0);
}

inline std::vector<NECActionData> admissible_homomorphisms(const DicyclicGroup& G, const Subgroup& plus,
                                                           const NECSignature& sig)
{
    std::vector<NECActionData> out;
    for_each_admissible(G, plus, sig, [&](const NECActionData& d) {
        out.push_back(d);
        return true;
    });
    return out;
}

inline std::vector<NECActionData> admissible_homomorphisms(int n, const Subgroup& plus, const NECSignature& sig)
{
    return admissible_homomorphisms(DicyclicGroup(n), plus, sig);
}

inline std::optional<NECActionData> first_admissible(const DicyclicGroup& G, const Subgroup& plus,
                                                     const NECSignature& sig)
{
    std::optional<NECActionData> found;
    for_each_admissible(G, plus, sig, [&](const NECActionData& d) {
        found = d;
        return false;
    });
    return found;
}

/// H_1 = <x>, H_2 = <x^2, y>, H_3 = <x^2, xy> (the last two only for even n).
inline Subgroup named_index_two_subgroup(const DicyclicGroup& G, int which)
{
    switch (which) {
    case 1:
        return Subgroup(G, {G.x()});
    case 2:
    case 3:
        if (G.n() % 2 != 0)
            throw DomainError("G_n has a single index-two subgroup for odd n");
        return which == 2 ? Subgroup(G, {G.element(2), G.y()}) : Subgroup(G, {G.element(2), G.x() * G.y()});
    default:
        throw ParameterError("index-two subgroups are numbered 1..3");
    }
}

/// Image of NEC data under an automorphism of G_n (which moves the plus part along).
inline NECActionData apply_automorphism(const GroupAutomorphism& f, const NECActionData& d)
{
    std::vector<Element> plus_gens;
    for (const auto& g : d.plus_part.generators())
        plus_gens.push_back(f.apply(g));
    NECActionData out{d.group, Subgroup(d.group, plus_gens), d.sig, {}, {}};
    for (const auto& a : d.alpha_images)
        out.alpha_images.push_back(f.apply(a));
    for (const auto& b : d.beta_images)
        out.beta_images.push_back(f.apply(b));
    return out;
}

enum class SearchMode {
    Pruned,    ///< stop after the first genus level with a witness
    Exhaustive ///< enumerate every candidate completely (debug cross-check)
};

struct HypCandidate {
    long long genus = 0;
    std::size_t plus_index = 0; ///< position among the index-two subgroups
    NECSignature sig;
};

struct HypCandidateOutcome {
    HypCandidate candidate;
    std::size_t admissible_count = 0; ///< only filled in Exhaustive mode
    bool realized = false;
};

struct HypResult {
    long long genus = 0;
    NECActionData witness;
    std::size_t candidates_examined = 0;
    std::vector<HypCandidateOutcome> outcomes;
};

namespace detail {

inline std::vector<std::size_t> witness_key(const DicyclicGroup& G, const NECActionData& d)
{
    std::vector<std::size_t> key;
    for (const auto& a : d.alpha_images)
        key.push_back(G.index(a));
    for (const auto& b : d.beta_images)
        key.push_back(G.index(b));
    return key;
}

inline void nondecreasing_multisets(const std::vector<int>& values, std::size_t length, std::size_t from,
                                    std::vector<int>& cur, std::vector<std::vector<int>>& out)
{
    if (cur.size() == length) {
        out.push_back(cur);
        return;
    }
    for (std::size_t i = from; i < values.size(); ++i) {
        cur.push_back(values[i]);
        nondecreasing_multisets(values, length, i, cur, out);
        cur.pop_back();
    }
}

} // namespace detail

/// Candidate (genus, plus part, signature) triples with genus >= 2, sorted by genus.
inline std::vector<HypCandidate> hyp_candidates(int n, std::size_t plus_count, int gamma_max, int r_max)
{
    std::vector<HypCandidate> out;
    const auto orders = available_cone_orders(n);
    for (int gamma = 0; gamma <= gamma_max; ++gamma) {
        for (int r = 0; r <= r_max; ++r) {
            std::vector<std::vector<int>> multisets;
            std::vector<int> cur;
            detail::nondecreasing_multisets(orders, static_cast<std::size_t>(r), 0, cur, multisets);
            for (auto& ms : multisets) {
                NECSignature sig{gamma, ms};
                long long g = 0;
                try {
                    g = nec_genus(n, sig);
                } catch (const InadmissibleSignature&) {
                    continue;
                }
                if (g < 2)
                    continue;
                for (std::size_t p = 0; p < plus_count; ++p)
                    out.push_back(HypCandidate{g, p, sig});
            }
        }
    }
    std::stable_sort(out.begin(), out.end(), [](const HypCandidate& l, const HypCandidate& r) {
        return std::tie(l.genus, l.plus_index, l.sig.gamma, l.sig.cone_orders) <
               std::tie(r.genus, r.plus_index, r.sig.gamma, r.sig.cone_orders);
    });
    return out;
}

/// Least genus >= 2 of a surface on which G_n acts with anticonformal elements, over all
/// index-two plus parts and reflection-free NEC signatures with gamma <= gamma_max and
/// r <= r_max. Ties are broken by the lexicographically least witness.
inline HypResult sigma_hyp(int n, int gamma_max = 1, int r_max = 3, SearchMode mode = SearchMode::Pruned)
{
    detail::check_parameter(n);
    if (gamma_max < 0 || r_max < 0)
        throw ParameterError("search bounds must be non-negative");
    const DicyclicGroup G(n);
    const auto plus_parts = subgroups_of_index(G, 2);
    const auto candidates = hyp_candidates(n, plus_parts.size(), gamma_max, r_max);

    HypResult result{0, NECActionData{G, plus_parts.front(), {}, {}, {}}, 0, {}};
    std::optional<std::pair<long long, std::vector<std::size_t>>> best;
    for (const auto& cand : candidates) {
        if (mode == SearchMode::Pruned && best && cand.genus > best->first)
            break;
        ++result.candidates_examined;
        HypCandidateOutcome outcome{cand, 0, false};
        std::optional<NECActionData> witness;
        if (mode == SearchMode::Pruned) {
            witness = first_admissible(G, plus_parts[cand.plus_index], cand.sig);
        } else {
            for_each_admissible(G, plus_parts[cand.plus_index], cand.sig, [&](const NECActionData& d) {
                if (!witness)
                    witness = d;
                ++outcome.admissible_count;
                return true;
            });
        }
        outcome.realized = witness.has_value();
        if (witness) {
            auto key = detail::witness_key(G, *witness);
            if (!best || std::tie(cand.genus, key) < std::tie(best->first, best->second)) {
                best = std::make_pair(cand.genus, key);
                result.genus = cand.genus;
                result.witness = *witness;
            }
        }
        result.outcomes.push_back(std::move(outcome));
    }
    if (!best)
        throw SearchExhausted("no admissible NEC datum for G_" + std::to_string(n) + " within gamma<=" +
                              std::to_string(gamma_max) + ", r<=" + std::to_string(r_max));
    return result;
}

// ---------------------------------------------------------------------------
// Pseudo-real family

struct PseudoRealCertificate {
    int n = 0;
    int q = 0;
    int l = 0; ///< n (2q - 1)
    NECActionData action;
    long long genus = 0;                   ///< from the NEC genus formula
    long long genus_via_cyclic_cover = 0;  ///< Riemann-Hurwitz through S -> S/<x>
    std::size_t cyclic_cover_cone_points = 0;
    bool long_relation_holds = false;
    std::vector<int> orders_outside_cyclic; ///< orders of the anticonformal elements
    bool no_anticonformal_involution = false;
    std::vector<std::string> assumptions;
};

/// Theta(alpha) = y, Theta(beta_j) = x for j = 1..l, on the projective plane with l cone
/// points of order 2n.
inline PseudoRealCertificate build_pseudo_real(int n, int q)
{
    detail::check_parameter(n);
    if (q < 2)
        throw ParameterError("pseudo-real construction requires q >= 2");
    const DicyclicGroup G(n);
    const int l = n * (2 * q - 1);
    NECActionData data{G, Subgroup(G, {G.x()}), NECSignature{0, std::vector<int>(l, 2 * n)}, {G.y()},
                       std::vector<Element>(l, G.x())};

    PseudoRealCertificate cert{n, q, l, data, 0, 0, 0, false, {}, false, {}};
    if (auto bad = data.violations(); !bad.empty())
        throw InvariantViolation("pseudo-real datum invalid: " + bad.front());
    cert.long_relation_holds = is_identity(data.long_relation());
    cert.genus = nec_genus(n, data.sig);

    const auto cones = data.conformal_cone_images();
    cert.cyclic_cover_cone_points = cones.size();
    OrbifoldSignature quotient{data.sig.gamma, {}};
    for (const auto& c : cones)
        quotient.cone_orders.push_back(order(c));
    cert.genus_via_cyclic_cover = rh_genus(static_cast<long long>(data.plus_part.order()), quotient);
    if (cert.genus != cert.genus_via_cyclic_cover)
        throw InvariantViolation("pseudo-real genus mismatch between the two computations");
    if (cert.genus != static_cast<long long>(l - 1) * (2 * n - 1))
        throw InvariantViolation("pseudo-real genus differs from (l-1)(2n-1)");

    cert.no_anticonformal_involution = true;
    for (const auto& e : G.elements()) {
        if (data.plus_part.contains(e))
            continue;
        cert.orders_outside_cyclic.push_back(order(e));
        if (order(e) == 2)
            cert.no_anticonformal_involution = false;
    }
    cert.assumptions = {
        "Aut(S) = G_n: the signature (0;2n,...,2n) with 2l > 6 cone points is taken to be maximal "
        "(Singerman's list of maximal Fuchsian groups), so no larger group acts"};
    return cert;
}

} // namespace dicyclic
