#pragma once
// Claim reports: each claim is a checked statement with an anchor string, a status and
// supporting data, serialized as JSON with a stable key order.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "dicyclic/dicyclic.hpp"

namespace dicyclic::report {

using Json = nlohmann::ordered_json;

enum class Status { Pass, Fail, Assumed };

inline const char* to_string(Status s)
{
    switch (s) {
    case Status::Pass:
        return "pass";
    case Status::Fail:
        return "fail";
    case Status::Assumed:
        return "assumed";
    }
    return "?";
}

struct Claim {
    std::string id;
    std::string anchor;
    Status status = Status::Fail;
    Json data = Json::object();
};

inline Claim checked(std::string id, std::string anchor, bool ok, Json data = Json::object())
{
    return Claim{std::move(id), std::move(anchor), ok ? Status::Pass : Status::Fail, std::move(data)};
}

inline Claim assumed(std::string id, std::string anchor, Json data = Json::object())
{
    return Claim{std::move(id), std::move(anchor), Status::Assumed, std::move(data)};
}

struct Report {
    std::string command;
    Json params = Json::object();
    std::vector<Claim> claims;

    /// True iff every non-assumed claim passes.
    bool passed() const
    {
        return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.status != Status::Fail; });
    }

    Json to_json() const
    {
        Json out;
        out["command"] = command;
        out["params"] = params;
        out["claims"] = Json::array();
        for (const auto& c : claims) {
            Json j;
            j["id"] = c.id;
            j["anchor"] = c.anchor;
            j["status"] = to_string(c.status);
            j["data"] = c.data;
            out["claims"].push_back(std::move(j));
        }
        out["status"] = passed() ? "pass" : "fail";
        return out;
    }
};

/// {"report": payload, "ms": elapsed}; the timing sits outside the deterministic payload.
inline Json envelope(const Report& r, double ms)
{
    Json out;
    out["report"] = r.to_json();
    out["ms"] = ms;
    return out;
}

// ---------------------------------------------------------------------------
// JSON encodings

inline Json encode(const Element& e) { return to_string(e); }

inline Json encode(const std::vector<Element>& v)
{
    Json out = Json::array();
    for (const auto& e : v)
        out.push_back(encode(e));
    return out;
}

inline Json encode(const OrderType& t) { return Json::array({t[0], t[1], t[2]}); }

inline Json encode(const GeneratingVector& v)
{
    Json out;
    out["signature"] = to_string(v.signature());
    out["hyperbolic"] = encode(v.hyperbolic);
    out["cones"] = encode(v.cones);
    return out;
}

inline Json encode(const NECActionData& d)
{
    Json out;
    out["signature"] = to_string(d.sig);
    out["plus_part"] = encode(d.plus_part.generators());
    out["alpha"] = encode(d.alpha_images);
    out["beta"] = encode(d.beta_images);
    return out;
}

inline Json encode(const ActionCensus& c)
{
    Json out;
    out["n"] = c.n;
    out["generating_pairs"] = c.generating_pairs;
    out["automorphism_group_order"] = c.automorphism_group_order;
    out["ordered"] = Json::array();
    for (const auto& e : c.ordered) {
        Json j;
        j["type"] = encode(e.type);
        j["pairs"] = e.pair_count;
        j["conjugacy_orbits"] = e.conjugacy_orbits;
        j["automorphism_orbits"] = e.automorphism_orbits;
        j["representative"] = encode(e.representative.as_generating_vector());
        out["ordered"].push_back(std::move(j));
    }
    out["unordered"] = Json::array();
    for (const auto& e : c.unordered) {
        Json j;
        j["type"] = encode(e.type);
        j["pairs"] = e.pair_count;
        j["conjugacy_orbits"] = e.conjugacy_orbits;
        j["automorphism_orbits"] = e.automorphism_orbits;
        j["ordered_types"] = Json::array();
        for (const auto& t : e.ordered_types)
            j["ordered_types"].push_back(encode(t));
        out["unordered"].push_back(std::move(j));
    }
    return out;
}

inline Json encode(const curves::WordReport& r)
{
    Json out;
    out["relation"] = r.relation;
    out["max_error"] = r.max_error;
    out["max_residual"] = r.max_residual;
    out["trials"] = r.trials;
    out["rejected"] = r.rejected;
    out["pass"] = r.pass;
    return out;
}

// ---------------------------------------------------------------------------
// Claims

inline Claim census_claim(int n)
{
    const auto census = triangular_census(n);
    std::set<OrderType> want{{2 * n, 4, 4}};
    if (n % 2 == 1)
        want.insert(n > 4 ? OrderType{n, 4, 4} : OrderType{4, 4, n});
    std::set<OrderType> got;
    for (const auto& u : census.unordered)
        got.insert(u.type);
    bool ok = got == want;
    for (const auto& e : census.ordered)
        ok = ok && e.automorphism_orbits == 1;
    return checked("census.types",
                   "triangular types of G_n: (4,4,2n) for every n, (4,4,n) in addition for odd n; "
                   "one action per ordered type up to automorphisms",
                   ok, encode(census));
}

inline Claim genus_claim(int n)
{
    const DicyclicGroup G(n);
    const auto census = triangular_census(n);
    Json data = Json::array();
    bool ok = rh_genus(4LL * n, OrbifoldSignature{0, {4, 4, 2 * n}}) == n;
    if (n % 2 == 1)
        ok = ok && rh_genus(4LL * n, OrbifoldSignature{0, {4, 4, n}}) == n - 1;
    for (const auto& e : census.ordered) {
        const auto& act = e.representative;
        const auto dessin = regular_dessin(act);
        const long long g = act.genus();
        const bool long_cone = std::find(e.type.begin(), e.type.end(), 2 * n) != e.type.end();
        const long long expected = long_cone ? n : n - 1;
        ok = ok && g == expected && dessin.genus() == g && dessin.euler_characteristic() == 2 - 2 * g;
        Json j;
        j["type"] = encode(e.type);
        j["rh_genus"] = g;
        j["dessin_euler_characteristic"] = dessin.euler_characteristic();
        data.push_back(std::move(j));
    }
    return checked("covering.genus",
                   "genus n over (0;4,4,2n) and n-1 over (0;4,4,n); the regular dessin has Euler "
                   "characteristic 2-2g",
                   ok, data);
}

inline Claim fixed_point_claim(int n)
{
    const DicyclicGroup G(n);
    const auto act = case_one_action(G);
    const Element x = G.x(), y = G.y();
    const long long fx = fixed_point_count(act, x);
    const long long fxn = fixed_point_count(act, power(x, n));
    const long long fy = fixed_point_count(act, y);
    const long long fxy = fixed_point_count(act, x * y);
    const auto purity = is_purely_non_free(act);
    Json data;
    data["x"] = fx;
    data["x^n"] = fxn;
    data["y"] = fy;
    data["xy"] = fxy;
    data["purely_non_free"] = purity.purely_non_free;
    return checked("covering.fixed_points.I",
                   "on the genus-n action x, x^n, y, xy fix 2, 2+2n, 2, 2 points and every "
                   "nontrivial element has fixed points",
                   fx == 2 && fxn == 2 + 2 * n && fy == 2 && fxy == 2 && purity.purely_non_free, data);
}

inline Claim free_element_claim(int n)
{
    const DicyclicGroup G(n);
    const auto act = case_two_action(G);
    const auto purity = is_purely_non_free(act);
    std::set<Element> want;
    for (int k = 1; k < 2 * n; k += 2)
        if (k != n)
            want.insert(G.element(k, 0));
    const std::set<Element> got(purity.free_elements.begin(), purity.free_elements.end());
    Json data;
    data["free_elements"] = encode(purity.free_elements);
    return checked("covering.free_elements.II",
                   "on the genus n-1 action the elements without fixed points are exactly x^k, k odd, k != n",
                   got == want, data);
}

inline Claim quotient_genus_claim(int n)
{
    const DicyclicGroup G(n);
    std::vector<TriangularAction> actions{case_one_action(G)};
    if (n % 2 == 1)
        actions.push_back(case_two_action(G));
    std::size_t checked_count = 0;
    Json counterexamples = Json::array();
    for (std::size_t i = 0; i < actions.size(); ++i)
        for (const auto& H : all_subgroups(G)) {
            if (H.is_trivial())
                continue;
            ++checked_count;
            const auto sig = quotient_signature(actions[i], H);
            if (sig.quotient_genus != 0)
                counterexamples.push_back(Json{{"case", i == 0 ? "I" : "II"},
                                               {"subgroup_order", H.order()},
                                               {"generators", encode(H.generators())},
                                               {"quotient_signature", to_string(sig)}});
        }
    Json data;
    data["subgroup_quotients_checked"] = checked_count;
    data["counterexamples"] = counterexamples;
    return checked("covering.quotient_genus", "S/H has genus zero for every nontrivial subgroup H",
                   counterexamples.empty(), data);
}

inline Claim monodromy_claim(int n)
{
    const auto rel = verify_explicit_relations(n);
    Json data;
    data["convention"] = kMonodromyConvention;
    data["group_order"] = rel.group_order;
    data["checks"] = Json::array();
    for (const auto& c : rel.checks)
        data["checks"].push_back(Json{{"name", c.name}, {"holds", c.holds}});
    return checked("monodromy.relations",
                   "eta^{2n} = 1, sigma^{-1} eta sigma = eta^{-1}, eta^n = sigma^2, tau sigma eta = 1 "
                   "(tau sigma eta^2 = 1 for odd n) and |<eta, sigma>| = 4n",
                   rel.all_pass(), data);
}

inline Claim dessin_claim(int n, ActionCase which)
{
    const auto d = explicit_dessin(n, which);
    const auto g = graph_of(d);
    const DicyclicGroup G(n);
    const auto act = which == ActionCase::I ? case_one_action(G) : case_two_action(G);
    Json data;
    data["vertices"] = g.vertex_count();
    data["edges"] = g.edges.size();
    data["genus"] = d.genus();
    data["monodromy_group_order"] = d.monodromy_group_order();
    bool ok = d.genus() == act.genus() && d.monodromy_group_order() == static_cast<std::size_t>(4 * n);
    if (which == ActionCase::I) {
        const bool doubled = is_doubled_cycle(g, 2 * static_cast<std::size_t>(n));
        data["doubled_cycle"] = doubled;
        ok = ok && doubled;
    }
    return checked(std::string("monodromy.dessin.") + to_string(which),
                   which == ActionCase::I
                       ? "the (sigma, tau) dessin has genus n, monodromy group of order 4n and underlying "
                         "graph the doubled 2n-cycle"
                       : "the (sigma, tau) dessin has genus n-1 and monodromy group of order 4n",
                   ok, data);
}

inline Claim cyclic_cover_claim(int n)
{
    Json data = Json::array();
    bool ok = true;
    std::vector<CoverCase> cases{CoverCase::I};
    if (n % 2 == 1)
        cases.push_back(CoverCase::II);
    for (auto which : cases) {
        const auto classes = canonical_classes(n, which);
        const CoverTriple want = which == CoverCase::I ? CoverTriple{n, which, n, 1, 2 * n - 1}
                                                        : CoverTriple{n, which, n, 2, 2 * n - 2};
        const bool here = classes.size() == 1 && classes.front() == want &&
                          branch_orders(classes.front()) == expected_branch_orders(n, which);
        ok = ok && here;
        Json j;
        j["case"] = to_string(which);
        j["class_count"] = classes.size();
        j["classes"] = Json::array();
        for (const auto& c : classes)
            j["classes"].push_back(to_string(c));
        if (which == CoverCase::I)
            j["readings_agree"] = readings_agree(n);
        data.push_back(std::move(j));
    }
    return checked("cyclic_cover.classes",
                   "one cyclic cover v^{2n} = u^a (u-1)^b (u+1)^c per case, represented by (n,1,2n-1) "
                   "and, for odd n, (n,2,2n-2)",
                   ok, data);
}

inline Claim sigma_hyp_claim(int n, int gamma_max = 1, int r_max = 3)
{
    const auto result = sigma_hyp(n, gamma_max, r_max);
    const long long want = n % 2 == 0 ? n + 1 : 2LL * n - 2;
    Json data;
    data["genus"] = result.genus;
    data["expected"] = want;
    data["witness"] = encode(result.witness);
    data["candidates_examined"] = result.candidates_examined;
    return checked("real_forms.sigma_hyp", "sigma^hyp(G_n) = n+1 for even n and 2n-2 for odd n",
                   result.genus == want && result.witness.is_valid(), data);
}

inline Claim even_witness_claim(int n)
{
    const DicyclicGroup G(n);
    const Subgroup H2 = named_index_two_subgroup(G, 2);
    const NECSignature sig{0, {4, 4}};
    const Element x = G.x(), y = G.y();
    const Element b2 = y * power(x, n - 2);
    bool found = false;
    for (const auto& d : admissible_homomorphisms(G, H2, sig))
        found = found || (d.alpha_images == std::vector<Element>{x} && d.beta_images == std::vector<Element>{y, b2});
    Json data;
    data["signature"] = to_string(sig);
    data["alpha"] = encode(std::vector<Element>{x});
    data["beta"] = encode(std::vector<Element>{y, b2});
    data["genus"] = nec_genus(n, sig);
    return checked("real_forms.even_witness",
                   "alpha_1 -> x, beta_1 -> y, beta_2 -> y x^{n-2} is admissible on (0;4,4) with plus part "
                   "<x^2, y>",
                   found, data);
}

inline Claim pseudo_real_claim(int n, int q)
{
    const auto cert = build_pseudo_real(n, q);
    Json data;
    data["l"] = cert.l;
    data["genus"] = cert.genus;
    data["genus_via_cyclic_cover"] = cert.genus_via_cyclic_cover;
    data["action"] = encode(cert.action);
    data["anticonformal_orders"] = cert.orders_outside_cyclic;
    const long long want = static_cast<long long>(cert.l - 1) * (2 * n - 1);
    return checked("real_forms.pseudo_real.q" + std::to_string(q),
                   "l = n(2q-1) cone points of order 2n on the projective plane give genus (l-1)(2n-1) "
                   "with no anticonformal involution",
                   cert.genus == want && cert.genus_via_cyclic_cover == want && cert.long_relation_holds &&
                       cert.no_anticonformal_involution,
                   data);
}

inline Claim pseudo_real_maximality_claim(int n, int q)
{
    const auto cert = build_pseudo_real(n, q);
    Json data;
    data["assumptions"] = cert.assumptions;
    return assumed("real_forms.pseudo_real.maximality.q" + std::to_string(q),
                   "the full automorphism group of the pseudo-real surface is G_n", data);
}

inline Claim strong_genus_claim(int n, long long g_max)
{
    const auto r = strong_symmetric_genus(n, g_max);
    const long long want = n % 2 == 0 ? n : n - 1;
    Json data;
    data["genus"] = r.genus;
    data["expected"] = want;
    data["signature"] = to_string(r.signature.signature());
    data["witness"] = encode(r.witness);
    return checked("genus_search.strong", "sigma^0(G_n) = n for even n and n-1 for odd n",
                   r.genus == want && r.witness.is_valid(), data);
}

inline Claim pure_genus_claim(int n, long long g_max)
{
    const auto r = pure_symmetric_genus(n, g_max);
    Json data;
    data["genus"] = r.genus;
    data["expected"] = n;
    data["signature"] = to_string(r.signature.signature());
    data["witness"] = encode(r.witness);
    const bool oracle_agrees = is_purely_non_free(r.witness).purely_non_free;
    data["fixed_point_cross_check"] = oracle_agrees;
    return checked("genus_search.pure", "sigma_p(G_n) = n", r.genus == n && r.witness.is_valid() && oracle_agrees,
                   data);
}

inline Claim excluded_genera_claim(int n)
{
    const auto sphere = sphere_exclusion(n);
    const auto torus = torus_exclusion(n);
    Json data;
    data["sphere_signatures_checked"] = signature_candidates(n, 0).size();
    data["torus_signatures_checked"] = torus_signatures().size();
    data["realized"] = Json::array();
    for (const auto& c : sphere)
        data["realized"].push_back(to_string(c.signature()));
    for (const auto& c : torus)
        data["realized"].push_back(to_string(c.signature()));
    return checked("genus_search.excluded_genera", "G_n acts conformally on no sphere and no torus",
                   sphere.empty() && torus.empty(), data);
}

struct CurveSettings {
    std::uint64_t seed = 1;
    std::size_t trials = 100;
    double tolerance = curves::kRelationTolerance;
};

inline Claim curve_claim(curves::ModelName model, int n, const CurveSettings& s)
{
    const curves::CurveModel M(model, n);
    const auto reports = curves::verify_all(M, s.tolerance, s.trials, s.seed);
    Json data;
    data["seed"] = s.seed;
    data["trials"] = s.trials;
    data["tolerance"] = s.tolerance;
    data["reports"] = Json::array();
    for (const auto& r : reports)
        data["reports"].push_back(encode(r));
    if (model == curves::ModelName::SnCyclic && n % 2 == 1) {
        const curves::CurveModel printed(model, n, curves::ModelOptions{{}, true});
        const auto y_report =
            curves::verify_word(printed, {"y preserves the curve", {{"y", 1}}, {{"y", 1}}}, s.tolerance, s.trials, s.seed);
        data["uncorrected_y_preserves_curve"] = y_report.pass;
    }
    return checked("curves." + curves::to_string(model),
                   "the listed maps preserve the curve and satisfy the dicyclic relations; on the "
                   "hyperelliptic models pi is invariant and conjugation inverts u and y",
                   curves::all_pass(reports), data);
}

/// Perturbs each map coefficient by 1e-2 and requires every perturbed suite to fail.
inline Claim curve_sensitivity_claim(curves::ModelName model, int n, const CurveSettings& s)
{
    const curves::CurveModel base(model, n);
    Json data = Json::array();
    bool ok = true;
    for (const auto& name : curves::perturbable_maps(base)) {
        const curves::CurveModel M(model, n, curves::ModelOptions{curves::Perturbation{name, 1e-2}, false});
        double worst = 0.0;
        for (const auto& r : curves::verify_all(M, s.tolerance, s.trials, s.seed))
            worst = std::max(worst, r.max_error);
        const bool detected = worst > curves::kSensitivityThreshold;
        ok = ok && detected;
        data.push_back(Json{{"map", name}, {"max_error", worst}, {"detected", detected}});
    }
    return checked("curves." + curves::to_string(model) + ".sensitivity",
                   "perturbing any single coefficient by 1e-2 breaks some checked relation", ok, data);
}

/// Everything checkable at a given n.
inline std::vector<Claim> all_claims(int n, const CurveSettings& curve_settings)
{
    std::vector<Claim> out;
    out.push_back(census_claim(n));
    out.push_back(genus_claim(n));
    out.push_back(fixed_point_claim(n));
    if (n % 2 == 1)
        out.push_back(free_element_claim(n));
    out.push_back(quotient_genus_claim(n));
    out.push_back(monodromy_claim(n));
    out.push_back(dessin_claim(n, ActionCase::I));
    if (n % 2 == 1)
        out.push_back(dessin_claim(n, ActionCase::II));
    out.push_back(cyclic_cover_claim(n));
    out.push_back(sigma_hyp_claim(n));
    if (n % 2 == 0)
        out.push_back(even_witness_claim(n));
    for (int q : {2, 3}) {
        out.push_back(pseudo_real_claim(n, q));
        out.push_back(pseudo_real_maximality_claim(n, q));
    }
    out.push_back(strong_genus_claim(n, 4LL * n));
    out.push_back(pure_genus_claim(n, 4LL * n));
    out.push_back(excluded_genera_claim(n));
    for (auto model : {curves::ModelName::SnHyperelliptic, curves::ModelName::RnHyperelliptic,
                       curves::ModelName::SnCyclic, curves::ModelName::RnCyclic}) {
        if (!curves::model_applies(model, n))
            continue;
        out.push_back(curve_claim(model, n, curve_settings));
        out.push_back(curve_sensitivity_claim(model, n, curve_settings));
    }
    if (n == 2)
        out.push_back(assumed("curves.Sn_hyperelliptic.full_group",
                              "Aut+(S_2) = <u, y, t> has order 48 (only the relations of u, y, t are checked)"));
    if (n == 3)
        out.push_back(assumed("curves.Rn_hyperelliptic.full_group",
                              "<u, y> is the full conformal group of R_3 (only its relations are checked)"));
    return out;
}

} // namespace dicyclic::report
