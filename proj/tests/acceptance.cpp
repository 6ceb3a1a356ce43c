// Acceptance gate: one PASS/FAIL line per criterion.
// Exit status is 0 when every criterion passes except those listed in kKnownDiscrepancies,
// which are still printed as FAIL. Pass --strict to make any failure fatal.

#include <chrono>
#include <cstring>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "dicyclic/cli.hpp"
#include "dicyclic/dicyclic.hpp"

using namespace dicyclic;
namespace fs = std::filesystem;

namespace {

// Criterion 4 asks for genus-zero quotients under every nontrivial subgroup. In case I an
// odd-order subgroup <x^{2n/d}> fixes only the two points over 0 and infinity, so S/H has
// genus n/d. The statement holds exactly when n is a power of two.
const std::set<int> kKnownDiscrepancies{4};

struct Outcome {
    bool pass = true;
    std::string detail;

    void require(bool ok, const std::string& what)
    {
        if (!ok && pass)
            detail = what;
        pass = pass && ok;
    }
};

double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

Outcome census()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 10; ++n) {
        const auto c = triangular_census(n);
        std::set<OrderType> want{{2 * n, 4, 4}};
        if (n % 2 == 1)
            want.insert(n > 4 ? OrderType{n, 4, 4} : OrderType{4, 4, n});
        std::set<OrderType> got;
        for (const auto& u : c.unordered)
            got.insert(u.type);
        o.require(got == want, "unordered types differ at n=" + std::to_string(n));
        for (const auto& e : c.ordered)
            o.require(e.automorphism_orbits == 1, "more than one Aut-orbit at n=" + std::to_string(n));
    }
    const double s = seconds_since(t0);
    o.require(s < 10.0, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "n=2..10 in " + std::to_string(s) + " s";
    return o;
}

Outcome genera()
{
    Outcome o;
    for (int n = 2; n <= 10; ++n) {
        o.require(rh_genus(4LL * n, {0, {4, 4, 2 * n}}) == n, "genus (0;4,4,2n) at n=" + std::to_string(n));
        o.require(rh_genus(4LL * n, {0, {4, 4, n}}) == n - 1, "genus (0;4,4,n) at n=" + std::to_string(n));
        for (const auto& e : triangular_census(n).ordered) {
            const auto d = regular_dessin(e.representative);
            o.require(d.euler_characteristic() == 2 - 2 * e.representative.genus(),
                      "dessin Euler characteristic at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome fixed_points()
{
    Outcome o;
    for (int n = 2; n <= 10; ++n) {
        const DicyclicGroup G(n);
        const auto act = case_one_action(G);
        const Element x = G.x(), y = G.y();
        o.require(fixed_point_count(act, x) == 2 && fixed_point_count(act, power(x, n)) == 2 + 2 * n &&
                      fixed_point_count(act, y) == 2 && fixed_point_count(act, x * y) == 2,
                  "case I counts at n=" + std::to_string(n));
        if (n % 2 == 1) {
            std::set<Element> want;
            for (int k = 1; k < 2 * n; k += 2)
                if (k != n)
                    want.insert(G.element(k, 0));
            const auto free = is_purely_non_free(case_two_action(G)).free_elements;
            o.require(std::set<Element>(free.begin(), free.end()) == want,
                      "case II free elements at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome quotient_genera()
{
    Outcome o;
    std::string bad;
    for (int n = 2; n <= 10; ++n) {
        const DicyclicGroup G(n);
        std::vector<TriangularAction> actions{case_one_action(G)};
        if (n % 2 == 1)
            actions.push_back(case_two_action(G));
        for (std::size_t i = 0; i < actions.size(); ++i)
            for (const auto& H : all_subgroups(G)) {
                if (H.is_trivial())
                    continue;
                const auto g = quotient_genus(actions[i], H);
                if (g != 0 && bad.size() < 200)
                    bad += " n=" + std::to_string(n) + (i == 0 ? " I" : " II") + " |H|=" + std::to_string(H.order()) +
                           " genus " + std::to_string(g) + ";";
                o.pass = o.pass && g == 0;
            }
    }
    o.detail = o.pass ? "all quotients are spheres" : "counterexamples:" + bad;
    return o;
}

Outcome explicit_pair()
{
    Outcome o;
    for (int n = 2; n <= 50; ++n) {
        const auto r = verify_explicit_relations(n);
        o.require(r.all_pass(), "relation fails at n=" + std::to_string(n));
        o.require(r.group_order == static_cast<std::size_t>(4 * n), "group order at n=" + std::to_string(n));
    }
    for (int n = 2; n <= 6; ++n)
        o.require(is_doubled_cycle(graph_of(explicit_dessin(n, ActionCase::I)), 2 * static_cast<std::size_t>(n)),
                  "doubled cycle at n=" + std::to_string(n));
    return o;
}

Outcome cyclic_covers()
{
    Outcome o;
    for (int n = 2; n <= 12; ++n) {
        const auto one = canonical_classes(n, CoverCase::I);
        o.require(one.size() == 1 && one.front().exponents() == std::array<int, 3>{n, 1, 2 * n - 1},
                  "case I at n=" + std::to_string(n));
        if (n % 2 == 1) {
            const auto two = canonical_classes(n, CoverCase::II);
            o.require(two.size() == 1 && two.front().exponents() == std::array<int, 3>{n, 2, 2 * n - 2},
                      "case II at n=" + std::to_string(n));
        }
    }
    return o;
}

Outcome sigma_hyp_values()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n : {2, 3, 4, 5, 6, 7, 8}) {
        const auto r = sigma_hyp(n);
        const long long want = n % 2 == 0 ? n + 1 : 2 * n - 2;
        o.require(r.genus == want, "sigma_hyp at n=" + std::to_string(n) + " is " + std::to_string(r.genus));
        o.require(r.witness.is_valid(), "invalid witness at n=" + std::to_string(n));
        if (n % 2 == 0) {
            const DicyclicGroup G(n);
            const auto family = admissible_homomorphisms(G, named_index_two_subgroup(G, 2), {0, {4, 4}});
            const std::vector<Element> beta{G.y(), G.y() * power(G.x(), n - 2)};
            const bool found = std::any_of(family.begin(), family.end(), [&](const NECActionData& d) {
                return d.alpha_images == std::vector<Element>{G.x()} && d.beta_images == beta;
            });
            o.require(found, "(x, y, yx^{n-2}) missing at n=" + std::to_string(n));
        }
    }
    const double s = seconds_since(t0);
    o.require(s < 60.0, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "n=2..8 in " + std::to_string(s) + " s";
    return o;
}

Outcome pseudo_real()
{
    Outcome o;
    for (int n : {2, 3, 4})
        for (int q : {2, 3}) {
            const auto c = build_pseudo_real(n, q);
            const std::string at = " at (n,q)=(" + std::to_string(n) + "," + std::to_string(q) + ")";
            o.require(c.genus == static_cast<long long>(c.l - 1) * (2 * n - 1), "genus" + at);
            o.require(c.genus == c.genus_via_cyclic_cover, "genus computations disagree" + at);
            o.require(c.no_anticonformal_involution, "anticonformal involution" + at);
            o.require(c.long_relation_holds, "long relation" + at);
        }
    return o;
}

Outcome genus_searches()
{
    Outcome o;
    const auto t0 = std::chrono::steady_clock::now();
    for (int n = 2; n <= 5; ++n) {
        o.require(strong_symmetric_genus(n, 4 * n).genus == (n % 2 == 0 ? n : n - 1),
                  "strong genus at n=" + std::to_string(n));
        o.require(pure_symmetric_genus(n, 4 * n).genus == n, "pure genus at n=" + std::to_string(n));
        o.require(torus_exclusion(n).empty(), "torus action at n=" + std::to_string(n));
    }
    const double s = seconds_since(t0);
    o.require(s < 120.0, "took " + std::to_string(s) + " s");
    if (o.pass)
        o.detail = "n=2..5 in " + std::to_string(s) + " s";
    return o;
}

Outcome curve_models()
{
    using namespace curves;
    Outcome o;
    std::size_t suites = 0, controls = 0;
    for (int n = 2; n <= 8; ++n)
        for (auto m : {ModelName::SnHyperelliptic, ModelName::RnHyperelliptic, ModelName::SnCyclic, ModelName::RnCyclic}) {
            if (!model_applies(m, n))
                continue;
            const std::string at = to_string(m) + " n=" + std::to_string(n);
            const CurveModel model(m, n);
            for (const auto& r : verify_all(model, 1e-9, 100, 1)) {
                ++suites;
                o.require(r.pass, r.relation + " on " + at);
            }
            for (const auto& name : perturbable_maps(model)) {
                const CurveModel bent(m, n, ModelOptions{Perturbation{name, 1e-2}, false});
                double worst = 0;
                for (const auto& r : verify_all(bent, 1e-9, 100, 1))
                    worst = std::max(worst, r.max_error);
                ++controls;
                o.require(worst > kSensitivityThreshold, "perturbing " + name + " undetected on " + at);
            }
        }
    o.require(all_pass(verify_extra_automorphism(CurveModel(ModelName::SnHyperelliptic, 2))), "t^3 on S_2");
    if (o.pass)
        o.detail = std::to_string(suites) + " reports pass, " + std::to_string(controls) + " perturbations detected";
    return o;
}

Outcome determinism()
{
    Outcome o;
    std::vector<std::string> payloads[2];
    for (int run = 0; run < 2; ++run) {
        const auto dir = fs::temp_directory_path() / ("dicyclic_acceptance_" + std::to_string(run));
        fs::remove_all(dir);
        std::ostringstream out, err;
        cli::run_cli({"paper-report", "--n-range", "2..6", "--out", dir.string(), "--seed", "1"}, out, err);
        for (int n = 2; n <= 6; ++n) {
            std::ifstream f(dir / ("n" + std::to_string(n) + ".json"));
            if (!f) {
                o.require(false, "missing report for n=" + std::to_string(n));
                return o;
            }
            payloads[run].push_back(nlohmann::ordered_json::parse(f)["report"].dump());
        }
    }
    o.require(payloads[0] == payloads[1], "payloads differ between runs");
    if (o.pass)
        o.detail = "5 payloads byte-identical";
    return o;
}

} // namespace

int main(int argc, char** argv)
{
    const bool strict = argc > 1 && std::strcmp(argv[1], "--strict") == 0;
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"census counts", census},
        {"genera and dessin Euler characteristic", genera},
        {"fixed points and free elements", fixed_points},
        {"quotient genera are zero", quotient_genera},
        {"permutation identities, group order, doubled cycle", explicit_pair},
        {"cyclic-cover classes", cyclic_covers},
        {"hyperbolic genus with witnesses", sigma_hyp_values},
        {"pseudo-real certificates", pseudo_real},
        {"strong and pure symmetric genus, torus exclusion", genus_searches},
        {"curve models and perturbation control", curve_models},
        {"paper-report determinism", determinism},
    };
    int unexpected = 0, passed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const int k = static_cast<int>(i) + 1;
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = Outcome{false, std::string("exception: ") + e.what()};
        }
        const bool known = kKnownDiscrepancies.count(k) > 0;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << k << ": " << criteria[i].first;
        if (!o.detail.empty())
            std::cout << " (" << o.detail << ")";
        if (!o.pass && known)
            std::cout << " [known discrepancy, see README]";
        std::cout << "\n";
        passed += o.pass;
        if (!o.pass && (strict || !known))
            ++unexpected;
    }
    std::cout << passed << "/" << criteria.size() << " criteria pass\n";
    return unexpected == 0 ? 0 : 1;
}
