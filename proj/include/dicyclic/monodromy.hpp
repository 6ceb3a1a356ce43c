#pragma once
// Permutation monodromy of regular dessins with automorphism group G_n.
//
// Convention: white = c1, black = c2, face = c3 with white * black * face = 1,
// products composing as functions. The explicit pair (eta, sigma) on 4n points is
// mapped onto this convention with sigma as white and tau as black.

#include <cstddef>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "dicyclic/covering.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/permutation.hpp"

namespace dicyclic {

inline constexpr const char* kMonodromyConvention =
    "white=c1, black=c2, face=c3 with white*black*face=1, (p*q)(i)=p(q(i)); "
    "explicit pair: white=sigma, black=tau";

struct ExplicitPermutations {
    Permutation eta;   ///< (1,...,2n)(2n+1,...,4n)
    Permutation sigma; ///< prod_{k=1}^{n} (k, 4n+1-k, n+k, 3n+1-k)
};

inline ExplicitPermutations build_explicit_permutations(int n)
{
    detail::check_parameter(n);
    const std::size_t N = static_cast<std::size_t>(4 * n);
    const std::size_t m = static_cast<std::size_t>(n);
    std::vector<std::size_t> first, second;
    for (std::size_t k = 1; k <= 2 * m; ++k) {
        first.push_back(k);
        second.push_back(2 * m + k);
    }
    std::vector<std::vector<std::size_t>> sigma_cycles;
    for (std::size_t k = 1; k <= m; ++k)
        sigma_cycles.push_back({k, 4 * m + 1 - k, m + k, 3 * m + 1 - k});
    return ExplicitPermutations{Permutation::from_cycles(N, {first, second}),
                              Permutation::from_cycles(N, sigma_cycles)};
}

enum class ActionCase { I, II };

inline const char* to_string(ActionCase c) { return c == ActionCase::I ? "I" : "II"; }

/// tau = sigma^3 eta (case I) or eta^{n-2} sigma (case II, n odd).
inline Permutation explicit_tau(int n, ActionCase which)
{
    const auto p = build_explicit_permutations(n);
    if (which == ActionCase::I)
        return p.sigma.pow(3) * p.eta;
    if (n % 2 == 0 || n < 3)
        throw DomainError("case II requires odd n >= 3");
    return p.eta.pow(n - 2) * p.sigma;
}

struct RelationCheck {
    std::string name;
    bool holds = false;
};

struct RelationReport {
    int n = 0;
    std::size_t group_order = 0;
    std::vector<RelationCheck> checks;

    bool all_pass() const
    {
        for (const auto& c : checks)
            if (!c.holds)
                return false;
        return true;
    }

    std::vector<std::string> failures() const
    {
        std::vector<std::string> out;
        for (const auto& c : checks)
            if (!c.holds)
                out.push_back(c.name);
        return out;
    }
};

/// Checks the identities satisfied by eta and sigma, the order of <eta, sigma>,
/// and the relations of the two tau constructions.
inline RelationReport verify_explicit_relations(int n)
{
    const auto [eta, sigma] = build_explicit_permutations(n);
    const std::size_t N = eta.degree();
    const std::size_t m = static_cast<std::size_t>(n);
    const Permutation id(N);
    RelationReport report;
    report.n = n;

    std::vector<std::vector<std::size_t>> transpositions;
    for (std::size_t k = 1; k <= m; ++k) {
        transpositions.push_back({k, m + k});
        transpositions.push_back({2 * m + k, 3 * m + k});
    }
    const Permutation eta_n_expected = Permutation::from_cycles(N, transpositions);
    const Permutation eta_n = eta.pow(n);

    auto add = [&](std::string name, bool holds) { report.checks.push_back({std::move(name), holds}); };
    add("eta^(2n) = 1", eta.pow(2LL * n) == id);
    add("sigma^-1 eta sigma = eta^-1", sigma.inverse() * eta * sigma == eta.inverse());
    add("eta^n = prod (k,n+k)(2n+k,3n+k)", eta_n == eta_n_expected);
    add("eta^n = sigma^2", eta_n == sigma.pow(2));

    report.group_order = generated_group({eta, sigma}).size();
    add("|<eta,sigma>| = 4n", report.group_order == N);

    const Permutation tau1 = explicit_tau(n, ActionCase::I);
    add("tau = sigma^3 eta: tau sigma eta = 1", tau1 * sigma * eta == id);
    if (n % 2 == 1 && n >= 3) {
        const Permutation tau2 = explicit_tau(n, ActionCase::II);
        add("tau = eta^(n-2) sigma: tau sigma eta^2 = 1", tau2 * sigma * eta.pow(2) == id);
        std::vector<std::vector<std::size_t>> cycles(4);
        for (std::size_t k = 1; k <= 2 * m; k += 2) {
            cycles[0].push_back(k);
            cycles[1].push_back(k + 1);
            cycles[2].push_back(2 * m + k);
            cycles[3].push_back(2 * m + k + 1);
        }
        add("eta^2 = (1,3,...,2n-1)(2,4,...,2n)(2n+1,...,4n-1)(2n+2,...,4n)",
            eta.pow(2) == Permutation::from_cycles(N, cycles));
    }
    return report;
}

/// Monodromy (white, black) of a dessin on edge_count() edges, with face = (white*black)^{-1}.
class DessinMonodromy {
public:
    DessinMonodromy(Permutation white, Permutation black)
        : white_(std::move(white)), black_(std::move(black)), face_((white_ * black_).inverse())
    {
        if (!is_transitive({white_, black_}, white_.degree()))
            throw ParameterError("monodromy group is not transitive: the dessin is disconnected");
    }

    std::size_t edge_count() const { return white_.degree(); }
    const Permutation& white() const { return white_; }
    const Permutation& black() const { return black_; }
    const Permutation& face() const { return face_; }

    long long euler_characteristic() const
    {
        return static_cast<long long>(white_.cycle_count() + black_.cycle_count() + face_.cycle_count()) -
               static_cast<long long>(edge_count());
    }

    long long genus() const { return (2 - euler_characteristic()) / 2; }

    std::size_t monodromy_group_order() const { return generated_group({white_, black_}).size(); }

    /// Number of permutations commuting with both white and black.
    std::size_t automorphism_count() const
    {
        const std::size_t N = edge_count();
        if (N == 0)
            return 1;
        // BFS tree from point 0: each point reached as g(parent) for a generator g
        std::vector<std::pair<std::size_t, const Permutation*>> parent(N, {N, nullptr});
        std::vector<std::size_t> order{0};
        std::vector<bool> seen(N, false);
        seen[0] = true;
        const Permutation* gens[] = {&white_, &black_};
        for (std::size_t head = 0; head < order.size(); ++head)
            for (const Permutation* g : gens) {
                const std::size_t next = (*g)[order[head]];
                if (!seen[next]) {
                    seen[next] = true;
                    parent[next] = {order[head], g};
                    order.push_back(next);
                }
            }
        std::size_t count = 0;
        for (std::size_t target = 0; target < N; ++target) {
            std::vector<std::size_t> map(N, N);
            map[0] = target;
            for (std::size_t k = 1; k < order.size(); ++k) {
                const auto [from, g] = parent[order[k]];
                map[order[k]] = (*g)[map[from]];
            }
            bool ok = true;
            for (std::size_t p = 0; p < N && ok; ++p)
                ok = map[white_[p]] == white_[map[p]] && map[black_[p]] == black_[map[p]];
            if (ok)
                ++count;
        }
        return count;
    }

private:
    Permutation white_;
    Permutation black_;
    Permutation face_;
};

/// The regular dessin of an action: edges are group elements (point = index + 1),
/// white and black act by left multiplication with c1 and c2.
inline DessinMonodromy regular_dessin(const TriangularAction& act)
{
    const DicyclicGroup& G = act.group();
    auto left_mult = [&](const Element& c) {
        const std::size_t ci = G.index(c);
        std::vector<std::size_t> images(G.size());
        for (std::size_t e = 0; e < G.size(); ++e)
            images[e] = G.mul(ci, e);
        return Permutation::from_images(std::move(images));
    };
    return DessinMonodromy(left_mult(act.c(0)), left_mult(act.c(1)));
}

/// The dessin with white = sigma and black = tau from the explicit permutations.
inline DessinMonodromy explicit_dessin(int n, ActionCase which)
{
    const auto p = build_explicit_permutations(n);
    return DessinMonodromy(p.sigma, explicit_tau(n, which));
}

/// Bipartite multigraph of a dessin: white vertices are cycles of white, black vertices
/// cycles of black, and each edge (point) joins its white cycle to its black cycle.
struct BipartiteMapGraph {
    std::size_t white_count = 0;
    std::size_t black_count = 0;
    std::vector<std::pair<std::size_t, std::size_t>> edges; ///< (white vertex, black vertex)

    std::size_t vertex_count() const { return white_count + black_count; }

    std::vector<std::size_t> white_degrees() const
    {
        std::vector<std::size_t> d(white_count, 0);
        for (const auto& e : edges)
            ++d[e.first];
        return d;
    }

    std::vector<std::size_t> black_degrees() const
    {
        std::vector<std::size_t> d(black_count, 0);
        for (const auto& e : edges)
            ++d[e.second];
        return d;
    }
};

inline BipartiteMapGraph graph_of(const DessinMonodromy& d)
{
    auto cycle_labels = [](const Permutation& p) {
        std::vector<std::size_t> label(p.degree());
        const auto cycles = p.cycles();
        for (std::size_t c = 0; c < cycles.size(); ++c)
            for (auto point : cycles[c])
                label[point - 1] = c;
        return std::make_pair(label, cycles.size());
    };
    const auto [white_label, white_count] = cycle_labels(d.white());
    const auto [black_label, black_count] = cycle_labels(d.black());
    BipartiteMapGraph g;
    g.white_count = white_count;
    g.black_count = black_count;
    for (std::size_t p = 0; p < d.edge_count(); ++p)
        g.edges.emplace_back(white_label[p], black_label[p]);
    return g;
}

// Multigraph isomorphism by backtracking with degree pruning.

using AdjacencyMatrix = std::vector<std::vector<std::size_t>>;

inline AdjacencyMatrix adjacency(const BipartiteMapGraph& g)
{
    const std::size_t V = g.vertex_count();
    AdjacencyMatrix A(V, std::vector<std::size_t>(V, 0));
    for (const auto& [w, b] : g.edges) {
        ++A[w][g.white_count + b];
        ++A[g.white_count + b][w];
    }
    return A;
}

/// The cycle on m vertices with every edge doubled.
inline AdjacencyMatrix doubled_cycle(std::size_t m)
{
    AdjacencyMatrix A(m, std::vector<std::size_t>(m, 0));
    if (m < 2)
        return A;
    for (std::size_t i = 0; i < m; ++i) {
        const std::size_t j = (i + 1) % m;
        A[i][j] += 2;
        A[j][i] += 2;
    }
    return A;
}

namespace detail {

inline std::vector<std::size_t> degrees(const AdjacencyMatrix& A)
{
    std::vector<std::size_t> d(A.size(), 0);
    for (std::size_t i = 0; i < A.size(); ++i)
        for (std::size_t j = 0; j < A.size(); ++j)
            d[i] += (i == j ? 2 : 1) * A[i][j];
    return d;
}

inline bool extend_isomorphism(const AdjacencyMatrix& A, const AdjacencyMatrix& B,
                               const std::vector<std::size_t>& deg_a, const std::vector<std::size_t>& deg_b,
                               std::vector<std::size_t>& map, std::vector<bool>& used, std::size_t next)
{
    const std::size_t V = A.size();
    if (next == V)
        return true;
    for (std::size_t cand = 0; cand < V; ++cand) {
        if (used[cand] || deg_a[next] != deg_b[cand])
            continue;
        bool ok = A[next][next] == B[cand][cand];
        for (std::size_t prev = 0; prev < next && ok; ++prev)
            ok = A[next][prev] == B[cand][map[prev]];
        if (!ok)
            continue;
        map[next] = cand;
        used[cand] = true;
        if (extend_isomorphism(A, B, deg_a, deg_b, map, used, next + 1))
            return true;
        used[cand] = false;
    }
    return false;
}

} // namespace detail

inline bool are_isomorphic(const AdjacencyMatrix& A, const AdjacencyMatrix& B)
{
    if (A.size() != B.size())
        return false;
    auto deg_a = detail::degrees(A);
    auto deg_b = detail::degrees(B);
    {
        auto sa = deg_a, sb = deg_b;
        std::sort(sa.begin(), sa.end());
        std::sort(sb.begin(), sb.end());
        if (sa != sb)
            return false;
    }
    std::vector<std::size_t> map(A.size(), 0);
    std::vector<bool> used(A.size(), false);
    return detail::extend_isomorphism(A, B, deg_a, deg_b, map, used, 0);
}

inline bool is_doubled_cycle(const BipartiteMapGraph& g, std::size_t m)
{
    if (m < 2 || g.vertex_count() != m)
        return false;
    return are_isomorphic(doubled_cycle(m), adjacency(g));
}

/// Graphviz DOT text: white vertices w1.., black vertices b1.., one edge per point in point order.
inline std::string export_dot(const BipartiteMapGraph& g)
{
    std::ostringstream os;
    os << "graph dessin {\n";
    for (std::size_t w = 0; w < g.white_count; ++w)
        os << "  w" << w + 1 << " [shape=circle, style=filled, fillcolor=white];\n";
    for (std::size_t b = 0; b < g.black_count; ++b)
        os << "  b" << b + 1 << " [shape=circle, style=filled, fillcolor=black];\n";
    for (std::size_t e = 0; e < g.edges.size(); ++e)
        os << "  w" << g.edges[e].first + 1 << " -- b" << g.edges[e].second + 1 << " [label=\"" << e + 1
           << "\"];\n";
    os << "}\n";
    return os.str();
}

inline std::string export_dot(const DessinMonodromy& d) { return export_dot(graph_of(d)); }

} // namespace dicyclic
