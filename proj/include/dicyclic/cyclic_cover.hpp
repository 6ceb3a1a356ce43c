#pragma once
// Exponent triples (a, b, c) of cyclic covers v^{2n} = u^a (u-1)^b (u+1)^c branched over
// {0, 1, -1, infinity}, classified up to unit scaling mod 2n and swapping b with c.

#include <algorithm>
#include <array>
#include <numeric>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dicyclic/errors.hpp"
#include "dicyclic/group.hpp"
#include "dicyclic/monodromy.hpp"

namespace dicyclic {

/// Case I: branch order 2n over u = +-1. Case II (n odd): branch order n over u = +-1.
using CoverCase = ActionCase;

/// How the condition on b and c is read in case I.
///  - BranchOrder: gcd(b, 2n) = gcd(c, 2n) = 1, i.e. branch order 2n over +-1.
///  - AsPrinted:   gcd(b, n) = gcd(c, n) = 1.
/// The two agree for even n.
enum class ConditionReading { BranchOrder, AsPrinted };

struct CoverTriple {
    int n = 2;
    CoverCase cover_case = CoverCase::I;
    int a = 0;
    int b = 0;
    int c = 0;

    std::array<int, 3> exponents() const { return {a, b, c}; }

    bool operator==(const CoverTriple&) const = default;
};

inline std::string to_string(const CoverTriple& t)
{
    return "(" + std::to_string(t.a) + "," + std::to_string(t.b) + "," + std::to_string(t.c) + ")";
}

/// Branch orders of u over 0, 1, -1, infinity.
inline std::array<int, 4> branch_orders(const CoverTriple& t)
{
    const int two_n = 2 * t.n;
    auto ord = [&](int e) { return two_n / std::gcd(detail::mod(e, two_n), two_n); };
    return {ord(t.a), ord(t.b), ord(t.c), ord(t.a + t.b + t.c)};
}

namespace detail {

inline void check_cover_domain(int n, CoverCase which)
{
    check_parameter(n);
    if (which == CoverCase::II && n % 2 == 0)
        throw DomainError("case II cyclic covers require odd n");
}

inline bool satisfies(int n, CoverCase which, ConditionReading reading, int a, int b, int c)
{
    const int two_n = 2 * n;
    if (which == CoverCase::I) {
        const int modulus = reading == ConditionReading::BranchOrder ? two_n : n;
        if (std::gcd(b, modulus) != 1 || std::gcd(c, modulus) != 1)
            return false;
    } else {
        if (std::gcd(two_n, b) != 2 || std::gcd(two_n, c) != 2)
            return false;
    }
    return std::gcd(a, two_n) == n && std::gcd(a + b + c, two_n) == n && (b + c) % two_n == 0;
}

} // namespace detail

/// All triples with a, b, c in {1, ..., 2n-1} meeting the conditions of the given case.
inline std::vector<CoverTriple> admissible_triples(int n, CoverCase which,
                                                   ConditionReading reading = ConditionReading::BranchOrder)
{
    detail::check_cover_domain(n, which);
    std::vector<CoverTriple> out;
    for (int a = 1; a < 2 * n; ++a)
        for (int b = 1; b < 2 * n; ++b)
            for (int c = 1; c < 2 * n; ++c)
                if (detail::satisfies(n, which, reading, a, b, c))
                    out.push_back(CoverTriple{n, which, a, b, c});
    return out;
}

inline bool is_admissible(const CoverTriple& t, ConditionReading reading = ConditionReading::BranchOrder)
{
    const int two_n = 2 * t.n;
    auto in_range = [&](int e) { return e >= 1 && e < two_n; };
    return in_range(t.a) && in_range(t.b) && in_range(t.c) &&
           detail::satisfies(t.n, t.cover_case, reading, t.a, t.b, t.c);
}

/// Orbit of t under (a,b,c) -> (alpha a, alpha b, alpha c) mod 2n for units alpha,
/// and under b <-> c.
inline std::set<std::array<int, 3>> triple_orbit(const CoverTriple& t)
{
    const int two_n = 2 * t.n;
    std::set<std::array<int, 3>> orbit;
    for (int alpha = 1; alpha < two_n; ++alpha) {
        if (std::gcd(alpha, two_n) != 1)
            continue;
        const int a = detail::mod(1LL * alpha * t.a, two_n);
        const int b = detail::mod(1LL * alpha * t.b, two_n);
        const int c = detail::mod(1LL * alpha * t.c, two_n);
        orbit.insert({a, b, c});
        orbit.insert({a, c, b});
    }
    return orbit;
}

struct NormalizedTriple {
    CoverTriple canonical;
    std::size_t orbit_size = 0;
};

/// Lexicographically least member of the orbit.
inline NormalizedTriple normalize(const CoverTriple& t)
{
    const auto orbit = triple_orbit(t);
    const auto& least = *orbit.begin();
    return NormalizedTriple{CoverTriple{t.n, t.cover_case, least[0], least[1], least[2]}, orbit.size()};
}

inline std::vector<CoverTriple> canonical_classes(int n, CoverCase which,
                                                  ConditionReading reading = ConditionReading::BranchOrder)
{
    std::vector<CoverTriple> classes;
    for (const auto& t : admissible_triples(n, which, reading)) {
        auto canon = normalize(t).canonical;
        if (std::find(classes.begin(), classes.end(), canon) == classes.end())
            classes.push_back(canon);
    }
    return classes;
}

inline std::size_t class_count(int n, CoverCase which, ConditionReading reading = ConditionReading::BranchOrder)
{
    return canonical_classes(n, which, reading).size();
}

/// Whether both readings of the case I condition select the same triples.
inline bool readings_agree(int n)
{
    return admissible_triples(n, CoverCase::I, ConditionReading::BranchOrder) ==
           admissible_triples(n, CoverCase::I, ConditionReading::AsPrinted);
}

/// Expected branch orders (over 0, 1, -1, infinity) for each case.
inline std::array<int, 4> expected_branch_orders(int n, CoverCase which)
{
    return which == CoverCase::I ? std::array<int, 4>{2, 2 * n, 2 * n, 2} : std::array<int, 4>{2, n, n, 2};
}

} // namespace dicyclic
