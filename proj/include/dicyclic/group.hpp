#pragma once
// Dicyclic groups G_n = <x, y | x^{2n} = 1, y^2 = x^n, y x y^{-1} = x^{-1}> of order 4n.
//
// Every element has the unique normal form x^a y^b with 0 <= a < 2n and b in {0, 1}.
// Elements carry their group parameter n; mixing parameters throws ParameterError.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <memory>
#include <numeric>
#include <span>
#include <string>
#include <tuple>
#include <vector>

#include "dicyclic/errors.hpp"

namespace dicyclic {

struct Element {
    int n = 2;
    int a = 0; ///< exponent of x, reduced mod 2n
    int b = 0; ///< exponent of y, 0 or 1

    bool operator==(const Element&) const = default;

    /// Orders by (n, b, a), i.e. by position in the canonical enumeration of the group.
    friend std::strong_ordering operator<=>(const Element& l, const Element& r)
    {
        return std::tie(l.n, l.b, l.a) <=> std::tie(r.n, r.b, r.a);
    }
};

namespace detail {

inline int mod(long long value, int modulus)
{
    long long r = value % modulus;
    return static_cast<int>(r < 0 ? r + modulus : r);
}

inline void check_parameter(int n)
{
    if (n < 2)
        throw ParameterError("dicyclic group parameter must satisfy n >= 2, got " + std::to_string(n));
}

inline void check_same_group(const Element& e1, const Element& e2)
{
    if (e1.n != e2.n)
        throw ParameterError("elements belong to different groups (n=" + std::to_string(e1.n) +
                             " vs n=" + std::to_string(e2.n) + ")");
}

} // namespace detail

inline Element make_element(int n, long long a, int b = 0)
{
    detail::check_parameter(n);
    if (b != 0 && b != 1)
        throw ParameterError("y-exponent of a normal form must be 0 or 1");
    return Element{n, detail::mod(a, 2 * n), b};
}

inline Element identity_element(int n) { return make_element(n, 0, 0); }

inline Element multiply(const Element& e1, const Element& e2)
{
    detail::check_same_group(e1, e2);
    const int n = e1.n;
    // x^a y^b x^c y^d = x^{a + (-1)^b c} y^{b + d}, and y^2 = x^n.
    long long a = e1.b == 0 ? e1.a + e2.a : e1.a - e2.a;
    int b = e1.b + e2.b;
    if (b == 2) {
        a += n;
        b = 0;
    }
    return Element{n, detail::mod(a, 2 * n), b};
}

inline Element operator*(const Element& e1, const Element& e2) { return multiply(e1, e2); }

inline Element inverse(const Element& e)
{
    if (e.b == 0)
        return Element{e.n, detail::mod(-static_cast<long long>(e.a), 2 * e.n), 0};
    // (x^a y)^2 = x^n, so (x^a y)^{-1} = x^{a+n} y.
    return Element{e.n, detail::mod(static_cast<long long>(e.a) + e.n, 2 * e.n), 1};
}

inline bool is_identity(const Element& e) { return e.a == 0 && e.b == 0; }

/// Smallest k >= 1 with e^k = 1, found by iterating products.
inline int order(const Element& e)
{
    Element acc = e;
    int k = 1;
    while (!is_identity(acc)) {
        acc = acc * e;
        ++k;
    }
    return k;
}

inline Element power(const Element& e, long long k)
{
    const int m = order(e);
    long long r = k % m;
    if (r < 0)
        r += m;
    Element acc = identity_element(e.n);
    for (long long i = 0; i < r; ++i)
        acc = acc * e;
    return acc;
}

inline Element conjugate(const Element& g, const Element& h) { return g * h * inverse(g); }

inline std::string to_string(const Element& e)
{
    if (is_identity(e))
        return "1";
    std::string s;
    if (e.a == 1)
        s = "x";
    else if (e.a > 1)
        s = "x^" + std::to_string(e.a);
    if (e.b == 1)
        s += "y";
    return s;
}

/// The group G_n, with precomputed multiplication tables over element indices.
///
/// Index of x^a y^b is a + 2n b. Copies share the immutable tables.
class DicyclicGroup {
public:
    explicit DicyclicGroup(int n) : n_(n)
    {
        detail::check_parameter(n);
        auto t = std::make_shared<Tables>();
        const std::size_t size = static_cast<std::size_t>(4 * n);
        t->elements.reserve(size);
        for (int b = 0; b < 2; ++b)
            for (int a = 0; a < 2 * n; ++a)
                t->elements.push_back(Element{n, a, b});
        t->mul.resize(size * size);
        t->inv.resize(size);
        t->ord.resize(size);
        for (std::size_t i = 0; i < size; ++i) {
            for (std::size_t j = 0; j < size; ++j)
                t->mul[i * size + j] = index_of(t->elements[i] * t->elements[j]);
            t->inv[i] = index_of(inverse(t->elements[i]));
            t->ord[i] = dicyclic::order(t->elements[i]);
        }
        tables_ = std::move(t);
    }

    int n() const { return n_; }
    int order() const { return 4 * n_; }
    std::size_t size() const { return static_cast<std::size_t>(4 * n_); }

    Element identity() const { return Element{n_, 0, 0}; }
    Element x() const { return Element{n_, 1, 0}; }
    Element y() const { return Element{n_, 0, 1}; }
    Element element(long long a, int b = 0) const { return make_element(n_, a, b); }

    const std::vector<Element>& elements() const { return tables_->elements; }

    bool owns(const Element& e) const { return e.n == n_; }

    std::size_t index(const Element& e) const
    {
        if (!owns(e))
            throw ParameterError("element " + to_string(e) + " (n=" + std::to_string(e.n) +
                                 ") is not in G_" + std::to_string(n_));
        return index_of(e);
    }

    const Element& at(std::size_t i) const { return tables_->elements.at(i); }

    std::size_t mul(std::size_t i, std::size_t j) const { return tables_->mul[i * size() + j]; }
    std::size_t inv(std::size_t i) const { return tables_->inv[i]; }
    int order_at(std::size_t i) const { return tables_->ord[i]; }

    Element multiply(const Element& e1, const Element& e2) const
    {
        return at(mul(index(e1), index(e2)));
    }

    /// Members of the cyclic subgroup x^a for 0 <= a < 2n.
    bool in_cyclic_part(const Element& e) const { return owns(e) && e.b == 0; }

    bool operator==(const DicyclicGroup& other) const { return n_ == other.n_; }

private:
    struct Tables {
        std::vector<Element> elements;
        std::vector<std::size_t> mul;
        std::vector<std::size_t> inv;
        std::vector<int> ord;
    };

    std::size_t index_of(const Element& e) const
    {
        return static_cast<std::size_t>(e.a) + static_cast<std::size_t>(2 * n_ * e.b);
    }

    int n_;
    std::shared_ptr<const Tables> tables_;
};

/// Indices of the subgroup generated by the given element indices (identity included).
inline std::vector<bool> closure_mask(const DicyclicGroup& G, std::span<const std::size_t> gens)
{
    std::vector<bool> seen(G.size(), false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head) {
        const std::size_t cur = queue[head];
        for (std::size_t g : gens) {
            const std::size_t next = G.mul(cur, g);
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    }
    return seen;
}

inline std::size_t closure_size(const DicyclicGroup& G, std::span<const std::size_t> gens)
{
    auto mask = closure_mask(G, gens);
    return static_cast<std::size_t>(std::count(mask.begin(), mask.end(), true));
}

inline bool generates(const DicyclicGroup& G, std::span<const Element> gens)
{
    std::vector<std::size_t> idx;
    idx.reserve(gens.size());
    for (const auto& g : gens)
        idx.push_back(G.index(g));
    return closure_size(G, idx) == G.size();
}

class Subgroup {
public:
    Subgroup(const DicyclicGroup& G, std::vector<Element> generators)
        : n_(G.n()), generators_(std::move(generators))
    {
        std::vector<std::size_t> idx;
        for (const auto& g : generators_)
            idx.push_back(G.index(g));
        mask_ = closure_mask(G, idx);
        for (std::size_t i = 0; i < mask_.size(); ++i)
            if (mask_[i])
                members_.push_back(G.at(i));
    }

    int n() const { return n_; }
    std::size_t order() const { return members_.size(); }
    const std::vector<Element>& members() const { return members_; }
    const std::vector<Element>& generators() const { return generators_; }
    const std::vector<bool>& mask() const { return mask_; }

    bool contains(const Element& e) const
    {
        if (e.n != n_)
            return false;
        return mask_[static_cast<std::size_t>(e.a + 2 * n_ * e.b)];
    }

    std::size_t index_in_group() const { return static_cast<std::size_t>(4 * n_) / order(); }

    bool is_trivial() const { return order() == 1; }

    /// Equality of member sets (generators are ignored).
    bool operator==(const Subgroup& other) const { return n_ == other.n_ && mask_ == other.mask_; }

private:
    int n_;
    std::vector<Element> generators_;
    std::vector<Element> members_;
    std::vector<bool> mask_;
};

inline Subgroup cyclic_subgroup(const DicyclicGroup& G, const Element& g) { return Subgroup(G, {g}); }

struct ConjugacyClass {
    Element representative;
    std::vector<Element> members;
};

inline std::vector<ConjugacyClass> conjugacy_classes(const DicyclicGroup& G)
{
    std::vector<ConjugacyClass> classes;
    std::vector<bool> assigned(G.size(), false);
    for (std::size_t i = 0; i < G.size(); ++i) {
        if (assigned[i])
            continue;
        std::vector<bool> in_class(G.size(), false);
        for (std::size_t g = 0; g < G.size(); ++g)
            in_class[G.mul(G.mul(g, i), G.inv(g))] = true;
        ConjugacyClass cls{G.at(i), {}};
        for (std::size_t j = 0; j < G.size(); ++j) {
            if (in_class[j]) {
                cls.members.push_back(G.at(j));
                assigned[j] = true;
            }
        }
        classes.push_back(std::move(cls));
    }
    return classes;
}

/// Every subgroup of G, each obtained as the closure of some pair of elements.
/// Sorted by order, then by member set.
inline std::vector<Subgroup> all_subgroups(const DicyclicGroup& G)
{
    std::vector<Subgroup> result;
    auto known = [&](const Subgroup& s) {
        return std::any_of(result.begin(), result.end(), [&](const Subgroup& t) { return t == s; });
    };
    for (std::size_t i = 0; i < G.size(); ++i) {
        for (std::size_t j = i; j < G.size(); ++j) {
            std::vector<Element> gens;
            if (i != 0)
                gens.push_back(G.at(i));
            if (j != i)
                gens.push_back(G.at(j));
            Subgroup s(G, std::move(gens));
            if (!known(s))
                result.push_back(std::move(s));
        }
    }
    std::sort(result.begin(), result.end(), [](const Subgroup& l, const Subgroup& r) {
        if (l.order() != r.order())
            return l.order() < r.order();
        return l.members() < r.members();
    });
    return result;
}

inline std::vector<Subgroup> subgroups_of_index(const DicyclicGroup& G, std::size_t index)
{
    std::vector<Subgroup> out;
    for (auto& s : all_subgroups(G))
        if (s.index_in_group() == index)
            out.push_back(std::move(s));
    return out;
}

/// An automorphism determined by the images of the generators x and y.
struct GroupAutomorphism {
    Element image_of_x;
    Element image_of_y;

    Element apply(const Element& e) const
    {
        detail::check_same_group(e, image_of_x);
        Element result = power(image_of_x, e.a);
        if (e.b == 1)
            result = result * image_of_y;
        return result;
    }

    bool operator==(const GroupAutomorphism&) const = default;
};

/// this-after-other composition: (f o g)(e) = f(g(e)).
inline GroupAutomorphism compose(const GroupAutomorphism& f, const GroupAutomorphism& g)
{
    return GroupAutomorphism{f.apply(g.image_of_x), f.apply(g.image_of_y)};
}

/// Whether (imx, imy) satisfy the defining relations of G_n and generate it.
inline bool defines_automorphism(const DicyclicGroup& G, const Element& imx, const Element& imy)
{
    const int n = G.n();
    if (!is_identity(power(imx, 2 * n)))
        return false;
    if (imy * imy != power(imx, n))
        return false;
    if (imy * imx * inverse(imy) != inverse(imx))
        return false;
    const Element gens[] = {imx, imy};
    return generates(G, gens);
}

/// All automorphisms of G, by testing every pair of candidate images.
inline std::vector<GroupAutomorphism> automorphism_group(const DicyclicGroup& G)
{
    std::vector<GroupAutomorphism> result;
    for (const auto& imx : G.elements())
        for (const auto& imy : G.elements())
            if (defines_automorphism(G, imx, imy))
                result.push_back(GroupAutomorphism{imx, imy});
    return result;
}

} // namespace dicyclic
