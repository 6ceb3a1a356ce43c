#pragma once

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <numeric>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "dicyclic/errors.hpp"

namespace dicyclic {

/// A permutation of the points {1, ..., N}.
///
/// Products compose as functions: (p * q)(i) = p(q(i)).
class Permutation {
public:
    explicit Permutation(std::size_t degree = 0) : images_(degree)
    {
        std::iota(images_.begin(), images_.end(), std::size_t{0});
    }

    /// From zero-based images; throws if not a bijection.
    static Permutation from_images(std::vector<std::size_t> images)
    {
        std::vector<bool> hit(images.size(), false);
        for (auto v : images) {
            if (v >= images.size() || hit[v])
                throw ParameterError("images do not define a permutation");
            hit[v] = true;
        }
        Permutation p;
        p.images_ = std::move(images);
        return p;
    }

    /// From cycles written on one-based points.
    static Permutation from_cycles(std::size_t degree, const std::vector<std::vector<std::size_t>>& cycles)
    {
        std::vector<std::size_t> images(degree);
        std::iota(images.begin(), images.end(), std::size_t{0});
        std::vector<bool> used(degree, false);
        for (const auto& cycle : cycles) {
            for (std::size_t k = 0; k < cycle.size(); ++k) {
                const std::size_t from = cycle[k];
                const std::size_t to = cycle[(k + 1) % cycle.size()];
                if (from < 1 || from > degree || to < 1 || to > degree)
                    throw ParameterError("cycle point out of range");
                if (used[from - 1])
                    throw ParameterError("cycles are not disjoint");
                used[from - 1] = true;
                images[from - 1] = to - 1;
            }
        }
        return from_images(std::move(images));
    }

    std::size_t degree() const { return images_.size(); }

    /// Image of a zero-based point.
    std::size_t operator[](std::size_t i) const { return images_[i]; }

    /// Image of a one-based point.
    std::size_t apply(std::size_t point) const { return images_.at(point - 1) + 1; }

    const std::vector<std::size_t>& images() const { return images_; }

    bool is_identity() const
    {
        for (std::size_t i = 0; i < images_.size(); ++i)
            if (images_[i] != i)
                return false;
        return true;
    }

    Permutation inverse() const
    {
        std::vector<std::size_t> inv(images_.size());
        for (std::size_t i = 0; i < images_.size(); ++i)
            inv[images_[i]] = i;
        Permutation p;
        p.images_ = std::move(inv);
        return p;
    }

    friend Permutation operator*(const Permutation& p, const Permutation& q)
    {
        if (p.degree() != q.degree())
            throw ParameterError("permutation degrees differ");
        std::vector<std::size_t> out(p.degree());
        for (std::size_t i = 0; i < out.size(); ++i)
            out[i] = p.images_[q.images_[i]];
        Permutation r;
        r.images_ = std::move(out);
        return r;
    }

    Permutation pow(long long k) const
    {
        Permutation base = k < 0 ? inverse() : *this;
        unsigned long long e = static_cast<unsigned long long>(k < 0 ? -k : k);
        Permutation acc(degree());
        while (e) {
            if (e & 1U)
                acc = acc * base;
            base = base * base;
            e >>= 1U;
        }
        return acc;
    }

    /// Cycles on one-based points, including fixed points, each starting at its least point.
    std::vector<std::vector<std::size_t>> cycles() const
    {
        std::vector<std::vector<std::size_t>> out;
        std::vector<bool> seen(degree(), false);
        for (std::size_t start = 0; start < degree(); ++start) {
            if (seen[start])
                continue;
            std::vector<std::size_t> cycle;
            for (std::size_t cur = start; !seen[cur]; cur = images_[cur]) {
                seen[cur] = true;
                cycle.push_back(cur + 1);
            }
            out.push_back(std::move(cycle));
        }
        return out;
    }

    std::size_t cycle_count() const { return cycles().size(); }

    /// Cycle lengths, sorted decreasingly.
    std::vector<std::size_t> cycle_type() const
    {
        std::vector<std::size_t> t;
        for (const auto& c : cycles())
            t.push_back(c.size());
        std::sort(t.rbegin(), t.rend());
        return t;
    }

    std::size_t order() const
    {
        std::size_t o = 1;
        for (const auto& c : cycles())
            o = std::lcm(o, c.size());
        return o;
    }

    bool operator==(const Permutation&) const = default;
    auto operator<=>(const Permutation&) const = default;

    /// Cycle notation on one-based points, fixed points omitted; "()" for the identity.
    std::string to_string() const
    {
        std::ostringstream os;
        for (const auto& c : cycles()) {
            if (c.size() < 2)
                continue;
            os << '(';
            for (std::size_t k = 0; k < c.size(); ++k)
                os << (k ? "," : "") << c[k];
            os << ')';
        }
        const std::string s = os.str();
        return s.empty() ? "()" : s;
    }

private:
    std::vector<std::size_t> images_;
};

/// Elements of the group generated by the given permutations.
inline std::set<Permutation> generated_group(const std::vector<Permutation>& gens)
{
    std::set<Permutation> seen;
    if (gens.empty())
        return seen;
    std::vector<Permutation> queue{Permutation(gens.front().degree())};
    seen.insert(queue.front());
    for (std::size_t head = 0; head < queue.size(); ++head) {
        for (const auto& g : gens) {
            Permutation next = queue[head] * g;
            if (seen.insert(next).second)
                queue.push_back(std::move(next));
        }
    }
    return seen;
}

/// Whether the group generated by gens acts transitively on all points.
inline bool is_transitive(const std::vector<Permutation>& gens, std::size_t degree)
{
    if (degree == 0)
        return true;
    std::vector<bool> seen(degree, false);
    std::vector<std::size_t> queue{0};
    seen[0] = true;
    for (std::size_t head = 0; head < queue.size(); ++head)
        for (const auto& g : gens) {
            const std::size_t next = g[queue[head]];
            if (!seen[next]) {
                seen[next] = true;
                queue.push_back(next);
            }
        }
    return queue.size() == degree;
}

} // namespace dicyclic
