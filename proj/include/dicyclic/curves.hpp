#pragma once
// Numeric checks, in double-precision complex arithmetic, that explicit curve models carry
// the dicyclic action: self-maps preserve the curve, satisfy the group relations, commute
// with the Belyi projection, and conjugate correctly under complex conjugation.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "dicyclic/errors.hpp"
#include "dicyclic/group.hpp"

namespace dicyclic::curves {

using Complex = std::complex<double>;

inline constexpr double kAdmissionTolerance = 1e-12;
inline constexpr double kRelationTolerance = 1e-9;
inline constexpr double kSensitivityThreshold = 1e-3;
inline constexpr double kBranchClearance = 1e-3;

struct Point {
    Complex first;  ///< z (hyperelliptic) or u (cyclic)
    Complex second; ///< w (hyperelliptic) or v (cyclic)
};

struct CurvePoint {
    Point point;
    double residual = 0.0;
};

enum class ModelName { SnHyperelliptic, RnHyperelliptic, SnCyclic, RnCyclic };

inline std::string to_string(ModelName m)
{
    switch (m) {
    case ModelName::SnHyperelliptic:
        return "Sn_hyperelliptic";
    case ModelName::RnHyperelliptic:
        return "Rn_hyperelliptic";
    case ModelName::SnCyclic:
        return "Sn_cyclic";
    case ModelName::RnCyclic:
        return "Rn_cyclic";
    }
    return "?";
}

inline std::optional<ModelName> parse_model_name(std::string_view s)
{
    for (auto m : {ModelName::SnHyperelliptic, ModelName::RnHyperelliptic, ModelName::SnCyclic,
                   ModelName::RnCyclic})
        if (to_string(m) == s)
            return m;
    return std::nullopt;
}

inline bool is_hyperelliptic(ModelName m)
{
    return m == ModelName::SnHyperelliptic || m == ModelName::RnHyperelliptic;
}

/// Whether the model is defined for this n: S_n for n >= 2, R_n for odd n >= 3.
inline bool model_applies(ModelName m, int n)
{
    if (m == ModelName::SnHyperelliptic || m == ModelName::SnCyclic)
        return n >= 2;
    return n >= 3 && n % 2 == 1;
}

/// Multiplies one coefficient of one map formula by (1 + delta).
struct Perturbation {
    std::string map;
    double delta = 0.0;
};

struct ModelOptions {
    Perturbation perturbation;
    /// Use y(u,v) = (-u, v^{2n-1} / (u^{n-1}(u+1)^{2n-2})) on the cyclic S_n model for odd n
    /// as well. That formula preserves the curve only for even n; for odd n the default
    /// inserts the factor rho_{4n}.
    bool printed_odd_sn_cyclic_y = false;
};

using PointMap = std::function<std::optional<Point>(const Point&)>;

struct NamedMap {
    std::string name;
    bool anticonformal = false;
    PointMap forward;
    PointMap backward; ///< may be empty, then forward^(order-1) is used
    int order = 0;     ///< order of the map, needed only when backward is empty
};

inline Complex root_of_unity(int m) { return std::polar(1.0, 2.0 * std::numbers::pi / m); }

inline Complex ipow(Complex base, int e)
{
    Complex acc{1.0, 0.0};
    bool negative = e < 0;
    unsigned k = static_cast<unsigned>(negative ? -e : e);
    while (k) {
        if (k & 1U)
            acc *= base;
        base *= base;
        k >>= 1U;
    }
    return negative ? Complex{1.0, 0.0} / acc : acc;
}

class CurveModel {
public:
    CurveModel(ModelName name, int n, ModelOptions options = {}) : name_(name), n_(n), options_(std::move(options))
    {
        if (!model_applies(name, n))
            throw ParameterError(to_string(name) + " is not defined for n=" + std::to_string(n));
        build_maps();
        if (!options_.perturbation.map.empty() && !maps_.count(options_.perturbation.map) &&
            options_.perturbation.map != "pi")
            throw ParameterError("no map named " + options_.perturbation.map + " on " + to_string(name));
    }

    ModelName name() const { return name_; }
    int n() const { return n_; }
    const ModelOptions& options() const { return options_; }

    /// Left- and right-hand sides of the defining relation at p.
    std::pair<Complex, Complex> sides(const Point& p) const
    {
        const Complex z = p.first;
        const Complex w = p.second;
        switch (name_) {
        case ModelName::SnHyperelliptic:
            return {w * w, z * (ipow(z, 2 * n_) - 1.0)};
        case ModelName::RnHyperelliptic:
            return {w * w, ipow(z, 2 * n_) - 1.0};
        case ModelName::SnCyclic:
            return {ipow(w, 2 * n_), ipow(z, n_) * (z - 1.0) * ipow(z + 1.0, 2 * n_ - 1)};
        case ModelName::RnCyclic:
            return {ipow(w, 2 * n_), ipow(z, n_) * ipow(z - 1.0, 2) * ipow(z + 1.0, 2 * n_ - 2)};
        }
        return {};
    }

    /// |lhs - rhs| / max(1, |lhs|, |rhs|)
    double residual(const Point& p) const
    {
        const auto [l, r] = sides(p);
        return std::abs(l - r) / std::max({1.0, std::abs(l), std::abs(r)});
    }

    /// The point over the given first coordinate on a fixed (principal) branch.
    Point lift(Complex first) const
    {
        const auto rhs = sides(Point{first, {}}).second;
        if (is_hyperelliptic(name_))
            return Point{first, std::sqrt(rhs)};
        return Point{first, std::pow(rhs, 1.0 / (2.0 * n_))};
    }

    /// First coordinates avoided when sampling: branch values and poles of the maps.
    std::vector<Complex> branch_loci() const
    {
        std::vector<Complex> loci{Complex{0.0, 0.0}};
        if (is_hyperelliptic(name_)) {
            for (int k = 0; k < 2 * n_; ++k)
                loci.push_back(std::pow(root_of_unity(2 * n_), k));
        } else {
            loci.push_back(1.0);
            loci.push_back(-1.0);
        }
        return loci;
    }

    bool has_map(const std::string& name) const { return maps_.count(name) > 0; }

    const NamedMap& map(const std::string& name) const
    {
        auto it = maps_.find(name);
        if (it == maps_.end())
            throw ParameterError("no map named " + name + " on " + to_string(name_));
        return it->second;
    }

    std::vector<std::string> map_names() const
    {
        std::vector<std::string> out;
        for (const auto& [k, v] : maps_)
            out.push_back(k);
        return out;
    }

    /// pi(z, w) = -(z^n + 1/z^n - 2) / 4, hyperelliptic models only.
    Complex belyi(Complex z) const
    {
        if (!is_hyperelliptic(name_))
            throw ParameterError("the Belyi projection is defined on the hyperelliptic models");
        const Complex zn = ipow(z, n_);
        return coefficient("pi", -0.25) * (zn + 1.0 / zn - 2.0);
    }

    /// Exponents (a, b, c) of v^{2n} = u^a (u-1)^b (u+1)^c for the cyclic models.
    std::array<int, 3> exponents() const
    {
        if (name_ == ModelName::SnCyclic)
            return {n_, 1, 2 * n_ - 1};
        if (name_ == ModelName::RnCyclic)
            return {n_, 2, 2 * n_ - 2};
        throw ParameterError("exponent triples are defined for the cyclic models");
    }

private:
    Complex coefficient(const std::string& map, Complex value) const
    {
        if (options_.perturbation.map == map)
            return value * (1.0 + options_.perturbation.delta);
        return value;
    }

    static bool near_zero(Complex c) { return std::abs(c) < kBranchClearance; }

    void add(NamedMap m) { maps_.emplace(m.name, std::move(m)); }

    void add_scaling(const std::string& name, Complex first_factor, Complex second_factor)
    {
        add(NamedMap{name, false,
                     [=](const Point& p) -> std::optional<Point> {
                         return Point{first_factor * p.first, second_factor * p.second};
                     },
                     [=](const Point& p) -> std::optional<Point> {
                         return Point{p.first / first_factor, p.second / second_factor};
                     },
                     0});
    }

    void build_maps()
    {
        const int n = n_;
        const Complex I{0.0, 1.0};
        add_scaling("w_flip", 1.0, coefficient("w_flip", -1.0));

        if (is_hyperelliptic(name_)) {
            const bool s = name_ == ModelName::SnHyperelliptic;
            add_scaling("u", root_of_unity(2 * n), coefficient("u", s ? root_of_unity(4 * n) : Complex{1.0}));
            add_scaling("x", root_of_unity(n), coefficient("x", s ? root_of_unity(2 * n) : Complex{-1.0}));

            // y(z,w) = (1/z, i w / z^{n+1}) on S_n, (1/z, i w / z^n) on R_n
            const int k = s ? n + 1 : n;
            const Complex cy = coefficient("y", I);
            add(NamedMap{"y", false,
                         [=](const Point& p) -> std::optional<Point> {
                             if (near_zero(p.first))
                                 return std::nullopt;
                             return Point{1.0 / p.first, cy * p.second / ipow(p.first, k)};
                         },
                         [=](const Point& p) -> std::optional<Point> {
                             if (near_zero(p.first))
                                 return std::nullopt;
                             return Point{1.0 / p.first, p.second / (cy * ipow(p.first, k))};
                         },
                         4});

            const Complex ctau = coefficient("tau", 1.0);
            add(NamedMap{"tau", true,
                         [=](const Point& p) -> std::optional<Point> {
                             return Point{std::conj(p.first), ctau * std::conj(p.second)};
                         },
                         [=](const Point& p) -> std::optional<Point> {
                             return Point{std::conj(p.first), std::conj(p.second / ctau)};
                         },
                         2});

            if (s && n == 2) {
                // t(z,w) = (i(1-z)/(1+z), 2(1+i) w / (z+1)^3)
                const Complex ct = coefficient("t", 2.0 * (1.0 + I));
                add(NamedMap{"t", false,
                             [=](const Point& p) -> std::optional<Point> {
                                 if (near_zero(p.first + 1.0))
                                     return std::nullopt;
                                 return Point{I * (1.0 - p.first) / (1.0 + p.first),
                                              ct * p.second / ipow(p.first + 1.0, 3)};
                             },
                             [=](const Point& p) -> std::optional<Point> {
                                 if (near_zero(p.first + I))
                                     return std::nullopt;
                                 const Complex z = (I - p.first) / (I + p.first);
                                 return Point{z, p.second * ipow(z + 1.0, 3) / ct};
                             },
                             3});
            }
            return;
        }

        add_scaling("x", 1.0, coefficient("x", root_of_unity(2 * n)));
        if (name_ == ModelName::SnCyclic) {
            // y(u,v) = (-u, c v^{2n-1} / (u^{n-1} (u+1)^{2n-2})), c = 1 for even n
            const bool printed = n % 2 == 0 || options_.printed_odd_sn_cyclic_y;
            const Complex cy = coefficient("y", printed ? Complex{1.0} : root_of_unity(4 * n));
            add(NamedMap{"y", false,
                         [=](const Point& p) -> std::optional<Point> {
                             if (near_zero(p.first) || near_zero(p.first + 1.0))
                                 return std::nullopt;
                             return Point{-p.first, cy * ipow(p.second, 2 * n - 1) /
                                                        (ipow(p.first, n - 1) * ipow(p.first + 1.0, 2 * n - 2))};
                         },
                         {},
                         4});
        } else {
            // y(u,v) = (-u, rho_{4n} u (u^2 - 1) / v)
            const Complex cy = coefficient("y", root_of_unity(4 * n));
            add(NamedMap{"y", false,
                         [=](const Point& p) -> std::optional<Point> {
                             if (near_zero(p.second))
                                 return std::nullopt;
                             return Point{-p.first, cy * p.first * (p.first * p.first - 1.0) / p.second};
                         },
                         [=](const Point& p) -> std::optional<Point> {
                             if (near_zero(p.second))
                                 return std::nullopt;
                             return Point{-p.first, -cy * p.first * (p.first * p.first - 1.0) / p.second};
                         },
                         4});
        }
    }

    ModelName name_;
    int n_;
    ModelOptions options_;
    std::map<std::string, NamedMap> maps_;
};

/// Deterministic stream of admissible points for a fixed seed.
class PointSampler {
public:
    PointSampler(const CurveModel& model, std::uint64_t seed) : model_(model), rng_(seed) {}

    /// Next point whose first coordinate lies in the annulus 1/2 <= |.| <= 3/2 away from
    /// the branch loci, with residual below the admission tolerance.
    CurvePoint next(std::size_t max_attempts = 10000)
    {
        std::uniform_real_distribution<double> radius(0.5, 1.5);
        std::uniform_real_distribution<double> angle(0.0, 2.0 * std::numbers::pi);
        const auto loci = model_.branch_loci();
        for (std::size_t attempt = 0; attempt < max_attempts; ++attempt) {
            const Complex first = std::polar(radius(rng_), angle(rng_));
            bool clear = true;
            for (const auto& b : loci)
                clear = clear && std::abs(first - b) > kBranchClearance;
            if (!clear)
                continue;
            const Point p = model_.lift(first);
            const double res = model_.residual(p);
            if (res < kAdmissionTolerance)
                return CurvePoint{p, res};
        }
        throw SamplingError("no admissible point on " + to_string(model_.name()) + " after " +
                            std::to_string(max_attempts) + " attempts");
    }

private:
    const CurveModel& model_;
    std::mt19937_64 rng_;
};

inline std::vector<CurvePoint> sample_points(const CurveModel& model, std::size_t count, std::uint64_t seed)
{
    if (count < 1)
        throw SamplingError("sample count must be at least 1");
    PointSampler sampler(model, seed);
    std::vector<CurvePoint> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
        out.push_back(sampler.next());
    return out;
}

/// One factor of a word in composition notation; a word f g h is applied right to left.
struct Factor {
    std::string map;
    int exponent = 1;
};

using MapWord = std::vector<Factor>;

struct Relation {
    std::string name;
    MapWord lhs;
    MapWord rhs; ///< empty word is the identity
};

struct WordReport {
    std::string relation;
    double max_error = 0.0;    ///< max of final deviation and off-curve residual
    double max_deviation = 0.0;
    double max_residual = 0.0; ///< worst residual of any intermediate point
    std::size_t trials = 0;
    std::size_t rejected = 0; ///< samples dropped because a map hit a pole
    bool pass = false;
};

namespace detail {

inline int anticonformal_parity(const CurveModel& model, const MapWord& word)
{
    int parity = 0;
    for (const auto& f : word)
        if (model.map(f.map).anticonformal)
            parity ^= (f.exponent % 2 != 0) ? 1 : 0;
    return parity;
}

/// Applies the word; returns nullopt at a pole. Tracks the worst residual along the way.
inline std::optional<Point> apply_word(const CurveModel& model, const MapWord& word, Point p, double& worst_residual)
{
    for (auto it = word.rbegin(); it != word.rend(); ++it) {
        const NamedMap& m = model.map(it->map);
        const int steps = std::abs(it->exponent);
        for (int s = 0; s < steps; ++s) {
            std::optional<Point> next;
            if (it->exponent > 0) {
                next = m.forward(p);
            } else if (m.backward) {
                next = m.backward(p);
            } else {
                next = p;
                for (int k = 0; k + 1 < m.order && next; ++k)
                    next = m.forward(*next);
            }
            if (!next)
                return std::nullopt;
            p = *next;
            const double res = model.residual(p);
            worst_residual = std::isfinite(res) ? std::max(worst_residual, res) : INFINITY;
        }
    }
    return p;
}

inline double point_distance(const Point& got, const Point& want)
{
    const double scale = std::max({1.0, std::abs(want.first), std::abs(want.second)});
    const double d = std::max(std::abs(got.first - want.first), std::abs(got.second - want.second)) / scale;
    return std::isfinite(d) ? d : INFINITY;
}

inline void finalize(WordReport& r, double tolerance, std::size_t trials)
{
    r.max_error = std::max(r.max_deviation, r.max_residual);
    r.pass = r.trials == trials && r.max_error < tolerance;
}

} // namespace detail

/// Checks lhs = rhs as maps on `trials` sampled points: every intermediate point must stay
/// on the curve and the two results must agree, both within tolerance.
inline WordReport verify_word(const CurveModel& model, const Relation& rel, double tolerance, std::size_t trials,
                              std::uint64_t seed)
{
    if (detail::anticonformal_parity(model, rel.lhs) != detail::anticonformal_parity(model, rel.rhs))
        throw ParameterError("relation " + rel.name + " equates a conformal and an anticonformal word");
    WordReport report;
    report.relation = rel.name;
    PointSampler sampler(model, seed);
    const std::size_t max_rejections = 100 * trials + 100;
    while (report.trials < trials && report.rejected <= max_rejections) {
        const Point p = sampler.next().point;
        double residual = 0.0;
        const auto l = detail::apply_word(model, rel.lhs, p, residual);
        const auto r = l ? detail::apply_word(model, rel.rhs, p, residual) : std::nullopt;
        if (!l || !r) {
            ++report.rejected;
            continue;
        }
        ++report.trials;
        report.max_residual = std::max(report.max_residual, residual);
        report.max_deviation = std::max(report.max_deviation, detail::point_distance(*l, *r));
    }
    detail::finalize(report, tolerance, trials);
    return report;
}

inline bool all_pass(const std::vector<WordReport>& reports)
{
    for (const auto& r : reports)
        if (!r.pass)
            return false;
    return !reports.empty();
}

inline MapWord word(std::initializer_list<Factor> factors) { return MapWord(factors); }

/// Relations x^{2n} = 1, y^2 = x^n, y^{-1} x y = x^{-1} and the model-specific ones.
inline std::vector<Relation> dicyclic_relations(const CurveModel& model)
{
    const int n = model.n();
    std::vector<Relation> rels;
    if (model.name() == ModelName::SnHyperelliptic) {
        rels.push_back({"u^(4n) = 1", {{"u", 4 * n}}, {}});
        rels.push_back({"u o y^-1 = y o u^-1", {{"u", 1}, {"y", -1}}, {{"y", 1}, {"u", -1}}});
        rels.push_back({"x = u^2", {{"x", 1}}, {{"u", 2}}});
    } else if (model.name() == ModelName::RnHyperelliptic) {
        rels.push_back({"x = y^2 o u^2", {{"x", 1}}, {{"y", 2}, {"u", 2}}});
    }
    rels.push_back({"y^4 = 1", {{"y", 4}}, {}});
    rels.push_back({"x^(2n) = 1", {{"x", 2 * n}}, {}});
    rels.push_back({"y^2 = x^n", {{"y", 2}}, {{"x", n}}});
    rels.push_back({"x^n = (first,-second)", {{"x", n}}, {{"w_flip", 1}}});
    rels.push_back({"y^-1 o x o y = x^-1", {{"y", -1}, {"x", 1}, {"y", 1}}, {{"x", -1}}});
    return rels;
}

inline std::vector<WordReport> verify_relations(const CurveModel& model, const std::vector<Relation>& rels,
                                                double tolerance, std::size_t trials, std::uint64_t seed)
{
    std::vector<WordReport> out;
    for (const auto& r : rels)
        out.push_back(verify_word(model, r, tolerance, trials, seed));
    return out;
}

inline std::vector<WordReport> verify_dicyclic_relations(const CurveModel& model, double tolerance = kRelationTolerance,
                                                         std::size_t trials = 100, std::uint64_t seed = 1)
{
    return verify_relations(model, dicyclic_relations(model), tolerance, trials, seed);
}

/// t^3 = 1 for the extra automorphism of S_2.
inline std::vector<WordReport> verify_extra_automorphism(const CurveModel& model, double tolerance = kRelationTolerance,
                                                         std::size_t trials = 100, std::uint64_t seed = 1)
{
    if (!model.has_map("t"))
        throw ParameterError("the order-three map t exists only on the hyperelliptic S_2");
    return verify_relations(model, {{"t^3 = 1", {{"t", 3}}, {}}}, tolerance, trials, seed);
}

inline std::vector<WordReport> verify_anticonformal(const CurveModel& model, double tolerance = kRelationTolerance,
                                                    std::size_t trials = 100, std::uint64_t seed = 1)
{
    if (!is_hyperelliptic(model.name()))
        throw ParameterError("complex conjugation is checked on the hyperelliptic models");
    return verify_relations(model,
                            {{"tau^2 = 1", {{"tau", 2}}, {}},
                             {"tau o u o tau = u^-1", {{"tau", 1}, {"u", 1}, {"tau", 1}}, {{"u", -1}}},
                             {"tau o y o tau = y^-1", {{"tau", 1}, {"y", 1}, {"tau", 1}}, {{"y", -1}}}},
                            tolerance, trials, seed);
}

/// pi o g = pi for g in {x, y, xy}, plus pi = 0 where z^n = 1 and pi = 1 where z^n = -1.
inline std::vector<WordReport> verify_belyi(const CurveModel& model, double tolerance = kRelationTolerance,
                                            std::size_t trials = 100, std::uint64_t seed = 1)
{
    if (!is_hyperelliptic(model.name()))
        throw ParameterError("the Belyi projection is defined on the hyperelliptic models");
    const int n = model.n();
    std::vector<WordReport> out;
    const std::pair<std::string, MapWord> words[] = {
        {"pi o x = pi", {{"x", 1}}}, {"pi o y = pi", {{"y", 1}}}, {"pi o xy = pi", {{"x", 1}, {"y", 1}}}};
    for (const auto& [name, w] : words) {
        WordReport report;
        report.relation = name;
        PointSampler sampler(model, seed);
        while (report.trials < trials && report.rejected <= 100 * trials + 100) {
            const Point p = sampler.next().point;
            double residual = 0.0;
            const auto q = detail::apply_word(model, w, p, residual);
            if (!q) {
                ++report.rejected;
                continue;
            }
            ++report.trials;
            report.max_residual = std::max(report.max_residual, residual);
            const Complex before = model.belyi(p.first);
            const double d = std::abs(model.belyi(q->first) - before) / std::max(1.0, std::abs(before));
            report.max_deviation = std::max(report.max_deviation, std::isfinite(d) ? d : INFINITY);
        }
        detail::finalize(report, tolerance, trials);
        out.push_back(report);
    }
    auto special = [&](std::string name, int root_order, int step, int offset, Complex expected) {
        WordReport report;
        report.relation = std::move(name);
        for (int k = offset; k < root_order; k += step) {
            const Complex z = std::pow(root_of_unity(root_order), k);
            report.max_deviation = std::max(report.max_deviation, std::abs(model.belyi(z) - expected));
            ++report.trials;
        }
        detail::finalize(report, tolerance, report.trials);
        out.push_back(report);
    };
    special("pi = 0 where z^n = 1", n, 1, 0, 0.0);
    special("pi = 1 where z^n = -1", 2 * n, 2, 1, 1.0);
    return out;
}

/// Every applicable suite for the model.
inline std::vector<WordReport> verify_all(const CurveModel& model, double tolerance = kRelationTolerance,
                                          std::size_t trials = 100, std::uint64_t seed = 1)
{
    auto out = verify_dicyclic_relations(model, tolerance, trials, seed);
    auto append = [&](std::vector<WordReport> more) { out.insert(out.end(), more.begin(), more.end()); };
    if (is_hyperelliptic(model.name())) {
        append(verify_belyi(model, tolerance, trials, seed));
        append(verify_anticonformal(model, tolerance, trials, seed));
    }
    if (model.has_map("t"))
        append(verify_extra_automorphism(model, tolerance, trials, seed));
    return out;
}

/// Names of the maps whose coefficient can be perturbed for the sensitivity control.
inline std::vector<std::string> perturbable_maps(const CurveModel& model)
{
    auto names = model.map_names();
    if (is_hyperelliptic(model.name()))
        names.push_back("pi");
    return names;
}

} // namespace dicyclic::curves
