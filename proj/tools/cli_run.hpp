#pragma once

// Subcommand table, parameter parsing and the JSON/SVG result documents for
// the affang command-line tool. Kept separate from main() so the test suite
// can run configurations in-process.

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "affang/affang.hpp"

namespace affang::cli {

using Json = nlohmann::ordered_json;

inline constexpr const char* kSchemaVersion = "1";

/// Bad flags or unparsable values. Maps to exit status 1.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// ─── Deterministic generator ────────────────────────────────────────────────

/// std::mt19937_64 seeded with the run seed; a uniform double is the top 53
/// bits of one draw times 2^-53, so sequences are identical on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
    double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
    bool coin() { return (engine_() >> 63) != 0; }

private:
    std::mt19937_64 engine_;
};

// ─── Parameters ─────────────────────────────────────────────────────────────

enum class Subcommand { Angle, Isoptic, Power, RadicalCenter, Chords, Degenerate, Invariance };
enum class Format { Json, Svg };

enum class Kind { Pair, Scalar, Count, List };

struct ParamSpec {
    std::string name;
    Kind kind;
    std::optional<std::string> fallback;  // default; required when absent
    bool optional = false;                // may be left out entirely
    std::string help;
};

inline const std::vector<std::pair<std::string, Subcommand>>& subcommand_names() {
    static const std::vector<std::pair<std::string, Subcommand>> names = {
        {"angle", Subcommand::Angle},   {"isoptic", Subcommand::Isoptic},       {"power", Subcommand::Power},
        {"radical-center", Subcommand::RadicalCenter}, {"chords", Subcommand::Chords},
        {"degenerate", Subcommand::Degenerate}, {"invariance", Subcommand::Invariance},
    };
    return names;
}

inline const char* summary_of(Subcommand s) {
    switch (s) {
        case Subcommand::Angle: return "affine angle between rays OA and OB";
        case Subcommand::Isoptic: return "locus of points seeing AB under a fixed affine angle";
        case Subcommand::Power: return "power of a point and secant area products";
        case Subcommand::RadicalCenter: return "radical axes and center of three hyperbolas";
        case Subcommand::Chords: return "geometric-progression quadrilateral area";
        case Subcommand::Degenerate: return "first-order limit of the degenerate cross ratio";
        case Subcommand::Invariance: return "angle under random group maps and one shear";
    }
    return "";
}

inline std::string name_of(Subcommand s) {
    for (const auto& [name, sub] : subcommand_names())
        if (sub == s) return name;
    return "?";
}

inline Subcommand subcommand_from(std::string_view name) {
    for (const auto& [n, sub] : subcommand_names())
        if (n == name) return sub;
    throw UsageError("unknown subcommand '" + std::string(name) + "'");
}

inline const std::vector<ParamSpec>& params_for(Subcommand s) {
    static const std::map<Subcommand, std::vector<ParamSpec>> table = {
        {Subcommand::Angle,
         {{"O", Kind::Pair, std::nullopt, false, "vertex x,y"},
          {"A", Kind::Pair, std::nullopt, false, "point on the first ray"},
          {"B", Kind::Pair, std::nullopt, false, "point on the second ray"},
          {"u", Kind::Pair, "1,0", false, "first reference direction"},
          {"v", Kind::Pair, "0,1", false, "second reference direction"}}},
        {Subcommand::Isoptic,
         {{"A", Kind::Pair, std::nullopt, false, "segment endpoint"},
          {"B", Kind::Pair, std::nullopt, false, "segment endpoint"},
          {"theta", Kind::Scalar, std::nullopt, false, "target angle, |theta| >= 1e-6"},
          {"u", Kind::Pair, "1,0", false, "first reference direction"},
          {"v", Kind::Pair, "0,1", false, "second reference direction"},
          {"n", Kind::Count, "200", false, "number of locus samples"}}},
        {Subcommand::Power,
         {{"kappa", Kind::Scalar, std::nullopt, false, "hyperbola constant"},
          {"center", Kind::Pair, "0,0", false, "asymptote intersection"},
          {"P", Kind::Pair, std::nullopt, false, "query point"},
          {"u", Kind::Pair, "1,0", false, "first asymptote direction"},
          {"v", Kind::Pair, "0,1", false, "second asymptote direction"},
          {"secants", Kind::Count, "5", false, "random secants through P"},
          {"dir", Kind::Pair, std::nullopt, true, "extra secant direction"}}},
        {Subcommand::RadicalCenter,
         {{"center1", Kind::Pair, std::nullopt, false, "center of the first hyperbola"},
          {"kappa1", Kind::Scalar, std::nullopt, false, "constant of the first hyperbola"},
          {"center2", Kind::Pair, std::nullopt, false, "center of the second hyperbola"},
          {"kappa2", Kind::Scalar, std::nullopt, false, "constant of the second hyperbola"},
          {"center3", Kind::Pair, std::nullopt, false, "center of the third hyperbola"},
          {"kappa3", Kind::Scalar, std::nullopt, false, "constant of the third hyperbola"},
          {"u", Kind::Pair, "1,0", false, "shared asymptote direction"},
          {"v", Kind::Pair, "0,1", false, "shared asymptote direction"}}},
        {Subcommand::Chords,
         {{"a", Kind::Scalar, std::nullopt, false, "abscissa of A"},
          {"r", Kind::Scalar, std::nullopt, false, "progression ratio"},
          {"p", Kind::Scalar, std::nullopt, false, "abscissa of P"},
          {"kappa", Kind::Scalar, "1", false, "hyperbola constant"},
          {"t", Kind::List, std::nullopt, true, "t1,t2,t3,t4 for a chord intersection"}}},
        {Subcommand::Degenerate,
         {{"m1", Kind::Scalar, std::nullopt, false, "first slope"},
          {"m2", Kind::Scalar, std::nullopt, false, "second slope"},
          {"t", Kind::List, "0.01,0.001,0.0001,1e-05,1e-06", false, "decreasing t values"}}},
        {Subcommand::Invariance,
         {{"O", Kind::Pair, std::nullopt, false, "vertex"},
          {"A", Kind::Pair, std::nullopt, false, "point on the first ray"},
          {"B", Kind::Pair, std::nullopt, false, "point on the second ray"},
          {"u", Kind::Pair, "1,0", false, "first reference direction"},
          {"v", Kind::Pair, "0,1", false, "second reference direction"},
          {"samples", Kind::Count, "200", false, "random maps to apply"}}},
    };
    return table.at(s);
}

struct RunConfig {
    Subcommand subcommand = Subcommand::Angle;
    std::map<std::string, std::string> params;  // raw command-line values
    Format format = Format::Json;
    std::uint64_t seed = 0;
    std::optional<std::string> viewport;  // "xmin,ymin,xmax,ymax"
};

namespace detail {

inline std::vector<double> parse_numbers(const std::string& name, std::string_view text) {
    std::vector<double> out;
    std::size_t pos = 0;
    while (true) {
        const std::size_t comma = text.find(',', pos);
        const std::string_view piece = text.substr(pos, comma == std::string_view::npos ? text.npos : comma - pos);
        double value = 0.0;
        const auto res = std::from_chars(piece.data(), piece.data() + piece.size(), value);
        if (piece.empty() || res.ec != std::errc() || res.ptr != piece.data() + piece.size())
            throw UsageError("--" + name + ": cannot parse '" + std::string(piece) + "' as a number");
        if (!std::isfinite(value)) throw UsageError("--" + name + ": value must be finite");
        out.push_back(value);
        if (comma == std::string_view::npos) break;
        pos = comma + 1;
    }
    return out;
}

// Shortest text that parses back to the same double.
inline std::string format_number(double v) {
    char buf[32];
    const auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

}  // namespace detail

/// Typed view of the parameters of one run; every value is validated on
/// construction so the echo is exactly what the computation used.
class Params {
public:
    explicit Params(const RunConfig& cfg) {
        const auto& specs = params_for(cfg.subcommand);
        for (const auto& [key, _] : cfg.params) {
            bool known = false;
            for (const auto& s : specs) known = known || s.name == key;
            if (!known) throw UsageError("unknown parameter --" + key + " for " + name_of(cfg.subcommand));
        }
        for (const auto& s : specs) {
            std::optional<std::string> raw;
            if (auto it = cfg.params.find(s.name); it != cfg.params.end())
                raw = it->second;
            else
                raw = s.fallback;
            if (!raw) {
                if (s.optional) continue;
                throw UsageError("missing required parameter --" + s.name);
            }
            auto nums = detail::parse_numbers(s.name, *raw);
            switch (s.kind) {
                case Kind::Pair:
                    if (nums.size() != 2) throw UsageError("--" + s.name + ": expected x,y");
                    break;
                case Kind::Scalar:
                    if (nums.size() != 1) throw UsageError("--" + s.name + ": expected one number");
                    break;
                case Kind::Count:
                    if (nums.size() != 1 || nums[0] < 0 || nums[0] != std::floor(nums[0]) || nums[0] > 1e7)
                        throw UsageError("--" + s.name + ": expected a non-negative integer");
                    break;
                case Kind::List:
                    break;
            }
            values_[s.name] = {s.kind, std::move(nums)};
            order_.push_back(s.name);
        }
    }

    [[nodiscard]] bool has(const std::string& name) const { return values_.count(name) != 0; }
    [[nodiscard]] Point point(const std::string& name) const {
        const auto& v = get(name);
        return {v[0], v[1]};
    }
    [[nodiscard]] Vec2 vec(const std::string& name) const {
        const auto& v = get(name);
        return {v[0], v[1]};
    }
    [[nodiscard]] DirectionVector direction(const std::string& name) const {
        const auto& v = get(name);
        return DirectionVector(v[0], v[1]);
    }
    [[nodiscard]] double scalar(const std::string& name) const { return get(name)[0]; }
    [[nodiscard]] std::size_t count(const std::string& name) const { return static_cast<std::size_t>(get(name)[0]); }
    [[nodiscard]] const std::vector<double>& list(const std::string& name) const { return get(name); }

    /// Parsed values in table order, defaults included.
    [[nodiscard]] Json echo() const {
        Json out = Json::object();
        for (const auto& name : order_) {
            const auto& [kind, nums] = values_.at(name);
            if (kind == Kind::Scalar)
                out[name] = nums[0];
            else if (kind == Kind::Count)
                out[name] = static_cast<std::uint64_t>(nums[0]);
            else
                out[name] = nums;
        }
        return out;
    }

private:
    [[nodiscard]] const std::vector<double>& get(const std::string& name) const {
        auto it = values_.find(name);
        if (it == values_.end()) throw UsageError("parameter --" + name + " not set");
        return it->second.second;
    }

    std::map<std::string, std::pair<Kind, std::vector<double>>> values_;
    std::vector<std::string> order_;
};

inline Viewport parse_viewport(const std::string& text) {
    const auto v = detail::parse_numbers("viewport", text);
    if (v.size() != 4 || !(v[2] > v[0]) || !(v[3] > v[1]))
        throw UsageError("--viewport: expected xmin,ymin,xmax,ymax with xmin < xmax and ymin < ymax");
    return {v[0], v[1], v[2], v[3]};
}

// ─── Subcommands ────────────────────────────────────────────────────────────

namespace detail {

inline Json pair(Point p) { return Json::array({p.x, p.y}); }
inline Json pair(Vec2 p) { return Json::array({p.x, p.y}); }

inline Json line_json(const Line& l) {
    const ImplicitLine im = l.implicit();
    return Json{{"a", im.a}, {"b", im.b}, {"c", im.c}};
}

inline Json conic_json(const ConicCoefficients& c) {
    return Json{{"xx", c.c_xx}, {"xy", c.c_xy}, {"yy", c.c_yy}, {"x", c.c_x}, {"y", c.c_y}, {"1", c.c_0}};
}

inline Json nullable(std::optional<double> v) { return v ? Json(*v) : Json(nullptr); }

inline DirectionPair dirs_of(const Params& p) { return {p.direction("u"), p.direction("v")}; }

inline Json run_angle(const Params& p, Json& /*diagnostics*/) {
    const Point o = p.point("O");
    const DirectionPair dirs = dirs_of(p);
    const Ray ra = Ray::through(o, p.point("A"));
    const Ray rb = Ray::through(o, p.point("B"));
    const auto sig = affang::detail::ray_pair_sigma(o, ra, rb, dirs);
    const AngleResult angle = affine_angle(o, ra, rb, dirs);
    Json out;
    out["real"] = angle.is_real();
    out["angle"] = angle.is_real() ? Json(angle.theta()) : Json(nullptr);
    out["sigma_A"] = sig.first;
    out["sigma_B"] = sig.second;
    out["component_A"] = to_string(affang::detail::label_of(sig.first));
    out["component_B"] = to_string(affang::detail::label_of(sig.second));
    if (angle.is_real()) {
        const auto sector = sector_area_equivalence(o, p.point("A"), p.point("B"), dirs);
        out["sector_area"] = sector.sector;
    } else {
        out["sector_area"] = nullptr;
    }
    return out;
}

struct IsopticData {
    IsopticSpec spec;
    IsopticCurve curve;
    std::vector<LocusSample> samples;
};

inline IsopticData isoptic_data(const Params& p) {
    IsopticSpec spec(p.point("A"), p.point("B"), dirs_of(p), p.scalar("theta"));
    IsopticCurve curve = isoptic_curve(spec);
    auto samples = sample_locus(spec, p.count("n"));
    return {spec, curve, std::move(samples)};
}

inline Json run_isoptic(const Params& p, Json& diagnostics) {
    const auto data = isoptic_data(p);
    const auto& spec = data.spec;
    Json out;
    out["conic"] = conic_json(data.curve.original_conic);
    out["normalized_conic"] = conic_json(data.curve.normalized_conic);
    out["center"] = pair(data.curve.frame(data.curve.normalized_center()));
    out["asymptotes"] = Json::array({pair(spec.dirs().u().unit()), pair(spec.dirs().v().unit())});

    double max_dev = 0.0;
    std::size_t admissible = 0;
    Json samples = Json::array();
    for (const auto& s : data.samples) {
        if (s.admissible) {
            ++admissible;
            const AngleResult a = affine_angle(s.point, spec.a(), spec.b(), spec.dirs());
            if (a.is_real()) max_dev = std::max(max_dev, std::abs(a.theta() - spec.theta()));
        }
        samples.push_back(Json{{"x", s.point.x}, {"y", s.point.y}, {"admissible", s.admissible}, {"branch", s.branch}});
    }
    out["admissible_count"] = admissible;
    out["max_angle_deviation"] = max_dev;
    out["samples"] = std::move(samples);
    if (admissible == 0) diagnostics.push_back("no admissible samples in the rapidity window");
    return out;
}

inline Json secant_json(Point P, const DirectionVector& dir, const AxisHyperbola& h) {
    const SecantResult s = secant_intersections(P, dir, h);
    const OneSidedProducts prod = one_sided_identity(P, s, h);
    return Json{{"direction", pair(dir.vec())},
                {"A", pair(s.a)},
                {"B", pair(s.b)},
                {"tangent", s.tangent},
                {"S_PA", symmetric_area(P, s.a, h)},
                {"S_PB", symmetric_area(P, s.b, h)},
                {"product", prod.symmetric},
                {"product_first_asymptote", prod.first},
                {"product_second_asymptote", prod.second}};
}

inline Json run_power(const Params& p, std::uint64_t seed, Json& diagnostics) {
    const AxisHyperbola h = AxisHyperbola::from_directions(p.point("center"), p.scalar("kappa"), p.direction("u"), p.direction("v"));
    const Point P = p.point("P");
    Json out;
    out["core"] = core_quantity(P, h);
    out["power"] = power(P, h);
    out["real_tangents"] = tangency_discriminant(P, h) > 0.0;

    Json secants = Json::array();
    if (p.has("dir")) secants.push_back(secant_json(P, p.direction("dir"), h));
    Rng rng(seed);
    const std::size_t wanted = p.count("secants");
    std::size_t found = 0, attempts = 0;
    while (found < wanted && attempts < 1000 * (wanted + 1)) {
        ++attempts;
        const double phi = rng.uniform(0.0, std::numbers::pi);
        const DirectionVector d(std::cos(phi), std::sin(phi));
        try {
            Json s = secant_json(P, d, h);
            if (s["tangent"].get<bool>()) continue;
            secants.push_back(std::move(s));
            ++found;
        } catch (const GeometryError& e) {
            if (e.kind() != ErrorKind::NoRealIntersection) throw;
        }
    }
    if (found < wanted) diagnostics.push_back("only " + std::to_string(found) + " random secants meet the curve twice");
    out["secants"] = std::move(secants);
    return out;
}

inline Json run_radical_center(const Params& p, Json& /*diagnostics*/) {
    const auto u = p.direction("u"), v = p.direction("v");
    const AxisHyperbola h[3] = {AxisHyperbola::from_directions(p.point("center1"), p.scalar("kappa1"), u, v),
                                AxisHyperbola::from_directions(p.point("center2"), p.scalar("kappa2"), u, v),
                                AxisHyperbola::from_directions(p.point("center3"), p.scalar("kappa3"), u, v)};
    const Point c = radical_center(h[0], h[1], h[2]);
    Json axes = Json::array();
    double residual = 0.0;
    for (auto [i, j] : {std::pair{0, 1}, {1, 2}, {0, 2}}) {
        const Line axis = radical_axis(h[i], h[j]);
        residual = std::max(residual, axis.distance_to(c));
        axes.push_back(line_json(axis));
    }
    Json cores = Json::array(), powers = Json::array();
    for (const auto& hi : h) {
        cores.push_back(core_quantity(c, hi));
        powers.push_back(power(c, hi));
    }
    Json out;
    out["center"] = pair(c);
    out["axes"] = std::move(axes);
    out["concurrency_residual"] = residual;
    out["cores"] = std::move(cores);
    out["powers"] = std::move(powers);
    return out;
}

inline Json run_chords(const Params& p, Json& /*diagnostics*/) {
    const double a = p.scalar("a"), r = p.scalar("r"), x = p.scalar("p"), kappa = p.scalar("kappa");
    const double area = progression_quadrilateral_area(a, r, x, kappa);
    const double closed = kappa * progression_area_closed_form(r);
    Json out;
    out["area"] = area;
    out["closed_form"] = closed;
    out["deviation"] = std::abs(area - closed);
    if (p.has("t")) {
        const auto& t = p.list("t");
        if (t.size() != 4) throw UsageError("--t: expected t1,t2,t3,t4");
        const double cx = chord_intersection_x(t[0], t[1], t[2], t[3]);
        const ImplicitLine l = chord_line(t[0], t[1], kappa).implicit();
        out["chord_intersection"] = pair(Point{cx, (l.c - l.a * cx) / l.b});
    }
    return out;
}

inline Json run_degenerate(const Params& p, Json& diagnostics) {
    const SlopePair m(p.scalar("m1"), p.scalar("m2"));
    const auto& ts = p.list("t");
    const LimitReport report = first_order_limit(m, ts);
    Json samples = Json::array();
    std::vector<double> tv, log_residuals;
    for (const auto& s : report.samples) {
        samples.push_back(Json{{"t", s.t}, {"cross_ratio", degenerate_cross_ratio(m, s.t)}, {"value", s.value}});
        tv.push_back(s.t);
        log_residuals.push_back(log_degenerate_cross_ratio(m, s.t) + 2.0 * (m.m1 - m.m2) * s.t);
    }
    Json out;
    out["slope_angle"] = m.m1 * m.m2 > 0.0 ? Json(slope_cross_ratio_angle(m.m1, m.m2)) : Json(nullptr);
    out["samples"] = std::move(samples);
    out["exact_limit"] = m.m1 - m.m2;
    out["extrapolated_limit"] = report.extrapolated_limit;
    out["residual_order"] = nullable(report.residual_order);
    out["log_expansion_order"] = nullable(loglog_slope(tv, log_residuals));
    if (m.m1 * m.m2 <= 0.0) diagnostics.push_back("slopes of opposite sign: the affine angle is not real");
    return out;
}

// Linear map with the given matrix in the (u, v) basis.
inline Mat2 in_basis(const DirectionPair& dirs, const Mat2& m) {
    const Mat2 basis = Mat2::columns(dirs.u().vec(), dirs.v().vec());
    return basis * m * inverse(basis);
}

inline Json run_invariance(const Params& p, std::uint64_t seed, Json& /*diagnostics*/) {
    const Point o = p.point("O"), a = p.point("A"), b = p.point("B");
    const DirectionPair dirs = dirs_of(p);
    const double base = affine_angle(o, a, b, dirs).theta();
    Rng rng(seed);
    double max_dev = 0.0;
    const std::size_t n = p.count("samples");
    for (std::size_t i = 0; i < n; ++i) {
        const double sign = rng.coin() ? 1.0 : -1.0;
        const double l1 = sign * std::exp(rng.uniform(-2.0, 2.0));
        const double l2 = sign * std::exp(rng.uniform(-2.0, 2.0));
        const Vec2 shift{rng.uniform(-10.0, 10.0), rng.uniform(-10.0, 10.0)};
        const AffineMap t(in_basis(dirs, Mat2::diag(l1, l2)), shift);
        const double moved = affine_angle(t(o), t(a), t(b), dirs).theta();
        max_dev = std::max(max_dev, std::abs(moved - base));
    }
    // Negative control: a shear along u moves v off itself.
    const double k = rng.uniform(0.5, 2.0);
    const AffineMap shear = AffineMap::linear_map(in_basis(dirs, Mat2{1.0, k, 0.0, 1.0}));
    const AngleResult sheared = affine_angle(shear(o), shear(a), shear(b), dirs);
    Json out;
    out["angle"] = base;
    out["max_deviation"] = max_dev;
    out["shear"] = k;
    out["shear_angle"] = sheared.is_real() ? Json(sheared.theta()) : Json(nullptr);
    out["shear_deviation"] = sheared.is_real() ? Json(std::abs(sheared.theta() - base)) : Json(nullptr);
    return out;
}

}  // namespace detail

/// The JSON result document for a configuration. Domain failures propagate
/// as GeometryError, parameter problems as UsageError.
inline Json document(const RunConfig& cfg) {
    const Params p(cfg);
    Json inputs = p.echo();
    inputs["seed"] = cfg.seed;
    if (cfg.viewport) {
        const Viewport v = parse_viewport(*cfg.viewport);
        inputs["viewport"] = Json::array({v.xmin, v.ymin, v.xmax, v.ymax});
    }
    Json diagnostics = Json::array();
    Json outputs;
    switch (cfg.subcommand) {
        case Subcommand::Angle: outputs = detail::run_angle(p, diagnostics); break;
        case Subcommand::Isoptic: outputs = detail::run_isoptic(p, diagnostics); break;
        case Subcommand::Power: outputs = detail::run_power(p, cfg.seed, diagnostics); break;
        case Subcommand::RadicalCenter: outputs = detail::run_radical_center(p, diagnostics); break;
        case Subcommand::Chords: outputs = detail::run_chords(p, diagnostics); break;
        case Subcommand::Degenerate: outputs = detail::run_degenerate(p, diagnostics); break;
        case Subcommand::Invariance: outputs = detail::run_invariance(p, cfg.seed, diagnostics); break;
    }
    Json doc;
    doc["schema_version"] = kSchemaVersion;
    doc["subcommand"] = name_of(cfg.subcommand);
    doc["inputs"] = std::move(inputs);
    doc["outputs"] = std::move(outputs);
    doc["diagnostics"] = std::move(diagnostics);
    return doc;
}

/// Rendered output, byte-identical for identical configurations.
inline std::string run(const RunConfig& cfg) {
    if (cfg.format == Format::Json) return document(cfg).dump(2) + "\n";
    if (cfg.subcommand != Subcommand::Isoptic) throw UsageError("--output svg is only available for isoptic");
    const Params p(cfg);
    const auto data = detail::isoptic_data(p);
    const Point markers[2] = {data.spec.a(), data.spec.b()};
    const Viewport view = cfg.viewport ? parse_viewport(*cfg.viewport) : fit_viewport(data.samples, markers);
    return render_svg(data.samples, view, markers);
}

/// Command-line arguments that reproduce a document's inputs echo.
inline std::vector<std::string> args_from_echo(const Json& doc) {
    std::vector<std::string> args{doc.at("subcommand").get<std::string>()};
    for (const auto& [key, value] : doc.at("inputs").items()) {
        std::string text;
        if (value.is_array()) {
            for (const auto& x : value) {
                if (!text.empty()) text += ',';
                text += detail::format_number(x.get<double>());
            }
        } else if (value.is_number_unsigned()) {
            text = std::to_string(value.get<std::uint64_t>());
        } else {
            text = detail::format_number(value.get<double>());
        }
        args.push_back("--" + key);
        args.push_back(text);
    }
    return args;
}

/// RunConfig from already-split subcommand arguments (no program name):
/// "<subcommand> --key value ...". Used by the round-trip check.
inline RunConfig config_from_args(const std::vector<std::string>& args) {
    if (args.empty()) throw UsageError("missing subcommand");
    RunConfig cfg;
    cfg.subcommand = subcommand_from(args[0]);
    for (std::size_t i = 1; i < args.size(); i += 2) {
        if (args[i].rfind("--", 0) != 0 || i + 1 >= args.size()) throw UsageError("expected --key value pairs");
        const std::string key = args[i].substr(2);
        const std::string& value = args[i + 1];
        if (key == "seed") {
            std::uint64_t s = 0;
            const auto res = std::from_chars(value.data(), value.data() + value.size(), s);
            if (res.ec != std::errc() || res.ptr != value.data() + value.size()) throw UsageError("--seed: expected an unsigned integer");
            cfg.seed = s;
        } else if (key == "viewport") {
            cfg.viewport = value;
        } else if (key == "output") {
            if (value == "json") cfg.format = Format::Json;
            else if (value == "svg") cfg.format = Format::Svg;
            else throw UsageError("--output: expected json or svg");
        } else {
            cfg.params[key] = value;
        }
    }
    return cfg;
}

}  // namespace affang::cli
