#pragma once

// The (u,v)-affine angle: the Λ-area ratio σ_Λ(L), the area cross ratio built
// from it, component classification and the transformation-group predicate.

#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <utility>

#include "affang/error.hpp"
#include "affang/geometry.hpp"
#include "affang/tolerance.hpp"

namespace affang {

/// Extended real housing σ_Λ(L): a finite value, or the projective ∞ reached
/// when L is parallel to V.
class SigmaValue {
public:
    static SigmaValue finite(double value) { return SigmaValue(value, false); }
    static SigmaValue infinite() { return SigmaValue(std::numeric_limits<double>::infinity(), true); }

    [[nodiscard]] bool is_infinite() const { return infinite_; }
    [[nodiscard]] bool is_finite() const { return !infinite_; }
    [[nodiscard]] double value() const {
        if (infinite_) fail(ErrorKind::SingularRay, "sigma is infinite (ray parallel to v)");
        return value_;
    }

    friend bool operator==(const SigmaValue&, const SigmaValue&) = default;

private:
    SigmaValue(double v, bool inf) : value_(v), infinite_(inf) {}
    double value_;
    bool infinite_;
};

/// Ordered pair of linearly independent reference directions.
class DirectionPair {
public:
    DirectionPair(DirectionVector u, DirectionVector v) : u_(u), v_(v) {
        if (parallel(u_, v_)) fail(ErrorKind::DegenerateConfiguration, "reference directions u, v are dependent");
    }

    static DirectionPair axes() { return {DirectionVector(1.0, 0.0), DirectionVector(0.0, 1.0)}; }

    [[nodiscard]] const DirectionVector& u() const { return u_; }
    [[nodiscard]] const DirectionVector& v() const { return v_; }

    /// Coefficients (alpha, beta) with d = alpha*u + beta*v.
    [[nodiscard]] Vec2 coefficients(Vec2 d) const {
        const double uv = cross(u_.vec(), v_.vec());
        return {cross(d, v_.vec()) / uv, cross(u_.vec(), d) / uv};
    }

    /// beta/alpha of a direction: the slope in the frame where u, v are the axes.
    [[nodiscard]] double frame_slope(Vec2 d) const {
        const Vec2 c = coefficients(d);
        return c.y / c.x;
    }

    [[nodiscard]] bool is_singular(Vec2 d) const { return parallel(d, u_.vec()) || parallel(d, v_.vec()); }

private:
    DirectionVector u_;
    DirectionVector v_;
};

enum class ComponentLabel { PositiveComponent, NegativeComponent, Singular };

constexpr const char* to_string(ComponentLabel c) {
    switch (c) {
        case ComponentLabel::PositiveComponent: return "positive";
        case ComponentLabel::NegativeComponent: return "negative";
        case ComponentLabel::Singular: return "singular";
    }
    return "unknown";
}

/// Either a real angle or the diagnosis of why it is not real.
class AngleResult {
public:
    struct NonRealReason {
        ComponentLabel first;
        ComponentLabel second;
    };

    static AngleResult real(double theta) { return AngleResult(theta, std::nullopt); }
    static AngleResult non_real(NonRealReason reason) { return AngleResult(0.0, reason); }

    [[nodiscard]] bool is_real() const { return !reason_.has_value(); }
    [[nodiscard]] double theta() const {
        if (reason_) fail(ErrorKind::ComponentMismatch, "rays lie in different components; the angle is not real");
        return theta_;
    }
    [[nodiscard]] const std::optional<NonRealReason>& reason() const { return reason_; }

private:
    AngleResult(double theta, std::optional<NonRealReason> reason) : theta_(theta), reason_(reason) {}
    double theta_;
    std::optional<NonRealReason> reason_;
};

// ─── σ_Λ on explicit lines ──────────────────────────────────────────────────

namespace detail {

struct LambdaPoints {
    Point pu;
    Point pv;
};

inline void require_through(const Line& line, Point o, const char* what) {
    const double scale = std::max({1.0, std::abs(o.x), std::abs(o.y), std::abs(line.base().x), std::abs(line.base().y)});
    if (line.distance_to(o) > 1e-9 * scale) fail(ErrorKind::InvalidArgument, std::string(what) + " must pass through O");
}

inline LambdaPoints lambda_points(Point o, const Line& U, const Line& V, const Line& lambda) {
    require_through(U, o, "U");
    require_through(V, o, "V");
    if (parallel(U.dir(), V.dir())) fail(ErrorKind::DegenerateConfiguration, "U and V are parallel");
    if (parallel(lambda.dir(), U.dir())) fail(ErrorKind::LambdaParallel, "auxiliary line does not meet U");
    if (parallel(lambda.dir(), V.dir())) fail(ErrorKind::LambdaParallel, "auxiliary line does not meet V");
    LambdaPoints pts{intersect_lines(lambda, U), intersect_lines(lambda, V)};
    const double scale = distance(pts.pu, o) + distance(pts.pv, o);
    if (distance(pts.pu, pts.pv) <= tol::rel * scale + tol::abs)
        fail(ErrorKind::CoincidentIntersection, "auxiliary line passes through O");
    return pts;
}

inline Point lambda_hit(Point o, const Ray& L, const Line& lambda, const LambdaPoints& pts) {
    if (parallel(lambda.dir(), L.dir())) fail(ErrorKind::LambdaParallel, "auxiliary line does not meet the ray's line");
    const Point pl = intersect_lines(lambda, L.line());
    const double scale = distance(pts.pu, o) + distance(pts.pv, o);
    if (distance(pl, pts.pu) <= tol::rel * scale + tol::abs || distance(pl, pts.pv) <= tol::rel * scale + tol::abs)
        fail(ErrorKind::CoincidentIntersection, "P_L coincides with P_U or P_V");
    return pl;
}

inline void require_origin(const Ray& L, Point o) {
    const double scale = std::max({1.0, std::abs(o.x), std::abs(o.y)});
    if (distance(L.origin(), o) > 1e-9 * scale) fail(ErrorKind::InvalidArgument, "ray must emanate from O");
}

}  // namespace detail

/// σ_Λ(L) = [O P_L P_U] / [O P_L P_V] with P_X = X ∩ Λ.
///
/// L parallel to U gives Finite(0) and L parallel to V gives Infinite (the
/// limit convention). Negative exactly when P_L lies strictly between P_U and
/// P_V on Λ.
inline SigmaValue sigma_lambda(Point o, const Ray& L, const Line& U, const Line& V, const Line& lambda) {
    detail::require_origin(L, o);
    const auto pts = detail::lambda_points(o, U, V, lambda);
    if (parallel(L.dir(), U.dir())) return SigmaValue::finite(0.0);
    if (parallel(L.dir(), V.dir())) return SigmaValue::infinite();
    const Point pl = detail::lambda_hit(o, L, lambda, pts);
    return SigmaValue::finite(signed_area(o, pl, pts.pu) / signed_area(o, pl, pts.pv));
}

/// Position of P_L relative to the segment [P_U, P_V]; computed from the
/// intersection points alone, without forming σ.
inline ComponentLabel sigma_sign(Point o, const Ray& L, const Line& U, const Line& V, const Line& lambda) {
    detail::require_origin(L, o);
    const auto pts = detail::lambda_points(o, U, V, lambda);
    if (parallel(L.dir(), U.dir()) || parallel(L.dir(), V.dir())) return ComponentLabel::Singular;
    const Point pl = detail::lambda_hit(o, L, lambda, pts);
    const Vec2 seg = pts.pv - pts.pu;
    const double s = dot(pl - pts.pu, seg) / dot(seg, seg);
    return (s > 0.0 && s < 1.0) ? ComponentLabel::NegativeComponent : ComponentLabel::PositiveComponent;
}

/// Classical cross ratio cr(a,b;c,d) = (a-c)(b-d) / ((a-d)(b-c)) on the
/// extended real line, so that cr(x,y;0,∞) = x/y.
inline double cross_ratio(const SigmaValue& a, const SigmaValue& b, const SigmaValue& c, const SigmaValue& d) {
    const SigmaValue* vals[4] = {&a, &b, &c, &d};
    int infinite = 0;
    for (const auto* s : vals) infinite += s->is_infinite() ? 1 : 0;
    if (infinite > 1) fail(ErrorKind::UndefinedCrossRatio, "more than one value is infinite");

    // Factors containing the infinite value cancel in pairs (one in the
    // numerator, one in the denominator).
    auto diff = [](const SigmaValue& x, const SigmaValue& y) -> std::optional<double> {
        if (x.is_infinite() || y.is_infinite()) return std::nullopt;
        return x.value() - y.value();
    };
    const auto n1 = diff(a, c), n2 = diff(b, d), d1 = diff(a, d), d2 = diff(b, c);
    const double num = n1.value_or(1.0) * n2.value_or(1.0);
    const double den = d1.value_or(1.0) * d2.value_or(1.0);
    const double scale = [&] {
        double m = 0.0;
        for (const auto* s : vals)
            if (s->is_finite()) m = std::max(m, std::abs(s->value()));
        return m * m;
    }();
    const bool num_zero = tol::near_zero(num, scale);
    const bool den_zero = tol::near_zero(den, scale);
    if (num_zero && den_zero) fail(ErrorKind::UndefinedCrossRatio, "cross ratio is 0/0");
    if (den_zero) return std::numeric_limits<double>::infinity();
    return num / den;
}

inline std::pair<Line, Line> reference_lines(Point o, const DirectionPair& dirs) {
    return {Line(o, dirs.u()), Line(o, dirs.v())};
}

/// CR_area(L1, L2; R1, R2): the cross ratio of the four σ_Λ values.
inline double area_cross_ratio(const Ray& l1, const Ray& l2, const Ray& r1, const Ray& r2, Point o,
                               const DirectionPair& dirs, const Line& lambda) {
    const auto [U, V] = reference_lines(o, dirs);
    return cross_ratio(sigma_lambda(o, l1, U, V, lambda), sigma_lambda(o, l2, U, V, lambda),
                       sigma_lambda(o, r1, U, V, lambda), sigma_lambda(o, r2, U, V, lambda));
}

// ─── The affine angle ───────────────────────────────────────────────────────

/// Auxiliary line through O+u+v with direction u-v (P_U = O+2u, P_V = O+2v).
inline Line canonical_lambda(Point o, const DirectionPair& dirs) {
    const Vec2 u = dirs.u().vec(), v = dirs.v().vec();
    return Line(o + (u + v), DirectionVector(u - v));
}

/// Line through O+u-v with direction u+v. Used when a ray is (nearly)
/// parallel to u-v and so misses the canonical line.
inline Line alternate_lambda(Point o, const DirectionPair& dirs) {
    const Vec2 u = dirs.u().vec(), v = dirs.v().vec();
    return Line(o + (u - v), DirectionVector(u + v));
}

namespace detail {

// How far from parallel to the line alpha ± beta = const a direction is, in [0, 1].
inline double lambda_clearance(const DirectionPair& dirs, Vec2 d, double sign) {
    const Vec2 c = dirs.coefficients(d);
    return std::abs(c.x + sign * c.y) / (std::abs(c.x) + std::abs(c.y));
}

}  // namespace detail

/// The auxiliary line used for a pair of rays: the canonical one unless a ray
/// is closer to parallel with it than with the alternate. Rays in a common
/// component always have full clearance (1) from one of the two.
inline Line auxiliary_line_for(Point o, const DirectionPair& dirs, Vec2 d1, Vec2 d2) {
    const double plus = std::min(detail::lambda_clearance(dirs, d1, 1.0), detail::lambda_clearance(dirs, d2, 1.0));
    const double minus = std::min(detail::lambda_clearance(dirs, d1, -1.0), detail::lambda_clearance(dirs, d2, -1.0));
    return plus >= minus ? canonical_lambda(o, dirs) : alternate_lambda(o, dirs);
}

namespace detail {

// σ values are reported in the canonical line's sign convention. On the
// alternate line σ comes out negated for every ray, so ratios are unaffected.
struct RayPairSigma {
    double first;
    double second;
    Line lambda;
    bool alternate;
};

inline double canonical_sigma(Point o, const Ray& r, const DirectionPair& dirs) {
    const auto [U, V] = reference_lines(o, dirs);
    const Vec2 d = r.dir().vec();
    if (lambda_clearance(dirs, d, 1.0) >= lambda_clearance(dirs, d, -1.0))
        return sigma_lambda(o, r, U, V, canonical_lambda(o, dirs)).value();
    return -sigma_lambda(o, r, U, V, alternate_lambda(o, dirs)).value();
}

inline RayPairSigma ray_pair_sigma(Point o, const Ray& r, const Ray& s, const DirectionPair& dirs) {
    if (dirs.is_singular(r.dir().vec()) || dirs.is_singular(s.dir().vec()))
        fail(ErrorKind::SingularRay, "ray is parallel to a reference direction");
    const Vec2 dr = r.dir().vec(), ds = s.dir().vec();
    const double plus = std::min(lambda_clearance(dirs, dr, 1.0), lambda_clearance(dirs, ds, 1.0));
    const double minus = std::min(lambda_clearance(dirs, dr, -1.0), lambda_clearance(dirs, ds, -1.0));
    // A same-component pair always has clearance 1 on one of the lines, so a
    // pair that nearly misses both is split across components. Each ray is
    // then classified on its own line.
    if (std::max(plus, minus) < 1e-6)
        return {canonical_sigma(o, r, dirs), canonical_sigma(o, s, dirs), canonical_lambda(o, dirs), false};
    const bool alt = plus < minus;
    const auto [U, V] = reference_lines(o, dirs);
    Line lambda = alt ? alternate_lambda(o, dirs) : canonical_lambda(o, dirs);
    const double flip = alt ? -1.0 : 1.0;
    const double sr = flip * sigma_lambda(o, r, U, V, lambda).value();
    const double ss = flip * sigma_lambda(o, s, U, V, lambda).value();
    return {sr, ss, lambda, alt};
}

inline ComponentLabel label_of(double sigma) {
    return sigma > 0.0 ? ComponentLabel::PositiveComponent : ComponentLabel::NegativeComponent;
}

}  // namespace detail

/// φ(O; r, s) = ½ log(σ(r)/σ(s)) for rays from O.
inline AngleResult affine_angle(Point o, const Ray& r, const Ray& s, const DirectionPair& dirs) {
    const auto sig = detail::ray_pair_sigma(o, r, s, dirs);
    if (!(sig.first * sig.second > 0.0))
        return AngleResult::non_real({detail::label_of(sig.first), detail::label_of(sig.second)});
    // Difference of logs keeps φ(O;A,B) = -φ(O;B,A) exact.
    return AngleResult::real(0.5 * (std::log(std::abs(sig.first)) - std::log(std::abs(sig.second))));
}

inline AngleResult affine_angle(Point o, Point a, Point b, const DirectionPair& dirs) {
    return affine_angle(o, Ray::through(o, a), Ray::through(o, b), dirs);
}

inline bool is_same_component(Point o, Point a, Point b, const DirectionPair& dirs) {
    const auto sig = detail::ray_pair_sigma(o, Ray::through(o, a), Ray::through(o, b), dirs);
    return sig.first * sig.second > 0.0;
}

/// The ray t in the component of r and s with σ(t) = ±sqrt(σ(r)σ(s)), which
/// halves the angle from r to s. Oriented to agree with r.
inline Ray midpoint_ray(Point o, const Ray& r, const Ray& s, const DirectionPair& dirs) {
    detail::require_origin(r, o);
    detail::require_origin(s, o);
    const auto sig = detail::ray_pair_sigma(o, r, s, dirs);
    if (!(sig.first * sig.second > 0.0)) fail(ErrorKind::ComponentMismatch, "rays lie in different components");
    // back to the sign convention of the line actually used
    const double target = std::copysign(std::sqrt(sig.first * sig.second), sig.alternate ? -sig.first : sig.first);

    // Along Λ, P = P_U + k (P_V - P_U) has σ = k/(k-1); invert for k.
    const auto [U, V] = reference_lines(o, dirs);
    const Point pu = intersect_lines(sig.lambda, U);
    const Point pv = intersect_lines(sig.lambda, V);
    const double k = target / (target - 1.0);
    const Point p = pu + k * (pv - pu);
    Vec2 d = p - o;
    if (dot(d, r.dir().vec()) < 0.0) d = -d;
    return Ray(o, DirectionVector(d));
}

/// True iff u and v are eigendirections of T's linear part with eigenvalues
/// of the same sign.
inline bool preserves_affine_angle(const AffineMap& t, const DirectionPair& dirs) {
    const Mat2& m = t.linear();
    const Vec2 u = dirs.u().vec(), v = dirs.v().vec();
    const Vec2 tu = m * u, tv = m * v;
    constexpr double eps = 1e-9;
    if (!parallel(tu, u, eps) || !parallel(tv, v, eps)) return false;
    const double lu = dot(tu, u) / dot(u, u);
    const double lv = dot(tv, v) / dot(v, v);
    return lu * lv > 0.0;
}

}  // namespace affang
