#pragma once

// Isoptic loci of the affine angle: the set of P seeing segment AB under a
// fixed angle θ is the hyperbola p² - (q+β)² = 1 - β², β = coth θ, in the
// frame where A = (-1,0), B = (1,0), u ∥ (1,1) and v ∥ (1,-1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <utility>
#include <vector>

#include "affang/affine_angle.hpp"
#include "affang/error.hpp"
#include "affang/geometry.hpp"

namespace affang {

inline constexpr double kThetaMin = 1e-6;
inline constexpr double kSingularPositionDistance = 1e-10;

/// c_xx x² + c_xy xy + c_yy y² + c_x x + c_y y + c_0 = 0.
struct ConicCoefficients {
    double c_xx = 0.0, c_xy = 0.0, c_yy = 0.0, c_x = 0.0, c_y = 0.0, c_0 = 0.0;

    [[nodiscard]] double evaluate(Point p) const {
        return c_xx * p.x * p.x + c_xy * p.x * p.y + c_yy * p.y * p.y + c_x * p.x + c_y * p.y + c_0;
    }

    [[nodiscard]] std::array<double, 6> as_array() const { return {c_xx, c_xy, c_yy, c_x, c_y, c_0}; }

    /// Largest-magnitude coefficient scaled to 1; sign fixed so the first
    /// nonzero of (c_xx, c_xy, c_yy, ...) is positive.
    [[nodiscard]] ConicCoefficients normalized() const {
        auto c = as_array();
        if (c[0] == 0.0 && c[1] == 0.0 && c[2] == 0.0)
            fail(ErrorKind::InvalidArgument, "conic has no quadratic part");
        double big = 0.0;
        for (double x : c) big = std::max(big, std::abs(x));
        double sign = 1.0;
        for (double x : c) {
            if (x != 0.0) {
                sign = x > 0.0 ? 1.0 : -1.0;
                break;
            }
        }
        const double s = sign / big;
        return {c[0] * s, c[1] * s, c[2] * s, c[3] * s, c[4] * s, c[5] * s};
    }

    /// Q(T(x)): the conic pulled back through an affine map.
    [[nodiscard]] ConicCoefficients pulled_back(const AffineMap& t) const {
        const Mat2& m = t.linear();
        const Vec2 tr = t.translation();
        // Q(X) = Xᵀ S X + gᵀ X + c0
        const Mat2 s{c_xx, 0.5 * c_xy, 0.5 * c_xy, c_yy};
        const Vec2 g{c_x, c_y};
        const Mat2 quad = m.transposed() * s * m;
        const Vec2 st = s * tr;
        const Vec2 lin = m.transposed() * (2.0 * st + g);
        const double c0 = dot(tr, st) + dot(g, tr) + c_0;
        return {quad.a, quad.b + quad.c, quad.d, lin.x, lin.y, c0};
    }

    /// The two real null directions of the quadratic part (asymptote
    /// directions of a hyperbola). Fails if the quadratic part is definite.
    [[nodiscard]] std::pair<Vec2, Vec2> null_directions() const {
        const double disc = c_xy * c_xy - 4.0 * c_xx * c_yy;
        if (!(disc > 0.0)) fail(ErrorKind::InvalidArgument, "quadratic part has no real null directions");
        const double root = std::sqrt(disc);
        if (std::abs(c_xx) >= std::abs(c_yy)) {
            // c_xx k² + c_xy k + c_yy = 0 for direction (k, 1)
            const double q = -0.5 * (c_xy + std::copysign(root, c_xy));
            const double k1 = q / c_xx;
            const double k2 = (q != 0.0) ? c_yy / q : -k1;
            return {Vec2{k1, 1.0}, Vec2{k2, 1.0}};
        }
        // c_yy k² + c_xy k + c_xx = 0 for direction (1, k)
        const double q = -0.5 * (c_xy + std::copysign(root, c_xy));
        const double k1 = q / c_yy;
        const double k2 = (q != 0.0) ? c_xx / q : -k1;
        return {Vec2{1.0, k1}, Vec2{1.0, k2}};
    }
};

class IsopticSpec {
public:
    IsopticSpec(Point a, Point b, DirectionPair dirs, double theta) : a_(a), b_(b), dirs_(dirs), theta_(theta) {
        if (a == b) fail(ErrorKind::DegenerateConfiguration, "A and B coincide");
        if (dirs.is_singular(b - a)) fail(ErrorKind::DegenerateConfiguration, "segment AB is parallel to u or v");
        if (!std::isfinite(theta) || theta == 0.0) fail(ErrorKind::InvalidArgument, "theta must be finite and nonzero");
    }

    [[nodiscard]] Point a() const { return a_; }
    [[nodiscard]] Point b() const { return b_; }
    [[nodiscard]] const DirectionPair& dirs() const { return dirs_; }
    [[nodiscard]] double theta() const { return theta_; }

    /// Original plane -> normalized frame.
    [[nodiscard]] AffineMap normalization() const { return normalize_configuration(a_, b_, dirs_.u(), dirs_.v()); }

private:
    Point a_;
    Point b_;
    DirectionPair dirs_;
    double theta_;
};

struct IsopticCurve {
    ConicCoefficients normalized_conic;
    double beta = 0.0;
    AffineMap frame;  // normalized frame -> original plane
    ConicCoefficients original_conic;

    /// Center (0, -coth θ) of the normalized hyperbola.
    [[nodiscard]] Point normalized_center() const { return {0.0, -beta}; }
};

inline void require_theta(double theta) {
    if (!std::isfinite(theta) || std::abs(theta) < kThetaMin)
        fail(ErrorKind::ThetaTooSmall, "|theta| must be at least 1e-6");
}

inline IsopticCurve isoptic_curve(const IsopticSpec& spec) {
    require_theta(spec.theta());
    const AffineMap to_normal = spec.normalization();
    const double beta = 1.0 / std::tanh(spec.theta());
    // p² - (q+β)² - (1-β²) = p² - q² - 2βq - 1
    const ConicCoefficients raw{1.0, 0.0, -1.0, 0.0, -2.0 * beta, -1.0};
    return {raw.normalized(), beta, invert_map(to_normal), raw.pulled_back(to_normal).normalized()};
}

/// Rapidity parametrization p = sinh t / sinh θ, q = cosh t / sinh θ - coth θ
/// (normalized frame). Covers the branch through A and B.
inline Point isoptic_point(double theta, double t) {
    require_theta(theta);
    const double sh = std::sinh(theta);
    // (cosh t - cosh θ)/sinh θ written to avoid cancellation near t = ±θ
    const double q = 2.0 * std::sinh(0.5 * (t + theta)) * std::sinh(0.5 * (t - theta)) / sh;
    return {std::sinh(t) / sh, q};
}

/// The point symmetric to p about the normalized center (0, -coth θ).
inline Point reflect_through_center(Point p, double theta) {
    return {-p.x, -p.y - 2.0 / std::tanh(theta)};
}

namespace detail {

// Distance (normalized frame) from P to the nearest of the four lines
// p+1 = ±q, p-1 = ±q through A and B with directions u, v.
inline double singular_line_distance(Point p) {
    const double r = 1.0 / std::sqrt(2.0);
    return r * std::min({std::abs(p.x + 1.0 - p.y), std::abs(p.x + 1.0 + p.y), std::abs(p.x - 1.0 - p.y),
                         std::abs(p.x - 1.0 + p.y)});
}

}  // namespace detail

/// ((p+1)² - q²)((p-1)² - q²) > 0 in the normalized frame, i.e. σ(PA)σ(PB) > 0.
inline bool is_admissible_normalized(Point p) {
    if (detail::singular_line_distance(p) < kSingularPositionDistance)
        fail(ErrorKind::SingularPosition, "P lies on a line through A or B parallel to u or v");
    const double fa = (p.x + 1.0) * (p.x + 1.0) - p.y * p.y;
    const double fb = (p.x - 1.0) * (p.x - 1.0) - p.y * p.y;
    return fa * fb > 0.0;
}

inline bool is_admissible(Point p, const IsopticSpec& spec) {
    return is_admissible_normalized(spec.normalization()(p));
}

struct LocusSample {
    Point point;
    bool admissible = false;
    int branch = 0;  // 0: branch through A and B, 1: the opposite branch
};

/// Half-width T of the rapidity window: the branch through A, B is sampled for
/// t in [-T, T] with |p| <= 4 at the ends, which always contains t = ±θ.
inline double rapidity_window(double theta) { return std::asinh(4.0 * std::abs(std::sinh(theta))); }

/// n samples of the locus in the original frame, ceil(n/2) on the branch
/// through A and B and the rest on the opposite branch, tagged by
/// admissibility. Points on the singular lines are tagged inadmissible.
inline std::vector<LocusSample> sample_locus(const IsopticSpec& spec, std::size_t n) {
    if (n < 2) fail(ErrorKind::InvalidArgument, "need at least two samples");
    require_theta(spec.theta());
    const double theta = spec.theta();
    const AffineMap to_normal = spec.normalization();
    const AffineMap to_original = invert_map(to_normal);
    const double window = rapidity_window(theta);

    std::vector<LocusSample> out;
    out.reserve(n);
    const std::size_t counts[2] = {(n + 1) / 2, n / 2};
    for (int branch = 0; branch < 2; ++branch) {
        const std::size_t k = counts[branch];
        for (std::size_t i = 0; i < k; ++i) {
            const double t = (k == 1) ? 0.0 : -window + 2.0 * window * static_cast<double>(i) / static_cast<double>(k - 1);
            Point p = isoptic_point(theta, t);
            if (branch == 1) p = reflect_through_center(p, theta);
            bool admissible = false;
            try {
                admissible = is_admissible_normalized(p);
            } catch (const GeometryError& e) {
                if (e.kind() != ErrorKind::SingularPosition) throw;
            }
            out.push_back({to_original(p), admissible, branch});
        }
    }
    return out;
}

struct SectorComparison {
    double angle = 0.0;
    double sector = 0.0;
};

/// Abscissa where the line of direction d meets XY = ±1 in the frame with
/// U, V as axes (the branch with X > 0).
inline double unit_hyperbola_abscissa(Vec2 d, const DirectionPair& dirs) {
    return 1.0 / std::sqrt(std::abs(dirs.frame_slope(d)));
}

/// The affine angle next to the signed area of the hyperbolic sector of
/// XY = ±1 (frame with U, V as axes) cut out by the two rays. With x_A, x_B
/// the abscissae of the cut points the sector area is log(x_B / x_A).
inline SectorComparison sector_area_equivalence(Point o, Point a, Point b, const DirectionPair& dirs) {
    const AngleResult angle = affine_angle(o, a, b, dirs);
    if (!angle.is_real()) fail(ErrorKind::ComponentMismatch, "rays lie in different components");
    const double xa = unit_hyperbola_abscissa(a - o, dirs);
    const double xb = unit_hyperbola_abscissa(b - o, dirs);
    return {angle.theta(), std::log(xb) - std::log(xa)};
}

}  // namespace affang
