#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "affang/hyperbola_power.hpp"
#include "support.hpp"

using namespace affang;
using testsupport::Gen;
namespace oracle = testsupport::oracle;

namespace {

void expect_error(ErrorKind kind, const auto& fn) {
    try {
        fn();
        ADD_FAILURE() << "expected " << to_string(kind);
    } catch (const GeometryError& e) {
        EXPECT_EQ(e.kind(), kind) << e.what();
    }
}

const AxisHyperbola kUnit = AxisHyperbola::standard({0, 0}, 1.0);

AxisHyperbola random_hyperbola(Gen& g, const DirectionPair& dirs, double kappa_sign = 0.0) {
    const double sign = kappa_sign == 0.0 ? g.sign() : kappa_sign;
    return AxisHyperbola::from_directions(g.point(5), sign * g.log_uniform(0.1, 10), dirs.u(), dirs.v());
}

// A random secant through p with two real intersections, or nothing after
// enough tries.
std::optional<std::pair<DirectionVector, SecantResult>> random_secant(Gen& g, Point p, const AxisHyperbola& h) {
    for (int tries = 0; tries < 200; ++tries) {
        const DirectionVector d(g.unit_vec());
        try {
            const SecantResult s = secant_intersections(p, d, h);
            if (!s.tangent) return std::pair{d, s};
        } catch (const GeometryError& e) {
            if (e.kind() != ErrorKind::NoRealIntersection) throw;
        }
    }
    return std::nullopt;
}

}  // namespace

// ─── Core quantity and secants ──────────────────────────────────────────────

TEST(Core, Examples) {
    EXPECT_EQ(core_quantity({2, 0.5}, kUnit), 0.0);
    EXPECT_EQ(core_quantity({2, 2}, kUnit), 3.0);
    EXPECT_EQ(core_quantity({0, 0}, kUnit), -1.0);
}

TEST(Core, NegativeKappaFlipsTheFrame) {
    const AxisHyperbola h = AxisHyperbola::standard({0, 0}, -2.0);
    EXPECT_EQ(h.kappa(), 2.0);
    EXPECT_TRUE(on_curve({1, -2}, h));
    EXPECT_TRUE(on_curve({-2, 1}, h));
    EXPECT_FALSE(on_curve({1, 2}, h));
}

TEST(Secant, AntiDiagonalThroughTwoTwo) {
    const SecantResult s = secant_intersections({2, 2}, DirectionVector(1, -1), kUnit);
    EXPECT_FALSE(s.tangent);
    const double lo = std::min(s.a.x, s.b.x), hi = std::max(s.a.x, s.b.x);
    EXPECT_NEAR(lo, 2 - std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(hi, 2 + std::sqrt(3.0), 1e-12);
    EXPECT_NEAR(s.a.x + s.a.y, 4.0, 1e-12);
}

TEST(Secant, AlongAnAsymptoteHasNoSecondPoint) {
    expect_error(ErrorKind::NoRealIntersection, [] { secant_intersections({2, 2}, DirectionVector(1, 0), kUnit); });
}

TEST(Secant, MissingLineFails) {
    // from (1,-1) the line x + y = 0 misses xy = 1
    expect_error(ErrorKind::NoRealIntersection, [] { secant_intersections({1, -1}, DirectionVector(1, -1), kUnit); });
}

TEST(Secant, TangentFromAPointWithNegativeCore) {
    // q t² - 2κt + κp = 0 at P = (1,-1): t = -1 ± √2
    const Point p{1, -1};
    ASSERT_LT(core_quantity(p, kUnit), 0.0);
    for (double t : {-1 + std::sqrt(2.0), -1 - std::sqrt(2.0)}) {
        const SecantResult s = secant_intersections(p, DirectionVector(1, -1 / (t * t)), kUnit);
        EXPECT_TRUE(s.tangent);
        EXPECT_NEAR(s.a.x, t, 1e-6);
        EXPECT_EQ(s.a, s.b);
    }
}

// Real tangents exist exactly when some direction through P turns the secant
// discriminant from positive to negative; the library's predicate is the
// sign of κ(κ - XY), i.e. a negative core quantity.
TEST(Core, NegativeCoreIffRealTangents) {
    Gen g(51);
    for (int i = 0; i < 300; ++i) {
        const double kappa = g.log_uniform(0.1, 10);
        const AxisHyperbola h = AxisHyperbola::standard({0, 0}, kappa);
        const Point p = g.point(4);
        const double core = core_quantity(p, h);
        if (std::abs(core) < 1e-3) continue;
        bool sign_change = false;
        double prev = NAN;
        for (int k = 0; k <= 2000; ++k) {
            const double phi = std::numbers::pi * k / 2000.0;
            const double ex = std::cos(phi), ey = std::sin(phi);
            const double qa = ex * ey, qb = p.x * ey + p.y * ex, qc = p.x * p.y - kappa;
            const double d = qb * qb - 4 * qa * qc;
            if (!std::isnan(prev) && prev * d < 0) sign_change = true;
            prev = d;
        }
        EXPECT_EQ(core < 0.0, sign_change) << "P=(" << p.x << "," << p.y << ") kappa=" << kappa;
        EXPECT_EQ(core < 0.0, tangency_discriminant(p, h) > 0.0);
    }
}

// ─── Projections and areas ──────────────────────────────────────────────────

TEST(Projections, Examples) {
    const auto p1 = asymptotic_projections({1, 1}, kUnit);
    EXPECT_EQ(p1.a1, (Point{1, 0}));
    EXPECT_EQ(p1.a2, (Point{0, 1}));
    const auto p4 = asymptotic_projections({2, 2}, AxisHyperbola::standard({0, 0}, 4));
    EXPECT_EQ(p4.a1, (Point{2, 0}));
    EXPECT_EQ(p4.a2, (Point{0, 2}));
    expect_error(ErrorKind::NotOnCurve, [] { asymptotic_projections({1, 2}, kUnit); });
}

TEST(Areas, Examples) {
    EXPECT_NEAR(projected_area({2, 2}, {1, 1}, 1, kUnit), 1.0, 1e-15);
    EXPECT_NEAR(projected_area({2, 2}, {1, 1}, 2, kUnit), 1.0, 1e-15);
    EXPECT_EQ(projected_area({1, 1}, {1, 1}, 1, kUnit), 0.0);
    EXPECT_EQ(symmetric_area({1, 1}, {1, 1}, kUnit), 0.0);
    EXPECT_NEAR(symmetric_area({2, 2}, {1, 1}, kUnit), 1.0, 1e-15);
    expect_error(ErrorKind::NotOnCurve, [] { projected_area({2, 2}, {1, 3}, 1, kUnit); });
}

TEST(Areas, SymmetricAreaSquaredIsTheProduct) {
    Gen g(52);
    for (int i = 0; i < 200; ++i) {
        const auto h = random_hyperbola(g, testsupport::random_dirs(g));
        const Point a = h.from_local({g.uniform(0.2, 5) * g.sign(), 0.0});
        const Vec2 w = h.local(a);
        const Point on = h.from_local({w.x, h.kappa() / w.x});
        const Point p = g.point();
        const double s = symmetric_area(p, on, h);
        const double prod = projected_area(p, on, 1, h) * projected_area(p, on, 2, h);
        EXPECT_NEAR(s * s, prod, 1e-12 * std::max(1.0, prod));
    }
}

// ─── Power ──────────────────────────────────────────────────────────────────

TEST(Power, WorkedExample) {
    EXPECT_EQ(power({2, 2}, kUnit), 3.0);
    EXPECT_EQ(power({2, 0.5}, kUnit), 0.0);
    Gen g(53);
    for (int i = 0; i < 5; ++i) {
        const auto sec = random_secant(g, {2, 2}, kUnit);
        ASSERT_TRUE(sec);
        const double prod = symmetric_area({2, 2}, sec->second.a, kUnit) * symmetric_area({2, 2}, sec->second.b, kUnit);
        EXPECT_NEAR(prod, 3.0, 1e-9 * 3.0);
    }
}

TEST(Power, SecantIndependent) {
    Gen g(54);
    int configs = 0;
    while (configs < 40) {
        const auto dirs = testsupport::random_dirs(g);
        const auto h = random_hyperbola(g, dirs);
        const Point p = g.point(5);
        const double expect = power(p, h);
        if (expect < 1e-3) continue;
        ++configs;
        EXPECT_NEAR(expect, h.kappa() * std::abs(core_quantity(p, h)), 1e-15 * expect);
        for (int k = 0; k < 20; ++k) {
            const auto sec = random_secant(g, p, h);
            if (!sec) break;
            const auto& s = sec->second;
            const double prod = symmetric_area(p, s.a, h) * symmetric_area(p, s.b, h);
            EXPECT_NEAR(prod, expect, 1e-9 * expect);
        }
    }
}

TEST(Power, BruteForceSecantProducts) {
    Gen g(55);
    int checked = 0;
    while (checked < 60) {
        const auto dirs = testsupport::random_dirs(g);
        const Vec2 u = dirs.u().vec(), v = dirs.v().vec();
        const Point center = g.point(3);
        const double kappa = g.sign() * g.log_uniform(0.2, 5);
        const AxisHyperbola h = AxisHyperbola::from_directions(center, kappa, dirs.u(), dirs.v());
        const Point p = g.point(4);
        const Vec2 dir = g.unit_vec();
        const auto brute = oracle::brute_secant(p, dir, center, kappa, u, v);
        if (!brute) continue;
        const double prod = oracle::symmetric_area(brute->p, brute->a) * oracle::symmetric_area(brute->p, brute->b);
        // κ in the raw frame may be negative; the power formula uses |κ|
        const double closed = std::abs(kappa) * std::abs(brute->p.x * brute->p.y - kappa);
        EXPECT_NEAR(prod, closed, 1e-7 * std::max(1.0, closed));
        EXPECT_NEAR(power(p, h), closed, 1e-9 * std::max(1.0, closed));
        ++checked;
    }
}

TEST(OneSided, WorkedExample) {
    const SecantResult s = secant_intersections({2, 2}, DirectionVector(1, -1), kUnit);
    const auto r = one_sided_identity({2, 2}, s, kUnit);
    EXPECT_NEAR(r.symmetric, 3.0, 1e-12);
    EXPECT_NEAR(r.first, 3.0, 1e-12);
    EXPECT_NEAR(r.second, 3.0, 1e-12);
}

TEST(OneSided, DegenerateAtTheCurve) {
    const Point p{2, 0.5};
    const SecantResult s = secant_intersections(p, DirectionVector(1, -1), kUnit);
    const auto r = one_sided_identity(p, s, kUnit);
    EXPECT_NEAR(r.symmetric, 0.0, 1e-12);
    EXPECT_NEAR(r.first, 0.0, 1e-12);
    EXPECT_NEAR(r.second, 0.0, 1e-12);
}

TEST(OneSided, ThreeProductsAgree) {
    Gen g(56);
    int checked = 0;
    while (checked < 500) {
        const auto h = random_hyperbola(g, testsupport::random_dirs(g));
        const Point p = g.point(5);
        const auto sec = random_secant(g, p, h);
        if (!sec || power(p, h) < 1e-3) continue;
        const auto r = one_sided_identity(p, sec->second, h);
        EXPECT_NEAR(r.first, r.symmetric, 1e-9 * r.symmetric);
        EXPECT_NEAR(r.second, r.symmetric, 1e-9 * r.symmetric);
        ++checked;
    }
}

// ─── Chords ─────────────────────────────────────────────────────────────────

TEST(Chords, LineThroughOneAndTwo) {
    const Line l = chord_line(1, 2);
    for (double x : {-3.0, 0.0, 1.0, 2.0, 7.5}) EXPECT_NEAR(l.distance_to({x, (3 - x) / 2}), 0.0, 1e-12);
    EXPECT_LE(l.distance_to({1, 1}), 1e-12);
    EXPECT_LE(l.distance_to({2, 0.5}), 1e-12);
    expect_error(ErrorKind::CoincidentParameters, [] { chord_line(2, 2); });
}

TEST(Chords, IntersectionExamples) {
    EXPECT_NEAR(chord_intersection_x(1, 2, 1, 3), 1.0, 1e-12);
    EXPECT_NEAR(chord_intersection_x(1, 4, 2, 3), 5.0, 1e-12);
    EXPECT_NEAR(intersect_lines(chord_line(1, 4), chord_line(2, 3)).x, 5.0, 1e-12);
    expect_error(ErrorKind::ParallelChords, [] { chord_intersection_x(1, 6, 2, 3); });
}

TEST(Chords, FormulaAgreesWithLineIntersection) {
    Gen g(57);
    int checked = 0;
    while (checked < 500) {
        double t[4];
        for (double& x : t) x = g.sign() * g.log_uniform(0.2, 5);
        if (std::abs(t[0] * t[1] - t[2] * t[3]) < 0.1 || std::abs(t[0] - t[1]) < 0.05 || std::abs(t[2] - t[3]) < 0.05) continue;
        const double x = chord_intersection_x(t[0], t[1], t[2], t[3]);
        const Point z = intersect_lines(chord_line(t[0], t[1]), chord_line(t[2], t[3]));
        EXPECT_NEAR(x, z.x, 1e-10 * std::max(1.0, std::abs(x)));
        ++checked;
    }
}

// ─── Radical axis and center ────────────────────────────────────────────────

TEST(Radical, WorkedAxis) {
    const AxisHyperbola h2 = AxisHyperbola::standard({-1, -0.5}, 3);
    const Line axis = radical_axis(kUnit, h2);
    for (Point p : {Point{1, 1}, Point{2, 0.5}, Point{3, 0}}) EXPECT_LE(axis.distance_to(p), 1e-12);
    EXPECT_TRUE(on_curve({1, 1}, h2));
    EXPECT_TRUE(on_curve({2, 0.5}, h2));
}

TEST(Radical, TangentCurvesGiveTheCommonTangent) {
    // (x+1)(y+1) = 4 touches xy = 1 at (1,1) with tangent x + y = 2
    const Line axis = radical_axis(kUnit, AxisHyperbola::standard({-1, -1}, 4));
    EXPECT_LE(axis.distance_to({1, 1}), 1e-12);
    EXPECT_LE(axis.distance_to({2, 0}), 1e-12);
}

TEST(Radical, DegenerateInputs) {
    expect_error(ErrorKind::IdenticalCurves, [] { radical_axis(kUnit, AxisHyperbola::standard({0, 0}, 1)); });
    expect_error(ErrorKind::ConcentricCurves, [] { radical_axis(kUnit, AxisHyperbola::standard({0, 0}, 2)); });
    expect_error(ErrorKind::NonLinearDifference, [] {
        radical_axis(kUnit, AxisHyperbola::from_directions({1, 0}, 1, DirectionVector(1, 1), DirectionVector(0, 1)));
    });
    expect_error(ErrorKind::IdenticalCurves,
                 [] { radical_center(kUnit, kUnit, AxisHyperbola::standard({1, 2}, 1)); });
    expect_error(ErrorKind::ParallelAxes, [] {
        radical_center(kUnit, AxisHyperbola::standard({0, 0}, 2), AxisHyperbola::standard({0, 0}, 3));
    });
}

TEST(Radical, CoreQuantitiesAgreeOnTheAxis) {
    Gen g(58);
    for (int i = 0; i < 300; ++i) {
        const auto dirs = testsupport::random_dirs(g);
        const auto h1 = random_hyperbola(g, dirs, 1.0), h2 = random_hyperbola(g, dirs, 1.0);
        const Line axis = radical_axis(h1, h2);
        const Point p = axis.at(g.uniform(-5, 5));
        const double c1 = core_quantity(p, h1), c2 = core_quantity(p, h2);
        EXPECT_NEAR(c1, c2, 1e-9 * std::max(1.0, std::abs(c1)));
    }
}

TEST(Radical, EqualKappaPowersAgreeOnTheAxis) {
    Gen g(59);
    for (int i = 0; i < 300; ++i) {
        const auto dirs = testsupport::random_dirs(g);
        const double kappa = g.log_uniform(0.1, 10);
        const auto h1 = AxisHyperbola::from_directions(g.point(5), kappa, dirs.u(), dirs.v());
        const auto h2 = AxisHyperbola::from_directions(g.point(5), kappa, dirs.u(), dirs.v());
        const Point p = radical_axis(h1, h2).at(g.uniform(-5, 5));
        EXPECT_NEAR(power(p, h1), power(p, h2), 1e-9 * std::max(1.0, power(p, h1)));
    }
}

TEST(Radical, CommonChordWhenTheCurvesMeet) {
    // xy = 1 and (x+1)(y+1/2) = 3 share (1,1) and (2,1/2)
    const AxisHyperbola h2 = AxisHyperbola::standard({-1, -0.5}, 3);
    const Line axis = radical_axis(kUnit, h2);
    const auto s = secant_intersections(axis.at(0), axis.dir(), kUnit);
    EXPECT_TRUE(on_curve(s.a, h2));
    EXPECT_TRUE(on_curve(s.b, h2));
}

TEST(Radical, CenterIsConcurrent) {
    Gen g(60);
    int checked = 0;
    while (checked < 100) {
        const auto dirs = testsupport::random_dirs(g);
        const auto h1 = random_hyperbola(g, dirs), h2 = random_hyperbola(g, dirs), h3 = random_hyperbola(g, dirs);
        Point c;
        try {
            c = radical_center(h1, h2, h3);
        } catch (const GeometryError& e) {
            ASSERT_EQ(e.kind(), ErrorKind::ParallelAxes);
            continue;
        }
        const double scale = std::max(1.0, norm(as_vec(c)));
        for (const Line& l : {radical_axis(h1, h2), radical_axis(h2, h3), radical_axis(h1, h3)})
            EXPECT_LE(l.distance_to(c), 1e-8 * scale);
        ++checked;
    }
}

// ─── Progression quadrilateral ──────────────────────────────────────────────

TEST(Progression, ThreeEighths) {
    EXPECT_NEAR(progression_quadrilateral_area(1, 2, 5), 0.375, 1e-12);
    EXPECT_NEAR(progression_quadrilateral_area(1, 2, 100), 0.375, 1e-12);
    EXPECT_NEAR(oracle::progression_area(1, 2, 5, 1), 0.375, 1e-12);
    EXPECT_DOUBLE_EQ(progression_area_closed_form(2), 0.375);
}

TEST(Progression, InvalidPositions) {
    expect_error(ErrorKind::InvalidPosition, [] { progression_quadrilateral_area(1, 2, 1); });
    expect_error(ErrorKind::InvalidPosition, [] { progression_quadrilateral_area(1, 2, 8); });
    expect_error(ErrorKind::InvalidPosition, [] { progression_quadrilateral_area(1, 2, -3); });
    expect_error(ErrorKind::InvalidArgument, [] { progression_quadrilateral_area(1, 1, 3); });
}

TEST(Progression, IndependentOfP) {
    Gen g(61);
    for (int i = 0; i < 100; ++i) {
        const double a = g.log_uniform(0.1, 10), r = g.log_uniform(0.25, 4), kappa = g.log_uniform(0.1, 10);
        if (std::abs(r - 1) < 0.05) continue;
        const double closed = kappa * progression_area_closed_form(r);
        for (int k = 0; k < 10; ++k) {
            const double p = a * g.log_uniform(0.05, 100);
            bool near_vertex = false;
            for (double x : {a, a * r, a * r * r, a * r * r * r}) near_vertex = near_vertex || std::abs(p / x - 1) < 1e-3;
            if (near_vertex) continue;
            const double area = progression_quadrilateral_area(a, r, p, kappa);
            EXPECT_NEAR(area, closed, 1e-9 * closed);
            EXPECT_NEAR(oracle::progression_area(a, r, p, kappa), closed, 1e-8 * closed);
        }
    }
}
