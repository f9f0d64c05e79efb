#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "roadforge/arc_length.hpp"
#include "roadforge/polyline.hpp"
#include "roadforge/vec2.hpp"

namespace roadforge {

/// Which local least-squares estimator produces curvature at each point.
enum class CurvatureMethod {
    /// Weighted quadratics x(s), y(s) in arc length, combined into kappa/T/N.
    /// Handles vertical tangents without axis switching; the default.
    kIndependentCoordinates,
    /// Graph parabola y = f(x) (or x = f(y), chosen by coordinate variation).
    kImplicitParabola,
};

/// Per-point result of the curvature stage.
struct CurvatureSample {
    std::size_t index{0};
    double s{0.0};           ///< arc length from the first point, m
    double kappa{0.0};       ///< signed curvature, 1/m
    Vec2 tangent{1.0, 0.0};  ///< unit tangent
    Vec2 normal{0.0, 1.0};   ///< unit normal, tangent rotated +90 deg times sign(kappa)
};

/// Index range of a size-(2q+1) sliding window, shifted to stay inside [0, n).
/// The center keeps its absolute index; near the ends the window is one-sided.
struct Window {
    std::size_t first{0};
    std::size_t count{0};
    std::size_t center{0};
};

Window clamped_window(std::size_t center, std::size_t q, std::size_t n);

enum class FitAxis {
    kXAbscissa,  ///< curve modeled as y = f(x)
    kYAbscissa,  ///< curve modeled as x = f(y)
};

/// Graph-parabola derivatives at the window center.
struct ParabolaFit {
    double f1{0.0};  ///< f'(0), dimensionless slope
    double f2{0.0};  ///< f''(0), 1/m
    FitAxis axis{FitAxis::kXAbscissa};
    /// +1 when the abscissa coordinate increases along the point order,
    /// -1 otherwise. Needed to orient the curvature sign with the traversal.
    int direction{1};
};

/// Least-squares parabola through a point window, the window's center point
/// translated to the local origin. The abscissa is the coordinate with the
/// larger variation over the window.
///
/// Minimizes sum_i (v_i - f1 u_i - 1/2 f2 u_i^2)^2 where (u, v) are the
/// translated abscissa/ordinate pairs. Throws DegenerateWindowError when both
/// axis choices lead to a singular system, TooFewPointsError below 5 points.
ParabolaFit fit_parabola_implicit(std::span<const Vec2> window_points, std::size_t center);

/// Signed curvature of a fitted graph parabola, oriented along the traversal:
/// kappa = direction * f2 / (1 + f1^2)^(3/2), negated for a y abscissa.
double curvature_from_parabola(const ParabolaFit& fit);

/// Compact-support window weight (1 - (l/l_max)^2)^2: maximal at l = 0,
/// non-increasing in |l|, zero at and beyond |l| = l_max.
double window_weight(double l, double l_max);

/// Local quadratic model of the curve as a function of arc length:
/// x(s) ~ x0 + x1 s + 1/2 x2 s^2 and likewise for y.
struct QuadraticLocalModel {
    double x1{0.0};  ///< x'(0)
    double x2{0.0};  ///< x''(0), 1/m
    double y1{0.0};  ///< y'(0)
    double y2{0.0};  ///< y''(0), 1/m
};

/// Weighted least-squares fit of the quadratic local model over one window.
///
/// `arc_offsets` are the per-member arc lengths centered on the window's
/// center point (offset 0 there); `center` indexes the center point within
/// `window_points`. Coordinates are translated to the center internally.
/// For each axis solves the 2x2 system
///     [a1 a2; a2 a3] [v'; v''] = [b1; b2]
/// with a1 = sum w l^2, a2 = 1/2 sum w l^3, a3 = 1/4 sum w l^4,
/// b1 = sum w l dv, b2 = 1/2 sum w l^2 dv. Throws DegenerateWindowError when
/// |a1 a3 - a2^2| < 1e-12 (window collinear in s).
QuadraticLocalModel fit_independent_coordinates(std::span<const Vec2> window_points,
                                                std::span<const double> arc_offsets,
                                                std::span<const double> weights,
                                                std::size_t center);

/// Curvature, tangent and normal derived from a local quadratic model.
struct LocalFrame {
    double kappa{0.0};
    Vec2 tangent{1.0, 0.0};
    Vec2 normal{0.0, 1.0};
};

/// kappa = (x1 y2 - y1 x2) / |(x1, y1)|^3, T = (x1, y1) normalized,
/// N = sign(kappa) * (-T.y, T.x). sign(0) is taken as +1 so N stays unit.
LocalFrame curvature_at(const QuadraticLocalModel& model);

/// One curvature sample per polyline point, from windows of half-width q
/// (2q+1 points, q >= 2). Near the ends windows are clamped one-sided; if the
/// whole polyline is shorter than 2q+1 points the window shrinks to it, but
/// at least 5 points are required (TooFewPointsError otherwise).
std::vector<CurvatureSample> estimate_curvature(
    const RoadPolyline& polyline, std::size_t q,
    CurvatureMethod method = CurvatureMethod::kIndependentCoordinates);

}  // namespace roadforge
