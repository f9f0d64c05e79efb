#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "roadforge/config.hpp"
#include "roadforge/polyline.hpp"
#include "roadforge/segmentation.hpp"
#include "roadforge/vec2.hpp"

namespace roadforge {

/// Paired cubics x(s), y(s) over a local arc-length domain starting at 0.
struct CubicCoeffs {
    std::array<double, 4> a{};  ///< x(s) = a0 + a1 s + a2 s^2 + a3 s^3
    std::array<double, 4> b{};  ///< y(s) = b0 + b1 s + b2 s^2 + b3 s^3
};

Vec2 eval_cubic(const CubicCoeffs& c, double s);
Vec2 eval_cubic_d1(const CubicCoeffs& c, double s);
Vec2 eval_cubic_d2(const CubicCoeffs& c, double s);

/// One fitted primitive of the road model.
struct FittedPrimitive {
    int type{0};         ///< -1 left turn, 0 straight, +1 right turn
    std::size_t id{0};   ///< index of the first source point covered
    std::size_t nbr{0};  ///< number of source points covered (junctions shared)
    CubicCoeffs coeffs;
    double length{0.0};     ///< arc-domain upper bound L, m
    double max_error{0.0};  ///< max deviation from the covered source points, m
};

/// Ordered fitted primitives plus road width and provenance.
struct RoadModel {
    std::vector<FittedPrimitive> primitives;
    double road_width{7.0};
    std::string source;
    PipelineConfig params;

    double total_length() const;
};

/// s over the points of one run: s0 = 0, then cumulative chord length.
std::vector<double> local_arc_params(std::span<const Vec2> points);

/// Unconstrained cubic least squares per axis over >= 4 points. Solved by
/// Householder QR on the scale-normalized Vandermonde matrix; matches the
/// normal-equation solution on well-conditioned inputs. Throws
/// RankDeficiencyError on fewer than 4 distinct s or collinear powers.
CubicCoeffs fit_cubic_unconstrained(std::span<const Vec2> points, std::span<const double> s);

/// Cubic least squares forced through the first and last points exactly.
/// The residual after subtracting the endpoint interpolant is fit with basis
/// functions vanishing at s = 0 and s = L, so the two remaining degrees of
/// freedom per axis minimize the squared interior residuals. Two input points
/// degenerate to the chord, three to the interpolating quadratic.
CubicCoeffs fit_cubic_endpoint_constrained(std::span<const Vec2> points,
                                           std::span<const double> s);

/// Endpoint-constrained chord: degree-1 model through first and last points.
CubicCoeffs fit_straight(std::span<const Vec2> points, std::span<const double> s);

/// Max over run points of the Euclidean distance between the fitted point at
/// s_i and input point i.
double max_deviation(const CubicCoeffs& coeffs, std::span<const Vec2> points,
                     std::span<const double> s);

/// Fits one run and recursively splits it at the midpoint index (the midpoint
/// sample shared by both halves) until every primitive's deviation is below
/// `error_bound`. Type 0 runs use the chord fit, turn runs the
/// endpoint-constrained cubic. Termination is structural: a 4-point turn is
/// interpolated exactly and a 2-point run is a chord.
std::vector<FittedPrimitive> fit_with_split(int type, std::size_t first_index,
                                            std::span<const Vec2> points,
                                            std::span<const double> s, double error_bound);

/// Fits every run of the partition and concatenates the primitives in order.
/// Each run's fit range is extended to include the next run's first point so
/// that consecutive primitives share their junction point exactly.
RoadModel build_model(const RoadPolyline& polyline, const LabelArray& labels,
                      std::span<const PrimitiveRun> runs, const PipelineConfig& config);

struct ModelPoint {
    Vec2 position;
    Vec2 tangent;  ///< unit
    double kappa{0.0};
};

/// Locates the primitive owning global arc parameter s (0 <= s <= total
/// length) and evaluates position, unit tangent and signed curvature there.
ModelPoint eval_model(const RoadModel& model, double s);

struct EdgePolylines {
    std::vector<Vec2> left;
    std::vector<Vec2> right;
    /// Samples where half_width >= local turning radius (self-intersecting
    /// offset); points are emitted anyway.
    std::size_t tight_radius_samples{0};
};

/// Left/right road edges sampled every `step` meters of model parameter:
/// position +/- half_width times the left unit normal.
EdgePolylines offset_edges(const RoadModel& model, double half_width, double step);

/// C0 is guaranteed at junctions; tangent and curvature may jump. These
/// diagnostics report the per-junction mismatch.
struct JunctionDiagnostic {
    std::size_t index{0};  ///< junction between primitive index and index+1
    double tangent_angle_rad{0.0};
    double kappa_jump{0.0};
};

std::vector<JunctionDiagnostic> junction_diagnostics(const RoadModel& model);

}  // namespace roadforge
