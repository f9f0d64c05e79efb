#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "roadforge/curvature.hpp"

namespace roadforge {

/// Per-point primitive label: -1 left turn, 0 straight line, +1 right turn.
using LabelArray = std::vector<int>;

/// Maximal run of equally labeled points. Coefficients are kept on the fitted
/// primitives; param_x/param_y stay zero until a caller copies them back.
struct PrimitiveRun {
    int type{0};
    std::size_t id{0};   ///< index of the run's first point
    std::size_t nbr{0};  ///< number of points in the run
    std::array<double, 4> param_x{};
    std::array<double, 4> param_y{};
};

/// ids[i] = +1 where kappa > 0, -1 where kappa < 0. Exact zeros map to +1;
/// straight detection captures them later.
LabelArray initial_marking(std::span<const CurvatureSample> samples);

/// Relabels every point by the sign of the label sum over the w-window
/// centered on it (clamped at the ends). w must be odd and >= 3. A zero sum
/// can only occur in a clamped window; the tie keeps the center's input label.
LabelArray vote_turns(const LabelArray& ids, std::size_t w);

/// ids[i] <- 0 wherever |kappa_i| < delta; other labels preserved.
LabelArray detect_straight(const LabelArray& ids, std::span<const CurvatureSample> samples,
                           double delta);

/// A straight-line point cannot be isolated: every maximal 0-run of length 1
/// is relabeled +1 if kappa there is positive, -1 otherwise.
LabelArray eliminate_isolated_straight(const LabelArray& ids,
                                       std::span<const CurvatureSample> samples);

/// Run-length encoding of the label array: maximal constant runs, in order,
/// covering all indices exactly once.
std::vector<PrimitiveRun> assign_primitives(const LabelArray& ids);

/// The four labeling passes in their fixed order: initial marking, turn
/// voting, straight detection, isolated-point elimination.
LabelArray segment_labels(std::span<const CurvatureSample> samples, std::size_t vote_w,
                          double straight_delta);

}  // namespace roadforge
