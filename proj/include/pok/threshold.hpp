#pragma once

#include <vector>

#include "pok/modes.hpp"

namespace pok {

/// One change of the certified mode set as lambda increases.
struct Transition
{
    double lambda_lo = 0.0; // mode set is `below` here
    double lambda_hi = 0.0; // mode set is `above` here
    double lambda_star = 0.0;
    ModeSet below;
    ModeSet above;
    /// Non-empty when a probe landed on a tie: the mode set at lambda_star
    /// itself (lambda_lo == lambda_hi == lambda_star in that case).
    ModeSet at_point;
};

struct ThresholdReport
{
    int k = 1;
    double lambda_min = 0.0;
    double lambda_max = 0.0;
    double grid_step = 0.0;
    double bracket_width = 0.0;
    std::vector<Transition> transitions; // ascending in lambda_star
};

inline constexpr double default_bracket_width = 1e-9;

/// Certified mode sets on the grid lambda_min + i * grid_step (plus
/// lambda_max itself), with every change bisected down to bracket_width.
/// A probe whose mode set matches neither end of its bracket splits the
/// bracket in two, unless it is the union of both ends (a tie), which is
/// reported as a degenerate transition at that point.
ThresholdReport threshold_scan(int k, double lambda_min, double lambda_max, double grid_step,
                               double tie_tolerance = default_tie_tolerance,
                               double bracket_width = default_bracket_width);

} // namespace pok
