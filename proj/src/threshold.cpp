#include "pok/threshold.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <stdexcept>

namespace pok {

namespace {

struct Bisector
{
    int k;
    double tie_tolerance;
    double width;
    std::vector<Transition>& out;

    ModeSet modes_at(double lambda) const
    {
        return find_modes(OrderKParams(k, lambda), tie_tolerance).modes;
    }

    void refine(double lo, ModeSet lo_set, double hi, ModeSet hi_set)
    {
        while (hi - lo > width)
        {
            double mid = lo + (hi - lo) / 2;
            ModeSet mid_set = modes_at(mid);
            if (mid_set == lo_set)
            {
                lo = mid;
                continue;
            }
            if (mid_set == hi_set)
            {
                hi = mid;
                continue;
            }
            ModeSet joined;
            std::set_union(lo_set.begin(), lo_set.end(), hi_set.begin(), hi_set.end(),
                           std::back_inserter(joined));
            if (mid_set == joined)
            {
                out.push_back({mid, mid, mid, lo_set, hi_set, mid_set});
                return;
            }
            refine(lo, lo_set, mid, mid_set);
            refine(mid, std::move(mid_set), hi, hi_set);
            return;
        }
        out.push_back({lo, hi, lo + (hi - lo) / 2, std::move(lo_set), std::move(hi_set), {}});
    }
};

} // namespace

ThresholdReport threshold_scan(int k, double lambda_min, double lambda_max, double grid_step,
                               double tie_tolerance, double bracket_width)
{
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (!(lambda_min > 0.0 && lambda_min < lambda_max && std::isfinite(lambda_max)))
        throw std::invalid_argument("scan range must satisfy 0 < min < max");
    if (!(grid_step > 0.0))
        throw std::invalid_argument("grid step must be > 0");
    if (!(bracket_width > 0.0))
        throw std::invalid_argument("bracket width must be > 0");

    ThresholdReport report{k, lambda_min, lambda_max, grid_step, bracket_width, {}};

    std::vector<double> grid;
    auto steps = static_cast<long>(std::floor((lambda_max - lambda_min) / grid_step + 1e-9));
    for (long i = 0; i <= steps; ++i)
        grid.push_back(std::min(lambda_min + static_cast<double>(i) * grid_step, lambda_max));
    if (grid.back() < lambda_max - 1e-12)
        grid.push_back(lambda_max);

    Bisector bisector{k, tie_tolerance, bracket_width, report.transitions};
    ModeSet previous = bisector.modes_at(grid.front());
    for (std::size_t i = 1; i < grid.size(); ++i)
    {
        ModeSet current = bisector.modes_at(grid[i]);
        if (current != previous)
            bisector.refine(grid[i - 1], previous, grid[i], current);
        previous = std::move(current);
    }
    return report;
}

} // namespace pok
