#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "pok/params.hpp"

namespace pok {

/// Ascending list of support points.
using ModeSet = std::vector<long>;

std::string format_modes(const ModeSet& modes); // "[2,3]"

/// Bracket [lower, upper] that must contain every mode:
/// floor(mu) - k(k+1)/2 + 1 - delta_{k,1} <= m <= floor(mu), lower clamped at 0.
struct ModeBounds
{
    long lower = 0;
    long upper = 0;

    bool contains(long x) const noexcept { return lower <= x && x <= upper; }
};

ModeBounds mode_bounds(const OrderKParams& params);

inline constexpr double default_tie_tolerance = 1e-12;

struct ModeResult
{
    OrderKParams params;
    ModeSet modes;
    double max_prob = 0.0;
    long search_bound = 0;
    /// Relative tolerance for ties; zero on the exact path.
    double tie_tolerance = 0.0;
    /// The unexplored tail mass beyond search_bound is below max_prob.
    bool certified = false;
    /// Set when the answer came from exact rational comparisons.
    std::optional<RationalLambda> exact_lambda;
};

/// Raised when the search reaches its hard cap without a termination
/// certificate.
class CertificationError : public std::runtime_error
{
  public:
    CertificationError(const OrderKParams& params, long cap);
    const OrderKParams& params() const noexcept { return params_; }

  private:
    OrderKParams params_;
};

/// floor(mu) + 10 k (k+1) + 100
long search_cap(const OrderKParams& params);

/// Scan x = 0, 1, ... tracking the running maximum M and cumulative mass C;
/// stop at the first x >= floor(mu) where 1 - C < M. Every unexplored point
/// then has probability below M, so the tied maximizers found so far are all
/// the modes. The search never stops short of floor(mu), so the upper mode
/// bound is checked rather than relied on.
///
/// A tie_tolerance of zero is only meaningful for exact arithmetic and is
/// rejected here; use find_modes_exact.
ModeResult find_modes(const OrderKParams& params, double tie_tolerance = default_tie_tolerance);

/// Same search, but maximizers are compared as exact rationals P_x(lambda).
/// The float pmf is used only for the tail-mass certificate.
ModeResult find_modes_exact(int k, const RationalLambda& lambda);

/// lambda k (k+1) / 2 - floor(k/2), valid for integer lambda and 2 <= k <= 5.
long mode_formula_integer_lambda(int k, long lambda);

/// 2 / (k (k+1)); below this the unique mode is 0.
double prop21_region(int k);

/// a + b sqrt(radicand), for exact classification at quadratic irrationals.
struct QuadraticSurd
{
    long long a = 0;
    long long b = 0;
    long long radicand = 0;

    double to_double() const;
};

/// -1 + sqrt(3): the k = 2 rate where modes 0 and 2 tie.
inline constexpr QuadraticSurd k2_tie_lambda{-1, 1, 3};

/// Mode set of the order-2 distribution for 0 < lambda < 1, decided by the
/// sign of lambda + lambda^2/2 - 1: {0} if negative, {0, 2} if zero, {2} if
/// positive. All overloads compare exactly; a double is taken at its exact
/// binary value.
ModeSet prop22_classify(const RationalLambda& lambda);
ModeSet prop22_classify(double lambda);
ModeSet prop22_classify(const QuadraticSurd& lambda);

} // namespace pok
