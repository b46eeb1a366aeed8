#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace pok {

/// Each claim is an executable sweep over a deterministic parameter grid.
enum class ClaimId
{
    eq12_bounds,         // every mode lies inside mode_bounds
    eq13_integer_lambda, // integer-lambda mode formula, 2 <= k <= 5
    prop21,              // unique mode 0 below 2/(k(k+1))
    prop22,              // order-2 classification by lambda + lambda^2/2 vs 1
    proof_inequalities,  // f_2(0) > f_2(1) on (0,1), f_2(1) < f_2(2) on (0,5]
    normalization,
    mean_identity,
    oracle_equivalence,
};

std::span<const ClaimId> all_claims() noexcept;
std::string_view to_string(ClaimId claim) noexcept;
std::optional<ClaimId> parse_claim(std::string_view name) noexcept;

/// Optional replacements for a suite's default grid. Each suite accepts a
/// subset; anything else, or a value outside the documented range, raises
/// GridOverrideError.
///
///   k_min/k_max   1..12 (eq13_integer_lambda: 2..5; oracle_equivalence: 1..8)
///   lambdas       explicit rates in (0, 5] (eq12_bounds, normalization,
///                 mean_identity, oracle_equivalence)
///   lambda_count  1..5000 (eq12_bounds, prop21, prop22, proof_inequalities);
///                 largest integer rate 1..10 for eq13_integer_lambda
///   x_max         0..40 (oracle_equivalence)
///   seed          any (prop22)
struct GridOverrides
{
    std::optional<int> k_min;
    std::optional<int> k_max;
    std::optional<std::vector<double>> lambdas;
    std::optional<int> lambda_count;
    std::optional<int> x_max;
    std::optional<std::uint64_t> seed;
};

class GridOverrideError : public std::invalid_argument
{
  public:
    using std::invalid_argument::invalid_argument;
};

/// Enough to replay the sweep exactly.
struct GridDescription
{
    int k_min = 1;
    int k_max = 1;
    std::string lambda_rule;
    std::vector<double> lambdas; // float rates swept; empty when lambda_rule generates rationals
    std::optional<int> x_max;
    std::optional<std::uint64_t> seed;
    std::size_t cases = 0;
};

struct Failure
{
    std::string params;
    std::string expected;
    std::string observed;
};

/// worst_margin is the tightest slack seen over the grid; it is positive when
/// every case passes and its meaning is spelled out in margin_definition.
struct VerificationReport
{
    ClaimId claim;
    GridDescription grid;
    bool passed = true;
    std::vector<Failure> failures;
    double worst_margin = 0.0;
    std::string margin_definition;
};

VerificationReport run_suite(ClaimId claim, const GridOverrides& overrides = {});

} // namespace pok
