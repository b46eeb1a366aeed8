#include "pok/verify.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <random>

#include "pok/format.hpp"
#include "pok/modes.hpp"
#include "pok/pmf.hpp"
#include "pok/poly.hpp"

namespace pok {

namespace {

constexpr std::array claims{
    ClaimId::eq12_bounds,   ClaimId::eq13_integer_lambda, ClaimId::prop21,
    ClaimId::prop22,        ClaimId::proof_inequalities,  ClaimId::normalization,
    ClaimId::mean_identity, ClaimId::oracle_equivalence,
};

// Rates shared by the distribution-level sweeps.
const std::vector<double> canonical_lambdas{0.1, 0.3, 0.7, 1.0, 1.7, 3.0};

constexpr double oracle_rel_tol = 1e-12;
constexpr double normalization_tol = 1e-9;
constexpr double mean_abs_tol = 1e-6;
constexpr double partial_sum_excess = 1e-12;

constexpr std::uint64_t default_prop22_seed = 20240601;
constexpr long long prop22_denominator = 1'000'000;

constexpr double inf = std::numeric_limits<double>::infinity();

// Which overrides a suite accepts, and its k limits.
struct OverridePolicy
{
    int k_lo = 1;
    int k_hi = 12;
    bool k_range = false;
    bool lambdas = false;
    bool lambda_count = false;
    int lambda_count_max = 5000;
    bool x_max = false;
    bool seed = false;
};

OverridePolicy policy_for(ClaimId claim)
{
    switch (claim)
    {
        case ClaimId::eq12_bounds: return {1, 12, true, true, true};
        case ClaimId::eq13_integer_lambda: return {2, 5, true, false, true, 10};
        case ClaimId::prop21: return {1, 12, true, false, true};
        case ClaimId::prop22: return {2, 2, false, false, true, 5000, false, true};
        case ClaimId::proof_inequalities: return {2, 2, false, false, true};
        case ClaimId::normalization:
        case ClaimId::mean_identity: return {1, 12, true, true};
        case ClaimId::oracle_equivalence: return {1, 8, true, true, false, 0, true};
    }
    return {};
}

void check_overrides(ClaimId claim, const GridOverrides& o)
{
    auto p = policy_for(claim);
    std::string name(to_string(claim));
    auto reject = [&](const std::string& what) {
        throw GridOverrideError(name + ": " + what);
    };
    if ((o.k_min || o.k_max) && !p.k_range)
        reject("k range is fixed for this suite");
    for (auto k : {o.k_min, o.k_max})
        if (k && (*k < p.k_lo || *k > p.k_hi))
            reject("k must lie in " + std::to_string(p.k_lo) + ".." + std::to_string(p.k_hi));
    if (o.k_min && o.k_max && *o.k_min > *o.k_max)
        reject("k_min exceeds k_max");
    if (o.lambdas)
    {
        if (!p.lambdas)
            reject("explicit lambdas are not accepted");
        if (o.lambdas->empty())
            reject("lambda list is empty");
        for (double l : *o.lambdas)
            if (!(l > 0.0 && l <= 5.0))
                reject("lambda overrides must lie in (0, 5]");
    }
    if (o.lambda_count)
    {
        if (!p.lambda_count)
            reject("lambda_count is not accepted");
        if (*o.lambda_count < 1 || *o.lambda_count > p.lambda_count_max)
            reject("lambda_count must lie in 1.." + std::to_string(p.lambda_count_max));
    }
    if (o.x_max && (!p.x_max || *o.x_max < 0 || *o.x_max > 40))
        reject(p.x_max ? "x_max must lie in 0..40" : "x_max is not accepted");
    if (o.seed && !p.seed)
        reject("seed is not accepted");
}

std::string describe(int k, double lambda)
{
    return "k=" + std::to_string(k) + " lambda=" + shortest_repr(lambda);
}

std::string describe(int k, const RationalLambda& lambda)
{
    return "k=" + std::to_string(k) + " lambda=" + lambda.to_string();
}

// Accumulates a report as the sweep runs.
class ReportBuilder
{
  public:
    ReportBuilder(ClaimId claim, GridDescription grid, std::string margin_definition)
    {
        report_.claim = claim;
        report_.grid = std::move(grid);
        report_.margin_definition = std::move(margin_definition);
        report_.worst_margin = inf;
    }

    void count() { ++report_.grid.cases; }
    void margin(double m) { report_.worst_margin = std::min(report_.worst_margin, m); }
    void fail(std::string params, std::string expected, std::string observed)
    {
        report_.failures.push_back({std::move(params), std::move(expected), std::move(observed)});
    }

    VerificationReport finish()
    {
        report_.passed = report_.failures.empty();
        if (report_.worst_margin == inf)
            report_.worst_margin = 0.0;
        return std::move(report_);
    }

  private:
    VerificationReport report_;
};

void check_certificate(ReportBuilder& b, const ModeResult& r, const std::string& params)
{
    auto floor_mu = static_cast<long>(std::floor(mean(r.params)));
    if (!r.certified || r.search_bound < floor_mu)
        b.fail(params, "certified search reaching floor(mu)=" + std::to_string(floor_mu),
               "certified=" + std::string(r.certified ? "true" : "false")
                   + " search_bound=" + std::to_string(r.search_bound));
}

// Largest value among x != skip, relative gap (v[skip] - that) / v[skip].
double relative_lead(const std::vector<double>& v, std::size_t skip)
{
    double other = 0.0;
    for (std::size_t x = 0; x < v.size(); ++x)
        if (x != skip)
            other = std::max(other, v[x]);
    return (v[skip] - other) / v[skip];
}

GridDescription base_grid(const GridOverrides& o, int k_min, int k_max)
{
    GridDescription g;
    g.k_min = o.k_min.value_or(k_min);
    g.k_max = o.k_max.value_or(std::max(k_max, g.k_min));
    return g;
}

VerificationReport run_eq12(const GridOverrides& o)
{
    auto g = base_grid(o, 1, 8);
    if (o.lambdas)
    {
        g.lambda_rule = "explicit";
        g.lambdas = *o.lambdas;
    }
    else
    {
        int n = o.lambda_count.value_or(200);
        g.lambda_rule = "geometric 0.02*250^(i/" + std::to_string(n) + "), i=1.."
                        + std::to_string(n);
        for (int i = 1; i <= n; ++i)
            g.lambdas.push_back(0.02 * std::pow(250.0, static_cast<double>(i) / n));
    }

    ReportBuilder b(ClaimId::eq12_bounds, g,
                    "min over modes of the distance to the nearer bound, "
                    "min(m - lower, upper - m); negative means a violation");
    for (int k = g.k_min; k <= g.k_max; ++k)
        for (double lambda : g.lambdas)
        {
            b.count();
            OrderKParams params(k, lambda);
            auto r = find_modes(params);
            auto bounds = mode_bounds(params);
            check_certificate(b, r, describe(k, lambda));
            for (long m : r.modes)
            {
                b.margin(static_cast<double>(std::min(m - bounds.lower, bounds.upper - m)));
                if (!bounds.contains(m))
                    b.fail(describe(k, lambda),
                           "[" + std::to_string(bounds.lower) + "," + std::to_string(bounds.upper)
                               + "]",
                           std::to_string(m));
            }
        }
    return b.finish();
}

VerificationReport run_eq13(const GridOverrides& o)
{
    auto g = base_grid(o, 2, 5);
    int top = o.lambda_count.value_or(5);
    g.lambda_rule = "integers 1.." + std::to_string(top) + " (exact path)";
    for (int l = 1; l <= top; ++l)
        g.lambdas.push_back(l);

    ReportBuilder b(ClaimId::eq13_integer_lambda, g,
                    "min relative lead of P at the predicted mode over every other point, "
                    "(P_pred - max_other P) / P_pred");
    for (int k = g.k_min; k <= g.k_max; ++k)
        for (int l = 1; l <= top; ++l)
        {
            b.count();
            RationalLambda lambda(l, 1);
            auto r = find_modes_exact(k, lambda);
            long predicted = mode_formula_integer_lambda(k, l);
            check_certificate(b, r, describe(k, lambda));
            if (r.modes != ModeSet{predicted})
                b.fail(describe(k, lambda), format_modes({predicted}), format_modes(r.modes));

            auto scaled = pmf_exact_table(k, lambda, static_cast<int>(std::max(r.search_bound, predicted)));
            Rational other = 0;
            for (long x = 0; x < static_cast<long>(scaled.size()); ++x)
                if (x != predicted)
                    other = std::max(other, scaled[x]);
            Rational lead = (scaled[predicted] - other) / scaled[predicted];
            b.margin(lead.convert_to<double>());
        }
    return b.finish();
}

VerificationReport run_prop21(const GridOverrides& o)
{
    auto g = base_grid(o, 1, 8);
    int n = o.lambda_count.value_or(50);
    g.lambda_rule = "lambda = (2/(k(k+1))) * i/" + std::to_string(n + 1) + ", i=1.."
                    + std::to_string(n);

    ReportBuilder b(ClaimId::prop21, g,
                    "min relative lead of f(0) over every other point, (f(0) - max_other f) / f(0)");
    for (int k = g.k_min; k <= g.k_max; ++k)
        for (int i = 1; i <= n; ++i)
        {
            b.count();
            double lambda = prop21_region(k) * i / (n + 1);
            OrderKParams params(k, lambda);
            auto r = find_modes(params);
            check_certificate(b, r, describe(k, lambda));
            if (r.modes != ModeSet{0})
                b.fail(describe(k, lambda), "[0]", format_modes(r.modes));
            auto f = pmf_table_recurrence(params, static_cast<int>(r.search_bound)).values;
            b.margin(relative_lead(f, 0));
        }
    return b.finish();
}

VerificationReport run_prop22(const GridOverrides& o)
{
    GridDescription g;
    g.k_min = g.k_max = 2;
    int n = o.lambda_count.value_or(500);
    g.seed = o.seed.value_or(default_prop22_seed);
    g.lambda_rule = "lambda = (1 + u mod " + std::to_string(prop22_denominator - 1) + ")/"
                    + std::to_string(prop22_denominator) + ", u from mt19937_64(seed), "
                    + std::to_string(n) + " draws (exact path)";

    ReportBuilder b(ClaimId::prop22, g, "min |lambda + lambda^2/2 - 1| over the grid");
    std::mt19937_64 rng(*g.seed);
    for (int i = 0; i < n; ++i)
    {
        b.count();
        auto p = static_cast<long long>(1 + rng() % static_cast<std::uint64_t>(prop22_denominator - 1));
        RationalLambda lambda(p, prop22_denominator);
        auto expected = prop22_classify(lambda);
        auto r = find_modes_exact(2, lambda);
        check_certificate(b, r, describe(2, lambda));
        if (r.modes != expected)
            b.fail(describe(2, lambda), format_modes(expected), format_modes(r.modes));
        const Rational& l = lambda.value();
        Rational slack = l + l * l / 2 - 1;
        b.margin(boost::multiprecision::abs(slack).convert_to<double>());
    }
    return b.finish();
}

VerificationReport run_proof_inequalities(const GridOverrides& o)
{
    GridDescription g;
    g.k_min = g.k_max = 2;
    int n = o.lambda_count.value_or(100);
    g.lambda_rule = "f(0)>f(1): lambda = i/" + std::to_string(n + 1) + "; f(1)<f(2): lambda = 5i/"
                    + std::to_string(n) + "; i=1.." + std::to_string(n);

    ReportBuilder b(ClaimId::proof_inequalities, g,
                    "min relative gap, (f(0)-f(1))/f(0) on (0,1) and (f(2)-f(1))/f(2) on (0,5]");
    for (int i = 1; i <= n; ++i)
    {
        b.count();
        double lambda = static_cast<double>(i) / (n + 1);
        auto f = pmf_table_recurrence(OrderKParams(2, lambda), 2).values;
        b.margin((f[0] - f[1]) / f[0]);
        if (!(f[0] > f[1]))
            b.fail(describe(2, lambda), "f(0) > f(1)",
                   "f(0)=" + shortest_repr(f[0]) + " f(1)=" + shortest_repr(f[1]));
    }
    for (int i = 1; i <= n; ++i)
    {
        b.count();
        double lambda = 5.0 * i / n;
        auto f = pmf_table_recurrence(OrderKParams(2, lambda), 2).values;
        b.margin((f[2] - f[1]) / f[2]);
        if (!(f[1] < f[2]))
            b.fail(describe(2, lambda), "f(1) < f(2)",
                   "f(1)=" + shortest_repr(f[1]) + " f(2)=" + shortest_repr(f[2]));
    }
    return b.finish();
}

GridDescription distribution_grid(const GridOverrides& o)
{
    auto g = base_grid(o, 1, 6);
    g.lambdas = o.lambdas.value_or(canonical_lambdas);
    g.lambda_rule = o.lambdas ? "explicit" : "canonical";
    return g;
}

// ceil(mu) + 40 * ceil(sqrt(mu) + 1)
int truncation_point(const OrderKParams& params)
{
    double mu = mean(params);
    return static_cast<int>(std::ceil(mu) + 40 * std::ceil(std::sqrt(mu) + 1));
}

VerificationReport run_normalization(const GridOverrides& o)
{
    auto g = distribution_grid(o);
    g.lambda_rule += "; truncation X = ceil(mu) + 40*ceil(sqrt(mu)+1)";
    ReportBuilder b(ClaimId::normalization, g,
                    "min over the grid of sum_{x<=X} f(x) - (1 - 1e-9)");
    for (int k = g.k_min; k <= g.k_max; ++k)
        for (double lambda : g.lambdas)
        {
            b.count();
            OrderKParams params(k, lambda);
            auto f = pmf_table_recurrence(params, truncation_point(params)).values;
            double sum = 0.0;
            for (std::size_t x = 0; x < f.size(); ++x)
            {
                double next = sum + f[x];
                if (!(f[x] >= 0.0 && f[x] <= 1.0) || next < sum || next > 1.0 + partial_sum_excess)
                {
                    b.fail(describe(k, lambda) + " x=" + std::to_string(x),
                           "0 <= f(x) <= 1 and nondecreasing partial sums <= 1",
                           "f(x)=" + shortest_repr(f[x]) + " partial=" + shortest_repr(next));
                    break;
                }
                sum = next;
            }
            b.margin(sum - (1.0 - normalization_tol));
            if (!(sum > 1.0 - normalization_tol))
                b.fail(describe(k, lambda), "sum > 1 - 1e-9", shortest_repr(sum));
        }
    return b.finish();
}

VerificationReport run_mean_identity(const GridOverrides& o)
{
    auto g = distribution_grid(o);
    g.lambda_rule += "; truncation X = ceil(mu) + 40*ceil(sqrt(mu)+1)";
    ReportBuilder b(ClaimId::mean_identity, g,
                    "min over the grid of 1e-6 - |sum x f(x) - lambda k (k+1)/2|");
    for (int k = g.k_min; k <= g.k_max; ++k)
        for (double lambda : g.lambdas)
        {
            b.count();
            OrderKParams params(k, lambda);
            auto f = pmf_table_recurrence(params, truncation_point(params)).values;
            double first_moment = 0.0;
            for (std::size_t x = 0; x < f.size(); ++x)
                first_moment += static_cast<double>(x) * f[x];
            double err = std::abs(first_moment - mean(params));
            b.margin(mean_abs_tol - err);
            if (!(err < mean_abs_tol))
                b.fail(describe(k, lambda), shortest_repr(mean(params)), shortest_repr(first_moment));
        }
    return b.finish();
}

VerificationReport run_oracle_equivalence(const GridOverrides& o)
{
    auto g = distribution_grid(o);
    g.x_max = o.x_max.value_or(30);
    constexpr int exact_k_max = 4;
    constexpr int exact_x_max = 12;
    g.lambda_rule += "; exact coefficient identity for k<=4, x<=12";

    ReportBuilder b(ClaimId::oracle_equivalence, g,
                    "min over the grid of 1e-12 - relative error of the recurrence and "
                    "polynomial engines against tuple enumeration");
    for (int k = g.k_min; k <= g.k_max; ++k)
    {
        std::vector<PolyCoeffs> enumerated;
        for (int x = 0; x <= *g.x_max; ++x)
            enumerated.push_back(enumerate_coeffs(k, x));
        auto derived = poly_coeffs_table(k, *g.x_max);

        if (k <= exact_k_max)
            for (int x = 0; x <= std::min(*g.x_max, exact_x_max); ++x)
            {
                b.count();
                if (!(enumerated[x] == derived[x]))
                    b.fail("k=" + std::to_string(k) + " x=" + std::to_string(x),
                           "coefficients equal to enumeration", "coefficients differ");
            }

        for (double lambda : g.lambdas)
        {
            OrderKParams params(k, lambda);
            auto rec = pmf_table_recurrence(params, *g.x_max).values;
            auto poly = pmf_table_polynomial(params, *g.x_max).values;
            double scale = std::exp(-k * lambda);
            for (int x = 0; x <= *g.x_max; ++x)
            {
                b.count();
                double truth = scale * enumerated[x].evaluate(lambda);
                double err = std::max(std::abs(rec[x] - truth), std::abs(poly[x] - truth)) / truth;
                b.margin(oracle_rel_tol - err);
                if (!(err < oracle_rel_tol))
                    b.fail(describe(k, lambda) + " x=" + std::to_string(x), shortest_repr(truth),
                           "recurrence=" + shortest_repr(rec[x]) + " polynomial="
                               + shortest_repr(poly[x]));
            }
        }
    }
    return b.finish();
}

} // namespace

std::span<const ClaimId> all_claims() noexcept
{
    return claims;
}

std::string_view to_string(ClaimId claim) noexcept
{
    switch (claim)
    {
        case ClaimId::eq12_bounds: return "eq12_bounds";
        case ClaimId::eq13_integer_lambda: return "eq13_integer_lambda";
        case ClaimId::prop21: return "prop21";
        case ClaimId::prop22: return "prop22";
        case ClaimId::proof_inequalities: return "proof_inequalities";
        case ClaimId::normalization: return "normalization";
        case ClaimId::mean_identity: return "mean_identity";
        case ClaimId::oracle_equivalence: return "oracle_equivalence";
    }
    return "unknown";
}

std::optional<ClaimId> parse_claim(std::string_view name) noexcept
{
    for (auto c : claims)
        if (to_string(c) == name)
            return c;
    return std::nullopt;
}

VerificationReport run_suite(ClaimId claim, const GridOverrides& overrides)
{
    check_overrides(claim, overrides);
    switch (claim)
    {
        case ClaimId::eq12_bounds: return run_eq12(overrides);
        case ClaimId::eq13_integer_lambda: return run_eq13(overrides);
        case ClaimId::prop21: return run_prop21(overrides);
        case ClaimId::prop22: return run_prop22(overrides);
        case ClaimId::proof_inequalities: return run_proof_inequalities(overrides);
        case ClaimId::normalization: return run_normalization(overrides);
        case ClaimId::mean_identity: return run_mean_identity(overrides);
        case ClaimId::oracle_equivalence: return run_oracle_equivalence(overrides);
    }
    throw std::invalid_argument("unknown claim");
}

} // namespace pok
