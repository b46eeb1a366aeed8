#include "pok/modes.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "pok/pmf.hpp"
#include "pok/poly.hpp"

namespace pok {

namespace {

// Absolute allowance for rounding in the running cumulative sum (and, on the
// exact path, for rounding lambda to double).
constexpr double certificate_slack = 1e-12;

long floor_mean(const OrderKParams& params)
{
    return static_cast<long>(std::floor(mean(params)));
}

// First x >= floor(mu) whose unexplored tail cannot hold a mode, or -1.
long certified_bound(const std::vector<double>& f, long floor_mu, double tie_tolerance)
{
    double running_max = 0.0;
    double cumulative = 0.0;
    for (long x = 0; x < static_cast<long>(f.size()); ++x)
    {
        cumulative += f[x];
        running_max = std::max(running_max, f[x]);
        double tail = 1.0 - cumulative;
        if (x >= floor_mu && tail + certificate_slack < running_max * (1.0 - tie_tolerance))
            return x;
    }
    return -1;
}

int sign_of(const BigInt& v)
{
    return v > 0 ? 1 : (v < 0 ? -1 : 0);
}

ModeSet classify_by_sign(int sign)
{
    if (sign < 0)
        return {0};
    if (sign == 0)
        return {0, 2};
    return {2};
}

void require_unit_interval(double lambda)
{
    if (!(lambda > 0.0 && lambda < 1.0))
        throw std::invalid_argument("order-2 classification requires 0 < lambda < 1");
}

} // namespace

std::string format_modes(const ModeSet& modes)
{
    std::string out = "[";
    for (std::size_t i = 0; i < modes.size(); ++i)
        out += (i ? "," : "") + std::to_string(modes[i]);
    return out + "]";
}

ModeBounds mode_bounds(const OrderKParams& params)
{
    long upper = floor_mean(params);
    long k = params.k();
    long delta = k == 1 ? 1 : 0;
    long lower = std::max(0L, upper - k * (k + 1) / 2 + 1 - delta);
    return {lower, upper};
}

CertificationError::CertificationError(const OrderKParams& params, long cap)
    : std::runtime_error("mode search reached x = " + std::to_string(cap)
                         + " without certification (k = " + std::to_string(params.k())
                         + ", lambda = " + std::to_string(params.lambda()) + ")"),
      params_{params}
{
}

long search_cap(const OrderKParams& params)
{
    long k = params.k();
    return floor_mean(params) + 10 * k * (k + 1) + 100;
}

ModeResult find_modes(const OrderKParams& params, double tie_tolerance)
{
    if (tie_tolerance == 0.0)
        throw std::invalid_argument("tie_tolerance 0 selects the exact path; use a rational lambda");
    if (!(tie_tolerance > 0.0 && tie_tolerance < 1.0))
        throw std::invalid_argument("tie_tolerance must lie in [0, 1)");

    long cap = search_cap(params);
    auto f = pmf_table_recurrence(params, static_cast<int>(cap)).values;
    long bound = certified_bound(f, floor_mean(params), tie_tolerance);
    if (bound < 0)
        throw CertificationError(params, cap);

    ModeResult result{params, {}, 0.0, bound, tie_tolerance, true, std::nullopt};
    result.max_prob = *std::max_element(f.begin(), f.begin() + bound + 1);
    for (long x = 0; x <= bound; ++x)
        if (f[x] >= result.max_prob * (1.0 - tie_tolerance))
            result.modes.push_back(x);
    return result;
}

ModeResult find_modes_exact(int k, const RationalLambda& lambda)
{
    OrderKParams params(k, lambda.to_double());
    long cap = search_cap(params);
    auto f = pmf_table_recurrence(params, static_cast<int>(cap)).values;
    long bound = certified_bound(f, floor_mean(params), 0.0);
    if (bound < 0)
        throw CertificationError(params, cap);

    auto scaled = pmf_exact_table(k, lambda, static_cast<int>(bound));
    const Rational& best = *std::max_element(scaled.begin(), scaled.end());

    ModeResult result{params, {}, 0.0, bound, 0.0, true, lambda};
    result.max_prob = std::exp(-k * params.lambda()) * best.convert_to<double>();
    for (long x = 0; x <= bound; ++x)
        if (scaled[x] == best)
            result.modes.push_back(x);
    return result;
}

long mode_formula_integer_lambda(int k, long lambda)
{
    if (k < 2 || k > 5)
        throw std::invalid_argument("integer-lambda mode formula holds only for 2 <= k <= 5");
    if (lambda < 1)
        throw std::invalid_argument("integer-lambda mode formula requires a positive integer lambda");
    return lambda * k * (k + 1) / 2 - k / 2;
}

double prop21_region(int k)
{
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    return 2.0 / (static_cast<double>(k) * (k + 1));
}

double QuadraticSurd::to_double() const
{
    return static_cast<double>(a) + static_cast<double>(b) * std::sqrt(static_cast<double>(radicand));
}

ModeSet prop22_classify(const RationalLambda& lambda)
{
    require_unit_interval(lambda.to_double());
    const Rational& l = lambda.value();
    Rational s = l + l * l / 2 - 1;
    return classify_by_sign(s > 0 ? 1 : (s < 0 ? -1 : 0));
}

ModeSet prop22_classify(double lambda)
{
    require_unit_interval(lambda);
    return prop22_classify(RationalLambda::from_double(lambda));
}

ModeSet prop22_classify(const QuadraticSurd& lambda)
{
    if (lambda.radicand < 0)
        throw std::invalid_argument("radicand must be >= 0");
    require_unit_interval(lambda.to_double());

    // 2 (lambda + lambda^2/2 - 1) = p + q sqrt(r)
    BigInt a = lambda.a, b = lambda.b, r = lambda.radicand;
    BigInt p = 2 * a + a * a + b * b * r - 2;
    BigInt q = 2 * b + 2 * a * b;

    int sp = sign_of(p);
    int sq = r == 0 ? 0 : sign_of(q);
    int sign = 0;
    if (sq == 0)
        sign = sp;
    else if (sp == 0 || sp == sq)
        sign = sq;
    else
        sign = sp * sign_of(p * p - q * q * r); // opposite signs: larger magnitude wins
    return classify_by_sign(sign);
}

} // namespace pok
