#include "pok/poly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "pok/pmf.hpp"

namespace pok {

double PolyCoeffs::evaluate(double lambda) const
{
    double sum = 0.0;
    for (const auto& [degree, c] : coeffs)
        sum += c.convert_to<double>() * std::pow(lambda, degree);
    return sum;
}

Rational PolyCoeffs::evaluate(const Rational& lambda) const
{
    Rational sum = 0;
    Rational power = 1;
    int power_degree = 0;
    for (const auto& [degree, c] : coeffs) // ascending degrees
    {
        for (; power_degree < degree; ++power_degree)
            power *= lambda;
        sum += c * power;
    }
    return sum;
}

std::vector<PolyCoeffs> poly_coeffs_table(int k, int x_max)
{
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (x_max < 0)
        throw std::invalid_argument("x must be >= 0");

    std::vector<PolyCoeffs> table(static_cast<std::size_t>(x_max) + 1);
    table[0].x = 0;
    table[0].coeffs[0] = 1;
    for (int x = 1; x <= x_max; ++x)
    {
        auto& out = table[x];
        out.x = x;
        for (int j = 1; j <= std::min(k, x); ++j)
            for (const auto& [degree, c] : table[x - j].coeffs)
                out.coeffs[degree + 1] += j * c;
        for (auto& [degree, c] : out.coeffs)
            c /= x;
    }
    return table;
}

PolyCoeffs poly_coeffs(int k, int x)
{
    return poly_coeffs_table(k, x).back();
}

std::vector<Rational> pmf_exact_table(int k, const RationalLambda& lambda, int x_max)
{
    return order_k_recurrence<Rational>(k, lambda.value(), Rational(1), x_max);
}

Rational pmf_exact(int k, const RationalLambda& lambda, int x)
{
    return pmf_exact_table(k, lambda, x).back();
}

} // namespace pok
