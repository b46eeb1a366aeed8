#include "pok/pmf.hpp"

#include <cmath>
#include <functional>
#include <string>

namespace pok {

std::string_view to_string(Engine engine) noexcept
{
    switch (engine)
    {
        case Engine::enumeration: return "enumeration";
        case Engine::recurrence: return "recurrence";
        case Engine::polynomial: return "polynomial";
    }
    return "unknown";
}

std::optional<Engine> parse_engine(std::string_view name) noexcept
{
    for (auto e : {Engine::enumeration, Engine::recurrence, Engine::polynomial})
        if (to_string(e) == name)
            return e;
    return std::nullopt;
}

EnumerationCapError::EnumerationCapError(int x, int cap)
    : std::out_of_range("enumeration requested at x = " + std::to_string(x)
                        + " above the cap " + std::to_string(cap)),
      x_{x},
      cap_{cap}
{
}

PolyCoeffs enumerate_coeffs(int k, int x, int cap)
{
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (x < 0)
        throw std::invalid_argument("x must be >= 0");
    if (x > cap)
        throw EnumerationCapError(x, cap);

    std::vector<BigInt> factorial(static_cast<std::size_t>(x) + 1, BigInt(1));
    for (int i = 1; i <= x; ++i)
        factorial[i] = factorial[i - 1] * i;

    PolyCoeffs out;
    out.x = x;
    // Choose the multiplicity of part size `part`, largest first; part 1
    // absorbs whatever remains.
    std::function<void(int, int, int, const BigInt&)> descend =
        [&](int part, int remaining, int degree, const BigInt& denom) {
            if (part == 1)
            {
                out.coeffs[degree + remaining] += Rational(BigInt(1), denom * factorial[remaining]);
                return;
            }
            for (int n = 0; n * part <= remaining; ++n)
                descend(part - 1, remaining - n * part, degree + n, denom * factorial[n]);
        };
    descend(k, x, 0, BigInt(1));
    return out;
}

double pmf_enumerate(const OrderKParams& params, int x, int cap)
{
    return std::exp(-params.k() * params.lambda())
           * enumerate_coeffs(params.k(), x, cap).evaluate(params.lambda());
}

double engine_tolerance(Engine engine) noexcept
{
    switch (engine)
    {
        case Engine::enumeration: return 0.0;
        case Engine::recurrence: return 1e-12;
        case Engine::polynomial: return 1e-12;
    }
    return 0.0;
}

PmfTable pmf_table_recurrence(const OrderKParams& params, int x_max)
{
    double seed = std::exp(-params.k() * params.lambda());
    return {params, order_k_recurrence<double>(params.k(), params.lambda(), seed, x_max),
            Engine::recurrence};
}

PmfTable pmf_table_enumeration(const OrderKParams& params, int x_max, int cap)
{
    if (x_max < 0)
        throw std::invalid_argument("x_max must be >= 0");
    if (x_max > cap)
        throw EnumerationCapError(x_max, cap);
    PmfTable table{params, {}, Engine::enumeration};
    table.values.reserve(static_cast<std::size_t>(x_max) + 1);
    for (int x = 0; x <= x_max; ++x)
        table.values.push_back(pmf_enumerate(params, x, cap));
    return table;
}

PmfTable pmf_table_polynomial(const OrderKParams& params, int x_max)
{
    double scale = std::exp(-params.k() * params.lambda());
    PmfTable table{params, {}, Engine::polynomial};
    for (const auto& poly : poly_coeffs_table(params.k(), x_max))
        table.values.push_back(scale * poly.evaluate(params.lambda()));
    return table;
}

PmfTable pmf_table(const OrderKParams& params, int x_max, Engine engine, int cap)
{
    switch (engine)
    {
        case Engine::enumeration: return pmf_table_enumeration(params, x_max, cap);
        case Engine::polynomial: return pmf_table_polynomial(params, x_max);
        case Engine::recurrence: break;
    }
    return pmf_table_recurrence(params, x_max);
}

double mean(const OrderKParams& params) noexcept
{
    return params.lambda() * (params.k() * (params.k() + 1) / 2);
}

} // namespace pok
