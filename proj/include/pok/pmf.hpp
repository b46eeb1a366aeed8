#pragma once

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string_view>
#include <vector>

#include "pok/params.hpp"
#include "pok/poly.hpp"

namespace pok {

enum class Engine
{
    enumeration,
    recurrence,
    polynomial,
};

std::string_view to_string(Engine engine) noexcept;
std::optional<Engine> parse_engine(std::string_view name) noexcept;

inline constexpr int default_enumeration_cap = 60;

/// Thrown when tuple enumeration is asked for a support point above its cap.
class EnumerationCapError : public std::out_of_range
{
  public:
    EnumerationCapError(int x, int cap);
    int x() const noexcept { return x_; }
    int cap() const noexcept { return cap_; }

  private:
    int x_;
    int cap_;
};

/// Coefficients of P_x obtained by walking every k-tuple (x_1..x_k) of
/// non-negative integers with x_1 + 2 x_2 + ... + k x_k = x and adding
/// 1/(x_1! ... x_k!) into degree x_1 + ... + x_k. Ground truth for the
/// faster engines.
PolyCoeffs enumerate_coeffs(int k, int x, int cap = default_enumeration_cap);

double pmf_enumerate(const OrderKParams& params, int x, int cap = default_enumeration_cap);

/// x f(x) = lambda * sum_{j=1}^{min(k,x)} j f(x-j), f(0) = seed.
///
/// With seed exp(-k lambda) this is the pmf; with seed 1 it yields the
/// scaled values P_x(lambda). Every term is non-negative so the double
/// instantiation loses no precision to cancellation.
template<class Scalar>
std::vector<Scalar> order_k_recurrence(int k, const Scalar& lambda, const Scalar& seed, int x_max)
{
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (x_max < 0)
        throw std::invalid_argument("x_max must be >= 0");

    std::vector<Scalar> f(static_cast<std::size_t>(x_max) + 1);
    f[0] = seed;
    for (int x = 1; x <= x_max; ++x)
    {
        Scalar acc = 0;
        for (int j = 1; j <= std::min(k, x); ++j)
            acc += Scalar(j) * f[x - j];
        f[x] = lambda * acc / Scalar(x);
    }
    return f;
}

struct PmfTable
{
    OrderKParams params;
    std::vector<double> values; // f(0) .. f(x_max)
    Engine engine;
};

/// Relative accuracy each engine guarantees against the enumeration oracle.
double engine_tolerance(Engine engine) noexcept;

PmfTable pmf_table_recurrence(const OrderKParams& params, int x_max);
PmfTable pmf_table_enumeration(const OrderKParams& params, int x_max,
                               int cap = default_enumeration_cap);
PmfTable pmf_table_polynomial(const OrderKParams& params, int x_max);
PmfTable pmf_table(const OrderKParams& params, int x_max, Engine engine,
                   int cap = default_enumeration_cap);

/// lambda k (k+1) / 2
double mean(const OrderKParams& params) noexcept;

} // namespace pok
