#pragma once

// Test-only brute force, independent of the library's engines: walks the
// full box 0 <= x_i <= x/i with an odometer and keeps tuples whose weighted
// sum hits x.

#include <cmath>
#include <map>
#include <vector>

#include "pok/params.hpp"

namespace pok::test {

template<class Visit>
void for_each_weighted_tuple(int k, int x, Visit&& visit)
{
    std::vector<int> t(static_cast<std::size_t>(k), 0);
    while (true)
    {
        int weighted = 0;
        for (int i = 0; i < k; ++i)
            weighted += (i + 1) * t[i];
        if (weighted == x)
            visit(t);

        int i = 0;
        while (i < k && t[i] == x / (i + 1))
            t[i++] = 0;
        if (i == k)
            return;
        ++t[i];
    }
}

/// degree -> sum of 1/(x_1! ... x_k!) in long double
inline std::map<int, long double> brute_coeffs(int k, int x)
{
    std::map<int, long double> out;
    for_each_weighted_tuple(k, x, [&](const std::vector<int>& t) {
        long double term = 1.0L;
        int degree = 0;
        for (int n : t)
        {
            term /= std::tgamma(static_cast<long double>(n) + 1.0L);
            degree += n;
        }
        out[degree] += term;
    });
    return out;
}

inline std::map<int, Rational> brute_coeffs_exact(int k, int x)
{
    std::map<int, Rational> out;
    for_each_weighted_tuple(k, x, [&](const std::vector<int>& t) {
        BigInt denom = 1;
        int degree = 0;
        for (int n : t)
        {
            for (int j = 2; j <= n; ++j)
                denom *= j;
            degree += n;
        }
        out[degree] += Rational(BigInt(1), denom);
    });
    return out;
}

inline long double evaluate(const std::map<int, long double>& coeffs, double lambda)
{
    long double sum = 0.0L;
    for (const auto& [degree, c] : coeffs)
        sum += c * std::pow(static_cast<long double>(lambda), degree);
    return sum;
}

inline long double brute_pmf(int k, double lambda, int x)
{
    return std::exp(-static_cast<long double>(k) * lambda) * evaluate(brute_coeffs(k, x), lambda);
}

inline double rel_err(double value, long double truth)
{
    return static_cast<double>(std::abs((static_cast<long double>(value) - truth) / truth));
}

} // namespace pok::test
