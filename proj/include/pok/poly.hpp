#pragma once

#include <map>
#include <vector>

#include "pok/params.hpp"

namespace pok {

/// Exact coefficients of the scaled pmf polynomial P_x, where
/// f_k(x; lambda) = exp(-k lambda) * P_x(lambda). Only nonzero coefficients
/// are stored, keyed by monomial degree.
struct PolyCoeffs
{
    int x = 0;
    std::map<int, Rational> coeffs;

    double evaluate(double lambda) const;
    Rational evaluate(const Rational& lambda) const;

    friend bool operator==(const PolyCoeffs&, const PolyCoeffs&) = default;
};

/// c_{x,m} = (1/x) * sum_{j=1}^{min(k,x)} j * c_{x-j,m-1}, seeded by c_{0,0} = 1.
PolyCoeffs poly_coeffs(int k, int x);

/// P_0 .. P_{x_max} in one pass.
std::vector<PolyCoeffs> poly_coeffs_table(int k, int x_max);

/// Exact P_x(lambda). Values at a common lambda compare the same way as the
/// pmf itself since the factor exp(-k lambda) is shared and positive.
Rational pmf_exact(int k, const RationalLambda& lambda, int x);

std::vector<Rational> pmf_exact_table(int k, const RationalLambda& lambda, int x_max);

} // namespace pok
