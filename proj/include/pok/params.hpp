#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace pok {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Order k (>= 1) and rate lambda (> 0) of a Poisson distribution of order k.
class OrderKParams
{
  public:
    OrderKParams(int k, double lambda);

    int k() const noexcept { return k_; }
    double lambda() const noexcept { return lambda_; }

    friend bool operator==(const OrderKParams&, const OrderKParams&) = default;

  private:
    int k_;
    double lambda_;
};

/// Strictly positive rational rate, always held in lowest terms.
class RationalLambda
{
  public:
    explicit RationalLambda(Rational value);
    RationalLambda(long long numerator, long long denominator);

    /// Accepts "p/q" or a bare integer "p". Decimal notation is rejected so
    /// that exactness is always explicit.
    static RationalLambda parse(std::string_view text);

    /// The exact binary value of a finite positive double.
    static RationalLambda from_double(double value);

    const Rational& value() const noexcept { return value_; }
    BigInt numerator() const { return boost::multiprecision::numerator(value_); }
    BigInt denominator() const { return boost::multiprecision::denominator(value_); }
    double to_double() const { return value_.convert_to<double>(); }
    std::string to_string() const;

    friend bool operator==(const RationalLambda&, const RationalLambda&) = default;

  private:
    Rational value_;
};

} // namespace pok
