#include "pok/params.hpp"

#include <charconv>
#include <cmath>
#include <stdexcept>

namespace pok {

OrderKParams::OrderKParams(int k, double lambda) : k_{k}, lambda_{lambda}
{
    if (k < 1)
        throw std::invalid_argument("k must be >= 1");
    if (!(lambda > 0.0) || !std::isfinite(lambda))
        throw std::invalid_argument("lambda must be > 0");
}

RationalLambda::RationalLambda(Rational value) : value_{std::move(value)}
{
    if (value_ <= 0)
        throw std::invalid_argument("lambda must be > 0");
}

RationalLambda::RationalLambda(long long numerator, long long denominator)
    : RationalLambda(denominator == 0
                         ? throw std::invalid_argument("denominator must be nonzero")
                         : Rational(numerator, denominator))
{
}

namespace {

BigInt parse_digits(std::string_view text, std::string_view whole)
{
    if (text.empty() || text.find_first_not_of("0123456789") != std::string_view::npos)
        throw std::invalid_argument("not a rational of the form p/q: '" + std::string(whole) + "'");
    return BigInt(std::string(text));
}

} // namespace

RationalLambda RationalLambda::parse(std::string_view text)
{
    auto slash = text.find('/');
    BigInt num = parse_digits(text.substr(0, slash), text);
    BigInt den = 1;
    if (slash != std::string_view::npos)
        den = parse_digits(text.substr(slash + 1), text);
    if (den == 0)
        throw std::invalid_argument("denominator must be nonzero");
    return RationalLambda(Rational(num, den));
}

RationalLambda RationalLambda::from_double(double value)
{
    if (!(value > 0.0) || !std::isfinite(value))
        throw std::invalid_argument("lambda must be > 0");
    int exponent = 0;
    double mantissa = std::frexp(value, &exponent);
    // 53-bit integer significand times a power of two.
    auto significand = static_cast<long long>(std::ldexp(mantissa, 53));
    exponent -= 53;
    Rational result(significand);
    BigInt scale = BigInt(1) << std::abs(exponent);
    if (exponent >= 0)
        result *= scale;
    else
        result /= scale;
    return RationalLambda(result);
}

std::string RationalLambda::to_string() const
{
    return numerator().str() + "/" + denominator().str();
}

} // namespace pok
