#ifndef RPT_NUMERIC_HPP
#define RPT_NUMERIC_HPP

// Scalar fields used by the series engine and the helpers that move values
// between them. Three fields are supported:
//
//   Rational - exact GMP rationals (boost::multiprecision::mpq_rational)
//   Real     - MPFR floats whose precision is fixed at construction time
//   double   - hardware floats, used when 15 significant digits suffice
//
// Every input number is parsed into a Rational first, so decimal strings such
// as "0.01" are stored exactly and only rounded when converted into a float
// field.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string>
#include <string_view>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include "errors.hpp"

namespace rpt
{

namespace mp = boost::multiprecision;

using Integer = mp::mpz_int;
using Rational = mp::mpq_rational;
using Real = mp::mpfr_float;

enum class NumericMode { ExactRational, HighPrecisionFloat };

struct NumericContext {
    NumericMode mode = NumericMode::HighPrecisionFloat;
    unsigned precision_digits = 64;

    static NumericContext exact() { return {NumericMode::ExactRational, 64}; }
    static NumericContext floating(unsigned digits = 64) { return {NumericMode::HighPrecisionFloat, digits}; }

    bool is_exact() const noexcept { return mode == NumericMode::ExactRational; }
};

// Hardware doubles carry this many guaranteed decimal digits.
inline constexpr unsigned double_digits = std::numeric_limits<double>::digits10;

// Sets the MPFR default precision for the lifetime of the scope.
class PrecisionScope
{
  public:
    explicit PrecisionScope(unsigned digits) : saved_(Real::default_precision())
    {
        Real::default_precision(digits);
    }
    ~PrecisionScope() { Real::default_precision(saved_); }

    PrecisionScope(const PrecisionScope&) = delete;
    PrecisionScope& operator=(const PrecisionScope&) = delete;

  private:
    unsigned saved_;
};

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
    static constexpr bool exact = true;
    static constexpr const char* name = "rational";

    static Rational from_rational(const Rational& q) { return q; }

    // Exact square root; anything that is not a ratio of perfect squares
    // would leave the field.
    static Rational sqrt(const Rational& q)
    {
        if (q < 0) {
            throw ValidationError("square root of a negative number");
        }
        Integer num = mp::numerator(q);
        Integer den = mp::denominator(q);
        Integer rn = mp::sqrt(num);
        Integer rd = mp::sqrt(den);
        if (rn * rn != num || rd * rd != den) {
            throw IrrationalInExactMode("sqrt(" + q.str() + ") is irrational; exact mode cannot represent it");
        }
        return Rational(rn, rd);
    }

    static std::string to_string(const Rational& q) { return q.str(); }
    static double to_double(const Rational& q) { return q.convert_to<double>(); }
    static unsigned digits() { return std::numeric_limits<unsigned>::max(); }
    static Rational epsilon() { return Rational(0); }
};

template <>
struct scalar_traits<Real> {
    static constexpr bool exact = false;
    static constexpr const char* name = "float";

    static Real from_rational(const Rational& q)
    {
        Real num(mp::numerator(q));
        Real den(mp::denominator(q));
        return num / den;
    }
    static Real sqrt(const Real& x)
    {
        if (x < 0) {
            throw ValidationError("square root of a negative number");
        }
        return mp::sqrt(x);
    }
    static std::string to_string(const Real& x)
    {
        return x.str(static_cast<std::streamsize>(x.precision()), std::ios_base::fmtflags(0));
    }
    static double to_double(const Real& x) { return x.convert_to<double>(); }
    static unsigned digits() { return Real::default_precision(); }
    static Real epsilon() { return mp::pow(Real(10), -static_cast<int>(Real::default_precision())); }
};

template <>
struct scalar_traits<double> {
    static constexpr bool exact = false;
    static constexpr const char* name = "double";

    static double from_rational(const Rational& q) { return q.convert_to<double>(); }
    static double sqrt(double x)
    {
        if (x < 0) {
            throw ValidationError("square root of a negative number");
        }
        return std::sqrt(x);
    }
    static std::string to_string(double x)
    {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", x);
        return buf;
    }
    static double to_double(double x) { return x; }
    static unsigned digits() { return double_digits; }
    static double epsilon() { return std::numeric_limits<double>::epsilon(); }
};

template <class T>
concept Scalar = requires { scalar_traits<T>::exact; };

template <class T>
concept FloatScalar = Scalar<T> && !scalar_traits<T>::exact;

template <Scalar T>
T from_rational(const Rational& q)
{
    return scalar_traits<T>::from_rational(q);
}

template <Scalar T>
std::string to_string(const T& x)
{
    return scalar_traits<T>::to_string(x);
}

template <Scalar T>
double to_double(const T& x)
{
    return scalar_traits<T>::to_double(x);
}

template <Scalar T>
T sqrt_of(const T& x)
{
    return scalar_traits<T>::sqrt(x);
}

template <Scalar T>
bool is_zero(const T& x)
{
    return x == 0;
}

template <Scalar T>
bool is_finite(const T& x)
{
    if constexpr (scalar_traits<T>::exact) {
        return true;
    } else if constexpr (std::is_same_v<T, double>) {
        return std::isfinite(x);
    } else {
        return mp::isfinite(x);
    }
}

template <Scalar T>
T abs_of(const T& x)
{
    return x < 0 ? T(-x) : x;
}

// x^e for any integer exponent.
template <Scalar T>
T ipow(const T& x, int e)
{
    if (e < 0) {
        return T(1) / ipow(x, -e);
    }
    T result(1);
    T base(x);
    while (e > 0) {
        if (e & 1) {
            result *= base;
        }
        e >>= 1;
        if (e > 0) {
            base *= base;
        }
    }
    return result;
}

// Converts between fields. Float -> Rational is refused: it would silently
// turn a rounded value into an "exact" one.
template <Scalar To, Scalar From>
To scalar_cast(const From& x)
{
    if constexpr (std::is_same_v<To, From>) {
        return x;
    } else if constexpr (std::is_same_v<From, Rational>) {
        return from_rational<To>(x);
    } else if constexpr (std::is_same_v<To, Rational>) {
        static_assert(!std::is_same_v<To, Rational>, "float values cannot be converted to exact rationals");
    } else if constexpr (std::is_same_v<To, double>) {
        return to_double(x);
    } else {
        return To(x);
    }
}

// Parses "p/q", integers and decimal literals (with optional exponent) into
// an exact rational.
inline Rational parse_rational(std::string_view text)
{
    auto fail = [&]() -> Rational { throw ValidationError("malformed number '" + std::string(text) + "'"); };

    std::string s;
    for (char c : text) {
        if (c != ' ' && c != '\t' && c != '\n' && c != '\r') {
            s.push_back(c);
        }
    }
    if (s.empty()) {
        return fail();
    }

    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_rational(s.substr(0, slash));
        Rational den = parse_rational(s.substr(slash + 1));
        if (den == 0) {
            throw ValidationError("zero denominator in '" + s + "'");
        }
        return num / den;
    }

    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') {
        negative = s[pos] == '-';
        ++pos;
    }
    std::string digits;
    int scale = 0;
    bool seen_point = false;
    bool any_digit = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (c >= '0' && c <= '9') {
            digits.push_back(c);
            any_digit = true;
            if (seen_point) {
                --scale;
            }
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) {
        return fail();
    }
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') {
            return fail();
        }
        ++pos;
        std::string exponent = s.substr(pos);
        if (exponent.empty()) {
            return fail();
        }
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(exponent, &used);
        } catch (const std::exception&) {
            return fail();
        }
        if (used != exponent.size() || e > 100000 || e < -100000) {
            return fail();
        }
        scale += static_cast<int>(e);
    }

    // A leading zero would make the integer constructor read octal.
    const auto first = digits.find_first_not_of('0');
    Rational value{Integer(first == std::string::npos ? std::string("0") : digits.substr(first))};
    Integer ten_pow = mp::pow(Integer(10), static_cast<unsigned>(scale < 0 ? -scale : scale));
    if (scale < 0) {
        value /= Rational(ten_pow);
    } else {
        value *= Rational(ten_pow);
    }
    return negative ? Rational(-value) : value;
}

// Invokes f with std::type_identity<T> for the field selected by ctx. Float
// requests of at most 15 digits run on hardware doubles; larger ones run on
// MPFR with the default precision set for the duration of the call.
template <class F>
decltype(auto) dispatch(const NumericContext& ctx, F&& f)
{
    if (ctx.precision_digits == 0) {
        throw ValidationError("precision must be a positive number of digits");
    }
    if (ctx.is_exact()) {
        return f(std::type_identity<Rational>{});
    }
    if (ctx.precision_digits <= double_digits) {
        return f(std::type_identity<double>{});
    }
    PrecisionScope scope(ctx.precision_digits);
    return f(std::type_identity<Real>{});
}

// dispatch() for algorithms that only run on floating fields.
template <class F>
decltype(auto) dispatch_float(const NumericContext& ctx, F&& f)
{
    if (ctx.is_exact()) {
        throw ValidationError("this operation needs float mode");
    }
    if (ctx.precision_digits == 0) {
        throw ValidationError("precision must be a positive number of digits");
    }
    if (ctx.precision_digits <= double_digits) {
        return f(std::type_identity<double>{});
    }
    PrecisionScope scope(ctx.precision_digits);
    return f(std::type_identity<Real>{});
}

} // namespace rpt

#endif
