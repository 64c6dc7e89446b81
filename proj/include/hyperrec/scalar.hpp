#pragma once

// Scalar backends shared by every module: exact rationals (GMP) and binary64.

#include <gmpxx.h>

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>
#include <string_view>
#include <type_traits>

namespace hyperrec {

using Rational = mpq_class;
using Integer = mpz_class;
using ComplexValue = std::complex<double>;

enum class Backend { exact, floating };

/// Per-backend policy. `tolerance` is the epsilon-scale threshold a float
/// computation declares once; exact arithmetic never rounds.
template <class T>
struct ScalarTraits;

template <>
struct ScalarTraits<double> {
  static constexpr Backend backend = Backend::floating;
  static constexpr bool is_exact = false;
  static constexpr double tolerance = 64 * std::numeric_limits<double>::epsilon();
  static double to_double(double x) { return x; }
  static double from_int(long v) { return static_cast<double>(v); }
};

template <>
struct ScalarTraits<Rational> {
  static constexpr Backend backend = Backend::exact;
  static constexpr bool is_exact = true;
  static double to_double(const Rational& x) { return x.get_d(); }
  static Rational from_int(long v) { return Rational(v); }
};

template <class T>
concept ExactScalar = ScalarTraits<T>::is_exact;

template <class T>
concept FloatScalar = !ScalarTraits<T>::is_exact;

inline int sign(const Rational& x) { return sgn(x); }
inline int sign(const Integer& x) { return sgn(x); }
inline int sign(double x) { return (x > 0) - (x < 0); }

inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(double x) { return x == 0.0; }

/// Parses "p", "p/q", or (optionally) a decimal literal into an exact
/// rational. Decimals are converted exactly from their digit string, so
/// "0.1" is 1/10, not the nearest binary64.
inline Rational parse_rational(std::string_view text, bool allow_decimal = false) {
  std::string s(text);
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  const auto dot = s.find('.');
  const auto exp = s.find_first_of("eE");
  if (dot != std::string::npos || exp != std::string::npos) {
    if (!allow_decimal)
      throw std::invalid_argument("decimal literal '" + s + "' requires --float");
    std::string mant = exp == std::string::npos ? s : s.substr(0, exp);
    long e10 = 0;
    if (exp != std::string::npos) {
      try {
        std::size_t used = 0;
        e10 = std::stol(s.substr(exp + 1), &used);
        if (used != s.size() - exp - 1) throw std::invalid_argument("");
      } catch (const std::exception&) {
        throw std::invalid_argument("malformed exponent in '" + s + "'");
      }
    }
    const auto d = mant.find('.');
    if (d != std::string::npos) {
      e10 -= static_cast<long>(mant.size() - d - 1);
      mant.erase(d, 1);
    }
    Integer num;
    if (mant.empty() || mant == "-" || mant == "+" || num.set_str(mant, 10) != 0)
      throw std::invalid_argument("malformed decimal '" + s + "'");
    Integer scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(e10 < 0 ? -e10 : e10));
    Rational r = e10 < 0 ? Rational(num, scale) : Rational(num * scale);
    r.canonicalize();
    return r;
  }
  Rational r;
  if (r.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (sgn(r.get_den()) == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

}  // namespace hyperrec
