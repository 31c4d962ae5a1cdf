#pragma once

// Scalar field abstraction: every quantity in the library is either an exact
// rational (GMP mpq, always canonical) or a binary64 value. The choice is a
// template parameter, so a run can never mix the two.

#include <gmpxx.h>

#include <charconv>
#include <cmath>
#include <cstdint>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>
#include <system_error>

namespace advect {

using Rational = mpq_class;

/// An exact ratio p/q with q > 0, used for the CFL number in every mode.
struct Ratio {
  std::int64_t num = 0;
  std::int64_t den = 1;

  friend bool operator==(const Ratio&, const Ratio&) = default;

  [[nodiscard]] double to_double() const { return static_cast<double>(num) / static_cast<double>(den); }
  [[nodiscard]] std::string to_string() const {
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }
};

inline Ratio make_ratio(std::int64_t num, std::int64_t den) {
  if (den == 0) throw std::invalid_argument("ratio with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  const std::int64_t g = std::gcd(num < 0 ? -num : num, den);
  return g > 1 ? Ratio{num / g, den / g} : Ratio{num, den};
}

namespace detail {

inline std::int64_t parse_int(std::string_view s) {
  std::int64_t v = 0;
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return v;
}

inline std::string trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return std::string(s);
}

}  // namespace detail

/// Parses "p/q", an integer, or a plain decimal such as "0.47" into an exact ratio.
inline Ratio parse_ratio(std::string_view text) {
  const std::string s = detail::trim(text);
  if (s.empty()) throw std::invalid_argument("empty ratio");
  if (auto slash = s.find('/'); slash != std::string::npos) {
    return make_ratio(detail::parse_int(std::string_view(s).substr(0, slash)),
                      detail::parse_int(std::string_view(s).substr(slash + 1)));
  }
  if (auto dot = s.find('.'); dot != std::string::npos) {
    const std::string whole = s.substr(0, dot);
    const std::string frac = s.substr(dot + 1);
    if (frac.size() > 17) throw std::invalid_argument("too many decimals in '" + s + "'");
    std::int64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const bool negative = !whole.empty() && whole.front() == '-';
    std::int64_t w = (whole.empty() || whole == "-" || whole == "+") ? 0 : detail::parse_int(whole);
    std::int64_t f = frac.empty() ? 0 : detail::parse_int(frac);
    std::int64_t num = (negative ? -1 : 1) * ((negative ? -w : w) * den + f);
    return make_ratio(num, den);
  }
  return Ratio{detail::parse_int(s), 1};
}

template <class T>
struct scalar_traits;

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr const char* name = "binary64";

  static double from_ratio(const Ratio& r) { return r.to_double(); }
  static double from_int(std::int64_t v) { return static_cast<double>(v); }
  static double from_double(double v) { return v; }
  static double to_double(double v) { return v; }
  static double abs(double v) { return std::fabs(v); }
  static std::int64_t floor(double v) { return static_cast<std::int64_t>(std::floor(v)); }

  /// Equality used when a computed value must match a structural prediction
  /// (tail extrapolation, plateau detection): a few ulps of slack.
  static bool near(double a, double b) {
    const double scale = std::max({1.0, std::fabs(a), std::fabs(b)});
    return std::fabs(a - b) <= 8.0 * std::numeric_limits<double>::epsilon() * scale;
  }

  /// Shortest decimal that round-trips.
  static std::string to_string(double v) {
    char buf[64];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, v);
    return std::string(buf, ptr);
  }
  static std::string to_decimal(double v) { return to_string(v); }

  static double parse(std::string_view s) {
    const std::string t = detail::trim(s);
    if (t.find('/') != std::string::npos) return parse_ratio(t).to_double();
    double v = 0;
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (ec != std::errc{} || ptr != t.data() + t.size()) {
      throw std::invalid_argument("not a number: '" + t + "'");
    }
    return v;
  }
};

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr const char* name = "rational";

  static Rational from_ratio(const Ratio& r) {
    Rational q(mpz_class(static_cast<long>(r.num)), mpz_class(static_cast<long>(r.den)));
    q.canonicalize();
    return q;
  }
  static Rational from_int(std::int64_t v) { return Rational(static_cast<long>(v)); }
  static Rational from_double(double v) { return Rational(v); }
  static double to_double(const Rational& v) { return v.get_d(); }
  static Rational abs(const Rational& v) { return Rational(::abs(v)); }
  static std::int64_t floor(const Rational& v) {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v.get_num_mpz_t(), v.get_den_mpz_t());
    return static_cast<std::int64_t>(q.get_si());
  }
  static bool near(const Rational& a, const Rational& b) { return a == b; }

  /// "p/q", or "p" when the denominator is 1.
  static std::string to_string(const Rational& v) { return v.get_str(); }

  /// Decimal rendering with 17 significant digits.
  static std::string to_decimal(const Rational& v) {
    if (v == 0) return "0";
    mpf_class f(v, 256);
    char buf[128];
    gmp_snprintf(buf, sizeof buf, "%.17Fg", f.get_mpf_t());
    return buf;
  }

  static Rational parse(std::string_view s) {
    const std::string t = detail::trim(s);
    if (t.find('.') != std::string::npos) return from_ratio(parse_ratio(t));
    Rational q;
    if (q.set_str(t, 10) != 0) throw std::invalid_argument("not a rational: '" + t + "'");
    if (q.get_den() == 0) throw std::invalid_argument("rational with zero denominator: '" + t + "'");
    q.canonicalize();
    return q;
  }
};

template <class T>
concept Scalar = requires { scalar_traits<T>::exact; };

template <Scalar T>
inline constexpr bool is_exact_v = scalar_traits<T>::exact;

template <Scalar T>
T abs_value(const T& v) {
  return scalar_traits<T>::abs(v);
}

template <Scalar T>
T from_ratio(const Ratio& r) {
  return scalar_traits<T>::from_ratio(r);
}

template <Scalar T>
T from_int(std::int64_t v) {
  return scalar_traits<T>::from_int(v);
}

template <Scalar T>
double to_double(const T& v) {
  return scalar_traits<T>::to_double(v);
}

template <Scalar T>
std::string to_string(const T& v) {
  return scalar_traits<T>::to_string(v);
}

template <Scalar T>
bool near(const T& a, const T& b) {
  return scalar_traits<T>::near(a, b);
}

enum class Arithmetic { rational, binary64 };

inline Arithmetic parse_arithmetic(std::string_view s) {
  if (s == "rational" || s == "exact") return Arithmetic::rational;
  if (s == "binary64" || s == "double" || s == "float") return Arithmetic::binary64;
  throw std::invalid_argument("unknown arithmetic mode '" + std::string(s) + "'");
}

inline const char* to_string(Arithmetic a) { return a == Arithmetic::rational ? "rational" : "binary64"; }

}  // namespace advect
