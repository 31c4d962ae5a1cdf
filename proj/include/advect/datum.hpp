#pragma once

// Piecewise analytic initial data with closed-form antiderivatives, so that
// cell averages are computed without quadrature. Rational runs only accept
// piecewise-affine data; trigonometric pieces are binary64 only.

#include "advect/scalar.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

namespace advect {

namespace expr {

template <Scalar T>
struct Constant {
  T value;
};

/// slope * x + intercept
template <Scalar T>
struct Affine {
  T slope;
  T intercept;
};

/// amplitude * sin(frequency * x + phase)
struct Sine {
  double amplitude = 1;
  double frequency = 1;
  double phase = 0;
};

/// amplitude * cos(f1 * x + p1) * sin(f2 * x + p2)
struct CosSin {
  double amplitude = 1;
  double f1 = 1;
  double p1 = 0;
  double f2 = 1;
  double p2 = 0;
};

}  // namespace expr

template <Scalar T>
using Expression = std::variant<expr::Constant<T>, expr::Affine<T>, expr::Sine, expr::CosSin>;

template <Scalar T>
bool is_trigonometric(const Expression<T>& e) {
  return std::holds_alternative<expr::Sine>(e) || std::holds_alternative<expr::CosSin>(e);
}

template <Scalar T>
T evaluate(const Expression<T>& e, const T& x) {
  using tr = scalar_traits<T>;
  return std::visit(
      [&](const auto& f) -> T {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, expr::Constant<T>>) {
          return f.value;
        } else if constexpr (std::is_same_v<F, expr::Affine<T>>) {
          return T(f.slope * x + f.intercept);
        } else if constexpr (std::is_same_v<F, expr::Sine>) {
          const double xd = tr::to_double(x);
          return tr::from_double(f.amplitude * std::sin(f.frequency * xd + f.phase));
        } else {
          const double xd = tr::to_double(x);
          return tr::from_double(f.amplitude * std::cos(f.f1 * xd + f.p1) * std::sin(f.f2 * xd + f.p2));
        }
      },
      e);
}

/// An antiderivative of the expression, evaluated at x.
template <Scalar T>
T primitive(const Expression<T>& e, const T& x) {
  using tr = scalar_traits<T>;
  return std::visit(
      [&](const auto& f) -> T {
        using F = std::decay_t<decltype(f)>;
        if constexpr (std::is_same_v<F, expr::Constant<T>>) {
          return T(f.value * x);
        } else if constexpr (std::is_same_v<F, expr::Affine<T>>) {
          return T(f.slope * x * x / 2 + f.intercept * x);
        } else if constexpr (std::is_same_v<F, expr::Sine>) {
          if (f.frequency == 0) return tr::from_double(f.amplitude * std::sin(f.phase) * tr::to_double(x));
          const double xd = tr::to_double(x);
          return tr::from_double(-f.amplitude * std::cos(f.frequency * xd + f.phase) / f.frequency);
        } else {
          // cos(A) sin(B) = (sin(B + A) + sin(B - A)) / 2
          const double xd = tr::to_double(x);
          auto sine_primitive = [xd](double freq, double ph) {
            if (freq == 0) return std::sin(ph) * xd;
            return -std::cos(freq * xd + ph) / freq;
          };
          return tr::from_double(0.5 * f.amplitude *
                                 (sine_primitive(f.f2 + f.f1, f.p2 + f.p1) + sine_primitive(f.f2 - f.f1, f.p2 - f.p1)));
        }
      },
      e);
}

template <Scalar T>
struct Piece {
  T begin;  ///< inclusive
  T end;    ///< exclusive
  Expression<T> expression;
};

enum class Extension {
  periodic,        ///< pieces repeat with period (last end - first begin)
  constant_tails,  ///< constant continuation of the outermost edge values
  none,            ///< queries outside the pieces are errors
};

/// Piecewise datum on consecutive intervals [a, b).
template <Scalar T>
class PiecewiseDatum {
 public:
  PiecewiseDatum(std::vector<Piece<T>> pieces, Extension extension, std::string name = {})
      : pieces_(std::move(pieces)), extension_(extension), name_(std::move(name)) {
    if (pieces_.empty()) throw std::invalid_argument("datum needs at least one piece");
    for (std::size_t i = 0; i < pieces_.size(); ++i) {
      const auto& p = pieces_[i];
      if (!(p.begin < p.end)) throw std::invalid_argument("datum piece with empty interval");
      if (i > 0 && !(pieces_[i - 1].end == p.begin)) throw std::invalid_argument("datum pieces must be contiguous");
      if constexpr (is_exact_v<T>) {
        if (is_trigonometric(p.expression)) {
          throw std::invalid_argument("trigonometric datum pieces are not available in rational arithmetic");
        }
      }
    }
  }

  [[nodiscard]] const std::vector<Piece<T>>& pieces() const { return pieces_; }
  [[nodiscard]] Extension extension() const { return extension_; }
  [[nodiscard]] bool is_periodic() const { return extension_ == Extension::periodic; }
  [[nodiscard]] const std::string& name() const { return name_; }
  [[nodiscard]] const T& domain_begin() const { return pieces_.front().begin; }
  [[nodiscard]] const T& domain_end() const { return pieces_.back().end; }
  [[nodiscard]] std::optional<T> period() const {
    if (!is_periodic()) return std::nullopt;
    return T(domain_end() - domain_begin());
  }

  /// Pointwise value; pieces are closed on the left.
  [[nodiscard]] T value(const T& x) const {
    if (is_periodic()) {
      const T y = T(x - from_int<T>(periods_before(x)) * *period());
      return evaluate(piece_at(y).expression, y);
    }
    if (x < domain_begin() || !(x < domain_end())) {
      require_extension(x, "value");
      return x < domain_begin() ? left_value() : right_value();
    }
    return evaluate(piece_at(x).expression, x);
  }

  /// Exact integral of the datum over [a, b].
  [[nodiscard]] T integral(const T& a, const T& b) const {
    if (b < a) return T(-integral(b, a));
    if (is_periodic()) return T(cumulative(b) - cumulative(a));
    if (a < domain_begin()) require_extension(a, "integral");
    if (b > domain_end()) require_extension(b, "integral");
    T total(0);
    if (a < domain_begin()) total += T(left_value() * ((b < domain_begin() ? b : domain_begin()) - a));
    total += integral_in_domain(a, b);
    if (b > domain_end()) total += T(right_value() * (b - (a > domain_end() ? a : domain_end())));
    return total;
  }

 private:
  [[nodiscard]] std::int64_t periods_before(const T& x) const {
    return scalar_traits<T>::floor(T((x - domain_begin()) / *period()));
  }

  /// Integral from domain_begin() to x of the periodic extension.
  [[nodiscard]] T cumulative(const T& x) const {
    const std::int64_t n = periods_before(x);
    const T p = *period();
    const T r = T(x - from_int<T>(n) * p);
    return T(from_int<T>(n) * integral_in_domain(domain_begin(), domain_end()) + integral_in_domain(domain_begin(), r));
  }

  [[nodiscard]] const Piece<T>& piece_at(const T& y) const {
    for (const auto& p : pieces_) {
      if (!(y < p.begin) && y < p.end) return p;
    }
    return pieces_.back();
  }

  [[nodiscard]] T left_value() const { return evaluate(pieces_.front().expression, domain_begin()); }
  [[nodiscard]] T right_value() const { return evaluate(pieces_.back().expression, domain_end()); }

  void require_extension(const T& x, const char* what) const {
    if (extension_ != Extension::constant_tails) {
      throw std::out_of_range(std::string(what) + " at " + advect::to_string(x) + " outside the datum's pieces [" +
                              advect::to_string(domain_begin()) + ", " + advect::to_string(domain_end()) + ")");
    }
  }

  /// Integral over [lo, hi] clipped to the pieces.
  [[nodiscard]] T integral_in_domain(const T& lo, const T& hi) const {
    T total(0);
    for (const auto& p : pieces_) {
      const T& a = lo < p.begin ? p.begin : lo;
      const T& b = hi < p.end ? hi : p.end;
      if (a < b) total += T(primitive(p.expression, b) - primitive(p.expression, a));
    }
    return total;
  }

  std::vector<Piece<T>> pieces_;
  Extension extension_ = Extension::none;
  std::string name_;
};

/// Mean of the datum over [center - width/2, center + width/2].
template <Scalar T>
T cell_average(const PiecewiseDatum<T>& datum, const T& center, const T& width) {
  if (!(width > 0)) throw std::invalid_argument("cell width must be positive");
  const T half = T(width / 2);
  return T(datum.integral(T(center - half), T(center + half)) / width);
}

}  // namespace advect
