#pragma once

#include <complex>
#include <map>
#include <stdexcept>
#include <utility>
#include <vector>

#include "walks/numeric.hpp"

namespace walks::series {

/// Raised when a coefficient beyond a series' known order is requested.
class TruncationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Truncated power series c_0 + c_1 x + ... + c_N x^N + O(x^{N+1}) over the
/// rationals. Order -1 means nothing is known. Arithmetic propagates orders:
/// a sum is known to min(N_a, N_b); a product to min(N_a + v_b, N_b + v_a)
/// where v is the valuation.
class USeries {
 public:
  USeries() = default;
  /// Coefficients beyond order are dropped; missing ones are zero.
  USeries(std::vector<Rational> coeffs, int order);

  static USeries zero(int order) { return USeries({}, order); }
  static USeries constant(const Rational& c, int order) { return USeries({c}, order); }
  /// c x^k known to the given order.
  static USeries monomial(int k, const Rational& c, int order);

  int order() const { return order_; }
  /// Throws TruncationError if k > order(); zero for k < 0.
  const Rational& operator[](int k) const;
  const std::vector<Rational>& coeffs() const { return c_; }

  /// Index of the first nonzero coefficient, or order()+1 if none is known.
  int valuation() const;

  /// Same series with order lowered to min(order(), n).
  USeries truncated(int n) const;
  /// x^k * this.
  USeries shifted(int k) const;

  std::complex<double> evaluate(std::complex<double> x) const;

  USeries operator-() const;
  friend USeries operator+(const USeries& a, const USeries& b);
  friend USeries operator-(const USeries& a, const USeries& b);
  friend USeries operator*(const USeries& a, const USeries& b);
  friend USeries operator*(const Rational& s, const USeries& a);

 private:
  std::vector<Rational> c_;
  int order_ = -1;
};

/// outer(inner). Requires inner to have zero constant term.
USeries compose(const USeries& outer, const USeries& inner);
/// 1/a. Requires a nonzero constant term.
USeries reciprocal(const USeries& a);
/// sqrt(1 - u). Requires u to have zero constant term.
USeries sqrt1m(const USeries& u);

/// A(x) + sqrt(x) B(x). Precision is tracked in half-exponents: the value is
/// known for every term x^{e/2} with e <= precision().
class SqrtSeries {
 public:
  SqrtSeries() = default;
  SqrtSeries(USeries even, USeries odd);
  static SqrtSeries from_even(const USeries& a);

  const USeries& even() const { return even_; }
  const USeries& odd() const { return odd_; }

  int precision() const;
  /// Smallest e with a nonzero x^{e/2} term, or precision()+1.
  int half_valuation() const;
  SqrtSeries truncated(int precision) const;

  /// Uses the principal square root.
  std::complex<double> evaluate(std::complex<double> x) const;

  SqrtSeries operator-() const;
  friend SqrtSeries operator+(const SqrtSeries& a, const SqrtSeries& b);
  friend SqrtSeries operator-(const SqrtSeries& a, const SqrtSeries& b);
  friend SqrtSeries operator*(const SqrtSeries& a, const SqrtSeries& b);
  friend SqrtSeries operator*(const Rational& s, const SqrtSeries& a);

 private:
  USeries even_;
  USeries odd_;
};

/// outer(inner); inner must vanish at 0.
SqrtSeries compose(const USeries& outer, const SqrtSeries& inner);
/// 1/a via (A - sqrt(x) B)/(A^2 - x B^2). Requires A(0) != 0.
SqrtSeries reciprocal(const SqrtSeries& a);

/// Bivariate series truncated by total degree: coefficients x^i y^j with
/// i + j <= degree() are known.
class BivSeries {
 public:
  BivSeries() = default;
  explicit BivSeries(int degree);
  BivSeries(const std::map<std::pair<int, int>, Rational>& coeffs, int degree);

  /// Series in x alone (resp. y alone), truncated at the given total degree.
  static BivSeries from_x(const USeries& s, int degree);
  static BivSeries from_y(const USeries& s, int degree);

  int degree() const { return degree_; }
  /// Throws TruncationError when i + j > degree().
  const Rational& at(int i, int j) const;
  /// Total-degree valuation, or degree()+1 if zero.
  int valuation() const;
  BivSeries truncated(int degree) const;

  /// Swaps the roles of x and y.
  BivSeries transposed() const;

  /// B(x, s(x)). s must vanish at 0.
  USeries substitute_y(const USeries& s) const;
  SqrtSeries substitute_y(const SqrtSeries& s) const;

  BivSeries operator-() const;
  friend BivSeries operator+(const BivSeries& a, const BivSeries& b);
  friend BivSeries operator-(const BivSeries& a, const BivSeries& b);
  friend BivSeries operator*(const BivSeries& a, const BivSeries& b);

 private:
  static std::size_t index(int i, int j) {
    const auto d = static_cast<std::size_t>(i + j);
    return d * (d + 1) / 2 + static_cast<std::size_t>(j);
  }
  Rational& ref(int i, int j) { return c_[index(i, j)]; }

  int degree_ = -1;
  std::vector<Rational> c_;
};

}  // namespace walks::series
