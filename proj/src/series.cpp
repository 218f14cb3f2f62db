#include "walks/series.hpp"

#include <algorithm>
#include <string>

namespace walks::series {

namespace {

const Rational& zero_rational() {
  static const Rational z;
  return z;
}

void check_order(int order) {
  if (order < -1) throw std::invalid_argument("series order must be >= -1, got " + std::to_string(order));
}

}  // namespace

// ---------------------------------------------------------------- USeries

USeries::USeries(std::vector<Rational> coeffs, int order) : c_(std::move(coeffs)), order_(order) {
  check_order(order);
  c_.resize(static_cast<std::size_t>(order + 1));
}

USeries USeries::monomial(int k, const Rational& c, int order) {
  std::vector<Rational> v(static_cast<std::size_t>(std::max(order + 1, 0)));
  if (k >= 0 && k <= order) v[static_cast<std::size_t>(k)] = c;
  return USeries(std::move(v), order);
}

const Rational& USeries::operator[](int k) const {
  if (k < 0) return zero_rational();
  if (k > order_) {
    throw TruncationError("coefficient x^" + std::to_string(k) + " requested from a series known to order " +
                          std::to_string(order_));
  }
  return c_[static_cast<std::size_t>(k)];
}

int USeries::valuation() const {
  for (int k = 0; k <= order_; ++k)
    if (sgn(c_[static_cast<std::size_t>(k)]) != 0) return k;
  return order_ + 1;
}

USeries USeries::truncated(int n) const {
  if (n >= order_) return *this;
  return USeries(std::vector<Rational>(c_.begin(), c_.begin() + std::max(n + 1, 0)), std::max(n, -1));
}

USeries USeries::shifted(int k) const {
  if (k < 0) throw std::invalid_argument("negative shift");
  std::vector<Rational> v(static_cast<std::size_t>(k), Rational(0));
  v.insert(v.end(), c_.begin(), c_.end());
  return USeries(std::move(v), order_ + k);
}

std::complex<double> USeries::evaluate(std::complex<double> x) const {
  std::complex<double> acc = 0.0;
  for (int k = order_; k >= 0; --k) acc = acc * x + c_[static_cast<std::size_t>(k)].get_d();
  return acc;
}

USeries USeries::operator-() const {
  USeries r = *this;
  for (Rational& c : r.c_) c = -c;
  return r;
}

USeries operator+(const USeries& a, const USeries& b) {
  const int n = std::min(a.order_, b.order_);
  std::vector<Rational> v(static_cast<std::size_t>(n + 1));
  for (int k = 0; k <= n; ++k) v[static_cast<std::size_t>(k)] = a.c_[static_cast<std::size_t>(k)] + b.c_[static_cast<std::size_t>(k)];
  return USeries(std::move(v), n);
}

USeries operator-(const USeries& a, const USeries& b) { return a + (-b); }

USeries operator*(const USeries& a, const USeries& b) {
  const int va = a.valuation();
  const int vb = b.valuation();
  const int n = std::min(a.order_ + vb, b.order_ + va);
  std::vector<Rational> v(static_cast<std::size_t>(std::max(n + 1, 0)));
  for (int i = va; i <= std::min(a.order_, n); ++i) {
    const Rational& ai = a.c_[static_cast<std::size_t>(i)];
    if (sgn(ai) == 0) continue;
    for (int j = vb; j <= std::min(b.order_, n - i); ++j) {
      const Rational& bj = b.c_[static_cast<std::size_t>(j)];
      if (sgn(bj) != 0) v[static_cast<std::size_t>(i + j)] += ai * bj;
    }
  }
  return USeries(std::move(v), n);
}

USeries operator*(const Rational& s, const USeries& a) {
  USeries r = a;
  for (Rational& c : r.c_) c *= s;
  return r;
}

namespace {

void require_zero_constant(const Rational& c0, const char* op) {
  if (sgn(c0) != 0) throw std::domain_error(std::string(op) + ": inner series must have zero constant term");
}

}  // namespace

USeries compose(const USeries& outer, const USeries& inner) {
  if (inner.order() >= 0) require_zero_constant(inner[0], "compose");
  const int v = inner.valuation();
  // Terms f_k inner^k with k > order(outer) are unknown and have valuation >= (order+1) v.
  const int cap = (outer.order() + 1) * v - 1;
  USeries result = USeries::constant(outer.order() >= 0 ? outer[0] : Rational(0), cap);
  if (outer.order() < 0) return USeries::zero(-1);
  USeries power = USeries::constant(1, cap);
  for (int k = 1; k <= outer.order() && k * v <= cap; ++k) {
    power = (power * inner).truncated(cap);
    const Rational& fk = outer[k];
    result = result + (sgn(fk) != 0 ? fk * power : USeries::zero(power.order()));
  }
  return result.truncated(cap);
}

USeries reciprocal(const USeries& a) {
  if (a.order() < 0 || sgn(a[0]) == 0) throw std::domain_error("reciprocal: constant term must be nonzero");
  const int n = a.order();
  std::vector<Rational> b(static_cast<std::size_t>(n + 1));
  const Rational inv0 = 1 / a[0];
  b[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Rational acc;
    for (int i = 1; i <= k; ++i)
      if (sgn(a[i]) != 0) acc += a[i] * b[static_cast<std::size_t>(k - i)];
    b[static_cast<std::size_t>(k)] = -acc * inv0;
  }
  return USeries(std::move(b), n);
}

USeries sqrt1m(const USeries& u) {
  if (u.order() >= 0) require_zero_constant(u[0], "sqrt1m");
  const int n = u.order();
  std::vector<Rational> s(static_cast<std::size_t>(std::max(n + 1, 0)));
  if (n < 0) return USeries(std::move(s), n);
  s[0] = 1;
  // s^2 = 1 - u, coefficient by coefficient.
  for (int k = 1; k <= n; ++k) {
    Rational acc = -u[k];
    for (int i = 1; i < k; ++i) acc -= s[static_cast<std::size_t>(i)] * s[static_cast<std::size_t>(k - i)];
    s[static_cast<std::size_t>(k)] = acc / 2;
  }
  return USeries(std::move(s), n);
}

// ------------------------------------------------------------- SqrtSeries

namespace {

int even_order_for(int precision) { return precision >= 0 ? precision / 2 : -1; }
int odd_order_for(int precision) { return precision >= 1 ? (precision - 1) / 2 : -1; }

}  // namespace

SqrtSeries::SqrtSeries(USeries even, USeries odd) : even_(std::move(even)), odd_(std::move(odd)) {
  const int p = precision();
  even_ = even_.truncated(even_order_for(p));
  odd_ = odd_.truncated(odd_order_for(p));
}

SqrtSeries SqrtSeries::from_even(const USeries& a) { return SqrtSeries(a, USeries::zero(a.order())); }

int SqrtSeries::precision() const { return std::min(2 * even_.order() + 1, 2 * odd_.order() + 2); }

int SqrtSeries::half_valuation() const {
  return std::min({2 * even_.valuation(), 2 * odd_.valuation() + 1, precision() + 1});
}

SqrtSeries SqrtSeries::truncated(int p) const {
  return SqrtSeries(even_.truncated(even_order_for(p)), odd_.truncated(odd_order_for(p)));
}

std::complex<double> SqrtSeries::evaluate(std::complex<double> x) const {
  return even_.evaluate(x) + std::sqrt(x) * odd_.evaluate(x);
}

SqrtSeries SqrtSeries::operator-() const { return SqrtSeries(-even_, -odd_); }

SqrtSeries operator+(const SqrtSeries& a, const SqrtSeries& b) {
  return SqrtSeries(a.even_ + b.even_, a.odd_ + b.odd_);
}

SqrtSeries operator-(const SqrtSeries& a, const SqrtSeries& b) { return a + (-b); }

SqrtSeries operator*(const SqrtSeries& a, const SqrtSeries& b) {
  return SqrtSeries(a.even_ * b.even_ + (a.odd_ * b.odd_).shifted(1), a.even_ * b.odd_ + a.odd_ * b.even_);
}

SqrtSeries operator*(const Rational& s, const SqrtSeries& a) { return SqrtSeries(s * a.even_, s * a.odd_); }

SqrtSeries compose(const USeries& outer, const SqrtSeries& inner) {
  if (inner.even().order() >= 0) require_zero_constant(inner.even()[0], "compose");
  const int hv = inner.half_valuation();
  const int cap = (outer.order() + 1) * hv - 1;
  if (outer.order() < 0) return SqrtSeries(USeries::zero(-1), USeries::zero(-1));
  auto constant = [&](const Rational& c) {
    return SqrtSeries(USeries::constant(c, even_order_for(cap)), USeries::zero(odd_order_for(cap)));
  };
  SqrtSeries result = constant(outer[0]);
  SqrtSeries power = constant(1);
  for (int k = 1; k <= outer.order() && k * hv <= cap; ++k) {
    power = (power * inner).truncated(cap);
    result = result + outer[k] * power;
  }
  return result.truncated(cap);
}

SqrtSeries reciprocal(const SqrtSeries& a) {
  const USeries denom = a.even() * a.even() - (a.odd() * a.odd()).shifted(1);
  const USeries r = reciprocal(denom);
  return SqrtSeries(a.even() * r, -(a.odd() * r));
}

// -------------------------------------------------------------- BivSeries

BivSeries::BivSeries(int degree) : degree_(degree) {
  check_order(degree);
  c_.resize(degree >= 0 ? index(0, degree) + 1 : 0);
}

BivSeries::BivSeries(const std::map<std::pair<int, int>, Rational>& coeffs, int degree) : BivSeries(degree) {
  for (const auto& [ij, v] : coeffs) {
    const auto [i, j] = ij;
    if (i < 0 || j < 0) throw std::invalid_argument("bivariate exponents must be nonnegative");
    if (i + j <= degree_) ref(i, j) = v;
  }
}

BivSeries BivSeries::from_x(const USeries& s, int degree) {
  BivSeries r(std::min(degree, s.order()));
  for (int i = 0; i <= r.degree_; ++i) r.ref(i, 0) = s[i];
  return r;
}

BivSeries BivSeries::from_y(const USeries& s, int degree) { return from_x(s, degree).transposed(); }

const Rational& BivSeries::at(int i, int j) const {
  if (i < 0 || j < 0) return zero_rational();
  if (i + j > degree_) {
    throw TruncationError("coefficient x^" + std::to_string(i) + " y^" + std::to_string(j) +
                          " requested from a series known to total degree " + std::to_string(degree_));
  }
  return c_[index(i, j)];
}

int BivSeries::valuation() const {
  for (int d = 0; d <= degree_; ++d)
    for (int j = 0; j <= d; ++j)
      if (sgn(c_[index(d - j, j)]) != 0) return d;
  return degree_ + 1;
}

BivSeries BivSeries::truncated(int degree) const {
  if (degree >= degree_) return *this;
  BivSeries r(std::max(degree, -1));
  std::copy(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(r.c_.size()), r.c_.begin());
  return r;
}

BivSeries BivSeries::transposed() const {
  BivSeries r(degree_);
  for (int d = 0; d <= degree_; ++d)
    for (int j = 0; j <= d; ++j) r.ref(j, d - j) = c_[index(d - j, j)];
  return r;
}

BivSeries BivSeries::operator-() const {
  BivSeries r = *this;
  for (Rational& c : r.c_) c = -c;
  return r;
}

BivSeries operator+(const BivSeries& a, const BivSeries& b) {
  BivSeries r(std::min(a.degree_, b.degree_));
  for (std::size_t k = 0; k < r.c_.size(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
  return r;
}

BivSeries operator-(const BivSeries& a, const BivSeries& b) { return a + (-b); }

BivSeries operator*(const BivSeries& a, const BivSeries& b) {
  BivSeries r(std::min(a.degree_ + b.valuation(), b.degree_ + a.valuation()));
  struct Entry {
    int i, j;
    const Rational* v;
  };
  auto nonzero = [&](const BivSeries& s) {
    std::vector<Entry> out;
    for (int d = 0; d <= std::min(s.degree_, r.degree_); ++d)
      for (int j = 0; j <= d; ++j)
        if (sgn(s.c_[BivSeries::index(d - j, j)]) != 0) out.push_back({d - j, j, &s.c_[BivSeries::index(d - j, j)]});
    return out;
  };
  const auto ea = nonzero(a);
  const auto eb = nonzero(b);
  for (const Entry& x : ea)
    for (const Entry& y : eb)
      if (x.i + x.j + y.i + y.j <= r.degree_) r.ref(x.i + y.i, x.j + y.j) += *x.v * *y.v;
  return r;
}

namespace {

// Coefficient of y^j as a series in x, known to order degree - j.
USeries y_slice(const BivSeries& b, int j) {
  std::vector<Rational> v;
  for (int i = 0; i + j <= b.degree(); ++i) v.push_back(b.at(i, j));
  return USeries(std::move(v), b.degree() - j);
}

}  // namespace

USeries BivSeries::substitute_y(const USeries& s) const {
  if (s.order() >= 0) require_zero_constant(s[0], "substitute_y");
  // Unknown terms x^i y^j have i + j > degree; with v >= 1 their valuation exceeds degree.
  const int cap = degree_;
  USeries result = y_slice(*this, 0).truncated(cap);
  USeries power = USeries::constant(1, cap);
  for (int j = 1; j <= degree_; ++j) {
    power = (power * s).truncated(cap);
    result = result + y_slice(*this, j) * power;
  }
  return result.truncated(cap);
}

SqrtSeries BivSeries::substitute_y(const SqrtSeries& s) const {
  if (s.even().order() >= 0) require_zero_constant(s.even()[0], "substitute_y");
  const int hv = s.half_valuation();
  // In half-exponents: unknown terms have 2i + j*hv >= (degree+1) min(2, hv).
  const int cap = (degree_ + 1) * std::min(hv, 2) - 1;
  SqrtSeries result = SqrtSeries::from_even(y_slice(*this, 0)).truncated(cap);
  SqrtSeries power(USeries::constant(1, cap), USeries::zero(cap));
  for (int j = 1; j <= degree_; ++j) {
    power = (power * s).truncated(cap);
    result = result + SqrtSeries::from_even(y_slice(*this, j)) * power;
  }
  return result.truncated(cap);
}

}  // namespace walks::series
