#include "walks/kernel.hpp"

#include <stdexcept>

namespace walks::series {

USeries xi_series(int N) {
  if (N < 2) throw std::invalid_argument("xi_series needs N >= 2");
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  for (int m = 0; 3 * m + 2 <= N; ++m) {
    const auto um = static_cast<unsigned long>(m);
    c[static_cast<std::size_t>(3 * m + 2)] = Rational(binomial(3 * um, um), 2 * um + 1);
  }
  for (Rational& r : c) r.canonicalize();
  return USeries(std::move(c), N);
}

USeries psi_series(int N) {
  if (N < 0) throw std::invalid_argument("psi_series needs N >= 0");
  std::vector<Rational> c(static_cast<std::size_t>(N + 1));
  c[0] = 1;
  for (int m = 1; 3 * m <= N; ++m) {
    const auto um = static_cast<unsigned long>(m);
    const BigInt num = factorial(um) * factorial(6 * um);
    const BigInt f2m = factorial(2 * um);
    BigInt sixteen_m;
    mpz_ui_pow_ui(sixteen_m.get_mpz_t(), 16, um);
    const BigInt den = BigInt(6 * m - 1) * f2m * f2m * factorial(3 * um) * sixteen_m;
    Rational r(num, den);
    r.canonicalize();
    c[static_cast<std::size_t>(3 * m)] = -r;
  }
  return USeries(std::move(c), N);
}

std::string to_string(Branch b) {
  switch (b) {
    case Branch::Xi0: return "xi0";
    case Branch::Xi1: return "xi1";
    case Branch::Xi2: return "xi2";
  }
  return "?";
}

SqrtSeries kernel_root_series(Branch b, int N) {
  const USeries xi = xi_series(N);
  if (b == Branch::Xi0) return SqrtSeries::from_even(xi);
  const USeries half_xi = Rational(-1, 2) * xi;
  const USeries psi = psi_series(N);
  return SqrtSeries(half_xi, b == Branch::Xi1 ? psi : -psi);
}

USeries g_series_iterated(int N) {
  if (N < 6) throw std::invalid_argument("g_series_iterated needs N >= 6");
  const USeries xi = xi_series(N);
  USeries current = USeries::monomial(1, 1, N);
  USeries next = xi;
  USeries g = USeries::zero(N);
  for (int i = 0;; ++i) {
    if (2 * (current.valuation() + next.valuation()) > N) break;
    const USeries prod = current * next;
    const USeries term = (prod * prod).truncated(N);
    g = (i % 2 == 0) ? g + term : g - term;
    current = next;
    next = compose(xi, current).truncated(N);
  }
  return g.truncated(N);
}

BivSeries r_series(int D) {
  if (D < 2) throw std::invalid_argument("r_series needs D >= 2");
  const USeries geometric(std::vector<Rational>(static_cast<std::size_t>(D + 1), Rational(1)), D);
  const USeries one_plus(std::vector<Rational>{1, 1}, D);
  const BivSeries xy({{{1, 1}, Rational(1)}}, D);
  const BivSeries sum = BivSeries::from_y(one_plus, D) * BivSeries::from_x(geometric, D) +
                        BivSeries::from_x(one_plus, D) * BivSeries::from_y(geometric, D);
  return (xy * sum).truncated(D);
}

BivSeries kernel_polynomial(int D) {
  return BivSeries({{{1, 1}, Rational(1)}, {{3, 0}, Rational(-1)}, {{0, 3}, Rational(-1)}}, D);
}

}  // namespace walks::series
