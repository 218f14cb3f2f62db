#pragma once

#include <string>

#include "walks/series.hpp"

namespace walks::series {

/// The power-series root of x y - x^3 - y^3 = 0:
/// x^2 sum_m C(3m, m)/(2m+1) x^{3m}. Requires N >= 2.
USeries xi_series(int N);

/// psi = 1 - sum_{m>=1} m!(6m)! / ((6m-1) (2m)!^2 (3m)!) x^{3m} / 16^m.
USeries psi_series(int N);

enum class Branch { Xi0 = 0, Xi1 = 1, Xi2 = 2 };

std::string to_string(Branch b);

/// Xi0 = xi; Xi1 = sqrt(x) psi - xi/2; Xi2 = -sqrt(x) psi - xi/2.
/// Both components are known to order N.
SqrtSeries kernel_root_series(Branch b, int N);

/// G(x) = sum_i (-1)^i (xi^(i)(x) xi^(i+1)(x))^2 with xi^(0)(x) = x, summed
/// until the terms vanish modulo x^{N+1}. Requires N >= 6.
USeries g_series_iterated(int N);

/// R(x, y) = x y ((1+y)/(1-x) + (1+x)/(1-y)) to total degree D >= 2.
BivSeries r_series(int D);

/// x y - x^3 - y^3 as a bivariate series of total degree D.
BivSeries kernel_polynomial(int D);

}  // namespace walks::series
