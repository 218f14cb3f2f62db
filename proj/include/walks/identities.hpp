#pragma once

#include <optional>
#include <string>

#include "walks/kernel.hpp"

namespace walks::series {

enum class Identity { Main, KnightKernel, Diagonal, Main2 };

std::string to_string(Identity id);
/// Accepts "main", "knight-kernel", "diagonal", "main2".
Identity parse_identity(const std::string& name);

/// A coefficient position. Main and Diagonal use `i` alone (x^i resp. t^i);
/// KnightKernel uses x^i y^j; Main2 on a conjugate branch uses the half
/// exponent x^{i/2}.
struct Term {
  enum class Kind { X, T, XY, HalfX };
  Kind kind = Kind::X;
  int i = 0;
  int j = 0;

  std::string to_string() const;
  friend bool operator==(const Term&, const Term&) = default;
};

struct Mismatch {
  Term term;
  Rational lhs;
  Rational rhs;
};

struct IdentityReport {
  bool holds = false;
  std::optional<Mismatch> first_failure;
  /// Number of coefficients compared.
  int terms_checked = 0;
};

/// Overrides for the series an identity consumes. Missing entries are
/// computed from the enumeration and recurrence engines.
struct IdentityInputs {
  std::optional<USeries> g;
  std::optional<BivSeries> q;
  std::optional<USeries> f;
};

/// G(x) = x^3 sum_i Q_{i,0} x^i for the knight walks from (1,1), known to `order`.
USeries knight_g_series(int order);
/// Q(x, y) for the knight walks from (1,1), known to total degree `degree`.
BivSeries knight_q_series(int degree);
/// F(x) = sum_{i>=2} a_{i,2} x^{i+1} from the knight recurrence, known to `order`.
USeries f_series(int order);

/// Main:          G(x) + G(xi(x)) = x^2 xi(x)^2, checked to x^N.
/// KnightKernel:  (xy - x^3 - y^3) Q(x,y) = x^2 y^2 - G(x) - G(y), total degree N.
/// Diagonal:      [x^0] t^2 Q(tx, t/x) = (t^4 - 2 S(t^3 U(t))) / sqrt(1 - 4t^2), to t^N,
///                where S(z^3) = G(z) and U(t) = (1 - sqrt(1 - 4t^2)) / (2t).
/// Main2:         F(x) + F(xi_b(x)) = R(x, xi_b(x)). Branch Xi0 is checked to x^N;
///                Xi1 and Xi2 in SqrtSeries arithmetic to x^{N + 1/2}.
/// Throws TruncationError if an override is too short for N.
IdentityReport verify_identity(Identity id, int N, Branch branch = Branch::Xi0, const IdentityInputs& inputs = {});

/// Both sides of the diagonal identity to t^N. Dividing by t^4 gives the
/// normalization in which Q_{n,n} multiplies t^{2n-2}.
struct DiagonalSides {
  USeries lhs;
  USeries rhs;
};
DiagonalSides diagonal_sides(int N, const IdentityInputs& inputs = {});

}  // namespace walks::series
