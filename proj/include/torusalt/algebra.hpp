#pragma once

// Exact arithmetic substrate: integer Laurent polynomials in one variable,
// rational piecewise-linear functions on [0,2], and signatures of symmetric
// integer matrices.

#include <gmpxx.h>

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "torusalt/errors.hpp"

namespace torusalt {

using Integer = mpz_class;
using Rational = mpq_class;  // always kept canonical (denominator > 0, reduced)

Rational make_rational(long num, long den = 1);
std::string to_string(const Integer& z);
std::string to_string(const Rational& q);

class LaurentPoly {
 public:
  using Terms = std::map<int, Integer>;

  LaurentPoly() = default;
  LaurentPoly(long constant);  // NOLINT(google-explicit-constructor)
  explicit LaurentPoly(Terms terms);

  static LaurentPoly monomial(const Integer& coef, int exponent);
  static LaurentPoly t(int exponent = 1) { return monomial(1, exponent); }

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  int min_exponent() const;  // requires !is_zero()
  int max_exponent() const;  // requires !is_zero()
  Integer coefficient(int exponent) const;

  LaurentPoly& operator+=(const LaurentPoly& rhs);
  LaurentPoly& operator-=(const LaurentPoly& rhs);
  LaurentPoly& operator*=(const LaurentPoly& rhs);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(LaurentPoly a, const LaurentPoly& b) { return a *= b; }
  LaurentPoly operator-() const;
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) = default;

  LaurentPoly pow(unsigned n) const;
  // Multiply by t^k.
  LaurentPoly shifted(int k) const;
  // p(t) -> p(t^{-1}).
  LaurentPoly inverted() const;
  // p(t) -> p(t^k) for k != 0.
  LaurentPoly substitute_power(int k) const;
  Rational evaluate(const Rational& at) const;

  std::string to_text() const;
  nlohmann::ordered_json to_json() const;
  static LaurentPoly from_json(const nlohmann::json& j);

 private:
  void erase_zero(Terms::iterator it);
  Terms terms_;
};

enum class PolyOp { add, mul };
LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op);

// Quotient q with q * den == num in Z[t, t^-1]; throws NotDivisible otherwise.
LaurentPoly poly_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

// The unique unit multiple +-t^k p that is symmetric under t <-> 1/t and
// evaluates to +1 at t = 1. Throws NotNormalizable when none exists.
LaurentPoly normalize_symmetric(const LaurentPoly& p);

// Value at t is intercept + slope * t.
struct Line {
  Rational intercept;
  Rational slope;
  Rational at(const Rational& t) const { return intercept + slope * t; }
};

struct Breakpoint {
  Rational t;
  Rational value;
  friend bool operator==(const Breakpoint&, const Breakpoint&) = default;
};

// Continuous piecewise-linear function on [0,2] stored by its breakpoints.
// Consecutive collinear breakpoints are merged on construction.
class PiecewiseLinear {
 public:
  explicit PiecewiseLinear(std::vector<Breakpoint> points);

  const std::vector<Breakpoint>& breakpoints() const { return points_; }
  Rational at(const Rational& t) const;
  // Slope of each linear piece, left to right.
  std::vector<Rational> slopes() const;

  friend bool operator==(const PiecewiseLinear&, const PiecewiseLinear&) = default;

 private:
  std::vector<Breakpoint> points_;
};

PiecewiseLinear upper_envelope(const std::vector<Line>& lines);

using IntMatrix = std::vector<std::vector<Integer>>;

// Number of positive minus number of negative eigenvalues, via exact
// congruent diagonalization over Q.
int signature_symmetric(const IntMatrix& m);
int matrix_rank(const IntMatrix& m);

}  // namespace torusalt
