#include <sstream>
#include <utility>

#include "torusalt/algebra.hpp"

namespace torusalt {

Rational make_rational(long num, long den) {
  if (den == 0) throw InvalidArgument("rational with zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Integer& z) { return z.get_str(); }

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

LaurentPoly::LaurentPoly(long constant) {
  if (constant != 0) terms_.emplace(0, Integer(constant));
}

LaurentPoly::LaurentPoly(Terms terms) : terms_(std::move(terms)) {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second == 0)
      it = terms_.erase(it);
    else
      ++it;
  }
}

LaurentPoly LaurentPoly::monomial(const Integer& coef, int exponent) {
  LaurentPoly p;
  if (coef != 0) p.terms_.emplace(exponent, coef);
  return p;
}

int LaurentPoly::min_exponent() const {
  if (is_zero()) throw InvalidArgument("min_exponent of the zero polynomial");
  return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const {
  if (is_zero()) throw InvalidArgument("max_exponent of the zero polynomial");
  return terms_.rbegin()->first;
}

Integer LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? Integer(0) : it->second;
}

void LaurentPoly::erase_zero(Terms::iterator it) {
  if (it->second == 0) terms_.erase(it);
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second += c;
    erase_zero(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& rhs) {
  for (const auto& [e, c] : rhs.terms_) {
    auto [it, inserted] = terms_.try_emplace(e, 0);
    it->second -= c;
    erase_zero(it);
  }
  return *this;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& rhs) {
  Terms out;
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : rhs.terms_) {
      auto [it, inserted] = out.try_emplace(e1 + e2, 0);
      it->second += c1 * c2;
    }
  }
  *this = LaurentPoly(std::move(out));
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r = *this;
  for (auto& [e, c] : r.terms_) c = -c;
  return r;
}

LaurentPoly LaurentPoly::pow(unsigned n) const {
  LaurentPoly result(1);
  LaurentPoly base = *this;
  while (n > 0) {
    if (n & 1U) result *= base;
    n >>= 1U;
    if (n > 0) base *= base;
  }
  return result;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e + k, c);
  return LaurentPoly(std::move(out));
}

LaurentPoly LaurentPoly::inverted() const { return substitute_power(-1); }

LaurentPoly LaurentPoly::substitute_power(int k) const {
  if (k == 0) throw InvalidArgument("substitute_power with k = 0");
  Terms out;
  for (const auto& [e, c] : terms_) out.emplace(e * k, c);
  return LaurentPoly(std::move(out));
}

Rational LaurentPoly::evaluate(const Rational& at) const {
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    if (e < 0 && at == 0) throw InvalidArgument("negative power evaluated at 0");
    Rational power = 1;
    Rational base = e < 0 ? Rational(1 / at) : at;
    for (int i = 0; i < (e < 0 ? -e : e); ++i) power *= base;
    sum += Rational(c) * power;
  }
  sum.canonicalize();
  return sum;
}

std::string LaurentPoly::to_text() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    Integer mag = abs(c);
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag.get_str();
      continue;
    }
    if (mag != 1) out << mag.get_str();
    out << "t";
    if (e != 1) out << "^" << e;
  }
  return out.str();
}

nlohmann::ordered_json LaurentPoly::to_json() const {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& [e, c] : terms_) {
    nlohmann::ordered_json term;
    term["exp"] = e;
    if (c.fits_slong_p())
      term["coef"] = c.get_si();
    else
      term["coef"] = c.get_str();
    arr.push_back(std::move(term));
  }
  return arr;
}

LaurentPoly LaurentPoly::from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("polynomial JSON must be an array");
  Terms terms;
  for (const auto& term : j) {
    if (!term.contains("exp") || !term.contains("coef"))
      throw ParseError("polynomial term needs 'exp' and 'coef'");
    const auto& coef = term.at("coef");
    Integer c = coef.is_string() ? Integer(coef.get<std::string>())
                                 : Integer(coef.get<long>());
    auto [it, inserted] = terms.try_emplace(term.at("exp").get<int>(), 0);
    it->second += c;
  }
  return LaurentPoly(std::move(terms));
}

LaurentPoly poly_arith(const LaurentPoly& a, const LaurentPoly& b, PolyOp op) {
  return op == PolyOp::add ? a + b : a * b;
}

LaurentPoly poly_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw NotDivisible("division by the zero polynomial");
  if (num.is_zero()) return {};
  const int den_span = den.max_exponent() - den.min_exponent();
  const Integer& den_lead = den.terms().rbegin()->second;

  // Each step removes the top term of the remainder without lowering its
  // bottom exponent, so the span shrinks until it is below den_span.
  LaurentPoly quotient;
  LaurentPoly rem = num;
  while (!rem.is_zero()) {
    if (rem.max_exponent() - rem.min_exponent() < den_span)
      throw NotDivisible("(" + num.to_text() + ") / (" + den.to_text() + ") leaves a remainder");
    const Integer& lead = rem.terms().rbegin()->second;
    if (!mpz_divisible_p(lead.get_mpz_t(), den_lead.get_mpz_t()))
      throw NotDivisible("(" + num.to_text() + ") / (" + den.to_text() + ") is not integral");
    LaurentPoly term = LaurentPoly::monomial(Integer(lead / den_lead),
                                             rem.max_exponent() - den.max_exponent());
    quotient += term;
    rem -= term * den;
  }
  return quotient;
}

LaurentPoly normalize_symmetric(const LaurentPoly& p) {
  if (p.is_zero()) throw NotNormalizable("zero polynomial");
  const int sum = p.min_exponent() + p.max_exponent();
  if (sum % 2 != 0)
    throw NotNormalizable(p.to_text() + " has an even number of exponent steps; no symmetric shift");
  LaurentPoly q = p.shifted(-sum / 2);
  if (q != q.inverted()) throw NotNormalizable(p.to_text() + " is not symmetric up to a unit");
  Rational at_one = q.evaluate(1);
  if (at_one == -1) return -q;
  if (at_one != 1) throw NotNormalizable(p.to_text() + " does not evaluate to +-1 at t = 1");
  return q;
}

}  // namespace torusalt
