#include "torusalt/upsilon.hpp"

#include "torusalt/invariants.hpp"

namespace torusalt {

ExponentSeq exponents_of(const LaurentPoly& alexander) {
  if (alexander.is_zero()) throw NotStaircaseForm("zero polynomial");
  if (alexander != alexander.inverted()) throw NotStaircaseForm(alexander.to_text() + " is not symmetric");
  ExponentSeq seq;
  int k = 0;
  for (auto it = alexander.terms().rbegin(); it != alexander.terms().rend(); ++it, ++k) {
    const Integer expected = k % 2 == 0 ? 1 : -1;
    if (it->second != expected)
      throw NotStaircaseForm(alexander.to_text() + " does not have alternating +-1 coefficients");
    seq.exponents.push_back(it->first);
  }
  return seq;
}

Staircase staircase_of(const ExponentSeq& e) {
  const auto& a = e.exponents;
  if (a.empty() || a.size() % 2 == 0) throw InvalidArgument("exponent sequence must have odd length");
  Staircase s;
  int i = 0;
  int j = a.front();
  s.vertices.emplace_back(i, j);
  for (std::size_t k = 1; k < a.size(); ++k) {
    const int gap = a[k - 1] - a[k];
    if (gap <= 0) throw InvalidArgument("exponents must be strictly decreasing");
    if (k % 2 == 1)
      i += gap;
    else
      j -= gap;
    s.vertices.emplace_back(i, j);
  }
  return s;
}

PiecewiseLinear upsilon_fn(const Staircase& s) {
  // -2[(t/2) i + (1 - t/2) j] = -2j + (j - i) t
  std::vector<Line> lines;
  for (std::size_t k = 0; k < s.vertices.size(); k += 2) {
    const auto [i, j] = s.vertices[k];
    lines.push_back({Rational(-2 * j), Rational(j - i)});
  }
  return upper_envelope(lines);
}

PiecewiseLinear upsilon_of(const TorusKnot& k) {
  return upsilon_fn(staircase_of(exponents_of(alexander_torus(k))));
}

int upsilon1(const TorusKnot& k) {
  const Rational v = upsilon_of(k).at(1);
  if (v.get_den() != 1) throw InvalidArgument("Upsilon(1) of " + k.name() + " is not an integer");
  return static_cast<int>(v.get_num().get_si());
}

}  // namespace torusalt
