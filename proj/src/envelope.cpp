#include <algorithm>

#include "torusalt/algebra.hpp"

namespace torusalt {

namespace {

bool collinear(const Breakpoint& a, const Breakpoint& b, const Breakpoint& c) {
  return (b.value - a.value) * (c.t - b.t) == (c.value - b.value) * (b.t - a.t);
}

}  // namespace

PiecewiseLinear::PiecewiseLinear(std::vector<Breakpoint> points) {
  if (points.size() < 2) throw InvalidArgument("piecewise-linear function needs two breakpoints");
  if (points.front().t != 0 || points.back().t != 2)
    throw InvalidArgument("piecewise-linear function must span [0,2]");
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (!(points[i - 1].t < points[i].t))
      throw InvalidArgument("breakpoints must have strictly increasing t");
  }
  for (auto& p : points) {
    p.t.canonicalize();
    p.value.canonicalize();
  }
  points_.reserve(points.size());
  for (auto& p : points) {
    if (points_.size() >= 2 && collinear(points_[points_.size() - 2], points_.back(), p))
      points_.back() = std::move(p);
    else
      points_.push_back(std::move(p));
  }
}

Rational PiecewiseLinear::at(const Rational& t) const {
  if (t < 0 || t > 2) throw InvalidArgument("t outside [0,2]: " + to_string(t));
  auto upper = std::lower_bound(points_.begin(), points_.end(), t,
                                [](const Breakpoint& b, const Rational& x) { return b.t < x; });
  if (upper->t == t) return upper->value;
  auto lower = std::prev(upper);
  Rational r = lower->value + (upper->value - lower->value) * (t - lower->t) / (upper->t - lower->t);
  r.canonicalize();
  return r;
}

std::vector<Rational> PiecewiseLinear::slopes() const {
  std::vector<Rational> out;
  for (std::size_t i = 1; i < points_.size(); ++i) {
    Rational s = (points_[i].value - points_[i - 1].value) / (points_[i].t - points_[i - 1].t);
    s.canonicalize();
    out.push_back(s);
  }
  return out;
}

PiecewiseLinear upper_envelope(const std::vector<Line>& lines) {
  if (lines.empty()) throw InvalidArgument("upper_envelope of an empty line set");

  // The maximum of finitely many lines can only bend where two of them meet,
  // so sampling the max at every pairwise crossing inside [0,2] is exact.
  std::vector<Rational> ts{Rational(0), Rational(2)};
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      Rational ds = lines[i].slope - lines[j].slope;
      if (ds == 0) continue;
      Rational t = (lines[j].intercept - lines[i].intercept) / ds;
      t.canonicalize();
      if (t > 0 && t < 2) ts.push_back(t);
    }
  }
  std::sort(ts.begin(), ts.end());
  ts.erase(std::unique(ts.begin(), ts.end()), ts.end());

  std::vector<Breakpoint> points;
  points.reserve(ts.size());
  for (const auto& t : ts) {
    Rational best = lines.front().at(t);
    for (const auto& line : lines) best = std::max<Rational>(best, line.at(t));
    points.push_back({t, best});
  }
  return PiecewiseLinear(std::move(points));
}

}  // namespace torusalt
