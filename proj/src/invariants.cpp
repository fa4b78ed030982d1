#include <algorithm>
#include <array>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <sstream>

#include "torusalt/invariants.hpp"
#include "torusalt/upsilon.hpp"

namespace torusalt {

// ---------------------------------------------------------------------------
// Knot specifications

TorusKnot TorusKnot::make(int a, int b) {
  if (a < 2 || b < 2) throw InvalidArgument("torus knot parameters must be >= 2");
  if (std::gcd(a, b) != 1)
    throw InvalidArgument("T(" + std::to_string(a) + "," + std::to_string(b) + ") is a link, not a knot");
  return TorusKnot{std::min(a, b), std::max(a, b)};
}

std::string TorusKnot::name() const { return "T(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

KnotSpec KnotSpec::unknot() { return {}; }

KnotSpec KnotSpec::torus(TorusKnot k) {
  KnotSpec s;
  s.kind_ = Kind::torus;
  s.torus_ = TorusKnot::make(k.p, k.q);
  return s;
}

KnotSpec KnotSpec::connected_sum(std::vector<KnotSpec> summands) {
  KnotSpec s;
  s.kind_ = Kind::connected_sum;
  s.summands_ = std::move(summands);
  return s;
}

KnotSpec KnotSpec::braid_closure(BraidWord w) {
  if (closure_components(w) != 1)
    throw MultiComponent("closure of [" + w.to_text() + "] has " + std::to_string(closure_components(w)) +
                         " components");
  KnotSpec s;
  s.kind_ = Kind::braid_closure;
  s.braid_ = std::move(w);
  return s;
}

std::string KnotSpec::describe() const {
  switch (kind_) {
    case Kind::unknot:
      return "unknot";
    case Kind::torus:
      return torus_.name();
    case Kind::braid_closure:
      return "closure[" + braid_.to_text() + "]";
    case Kind::connected_sum: {
      std::string out;
      for (const auto& s : summands_) out += (out.empty() ? "" : " # ") + s.describe();
      return out.empty() ? "unknot" : out;
    }
  }
  return {};
}

// ---------------------------------------------------------------------------
// Alexander polynomial

LaurentPoly alexander_torus(const TorusKnot& k) {
  const LaurentPoly one(1);
  auto t_minus_one = [&](int e) { return LaurentPoly::t(e) - one; };
  LaurentPoly num = t_minus_one(k.p * k.q) * t_minus_one(1);
  LaurentPoly den = t_minus_one(k.p) * t_minus_one(k.q);
  return normalize_symmetric(poly_divide_exact(num, den));
}

PolyMatrix reduced_burau(const BraidWord& w) {
  const int n = w.strands() - 1;
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  for (const auto& l : w.letters()) {
    // sigma_g acts on row r = g-1 only: row r becomes t e_{r-1} - t e_r + e_{r+1};
    // its inverse gives e_{r-1} - t^-1 e_r + t^-1 e_{r+1}.
    const int r = l.generator - 1;
    PolyMatrix g(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i) g[i][i] = 1;
    if (l.sign > 0) {
      g[r][r] = -LaurentPoly::t(1);
      if (r > 0) g[r][r - 1] = LaurentPoly::t(1);
      if (r + 1 < n) g[r][r + 1] = 1;
    } else {
      g[r][r] = -LaurentPoly::t(-1);
      if (r > 0) g[r][r - 1] = 1;
      if (r + 1 < n) g[r][r + 1] = LaurentPoly::t(-1);
    }
    PolyMatrix prod(n, std::vector<LaurentPoly>(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int s = 0; s < n; ++s)
          if (!m[i][s].is_zero() && !g[s][j].is_zero()) prod[i][j] += m[i][s] * g[s][j];
    m = std::move(prod);
  }
  return m;
}

LaurentPoly determinant(PolyMatrix m) {
  // Fraction-free (Bareiss) elimination; every division is exact.
  const std::size_t n = m.size();
  if (n == 0) return 1;
  LaurentPoly prev(1);
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m[pivot][k].is_zero()) ++pivot;
    if (pivot == n) return {};
    if (pivot != k) {
      std::swap(m[pivot], m[k]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j)
        m[i][j] = poly_divide_exact(m[i][j] * m[k][k] - m[i][k] * m[k][j], prev);
      m[i][k] = LaurentPoly();
    }
    prev = m[k][k];
  }
  return sign > 0 ? m[n - 1][n - 1] : -m[n - 1][n - 1];
}

LaurentPoly alexander_burau(const BraidWord& w) {
  if (closure_components(w) != 1)
    throw MultiComponent("Alexander polynomial requested for a " + std::to_string(closure_components(w)) +
                         "-component closure");
  PolyMatrix m = reduced_burau(w);
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (auto& x : m[i]) x = -x;
    m[i][i] += 1;
  }
  // det(I - B(w)) = Delta(t) (1 + t + ... + t^{k-1}) up to units.
  LaurentPoly scaled = determinant(std::move(m)) * (LaurentPoly(1) - LaurentPoly::t(1));
  LaurentPoly delta = poly_divide_exact(scaled, LaurentPoly(1) - LaurentPoly::t(w.strands()));
  return normalize_symmetric(delta);
}

LaurentPoly alexander_seifert(const IntMatrix& v) {
  const std::size_t n = v.size();
  PolyMatrix m(n, std::vector<LaurentPoly>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      m[i][j] = LaurentPoly::monomial(v[i][j], 0) - LaurentPoly::monomial(v[j][i], 1);
  return normalize_symmetric(determinant(std::move(m)));
}

// ---------------------------------------------------------------------------
// Kauffman bracket and Jones polynomial

namespace {

LaurentPoly loop_value() { return -LaurentPoly::t(2) - LaurentPoly::t(-2); }  // -A^2 - A^-2

// Temperley-Lieb diagrams on k strands: a perfect matching of the points
// 0..k-1 (top) and k..2k-1 (bottom).
using TLDiagram = std::vector<int>;

struct Composition {
  TLDiagram diagram;
  int loops;
};

// Stack `upper` on top of `lower`, gluing upper's bottom to lower's top.
Composition compose(const TLDiagram& upper, const TLDiagram& lower, int k) {
  TLDiagram out(2 * k, -1);
  std::vector<bool> middle_seen(k, false);
  // Walk from an outer endpoint until the path exits at another outer one.
  auto walk = [&](bool in_upper, int point) {
    for (;;) {
      if (in_upper) {
        const int partner = upper[point];
        if (partner < k) return partner;
        middle_seen[partner - k] = true;
        in_upper = false;
        point = partner - k;
      } else {
        const int partner = lower[point];
        if (partner >= k) return partner;
        middle_seen[partner] = true;
        in_upper = true;
        point = partner + k;
      }
    }
  };
  for (int p = 0; p < k; ++p) {
    if (out[p] >= 0) continue;
    const int end = walk(true, p);
    out[p] = end;
    out[end] = p;
  }
  for (int p = k; p < 2 * k; ++p) {
    if (out[p] >= 0) continue;
    const int end = walk(false, p);
    out[p] = end;
    out[end] = p;
  }
  int loops = 0;
  for (int m = 0; m < k; ++m) {
    if (middle_seen[m]) continue;
    ++loops;
    // Closed loop through middle points: alternate between layers.
    int point = m;
    do {
      middle_seen[point] = true;
      const int down = lower[point];  // lower's top point -> its partner, also a top point
      middle_seen[down] = true;
      point = upper[down + k] - k;
    } while (point != m);
  }
  return {std::move(out), loops};
}

int closure_loops(const TLDiagram& d, int k) {
  std::vector<bool> seen(2 * k, false);
  int loops = 0;
  for (int p = 0; p < 2 * k; ++p) {
    if (seen[p]) continue;
    ++loops;
    int x = p;
    while (!seen[x]) {
      seen[x] = true;
      const int y = d[x];
      seen[y] = true;
      x = y < k ? y + k : y - k;  // through the closing strand
    }
  }
  return loops;
}

// Catalan(k) basis and the right action of each cup-cap generator e_i.
struct TLTable {
  int k;
  std::vector<TLDiagram> basis;
  std::vector<std::vector<std::pair<std::size_t, int>>> times_e;  // [d][i] -> (index, loops)
  std::vector<int> trace_loops;
};

TLTable build_table(int k) {
  TLTable table{k, {}, {}, {}};
  std::map<TLDiagram, std::size_t> index;
  TLDiagram id(2 * k);
  for (int p = 0; p < k; ++p) {
    id[p] = p + k;
    id[p + k] = p;
  }
  std::vector<TLDiagram> gens;
  for (int i = 0; i + 1 < k; ++i) {
    TLDiagram e = id;
    e[i] = i + 1;
    e[i + 1] = i;
    e[i + k] = i + 1 + k;
    e[i + 1 + k] = i + k;
    gens.push_back(e);
  }
  index[id] = 0;
  table.basis.push_back(id);
  for (std::size_t d = 0; d < table.basis.size(); ++d) {
    std::vector<std::pair<std::size_t, int>> row;
    for (const auto& e : gens) {
      Composition c = compose(table.basis[d], e, k);
      auto [it, inserted] = index.try_emplace(c.diagram, table.basis.size());
      if (inserted) table.basis.push_back(c.diagram);
      row.emplace_back(it->second, c.loops);
    }
    table.times_e.push_back(std::move(row));
  }
  for (const auto& d : table.basis) table.trace_loops.push_back(closure_loops(d, k));
  return table;
}

const TLTable& tl_table(int k) {
  // Function-local statics initialize once, race-free; tables for up to
  // 8 strands are built on first use and are read-only afterwards.
  static std::mutex mutex;
  static std::map<int, std::unique_ptr<const TLTable>> tables;
  std::lock_guard<std::mutex> lock(mutex);
  auto& slot = tables[k];
  if (!slot) slot = std::make_unique<const TLTable>(build_table(k));
  return *slot;
}

}  // namespace

LaurentPoly kauffman_bracket_braid(const BraidWord& w) {
  const int k = w.strands();
  const TLTable& table = tl_table(k);
  const LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> delta_pow{1};
  for (int i = 0; i < k + 1; ++i) delta_pow.push_back(delta_pow.back() * delta);

  // Positive crossing: A * 1 + A^-1 * e_i; negative: A^-1 * 1 + A * e_i.
  std::vector<LaurentPoly> state(table.basis.size());
  state[0] = 1;
  for (const auto& l : w.letters()) {
    const int i = l.generator - 1;
    const LaurentPoly keep = LaurentPoly::t(l.sign);
    const LaurentPoly cup = LaurentPoly::t(-l.sign);
    std::vector<LaurentPoly> next(table.basis.size());
    for (std::size_t d = 0; d < state.size(); ++d) {
      if (state[d].is_zero()) continue;
      next[d] += state[d] * keep;
      const auto [target, loops] = table.times_e[d][i];
      next[target] += state[d] * cup * delta_pow[loops];
    }
    state = std::move(next);
  }
  LaurentPoly bracket;
  for (std::size_t d = 0; d < state.size(); ++d) {
    if (state[d].is_zero()) continue;
    bracket += state[d] * delta.pow(static_cast<unsigned>(table.trace_loops[d] - 1));
  }
  return bracket;
}

LaurentPoly kauffman_bracket_statesum(const PDCode& d) {
  const std::size_t n = d.crossing_count();
  if (n > kStateSumMaxCrossings)
    throw TooLarge("state sum capped at " + std::to_string(kStateSumMaxCrossings) + " crossings, got " +
                   std::to_string(n));
  std::map<int, int> index;
  for (const auto& x : d.crossings())
    for (int a : x.arcs) index.try_emplace(a, static_cast<int>(index.size()));
  std::vector<std::array<int, 4>> arcs;
  for (const auto& x : d.crossings())
    arcs.push_back({index[x.arcs[0]], index[x.arcs[1]], index[x.arcs[2]], index[x.arcs[3]]});

  const LaurentPoly delta = loop_value();
  std::vector<LaurentPoly> delta_pow{1};
  for (std::size_t i = 0; i < n + static_cast<std::size_t>(d.free_loops()) + 1; ++i)
    delta_pow.push_back(delta_pow.back() * delta);

  // Depth-first over smoothings; each level owns a copy of the union-find
  // forest so siblings share the work done for their common prefix.
  // tally[a - b + n][loops] counts states.
  const int arc_total = static_cast<int>(index.size());
  std::vector<std::vector<long>> tally(2 * n + 1, std::vector<long>(arc_total + d.free_loops() + 1, 0));
  std::vector<std::vector<int>> forest(n + 1, std::vector<int>(arc_total));
  std::iota(forest[0].begin(), forest[0].end(), 0);
  auto find = [](std::vector<int>& parent, int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](std::vector<int>& parent, int a, int b) {
    a = find(parent, a);
    b = find(parent, b);
    if (a == b) return 0;
    parent[a] = b;
    return 1;
  };
  auto walk = [&](auto&& self, std::size_t c, int a_minus_b, int classes) -> void {
    if (c == n) {
      ++tally[static_cast<std::size_t>(a_minus_b + static_cast<int>(n))]
             [static_cast<std::size_t>(classes + d.free_loops())];
      return;
    }
    const auto& x = arcs[c];
    forest[c + 1] = forest[c];
    int merged = unite(forest[c + 1], x[0], x[1]) + unite(forest[c + 1], x[2], x[3]);  // A-smoothing
    self(self, c + 1, a_minus_b + 1, classes - merged);
    forest[c + 1] = forest[c];
    merged = unite(forest[c + 1], x[0], x[3]) + unite(forest[c + 1], x[1], x[2]);  // B-smoothing
    self(self, c + 1, a_minus_b - 1, classes - merged);
  };
  walk(walk, 0, 0, arc_total);

  LaurentPoly bracket;
  for (std::size_t e = 0; e < tally.size(); ++e)
    for (std::size_t loops = 1; loops < tally[e].size(); ++loops)
      if (tally[e][loops] != 0)
        bracket += LaurentPoly::monomial(tally[e][loops], static_cast<int>(e) - static_cast<int>(n)) *
                   delta_pow[loops - 1];
  return bracket;
}

LaurentPoly jones_from_bracket(const LaurentPoly& bracket, int writhe) {
  // (-A^3)^{-w}
  LaurentPoly normalized = bracket.shifted(-3 * writhe);
  if (writhe % 2 != 0) normalized = -normalized;
  LaurentPoly::Terms terms;
  for (const auto& [e, c] : normalized.terms()) {
    if (e % 4 != 0) throw MultiComponent("bracket exponents are not those of a knot");
    terms.emplace(-e / 4, c);
  }
  return LaurentPoly(std::move(terms));
}

LaurentPoly jones_braid(const BraidWord& w) {
  if (closure_components(w) != 1) throw MultiComponent("Jones polynomial requested for a link closure");
  return jones_from_bracket(kauffman_bracket_braid(w), writhe(w));
}

LaurentPoly jones_diagram(const PDCode& d) {
  if (d.components() != 1) throw MultiComponent("Jones polynomial requested for a link diagram");
  return jones_from_bracket(kauffman_bracket_statesum(d), d.writhe());
}

// ---------------------------------------------------------------------------
// Seifert matrix and signature

IntMatrix seifert_matrix(const BraidWord& w) {
  if (closure_components(w) != 1) throw MultiComponent("Seifert matrix requested for a link closure");
  // Seifert circles are the strands; each letter is a half-twisted band
  // between circles g and g+1. A basis of H_1 is given by loops through
  // consecutive bands of the same generator.
  struct Loop {
    int generator;
    std::size_t first, second;
  };
  const auto& letters = w.letters();
  std::vector<Loop> loops;
  for (int g = 1; g < w.strands(); ++g) {
    std::vector<std::size_t> at;
    for (std::size_t i = 0; i < letters.size(); ++i)
      if (letters[i].generator == g) at.push_back(i);
    for (std::size_t r = 0; r + 1 < at.size(); ++r) loops.push_back({g, at[r], at[r + 1]});
  }

  const std::size_t n = loops.size();
  IntMatrix v(n, std::vector<Integer>(n, 0));
  for (std::size_t a = 0; a < n; ++a) {
    const Loop& x = loops[a];
    v[a][a] = -(letters[x.first].sign + letters[x.second].sign) / 2;
    for (std::size_t b = 0; b < n; ++b) {
      if (a == b) continue;
      const Loop& y = loops[b];
      if (x.generator == y.generator && x.second == y.first) {
        const int shared = letters[x.second].sign;
        v[a][b] = (shared + 1) / 2;
        v[b][a] = (shared - 1) / 2;
      } else if (y.generator == x.generator + 1) {
        // Loops on neighbouring circles meet once on the shared circle when
        // their band positions interleave; the sign records which loop
        // reaches the shared circle first.
        if (x.first < y.first && y.first < x.second && x.second < y.second) v[a][b] = -1;
        if (y.first < x.first && x.first < y.second && y.second < x.second) v[a][b] = 1;
      }
    }
  }
  return v;
}

int signature_of_braid(const BraidWord& w) {
  IntMatrix v = seifert_matrix(w);
  IntMatrix sym = v;
  for (std::size_t i = 0; i < v.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) sym[i][j] = v[i][j] + v[j][i];
  return signature_symmetric(sym);
}

int signature_of(const KnotSpec& k) {
  switch (k.kind()) {
    case KnotSpec::Kind::unknot:
      return 0;
    case KnotSpec::Kind::torus:
      return signature_of_braid(k.torus_knot().braid());
    case KnotSpec::Kind::braid_closure:
      return signature_of_braid(k.braid());
    case KnotSpec::Kind::connected_sum: {
      int sum = 0;
      for (const auto& s : k.summands()) sum += signature_of(s);
      return sum;
    }
  }
  return 0;
}

GenusTauS genus_tau_s(const TorusKnot& k) {
  const int g = k.genus();
  return {g, g, 2 * g};
}

// ---------------------------------------------------------------------------

namespace {

Integer determinant_of(const LaurentPoly& alexander) {
  Rational at = alexander.evaluate(-1);
  return abs(at.get_num());
}

}  // namespace

InvariantSet invariant_set(const KnotSpec& k) {
  InvariantSet out;
  switch (k.kind()) {
    case KnotSpec::Kind::unknot:
      out.alexander = 1;
      out.jones = 1;
      out.signature = 0;
      out.genus = out.tau = out.s = out.upsilon1 = 0;
      break;
    case KnotSpec::Kind::torus: {
      const TorusKnot& t = k.torus_knot();
      out.alexander = alexander_torus(t);
      out.jones = jones_braid(t.braid());
      out.signature = signature_of(k);
      const auto gts = genus_tau_s(t);
      out.genus = gts.genus;
      out.tau = gts.tau;
      out.s = gts.s;
      out.upsilon1 = upsilon1(t);
      break;
    }
    case KnotSpec::Kind::braid_closure:
      out.alexander = alexander_burau(k.braid());
      out.jones = jones_braid(k.braid());
      out.signature = signature_of(k);
      break;
    case KnotSpec::Kind::connected_sum: {
      out.alexander = 1;
      out.jones = 1;
      out.genus = out.tau = out.s = out.upsilon1 = 0;
      for (const auto& summand : k.summands()) {
        const InvariantSet part = invariant_set(summand);
        out.alexander *= part.alexander;
        out.jones *= part.jones;
        out.signature += part.signature;
        auto add = [](std::optional<int>& into, const std::optional<int>& from) {
          if (into && from)
            *into += *from;
          else
            into.reset();
        };
        add(out.genus, part.genus);
        add(out.tau, part.tau);
        add(out.s, part.s);
        add(out.upsilon1, part.upsilon1);
      }
      break;
    }
  }
  out.determinant = determinant_of(out.alexander);
  return out;
}

nlohmann::ordered_json InvariantSet::to_json() const {
  nlohmann::ordered_json j;
  j["alexander"] = alexander.to_text();
  j["alexander_terms"] = alexander.to_json();
  j["jones"] = jones.to_text();
  j["jones_terms"] = jones.to_json();
  j["signature"] = signature;
  j["determinant"] = determinant.fits_slong_p() ? nlohmann::ordered_json(determinant.get_si())
                                                : nlohmann::ordered_json(determinant.get_str());
  auto opt = [&](const char* key, const std::optional<int>& v) {
    if (v) j[key] = *v;
  };
  opt("genus", genus);
  opt("tau", tau);
  opt("s", s);
  opt("upsilon1", upsilon1);
  return j;
}

}  // namespace torusalt
