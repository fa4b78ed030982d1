#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

#include "torusalt/diagram.hpp"

namespace torusalt {

namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(std::size_t a, std::size_t b) { parent_[find(a)] = find(b); }

 private:
  std::vector<std::size_t> parent_;
};

// Where an arc ends: the crossing it enters and whether it enters over.
struct Entry {
  std::size_t crossing;
  bool over;
};

std::map<int, Entry> entries(const PDCode& d) {
  std::map<int, Entry> out;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    const auto& x = d.crossings()[c];
    out[x.under_in()] = {c, false};
    out[x.over_in()] = {c, true};
  }
  return out;
}

int next_arc(const PDCrossing& x, bool over) { return over ? x.over_out() : x.under_out(); }

// Relabel so that arcs are 1..2n along the orientation from the arc that is
// currently labeled `start`.
PDCode relabel_from(const PDCode& d, int start) {
  const auto in = entries(d);
  std::map<int, int> label;
  int arc = start;
  int next = 1;
  do {
    label[arc] = next++;
    const Entry& e = in.at(arc);
    arc = next_arc(d.crossings()[e.crossing], e.over);
  } while (arc != start);
  std::vector<PDCrossing> out;
  for (const auto& x : d.crossings()) {
    PDCrossing y = x;
    for (auto& a : y.arcs) a = label.at(a);
    out.push_back(y);
  }
  return PDCode(std::move(out), d.free_loops());
}

}  // namespace

PDCrossing PDCrossing::flipped() const {
  const auto [i, j, k, l] = arcs;
  if (sign > 0) return {{l, i, j, k}, -1};
  return {{j, k, l, i}, 1};
}

PDCode::PDCode(std::vector<PDCrossing> crossings, int free_loops)
    : crossings_(std::move(crossings)), free_loops_(free_loops) {
  std::map<int, int> seen;
  for (const auto& x : crossings_) {
    if (x.sign != 1 && x.sign != -1) throw InvalidArgument("crossing sign must be +1 or -1");
    for (int a : x.arcs) ++seen[a];
  }
  for (const auto& [arc, count] : seen) {
    if (count != 2)
      throw InvalidArgument("arc " + std::to_string(arc) + " occurs " + std::to_string(count) +
                            " times in PD code");
  }
}

int PDCode::components() const {
  std::map<int, std::size_t> index;
  for (const auto& x : crossings_)
    for (int a : x.arcs) index.try_emplace(a, index.size());
  UnionFind uf(index.size());
  for (const auto& x : crossings_) {
    uf.unite(index.at(x.under_in()), index.at(x.under_out()));
    uf.unite(index.at(x.over_in()), index.at(x.over_out()));
  }
  int roots = 0;
  for (const auto& [arc, i] : index) roots += uf.find(i) == i ? 1 : 0;
  return roots + free_loops_;
}

int PDCode::writhe() const {
  int w = 0;
  for (const auto& x : crossings_) w += x.sign;
  return w;
}

PDCode PDCode::flip_crossings(const std::set<std::size_t>& indices) const {
  std::vector<PDCrossing> out = crossings_;
  for (std::size_t i : indices) {
    if (i >= out.size()) throw IndexOutOfRange("crossing " + std::to_string(i) + " out of range");
    out[i] = out[i].flipped();
  }
  return PDCode(std::move(out), free_loops_);
}

std::string PDCode::to_text() const {
  std::ostringstream out;
  out << "PD[";
  for (std::size_t c = 0; c < crossings_.size(); ++c) {
    const auto& a = crossings_[c].arcs;
    out << (c ? "," : "") << "X[" << a[0] << "," << a[1] << "," << a[2] << "," << a[3] << "]";
  }
  out << "]";
  return out.str();
}

nlohmann::ordered_json PDCode::to_json() const {
  nlohmann::ordered_json j;
  j["convention"] =
      "X[i,j,k,l]: i incoming under-arc, labels counterclockwise; arcs numbered along the "
      "orientation from the bottom of the leftmost braid strand";
  nlohmann::ordered_json xs = nlohmann::ordered_json::array();
  for (const auto& x : crossings_) {
    nlohmann::ordered_json c;
    c["arcs"] = x.arcs;
    c["sign"] = x.sign;
    xs.push_back(std::move(c));
  }
  j["crossings"] = std::move(xs);
  j["free_loops"] = free_loops_;
  return j;
}

PDCode closure_diagram(const BraidWord& w) {
  const int k = w.strands();
  // Edges are created bottom to top; the closure glues the edge leaving the
  // top of position p to the edge entering the bottom of position p.
  int edges = 0;
  std::vector<int> bottom(k), current(k);
  for (int p = 0; p < k; ++p) bottom[p] = current[p] = edges++;

  struct Raw {
    int in_left, in_right, out_left, out_right, sign;
  };
  std::vector<Raw> raw;
  std::vector<bool> touched(k, false);
  for (const auto& l : w.letters()) {
    const int i = l.generator - 1;
    Raw r{current[i], current[i + 1], edges, edges + 1, l.sign};
    edges += 2;
    current[i] = r.out_left;
    current[i + 1] = r.out_right;
    touched[i] = touched[i + 1] = true;
    raw.push_back(r);
  }
  UnionFind glue(static_cast<std::size_t>(edges));
  for (int p = 0; p < k; ++p) glue.unite(current[p], bottom[p]);

  // Follow the orientation. The strand entering at in_left leaves at
  // out_right and vice versa.
  std::vector<std::pair<std::size_t, bool>> enters(edges, {SIZE_MAX, false});
  for (std::size_t c = 0; c < raw.size(); ++c) {
    enters[glue.find(raw[c].in_left)] = {c, true};
    enters[glue.find(raw[c].in_right)] = {c, false};
  }
  std::map<std::size_t, int> label;
  int next = 1;
  for (int p = 0; p < k; ++p) {
    std::size_t e = glue.find(bottom[p]);
    if (label.count(e) || enters[e].first == SIZE_MAX) continue;
    while (!label.count(e)) {
      label[e] = next++;
      const auto [c, from_left] = enters[e];
      e = glue.find(from_left ? raw[c].out_right : raw[c].out_left);
    }
  }
  auto lab = [&](int edge) { return label.at(glue.find(edge)); };

  std::vector<PDCrossing> crossings;
  crossings.reserve(raw.size());
  for (const auto& r : raw) {
    if (r.sign > 0)  // over strand runs from bottom-left to top-right
      crossings.push_back({{lab(r.in_right), lab(r.out_right), lab(r.out_left), lab(r.in_left)}, 1});
    else
      crossings.push_back({{lab(r.in_left), lab(r.in_right), lab(r.out_right), lab(r.out_left)}, -1});
  }
  const int free_loops = static_cast<int>(std::count(touched.begin(), touched.end(), false));
  return PDCode(std::move(crossings), free_loops);
}

std::vector<Pass> knot_passes(const PDCode& d) {
  if (d.components() != 1) throw MultiComponent("diagram has " + std::to_string(d.components()) + " components");
  std::vector<Pass> passes;
  if (d.crossing_count() == 0) return passes;
  const auto in = entries(d);
  const int start = in.begin()->first;
  int arc = start;
  do {
    const Entry& e = in.at(arc);
    passes.push_back({e.crossing, e.over});
    arc = next_arc(d.crossings()[e.crossing], e.over);
  } while (arc != start);
  return passes;
}

bool is_alternating(const PDCode& d) {
  const auto passes = knot_passes(d);
  for (std::size_t i = 0; i < passes.size(); ++i) {
    if (passes[i].over == passes[(i + 1) % passes.size()].over) return false;
  }
  return true;
}

std::pair<int, int> alternating_assignment_distances(const PDCode& d) {
  const auto passes = knot_passes(d);
  // Seed the first pass as over (resp. under) and propagate the alternation
  // along the strand; each crossing is reached twice, at positions of
  // opposite parity for any planar knot shadow.
  std::vector<int> over_parity(d.crossing_count(), -1);
  std::vector<int> under_parity(d.crossing_count(), -1);
  for (std::size_t i = 0; i < passes.size(); ++i)
    (passes[i].over ? over_parity : under_parity)[passes[i].crossing] = static_cast<int>(i % 2);
  int to_first = 0;
  for (std::size_t c = 0; c < d.crossing_count(); ++c) {
    if (over_parity[c] == under_parity[c])
      throw InvalidArgument("shadow admits no alternating assignment (non-planar Gauss code)");
    to_first += over_parity[c] == 0 ? 0 : 1;
  }
  return {to_first, static_cast<int>(d.crossing_count()) - to_first};
}

int alternating_distance(const PDCode& d) {
  const auto [a, b] = alternating_assignment_distances(d);
  return std::min(a, b);
}

bool has_nugatory(const PDCode& d) {
  std::map<int, std::size_t> index;
  for (const auto& x : d.crossings())
    for (int a : x.arcs) index.try_emplace(a, index.size());
  for (std::size_t v = 0; v < d.crossing_count(); ++v) {
    UnionFind uf(index.size());
    for (std::size_t u = 0; u < d.crossing_count(); ++u) {
      if (u == v) continue;
      const auto& a = d.crossings()[u].arcs;
      for (int s = 1; s < 4; ++s) uf.unite(index.at(a[0]), index.at(a[s]));
    }
    const auto& a = d.crossings()[v].arcs;
    for (int s = 1; s < 4; ++s) {
      if (uf.find(index.at(a[0])) != uf.find(index.at(a[s]))) return true;
    }
  }
  return false;
}

PDCode connected_sum(const PDCode& a_in, const PDCode& b_in) {
  if (a_in.components() != 1 || b_in.components() != 1)
    throw MultiComponent("connected sum is only defined here for knot diagrams");
  if (a_in.crossing_count() == 0) return b_in;
  if (b_in.crossing_count() == 0) return a_in;

  const PDCode a = relabel_from(a_in, entries(a_in).begin()->first);
  const auto a_passes = knot_passes(a);
  // Pick b's cut arc so that the pass after the splice differs from the
  // pass before it.
  PDCode b = relabel_from(b_in, entries(b_in).begin()->first);
  if (knot_passes(b).front().over == a_passes.back().over) b = relabel_from(b, 2);

  const int na = a.arc_count();
  std::vector<PDCrossing> out;
  auto relabel = [&](const PDCrossing& x, bool from_a) {
    PDCrossing y = x;
    for (int s = 0; s < 4; ++s) {
      const int arc = x.arcs[s];
      const bool incoming = s == 0 || (x.sign > 0 ? s == 3 : s == 1);
      if (from_a)
        y.arcs[s] = arc != 1 ? arc : (incoming ? 1 : na + 1);
      else
        y.arcs[s] = arc != 1 ? na + arc : (incoming ? na + 1 : 1);
    }
    return y;
  };
  for (const auto& x : a.crossings()) out.push_back(relabel(x, true));
  for (const auto& x : b.crossings()) out.push_back(relabel(x, false));
  return PDCode(std::move(out), 0);
}

PDCode connected_sum_T2(int q1, int q2) {
  for (int q : {q1, q2}) {
    if (q < 3 || q % 2 == 0) throw InvalidArgument("connected_sum_T2 needs odd q >= 3");
  }
  return connected_sum(closure_diagram(torus_braid(2, q1)), closure_diagram(torus_braid(2, q2)));
}

}  // namespace torusalt
