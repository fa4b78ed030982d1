#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <sstream>

#include "torusalt/braid.hpp"

namespace torusalt {

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands_ < 1) throw InvalidArgument("a braid needs at least one strand");
  for (const auto& l : letters_) {
    if (l.generator < 1 || l.generator >= strands_)
      throw InvalidArgument("generator " + std::to_string(l.generator) + " out of range for " +
                            std::to_string(strands_) + " strands");
    if (l.sign != 1 && l.sign != -1) throw InvalidArgument("letter sign must be +1 or -1");
  }
}

BraidWord BraidWord::from_signed(const std::vector<int>& letters, int strands) {
  std::vector<Letter> out;
  out.reserve(letters.size());
  int inferred = 2;
  for (int x : letters) {
    if (x == 0) throw ParseError("0 is not a braid generator");
    out.push_back({std::abs(x), x > 0 ? 1 : -1});
    inferred = std::max(inferred, std::abs(x) + 1);
  }
  return BraidWord(strands == 0 ? inferred : strands, std::move(out));
}

BraidWord BraidWord::parse(const std::string& text, int strands) {
  std::istringstream in(text);
  std::vector<int> letters;
  std::string token;
  while (in >> token) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw ParseError("bad braid letter '" + token + "'");
    }
    if (used != token.size()) throw ParseError("bad braid letter '" + token + "'");
    letters.push_back(value);
  }
  return from_signed(letters, strands);
}

std::vector<int> BraidWord::to_signed() const {
  std::vector<int> out;
  out.reserve(letters_.size());
  for (const auto& l : letters_) out.push_back(l.sign * l.generator);
  return out;
}

std::string BraidWord::to_text() const {
  std::ostringstream out;
  bool first = true;
  for (int x : to_signed()) {
    if (!first) out << ' ';
    out << x;
    first = false;
  }
  return out.str();
}

BraidWord BraidWord::inverse() const {
  std::vector<Letter> out(letters_.rbegin(), letters_.rend());
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::mirror() const {
  std::vector<Letter> out = letters_;
  for (auto& l : out) l.sign = -l.sign;
  return BraidWord(strands_, std::move(out));
}

BraidWord BraidWord::pow(unsigned n) const {
  std::vector<Letter> out;
  out.reserve(letters_.size() * n);
  for (unsigned i = 0; i < n; ++i) out.insert(out.end(), letters_.begin(), letters_.end());
  return BraidWord(strands_, std::move(out));
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_) throw StrandMismatch("cannot multiply braids on different strand counts");
  std::vector<Letter> out = a.letters_;
  out.insert(out.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(out));
}

BraidWord torus_braid(int p, int q) {
  if (p < 2 || q < 1) throw InvalidArgument("torus_braid needs p >= 2 and q >= 1");
  std::vector<Letter> one;
  for (int i = 1; i < p; ++i) one.push_back({i, 1});
  return BraidWord(p, std::move(one)).pow(static_cast<unsigned>(q));
}

Permutation permutation(const BraidWord& w) {
  // at[pos] = starting position of the strand now at pos
  std::vector<int> at(w.strands());
  std::iota(at.begin(), at.end(), 0);
  for (const auto& l : w.letters()) std::swap(at[l.generator - 1], at[l.generator]);
  Permutation perm(w.strands());
  for (int pos = 0; pos < w.strands(); ++pos) perm[at[pos]] = pos;
  return perm;
}

int closure_components(const BraidWord& w) {
  const Permutation perm = permutation(w);
  std::vector<bool> seen(perm.size(), false);
  int cycles = 0;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    if (seen[i]) continue;
    ++cycles;
    for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) seen[j] = true;
  }
  return cycles;
}

int writhe(const BraidWord& w) {
  int sum = 0;
  for (const auto& l : w.letters()) sum += l.sign;
  return sum;
}

BraidWord flip(const BraidWord& w, const std::set<std::size_t>& positions) {
  std::vector<Letter> out = w.letters();
  for (std::size_t pos : positions) {
    if (pos >= out.size())
      throw IndexOutOfRange("flip position " + std::to_string(pos) + " outside word of length " +
                            std::to_string(out.size()));
    out[pos].sign = -out[pos].sign;
  }
  return BraidWord(w.strands(), std::move(out));
}

// ---------------------------------------------------------------------------
// Garside machinery. A permutation braid is stored as its permutation; the
// crossing between the strands at positions i, i+1 on top exists iff
// perm[i] > perm[i+1].

namespace {

Permutation identity_perm(int n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

Permutation delta_perm(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = n - 1 - i;
  return p;
}

Permutation inverse_perm(const Permutation& p) {
  Permutation inv(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) inv[p[i]] = static_cast<int>(i);
  return inv;
}

bool in_starting_set(const Permutation& p, int i) { return p[i] > p[i + 1]; }

bool in_finishing_set(const Permutation& inv, int i) { return inv[i] > inv[i + 1]; }

// p -> p * sigma_{i+1}; requires sigma_{i+1} not in the finishing set.
void append_generator(Permutation& p, int i) {
  for (auto& x : p) {
    if (x == i)
      x = i + 1;
    else if (x == i + 1)
      x = i;
  }
}

// p -> sigma_{i+1}^{-1} * p; requires sigma_{i+1} in the starting set.
void strip_generator(Permutation& p, int i) { std::swap(p[i], p[i + 1]); }

// Conjugation by Delta: sigma_i -> sigma_{n-i}.
Permutation flip_by_delta(const Permutation& p) {
  const int n = static_cast<int>(p.size());
  Permutation out(n);
  for (int i = 0; i < n; ++i) out[i] = n - 1 - p[n - 1 - i];
  return out;
}

Permutation generator_perm(int n, int i) {
  Permutation p = identity_perm(n);
  std::swap(p[i], p[i + 1]);
  return p;
}

// Delta * sigma_{i+1}^{-1}, a permutation braid.
Permutation delta_without_generator(int n, int i) {
  Permutation p = delta_perm(n);
  // Delta = X * sigma_{i+1}, so X is Delta with the last crossing at i removed.
  Permutation inv = inverse_perm(p);
  std::swap(inv[i], inv[i + 1]);
  return inverse_perm(inv);
}

// Make (a, b) left-weighted by sliding generators from the front of b onto
// the back of a. Returns true if anything moved.
bool make_left_weighted(Permutation& a, Permutation& b) {
  const int n = static_cast<int>(a.size());
  bool moved = false;
  bool progress = true;
  while (progress) {
    progress = false;
    Permutation a_inv = inverse_perm(a);
    for (int i = 0; i + 1 < n; ++i) {
      if (in_starting_set(b, i) && !in_finishing_set(a_inv, i)) {
        append_generator(a, i);
        strip_generator(b, i);
        moved = progress = true;
        break;
      }
    }
  }
  return moved;
}

}  // namespace

NormalForm normal_form(const BraidWord& w) {
  const int n = w.strands();
  const Permutation id = identity_perm(n);
  const Permutation delta = delta_perm(n);

  // Rewrite each s_i^{-1} as Delta^{-1} (Delta s_i^{-1}) and push every
  // Delta^{-1} to the front; a factor passed by an odd number of them is
  // conjugated by Delta.
  std::vector<Permutation> simple;
  simple.reserve(w.length());
  int negatives_after = 0;
  for (const auto& l : w.letters()) negatives_after += l.sign < 0 ? 1 : 0;
  const int total_negative = negatives_after;
  for (const auto& l : w.letters()) {
    const int i = l.generator - 1;
    Permutation f;
    if (l.sign > 0) {
      f = generator_perm(n, i);
    } else {
      --negatives_after;
      f = delta_without_generator(n, i);
    }
    if (negatives_after % 2 != 0) f = flip_by_delta(f);
    if (f != id) simple.push_back(std::move(f));
  }

  // Right-multiplication into a left-weighted sequence.
  // Sweep right to left until every adjacent pair is left-weighted.
  std::vector<Permutation> factors;
  for (auto& s : simple) {
    factors.push_back(std::move(s));
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t j = factors.size(); j > 1; --j) {
        if (make_left_weighted(factors[j - 2], factors[j - 1])) changed = true;
      }
      std::erase(factors, id);
    }
  }

  NormalForm nf;
  nf.strands = n;
  std::size_t lead = 0;
  while (lead < factors.size() && factors[lead] == delta) ++lead;
  nf.delta_power = static_cast<int>(lead) - total_negative;
  nf.factors.assign(factors.begin() + static_cast<std::ptrdiff_t>(lead), factors.end());
  while (!nf.factors.empty() && nf.factors.back() == id) nf.factors.pop_back();
  return nf;
}

bool equal(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands())
    throw StrandMismatch("braids on " + std::to_string(a.strands()) + " and " +
                         std::to_string(b.strands()) + " strands");
  return normal_form(a) == normal_form(b);
}

BraidWord permutation_braid_word(const Permutation& perm) {
  Permutation p = perm;
  const int n = static_cast<int>(p.size());
  std::vector<Letter> out;
  bool progress = true;
  while (progress) {
    progress = false;
    for (int i = 0; i + 1 < n; ++i) {
      if (in_starting_set(p, i)) {
        out.push_back({i + 1, 1});
        strip_generator(p, i);
        progress = true;
        break;
      }
    }
  }
  return BraidWord(std::max(n, 1), std::move(out));
}

BraidWord half_twist(int strands) { return permutation_braid_word(delta_perm(strands)); }

BraidWord NormalForm::to_word() const {
  BraidWord delta = half_twist(strands);
  BraidWord out(strands, {});
  if (delta_power >= 0)
    out = delta.pow(static_cast<unsigned>(delta_power));
  else
    out = delta.inverse().pow(static_cast<unsigned>(-delta_power));
  for (const auto& f : factors) out = out * permutation_braid_word(f);
  return out;
}

std::string NormalForm::to_text() const {
  std::ostringstream out;
  out << "Delta^" << delta_power;
  for (const auto& f : factors) {
    out << " [";
    for (std::size_t i = 0; i < f.size(); ++i) out << (i ? " " : "") << f[i] + 1;
    out << "]";
  }
  return out.str();
}

BraidWord band_words(BandKind kind) {
  // s2 s1 s3 s2 carries the band {1,2} across the band {3,4}.
  const BraidWord band_cross = BraidWord::from_signed({2, 1, 3, 2}, 4);
  if (kind == BandKind::full_twist)
    return BraidWord::from_signed({1, 1, 3, 3}, 4) * band_cross.pow(2);
  // (s1 s2 s3)^2 = band_cross * s3^2 twists only one band, hence the
  // unequal twisting of the two bands.
  return BraidWord::from_signed({1, 1, 1, 1, 3, 3}, 4) * band_cross.pow(3);
}

}  // namespace torusalt
