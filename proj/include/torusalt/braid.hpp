#pragma once

// Braid words in the Artin generators, crossing flips, and the classical
// Garside left normal form that decides equality in the braid group.

#include <set>
#include <string>
#include <vector>

#include "torusalt/errors.hpp"

namespace torusalt {

// sigma_generator^sign. Generators are 1-based, as in sigma_1 ... sigma_{k-1}.
struct Letter {
  int generator;
  int sign;  // +1 or -1
  friend bool operator==(const Letter&, const Letter&) = default;
};

// A permutation of {0..k-1}; perm[i] is the bottom position reached by the
// strand that starts at position i.
using Permutation = std::vector<int>;

class BraidWord {
 public:
  BraidWord() = default;
  BraidWord(int strands, std::vector<Letter> letters);

  // Whitespace-separated signed generator indices, e.g. "1 2 -3".
  // strands == 0 infers max|letter| + 1 (at least 2 for the empty word).
  static BraidWord parse(const std::string& text, int strands = 0);
  static BraidWord from_signed(const std::vector<int>& letters, int strands = 0);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  std::vector<int> to_signed() const;
  std::string to_text() const;

  BraidWord inverse() const;
  // Every letter inverted: the braid of the mirror-image closure.
  BraidWord mirror() const;
  BraidWord pow(unsigned n) const;
  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_ = 2;
  std::vector<Letter> letters_;
};

// (sigma_1 sigma_2 ... sigma_{p-1})^q on p strands.
BraidWord torus_braid(int p, int q);

Permutation permutation(const BraidWord& w);
int closure_components(const BraidWord& w);
int writhe(const BraidWord& w);

// Negate the signs at the given 0-based letter positions.
BraidWord flip(const BraidWord& w, const std::set<std::size_t>& positions);

// Left normal form Delta^delta_power * A_1 ... A_r where each A_i is a
// permutation braid other than 1 and Delta, and (A_i, A_{i+1}) is left-weighted.
struct NormalForm {
  int strands = 2;
  int delta_power = 0;
  std::vector<Permutation> factors;
  friend bool operator==(const NormalForm&, const NormalForm&) = default;

  // A braid word representing this normal form.
  BraidWord to_word() const;
  std::string to_text() const;
};

NormalForm normal_form(const BraidWord& w);
bool equal(const BraidWord& a, const BraidWord& b);

// Positive word realizing a permutation braid.
BraidWord permutation_braid_word(const Permutation& perm);
// The half twist Delta on k strands.
BraidWord half_twist(int strands);

enum class BandKind { full_twist, full_and_half };

// Four-strand words where strands {1,2} and {3,4} move as two bands:
// the bands first twist, then cross each other as planar bands. Equal in
// B_4 to (s1 s2 s3)^4 respectively (s1 s2 s3)^6.
BraidWord band_words(BandKind kind);

}  // namespace torusalt
