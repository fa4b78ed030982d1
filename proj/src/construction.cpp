#include "torusalt/construction.hpp"

#include <string>

#include "torusalt/diagram.hpp"

namespace torusalt {

const char* const kInvariantCaveat =
    "agreement of Alexander, Jones, signature and determinant is necessary "
    "but not sufficient for the flipped closure to be T(2,2n+1)#T(2,2n+1); "
    "the isotopy itself is established by the planar argument of the source "
    "construction and is not re-derived here";

namespace {

// Both bands are twisted before any band crossing. For even n the word is
// n/2 full-twist blocks with their twists slid to the front; for odd n one
// block is a full-and-a-half twist, which twists the {1,2} band twice more.
struct ParityRule {
  int extra_first_band;     // a = n + extra, b = n - extra
  std::size_t first_offset;  // letter inside (2 1 3 2) flipped in block 0
};
constexpr ParityRule kEven{0, 2};
constexpr ParityRule kOdd{1, 1};

const ParityRule& rule_for(int n) { return n % 2 == 0 ? kEven : kOdd; }

void require_n(int n) {
  if (n < 2) throw InvalidArgument("the construction needs n >= 2, got " + std::to_string(n));
}

std::string poly_detail(const LaurentPoly& got, const LaurentPoly& want) {
  return "got " + got.to_text() + ", expected " + want.to_text();
}

}  // namespace

bool VerificationReport::all_pass() const { return first_failure() == nullptr; }

const Check* VerificationReport::first_failure() const {
  for (const auto& c : checks)
    if (!c.pass) return &c;
  return nullptr;
}

BraidWord deformation_word(int n) {
  require_n(n);
  const auto& r = rule_for(n);
  std::vector<int> letters;
  letters.insert(letters.end(), static_cast<std::size_t>(n + r.extra_first_band), 1);
  letters.insert(letters.end(), static_cast<std::size_t>(n - r.extra_first_band), 3);
  for (int j = 0; j < n; ++j) letters.insert(letters.end(), {2, 1, 3, 2});
  letters.insert(letters.end(), {1, 2, 3});
  return BraidWord::from_signed(letters, 4);
}

std::set<std::size_t> deformation_flips(int n) {
  require_n(n);
  const auto& r = rule_for(n);
  const std::size_t start = 2 * static_cast<std::size_t>(n);
  std::set<std::size_t> out;
  // Alternate between the s3 letter (offset 2) and the s1 letter (offset 1)
  // of successive band crossings.
  for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
    const std::size_t offset = j % 2 == 0 ? r.first_offset : 3 - r.first_offset;
    out.insert(start + 4 * j + offset);
  }
  return out;
}

VerificationReport verify_certificate(const DeformationCertificate& c) {
  VerificationReport rep;
  auto add = [&](std::string name, bool pass, std::string detail) {
    rep.checks.push_back({std::move(name), pass, std::move(detail)});
  };
  const int n = c.n;
  if (n < 2) {
    add("parameters", false, "n must be at least 2");
    return rep;
  }
  const int q = 2 * n + 1;
  add("strands", c.word.strands() == 4, std::to_string(c.word.strands()) + " strands");

  bool positions_ok = true;
  for (auto p : c.positions)
    if (p >= c.word.length() || c.word.letters()[p].sign != 1) positions_ok = false;
  add("flip_count", c.positions.size() == static_cast<std::size_t>(n) && positions_ok,
      std::to_string(c.positions.size()) + " flips, expected " + std::to_string(n) +
          (positions_ok ? "" : "; some position is out of range or not a positive letter"));

  std::string equal_detail;
  bool same = false;
  try {
    same = equal(c.word, torus_braid(4, q));
    equal_detail = std::string(same ? "word equals" : "word differs from") + " (s1 s2 s3)^" +
                   std::to_string(q) + " in B4";
  } catch (const Error& e) {
    equal_detail = e.what();
  }
  add("garside_equal", same, equal_detail);

  const int w0 = writhe(c.word);
  add("writhe", w0 == 6 * n + 3,
      "writhe " + std::to_string(w0) + ", expected " + std::to_string(6 * n + 3));

  const BraidWord flipped = flip(c.word, [&] {
    std::set<std::size_t> in_range;
    for (auto p : c.positions)
      if (p < c.word.length()) in_range.insert(p);
    return in_range;
  }());
  const int components = closure_components(flipped);
  add("flipped_is_knot", components == 1, std::to_string(components) + " component(s)");

  if (components == 1) {
    const InvariantSet got = invariant_set(KnotSpec::braid_closure(flipped));
    const InvariantSet want = invariant_set(c.target);
    add("alexander", got.alexander == want.alexander, poly_detail(got.alexander, want.alexander));
    add("jones", got.jones == want.jones, poly_detail(got.jones, want.jones));
    add("signature", got.signature == want.signature,
        "got " + std::to_string(got.signature) + ", expected " + std::to_string(want.signature));
    add("determinant", got.determinant == want.determinant,
        "got " + to_string(got.determinant) + ", expected " + to_string(want.determinant));
  } else {
    for (const char* name : {"alexander", "jones", "signature", "determinant"})
      add(name, false, "flipped closure is not a knot");
  }

  add("crossing_count_source", c.word.length() >= static_cast<std::size_t>(6 * n + 3),
      "word length " + std::to_string(c.word.length()) + ", minimal crossing number " +
          std::to_string(6 * n + 3));

  const PDCode target_diagram = connected_sum_T2(q, q);
  const bool target_alt = is_alternating(target_diagram);
  add("crossing_count_target",
      target_diagram.crossing_count() == static_cast<std::size_t>(4 * n + 2) && target_alt,
      std::to_string(target_diagram.crossing_count()) + " crossings, " +
          (target_alt ? "alternating" : "not alternating"));

  if (components == 1) {
    const bool alt = is_alternating(closure_diagram(flipped));
    add("flipped_not_alternating", !alt,
        alt ? "flipped diagram is alternating" : "flipped diagram is not alternating");
  } else {
    add("flipped_not_alternating", false, "flipped closure is not a knot");
  }
  return rep;
}

DeformationCertificate build_deformation(int n) {
  require_n(n);
  DeformationCertificate c;
  c.n = n;
  c.word = deformation_word(n);
  c.positions = deformation_flips(n);
  c.source = TorusKnot::make(4, 2 * n + 1);
  const auto t2 = KnotSpec::torus(TorusKnot::make(2, 2 * n + 1));
  c.target = KnotSpec::connected_sum({t2, t2});
  c.report = verify_certificate(c);
  if (const Check* bad = c.report.first_failure())
    throw ConstructionFailed("check '" + bad->name + "' failed for n = " + std::to_string(n) +
                             ": " + bad->detail);
  return c;
}

nlohmann::ordered_json DeformationCertificate::to_json() const {
  const int q = 2 * n + 1;
  nlohmann::ordered_json j;
  j["n"] = n;
  j["strands"] = word.strands();
  j["word"] = word.to_signed();
  j["flip_positions"] = std::vector<std::size_t>(positions.begin(), positions.end());
  j["source"] = {source.p, source.q};
  j["target"] = {{"type", "connected_sum"},
                 {"summands", nlohmann::ordered_json::array({{2, q}, {2, q}})}};
  auto checks = nlohmann::ordered_json::array();
  for (const auto& ch : report.checks)
    checks.push_back({{"name", ch.name}, {"pass", ch.pass}, {"detail", ch.detail}});
  j["checks"] = checks;
  j["note"] = kInvariantCaveat;
  return j;
}

DeformationCertificate DeformationCertificate::from_json(const nlohmann::json& j) {
  try {
    DeformationCertificate c;
    c.n = j.at("n").get<int>();
    const int strands = j.at("strands").get<int>();
    c.word = BraidWord::from_signed(j.at("word").get<std::vector<int>>(), strands);
    for (auto p : j.at("flip_positions").get<std::vector<long long>>()) {
      if (p < 0) throw ParseError("negative flip position");
      c.positions.insert(static_cast<std::size_t>(p));
    }
    require_n(c.n);
    c.source = TorusKnot::make(4, 2 * c.n + 1);
    std::vector<KnotSpec> summands;
    const auto& target = j.at("target");
    if (target.at("type").get<std::string>() != "connected_sum")
      throw ParseError("unsupported target type");
    for (const auto& s : target.at("summands"))
      summands.push_back(KnotSpec::torus(TorusKnot::make(s.at(0).get<int>(), s.at(1).get<int>())));
    c.target = KnotSpec::connected_sum(std::move(summands));
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed certificate: ") + e.what());
  }
}

}  // namespace torusalt
