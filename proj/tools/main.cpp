#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <numeric>
#include <sstream>

#include "claims.hpp"
#include "torusalt/bounds.hpp"
#include "torusalt/construction.hpp"
#include "torusalt/diagram.hpp"
#include "torusalt/invariants.hpp"
#include "torusalt/upsilon.hpp"

using namespace torusalt;
using Json = nlohmann::ordered_json;

namespace {

enum ExitCode : int { kOk = 0, kCheckFailed = 1, kUsage = 2, kComputation = 3 };

enum class Format { text, json, csv };

struct Options {
  std::vector<int> torus;
  std::string braid;
  int n = 0;
  int max_n = 6;
  int max_q = 21;
  bool json = false;
  bool csv = false;
  std::string out;
  std::string in;

  Format format() const { return json ? Format::json : csv ? Format::csv : Format::text; }
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

TorusKnot torus_of(const Options& o) {
  if (o.torus.size() != 2) throw UsageError("--torus expects P,Q");
  try {
    return TorusKnot::make(o.torus[0], o.torus[1]);
  } catch (const InvalidArgument& e) {
    throw UsageError(e.what());
  }
}

KnotSpec knot_of(const Options& o) {
  if (!o.torus.empty() && !o.braid.empty()) throw UsageError("give either --torus or --braid");
  if (!o.torus.empty()) return KnotSpec::torus(torus_of(o));
  if (o.braid.empty()) throw UsageError("a knot is required: --torus P,Q or --braid \"1 2 ...\"");
  try {
    return KnotSpec::braid_closure(BraidWord::parse(o.braid));
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  } catch (const MultiComponent& e) {
    throw UsageError(e.what());
  }
}

std::string opt(const std::optional<int>& v) { return v ? std::to_string(*v) : ""; }

int cmd_invariants(const Options& o, std::ostream& os) {
  const KnotSpec k = knot_of(o);
  const InvariantSet s = invariant_set(k);
  if (o.format() == Format::json) {
    Json j;
    j["knot"] = k.describe();
    j["invariants"] = s.to_json();
    os << j.dump(2) << "\n";
    return kOk;
  }
  if (o.format() == Format::csv) {
    os << "knot,alexander,jones,signature,determinant,genus,tau,s,upsilon1\n";
    os << k.describe() << "," << s.alexander.to_text() << "," << s.jones.to_text() << "," << s.signature
       << "," << to_string(s.determinant) << "," << opt(s.genus) << "," << opt(s.tau) << "," << opt(s.s)
       << "," << opt(s.upsilon1) << "\n";
    return kOk;
  }
  os << "knot: " << k.describe() << "\n"
     << "alexander: " << s.alexander.to_text() << "\n"
     << "jones: " << s.jones.to_text() << "\n"
     << "signature: " << s.signature << "\n"
     << "determinant: " << to_string(s.determinant) << "\n";
  if (s.genus) os << "genus: " << *s.genus << "\n";
  if (s.tau) os << "tau: " << *s.tau << "\n";
  if (s.s) os << "s: " << *s.s << "\n";
  if (s.upsilon1) os << "upsilon1: " << *s.upsilon1 << "\n";
  return kOk;
}

int cmd_upsilon(const Options& o, std::ostream& os) {
  const TorusKnot k = torus_of(o);
  const PiecewiseLinear u = upsilon_of(k);
  switch (o.format()) {
    case Format::json: {
      Json j;
      j["knot"] = k.name();
      auto pts = Json::array();
      for (const auto& b : u.breakpoints()) pts.push_back({{"t", to_string(b.t)}, {"value", to_string(b.value)}});
      j["breakpoints"] = pts;
      j["upsilon1"] = upsilon1(k);
      os << j.dump(2) << "\n";
      break;
    }
    case Format::csv:
      os << "t,value\n";
      for (const auto& b : u.breakpoints()) os << to_string(b.t) << "," << to_string(b.value) << "\n";
      break;
    case Format::text:
      for (const auto& b : u.breakpoints()) os << "t=" << to_string(b.t) << " v=" << to_string(b.value) << "\n";
      break;
  }
  return kOk;
}

struct Row {
  TorusKnot k;
  int tau;
  int ups;
  int lower_tu;
  Rational abe;
  AltBounds bounds;
};

Row row_for(const TorusKnot& k) {
  return {k, genus_tau_s(k).tau, upsilon1(k), tau_upsilon_bound(k), abe_bound(k), alt_bounds(k)};
}

Json row_json(const Row& r) {
  Json j;
  j["knot"] = r.k.name();
  j["p"] = r.k.p;
  j["q"] = r.k.q;
  j["g"] = r.k.genus();
  j["tau"] = r.tau;
  j["upsilon1"] = r.ups;
  j["lower_tau_upsilon"] = r.lower_tu;
  j["lower_abe"] = to_string(r.abe);
  j["bounds"] = r.bounds.to_json();
  return j;
}

int cmd_bounds(const Options& o, std::ostream& os) {
  const TorusKnot k = torus_of(o);
  const Row r = row_for(k);
  const auto up = upper_bounds(k);
  const auto asym = asymptotic_lower(k.p);
  if (o.format() == Format::json) {
    Json j = row_json(r);
    if (up && up->superseded)
      j["earlier_range"] = {to_string(up->superseded->first), to_string(up->superseded->second)};
    j["asymptotic"] = {{"p", asym.p}, {"lower", to_string(asym.lower)}, {"sharp", asym.known_sharp}};
    os << j.dump(2) << "\n";
    return kOk;
  }
  os << "knot: " << k.name() << "\n"
     << "genus: " << k.genus() << "\n"
     << "lower (|tau+upsilon|): " << r.lower_tu << "\n"
     << "lower (|s+sigma|/2): " << to_string(r.abe) << "\n"
     << "lower: " << r.bounds.lower << "\n"
     << "upper: " << (r.bounds.upper ? std::to_string(*r.bounds.upper) : "unknown") << "\n"
     << "exact: " << (r.bounds.exact ? std::to_string(*r.bounds.exact) : "unknown") << "\n"
     << "provenance: " << r.bounds.provenance_text() << "\n";
  if (up && up->superseded)
    os << "earlier range: [" << to_string(up->superseded->first) << ", " << to_string(up->superseded->second)
       << "]\n";
  os << "asymptotic slope a_" << asym.p << " >= " << to_string(asym.lower)
     << (asym.known_sharp ? " (equality known)" : " (equality open)") << "\n";
  return kOk;
}

int cmd_table(const Options& o, std::ostream& os) {
  if (o.max_q < 3) throw UsageError("--max-q must be at least 3");
  std::vector<Row> rows;
  for (int p = 2; p <= 4; ++p)
    for (int q = p + 1; q <= o.max_q; ++q)
      if (std::gcd(p, q) == 1) rows.push_back(row_for(TorusKnot::make(p, q)));
  if (o.format() == Format::json) {
    auto arr = Json::array();
    for (const auto& r : rows) arr.push_back(row_json(r));
    os << arr.dump(2) << "\n";
    return kOk;
  }
  os << "p,q,g,tau,upsilon1,lower_tau_upsilon,lower_abe,upper,exact,provenance\n";
  for (const auto& r : rows)
    os << r.k.p << "," << r.k.q << "," << r.k.genus() << "," << r.tau << "," << r.ups << "," << r.lower_tu << ","
       << to_string(r.abe) << "," << opt(r.bounds.upper) << "," << opt(r.bounds.exact) << ","
       << r.bounds.provenance_text() << "\n";
  return kOk;
}

void print_report(const VerificationReport& rep, std::ostream& os) {
  for (const auto& c : rep.checks) os << (c.pass ? "PASS " : "FAIL ") << c.name << ": " << c.detail << "\n";
  os << "note: " << kInvariantCaveat << "\n";
}

int cmd_certify(const Options& o, std::ostream& os) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  DeformationCertificate c;
  try {
    c = build_deformation(o.n);
  } catch (const ConstructionFailed& e) {
    std::cerr << "certificate for T(4," << 2 * o.n + 1 << ") failed: " << e.what() << "\n";
    return kCheckFailed;
  }
  if (o.format() == Format::text && o.out.empty()) {
    os << "word: " << c.word.to_text() << "\nflips:";
    for (auto p : c.positions) os << " " << p;
    os << "\n";
    print_report(c.report, os);
  } else {
    os << c.to_json().dump(2) << "\n";
  }
  return kOk;
}

int cmd_verify(const Options& o, std::ostream& os) {
  if (o.in.empty()) throw UsageError("--in FILE is required");
  std::ifstream f(o.in);
  if (!f) throw UsageError("cannot read " + o.in);
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(f);
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("invalid JSON: ") + e.what());
  }
  DeformationCertificate c;
  try {
    c = DeformationCertificate::from_json(j);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  c.report = verify_certificate(c);
  if (o.format() == Format::json)
    os << c.to_json().dump(2) << "\n";
  else
    print_report(c.report, os);
  return c.report.all_pass() ? kOk : kCheckFailed;
}

int cmd_verify_paper(const Options& o, std::ostream& os) {
  if (o.max_n < 2) throw UsageError("--max-n must be at least 2");
  const auto results = cli::run_claim_checks(o.max_n);
  bool all = true;
  for (const auto& r : results) all = all && r.pass;
  if (o.format() == Format::json) {
    os << cli::to_json(results).dump(2) << "\n";
  } else {
    for (const auto& r : results)
      if (!r.pass) os << "FAIL " << r.claim << ": " << r.detail << "\n";
    std::size_t passed = 0;
    for (const auto& r : results) passed += r.pass;
    os << passed << "/" << results.size() << " checks passed\n";
  }
  return all ? kOk : kCheckFailed;
}

int cmd_dealternate(const Options& o, std::ostream& os) {
  if (o.n < 2) throw UsageError("--n must be at least 2");
  const BraidWord w = deformation_word(o.n);
  const auto flips = deformation_flips(o.n);
  const PDCode before = closure_diagram(w);
  const PDCode after = closure_diagram(flip(w, flips));
  if (o.format() == Format::json) {
    Json j;
    j["n"] = o.n;
    j["word"] = w.to_signed();
    j["flip_positions"] = std::vector<std::size_t>(flips.begin(), flips.end());
    j["source_diagram"] = before.to_json();
    j["flipped_diagram"] = after.to_json();
    j["flipped_alternating"] = is_alternating(after);
    j["flipped_alternating_distance"] = alternating_distance(after);
    os << j.dump(2) << "\n";
    return kOk;
  }
  os << "source: " << before.to_text() << "\n"
     << "flipped: " << after.to_text() << "\n"
     << "flipped alternating: " << (is_alternating(after) ? "yes" : "no") << "\n"
     << "flipped alternating distance: " << alternating_distance(after) << "\n";
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Alternating numbers of torus knots: invariants, bounds and certificates"};
  app.require_subcommand(1);
  Options o;

  auto add_format = [&](CLI::App* sub, bool csv) {
    auto* j = sub->add_flag("--json", o.json, "JSON output");
    if (csv) sub->add_flag("--csv", o.csv, "CSV output")->excludes(j);
    sub->add_option("--out", o.out, "write output to FILE");
  };
  auto add_torus = [&](CLI::App* sub) {
    return sub->add_option("--torus", o.torus, "torus knot P,Q")->delimiter(',')->expected(2);
  };

  auto* inv = app.add_subcommand("invariants", "Alexander, Jones, signature and more");
  add_torus(inv);
  inv->add_option("--braid", o.braid, "braid word, e.g. \"1 -2 1\"");
  add_format(inv, true);

  auto* ups = app.add_subcommand("upsilon", "breakpoints of Upsilon for a torus knot");
  add_torus(ups)->required();
  add_format(ups, true);

  auto* bnd = app.add_subcommand("bounds", "alternating-number bounds for a torus knot");
  add_torus(bnd)->required();
  add_format(bnd, false);

  auto* tab = app.add_subcommand("table", "bounds table for braid index 2, 3 and 4");
  tab->add_option("--max-q", o.max_q, "largest q")->capture_default_str();
  add_format(tab, true);

  auto* cert = app.add_subcommand("certify", "build and verify a crossing-change certificate");
  cert->add_option("--n", o.n, "n >= 2")->required();
  add_format(cert, false);

  auto* ver = app.add_subcommand("verify", "re-check a certificate file");
  ver->add_option("--in", o.in, "certificate JSON")->required();
  add_format(ver, false);

  auto* claims = app.add_subcommand("verify-paper", "run every acceptance check");
  claims->add_option("--max-n", o.max_n, "largest n for certificates")->capture_default_str();
  add_format(claims, false);

  auto* dealt = app.add_subcommand("dealternate-diagram", "diagrams before and after the flips");
  dealt->add_option("--n", o.n, "n >= 2")->required();
  add_format(dealt, false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kUsage;
  }

  std::ostringstream buffer;
  int code = kOk;
  try {
    CLI::App* sub = app.get_subcommands().front();
    const std::string name = sub->get_name();
    if (name == "invariants") code = cmd_invariants(o, buffer);
    else if (name == "upsilon") code = cmd_upsilon(o, buffer);
    else if (name == "bounds") code = cmd_bounds(o, buffer);
    else if (name == "table") code = cmd_table(o, buffer);
    else if (name == "certify") code = cmd_certify(o, buffer);
    else if (name == "verify") code = cmd_verify(o, buffer);
    else if (name == "verify-paper") code = cmd_verify_paper(o, buffer);
    else code = cmd_dealternate(o, buffer);
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kComputation;
  }

  if (o.out.empty()) {
    std::cout << buffer.str();
  } else {
    std::ofstream f(o.out);
    if (!f) {
      std::cerr << "cannot write " << o.out << "\n";
      return kUsage;
    }
    f << buffer.str();
  }
  return code;
}
