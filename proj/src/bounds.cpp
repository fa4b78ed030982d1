#include "torusalt/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "torusalt/upsilon.hpp"

namespace torusalt {

namespace {

// Citation labels surfaced in reports. They name the statements of the
// source article that each number rests on.
const Provenance kExactTheorem{"exact", "Thm 1"};
const Provenance kTauUpsilon{"lower:tau+upsilon", "Prop 2.3"};
const Provenance kAbe{"lower:abe", "Abe |s-sigma|/2"};
const Provenance kBraidThree{"upper:braid3", "Prop 3.1"};
const Provenance kBraidFour{"upper:construction", "Prop 3.2"};
const Provenance kBraidTwo{"upper:alternating", "braid index 2 is alternating"};

int ceil_to_int(const Rational& r) {
  mpz_class out;
  mpz_cdiv_q(out.get_mpz_t(), r.get_num_mpz_t(), r.get_den_mpz_t());
  return static_cast<int>(out.get_si());
}

}  // namespace

nlohmann::ordered_json AltBounds::to_json() const {
  nlohmann::ordered_json j;
  j["lower"] = lower;
  j["upper"] = upper ? nlohmann::ordered_json(*upper) : nlohmann::ordered_json(nullptr);
  j["exact"] = exact ? nlohmann::ordered_json(*exact) : nlohmann::ordered_json(nullptr);
  auto prov = nlohmann::ordered_json::array();
  for (const auto& p : provenance) prov.push_back({{"method", p.method}, {"citation", p.citation}});
  j["provenance"] = prov;
  j["provenance_text"] = provenance_text();
  return j;
}

std::string AltBounds::provenance_text() const {
  std::string out;
  for (const auto& p : provenance) {
    if (!out.empty()) out += " / ";
    out += p.citation;
  }
  return out;
}

Rational pair_lower_bound(const Rational& x, const Rational& y) { return abs(x - y); }

int tau_upsilon_bound(const TorusKnot& k) {
  const Rational b = pair_lower_bound(Rational(-genus_tau_s(k).tau), Rational(upsilon1(k)));
  return static_cast<int>(b.get_num().get_si());
}

Rational abe_bound(const TorusKnot& k) {
  const int s = genus_tau_s(k).s;
  const int sigma = signature_of(KnotSpec::torus(k));
  return abs(Rational(s + sigma)) / 2;
}

std::optional<int> alt_exact(const TorusKnot& k) {
  if (k.p == 2) return 0;
  if (k.p == 3 || k.p == 4) return k.genus() / 3;
  return std::nullopt;
}

std::optional<UpperBound> upper_bounds(const TorusKnot& k) {
  if (k.p == 2) return UpperBound{0, kBraidTwo, std::nullopt};
  if (k.p == 3) {
    // q = 3n+1 or 3n+2
    const int n = k.q / 3;
    // Earlier bounds: exact n for even n, {n-1, n} for odd n.
    const Rational low = n % 2 == 0 ? Rational(n) : Rational(n - 1);
    return UpperBound{n, kBraidThree, std::make_pair(low, Rational(n))};
  }
  if (k.p == 4) {
    const int n = (k.q - 1) / 2;
    if (n < 2) return std::nullopt;
    std::pair<Rational, Rational> earlier =
        n % 2 == 0 ? std::make_pair(Rational(n), Rational(3 * n, 2))
                   : std::make_pair(Rational(n - 1), Rational(3 * n - 1, 2));
    earlier.second.canonicalize();
    return UpperBound{n, kBraidFour, earlier};
  }
  return std::nullopt;
}

AsymptoticBound asymptotic_lower(int p) {
  if (p < 2) throw InvalidArgument("asymptotic bound needs p >= 2");
  Rational v = p % 2 == 1 ? Rational((p - 1) * (p - 1), 4) : Rational((p - 2) * p, 4);
  v.canonicalize();
  return {p, v, p <= 4};
}

IntInterval lipschitz_transfer(int p, int k, int l, int alt_k) {
  if (std::gcd(p, k) != 1 || std::gcd(p, l) != 1)
    throw InvalidArgument("lipschitz_transfer needs gcd(p,k) = gcd(p,l) = 1");
  if (alt_k < 0) throw InvalidArgument("alternating number must be non-negative");
  const int slack = (p - 1) * std::abs(k - l) / 2;
  return {std::max(0, alt_k - slack), alt_k + slack};
}

AltBounds alt_bounds(const TorusKnot& k) {
  AltBounds b;
  const int tu = tau_upsilon_bound(k);
  const int abe = ceil_to_int(abe_bound(k));
  b.lower = std::max(tu, abe);
  const auto up = upper_bounds(k);
  if (up) {
    b.upper = up->value;
    if (b.lower > *b.upper)
      throw Error("lower bound " + std::to_string(b.lower) + " exceeds upper bound for " + k.name());
  }
  if (b.upper && *b.upper == b.lower) {
    b.exact = b.lower;
    const auto stated = alt_exact(k);
    if (!stated || *stated != b.lower)
      throw Error("computed sandwich disagrees with floor(g/3) for " + k.name());
    if (k.p != 2) b.provenance.push_back(kExactTheorem);
  }
  if (b.lower > 0 || k.p != 2) b.provenance.push_back(tu >= abe ? kTauUpsilon : kAbe);
  if (up) b.provenance.push_back(up->source);
  return b;
}

}  // namespace torusalt
