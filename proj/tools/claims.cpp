#include "claims.hpp"

#include <algorithm>
#include <cstdio>
#include <numeric>

#include "torusalt/bounds.hpp"
#include "torusalt/construction.hpp"
#include "torusalt/upsilon.hpp"

namespace torusalt::cli {

namespace {

std::string pad(int v) {
  char buf[16];
  std::snprintf(buf, sizeof buf, "%03d", v);
  return buf;
}

void upsilon_values(int max_n, std::vector<ClaimResult>& out) {
  struct Family {
    const char* tag;
    int p;
    int (*q)(int);
    int (*expected)(int);
  };
  const Family families[] = {
      {"T(3,3n+1)", 3, [](int n) { return 3 * n + 1; }, [](int n) { return -2 * n; }},
      {"T(3,3n+2)", 3, [](int n) { return 3 * n + 2; }, [](int n) { return -2 * n - 1; }},
      {"T(4,2n+1)", 4, [](int n) { return 2 * n + 1; }, [](int n) { return -2 * n; }},
  };
  for (const auto& f : families) {
    for (int n = 1; n <= max_n; ++n) {
      const auto k = TorusKnot::make(f.p, f.q(n));
      const int ups = upsilon1(k);
      const int want = f.expected(n);
      out.push_back({std::string("1/upsilon/") + f.tag + "/" + pad(n),
                     std::string("upsilon of ") + f.tag + " at n=" + std::to_string(n),
                     ups == want,
                     k.name() + ": upsilon " + std::to_string(ups) + ", expected " + std::to_string(want)});
      const int tu = tau_upsilon_bound(k);
      out.push_back({std::string("2/lower/") + f.tag + "/" + pad(n),
                     std::string("|tau+upsilon| = n on ") + f.tag + " (Prop 2.3)",
                     tu == n,
                     k.name() + ": |tau+upsilon| " + std::to_string(tu) + ", expected " + std::to_string(n)});
    }
  }
}

void main_theorem(std::vector<ClaimResult>& out) {
  for (int p = 2; p <= 4; ++p) {
    for (int q = p + 1; q <= 21; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto k = TorusKnot::make(p, q);
      ClaimResult r{"3/exact/" + pad(p) + "/" + pad(q), "alt = floor(g/3) on " + k.name() + " (Thm 1)",
                    false, ""};
      try {
        const AltBounds b = alt_bounds(k);
        const int want = p == 2 ? 0 : k.genus() / 3;
        const auto exact = alt_exact(k);
        r.pass = exact && *exact == want && b.exact && *b.exact == want && b.lower == want &&
                 b.upper && *b.upper == want;
        r.detail = k.name() + ": lower " + std::to_string(b.lower) + ", upper " +
                   (b.upper ? std::to_string(*b.upper) : "none") + ", floor(g/3) " +
                   std::to_string(want) + " [" + b.provenance_text() + "]";
      } catch (const Error& e) {
        r.detail = e.what();
      }
      out.push_back(std::move(r));
    }
  }
}

void certificates(int max_n, std::vector<ClaimResult>& out) {
  for (int n = 2; n <= max_n; ++n) {
    ClaimResult r{"4/certificate/" + pad(n),
                  "n crossing changes turn T(4," + std::to_string(2 * n + 1) +
                      ") into T(2,q)#T(2,q) (Prop 3.2)",
                  false, ""};
    try {
      const auto c = build_deformation(n);
      r.pass = c.report.all_pass();
      r.detail = std::to_string(c.report.checks.size()) + " checks passed; " + kInvariantCaveat;
    } catch (const Error& e) {
      r.detail = e.what();
    }
    out.push_back(std::move(r));
  }
}

void asymptotics(std::vector<ClaimResult>& out) {
  const auto a3 = asymptotic_lower(3);
  const auto a4 = asymptotic_lower(4);
  out.push_back({"5/asymptotic/003", "a_3 lower bound equals 1", a3.lower == 1, "(p-1)^2/4 = " + to_string(a3.lower)});
  out.push_back({"5/asymptotic/004", "a_4 lower bound equals 2", a4.lower == 2, "(p-2)p/4 = " + to_string(a4.lower)});
  for (int n = 1; n <= 8; ++n) {
    const int d3 = *alt_exact(TorusKnot::make(3, 3 * (n + 1) + 1)) - *alt_exact(TorusKnot::make(3, 3 * n + 1));
    const int d4 = *alt_exact(TorusKnot::make(4, 2 * (n + 2) + 1)) - *alt_exact(TorusKnot::make(4, 2 * n + 1));
    out.push_back({"5/slope/003/" + pad(n), "alt grows by a_3 per full twist on T(3,3n+1)", d3 == 1,
                   "difference " + std::to_string(d3)});
    out.push_back({"5/slope/004/" + pad(n), "alt grows by a_4 per full twist on T(4,2n+1)", d4 == 2,
                   "difference " + std::to_string(d4)});
  }
}

}  // namespace

std::vector<ClaimResult> run_claim_checks(int max_n) {
  std::vector<ClaimResult> out;
  upsilon_values(std::max(max_n, 6), out);
  main_theorem(out);
  certificates(max_n, out);
  asymptotics(out);
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.key < b.key; });
  return out;
}

nlohmann::ordered_json to_json(const std::vector<ClaimResult>& results) {
  auto arr = nlohmann::ordered_json::array();
  bool all = true;
  for (const auto& r : results) {
    all = all && r.pass;
    arr.push_back({{"key", r.key}, {"claim", r.claim}, {"pass", r.pass}, {"detail", r.detail}});
  }
  nlohmann::ordered_json j;
  j["pass"] = all;
  j["checks"] = arr;
  return j;
}

}  // namespace torusalt::cli
