// Prints one [PASS]/[FAIL] line per acceptance criterion; exits nonzero if
// any criterion fails.

#include <chrono>
#include <fstream>
#include <iostream>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "catalan_lab/bijections.hpp"
#include "catalan_lab/formulas.hpp"
#include "catalan_lab/oeis.hpp"
#include "catalan_lab/verify.hpp"
#include "catalan_lab/words.hpp"

using namespace catalan_lab;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

int failed = 0;

void report(int id, const std::string& what, bool ok, const std::string& detail) {
  std::cout << (ok ? "[PASS] " : "[FAIL] ") << "criterion " << id << ": " << what << " ("
            << detail << ")" << std::endl;
  if (!ok) ++failed;
}

void closed_form_totals() {
  const auto t0 = Clock::now();
  std::size_t cells = 0;
  std::vector<std::string> bad;
  for (int n = 1; n <= 14; ++n) {
    for (StatKind k : kAllStatKinds) {
      ++cells;
      if (brute_total(n, StatId(k)) != closed_total(n, StatId(k))) {
        bad.push_back(stat_name(k) + " n=" + std::to_string(n));
      }
    }
  }
  const bool anchors = brute_total(4, StatKind::SymValley) == 1 &&
                       brute_total(4, StatKind::SymPeak) == 5 &&
                       brute_total(2, StatKind::RunsDesc) == 4 &&
                       brute_total(2, StatKind::Semi) == 7 && brute_total(3, StatKind::Area) == 22;
  const double secs = seconds_since(t0);
  std::ostringstream d;
  d << cells << " cells, " << bad.size() << " mismatches, anchors " << (anchors ? "ok" : "wrong")
    << ", " << secs << " s";
  if (!bad.empty()) d << ", first " << bad.front();
  report(1, "statistic totals, brute force = closed form for n <= 14", bad.empty() && anchors &&
         secs <= 60.0, d.str());
}

void per_ell() {
  std::size_t cells = 0;
  std::size_t bad = 0;
  for (int n = 1; n <= 12; ++n) {
    for (int l = 1; l <= n; ++l) {
      const Count expected[] = {binomial(2 * n - 2 * l - 1, n - l - 3),
                                binomial(2 * n - 2 * l - 1, n - l - 2),
                                binomial(2 * n - 2 * l - 2, n - l - 2)};
      const StatKind kinds[] = {StatKind::EllValley, StatKind::EllPeak, StatKind::SymPeak};
      for (int i = 0; i < 3; ++i) {
        ++cells;
        bad += brute_total(n, StatId(kinds[i], l)) != expected[i];
      }
    }
  }
  report(2, "per-l valley/peak totals for n <= 12", bad == 0,
         std::to_string(cells) + " cells, " + std::to_string(bad) + " mismatches");
}

void identity_sweep() {
  const auto r = verify_identities(300);
  const double secs = r.elapsed.count();
  std::ostringstream d;
  d << r.cases_run << " checks, " << r.failures.size() << " failures, " << secs << " s";
  report(3, "identity sweep 1 <= n <= 300", r.passed() && secs <= 10.0, d.str());
}

void bijections() {
  VerifyReport r = verify_bijections(8);
  // iota is checked on its own up to n = 10.
  for (int n = 0; n <= 10; ++n) {
    std::size_t words = 0;
    bool ok = true;
    for_each_catalan(n, [&](const Word& w) {
      ++words;
      const Path p = iota(w);
      ok = ok && is_dyck(p) && iota_inv(p) == w;
    });
    r.expect("iota round trip n=" + std::to_string(n), ok);
    r.expect_eq("iota onto D_n n=" + std::to_string(n), catalan(n), make_count(words));
  }
  std::ostringstream d;
  d << r.cases_run << " checks, " << r.failures.size() << " failures";
  if (!r.passed()) d << ", first " << r.failures.front().input;
  report(4, "bijection round trips and images", r.passed(), d.str());
}

std::size_t marked(int n, const Path& pattern, const OccurrenceFilter& f = AnyOccurrence{}) {
  std::size_t c = 0;
  for_each_dyck(n, [&](const Path& p) { c += count_factor(p, pattern, f); });
  return c;
}

void cardinalities() {
  VerifyReport r;
  for (int n = 1; n <= 8; ++n) {
    const std::string at = " n=" + std::to_string(n);
    r.expect_eq("D_n(uu)" + at, binomial(2 * n - 1, n - 2), make_count(marked(n, Path::parse("UU"))));
    r.expect_eq("D_n(ddu)" + at, binomial(2 * n - 2, n - 3), make_count(marked(n, Path::parse("DDU"))));
    r.expect_eq("D_n(udu)" + at, binomial(2 * n - 2, n - 2), make_count(marked(n, Path::parse("UDU"))));
    r.expect_eq("D_n(uuddu)" + at, binomial(2 * n - 4, n - 3),
                make_count(marked(n, Path::parse("UUDDU"))));
    r.expect_eq("non-terminal D_n(uudd)" + at, binomial(2 * n - 3, n - 3),
                make_count(marked(n, Path::parse("UUDD"), NonTerminalOccurrence{})));
    std::size_t valleys = 0;
    for (int j = 2; j <= n; ++j) {
      valleys += marked(n, Path::parse("U") + power(Step::D, j) + Path::parse("UU"));
    }
    r.expect_eq("sum_j D_n(ud^juu)" + at, binomial(2 * n - 3, n - 4), make_count(valleys));
    r.expect_eq("E_m" + at, binomial(2 * n, n - 2),
                make_count(marked(n, Path::parse("U"), MinStepHeight{0, 2})));
    std::size_t g = 0;
    for_each_lattice(PointClass::make(2 * n - 2, 0), [&](const Path& p) { g += p.min_height() <= -2; });
    r.expect_eq("G_n" + at, binomial(2 * n - 2, n - 3), make_count(g));
    std::size_t l = 0;
    for (int b = -2 * n; b < 0; b += 2) {
      for_each_lattice(PointClass::make(2 * n, b), [&](const Path&) { ++l; });
    }
    r.expect_eq("L_n" + at, half_exact(pow2(2 * n) - binomial(2 * n, n)), make_count(l));
  }
  report(5, "marked-set cardinalities for n <= 8", r.passed(),
         std::to_string(r.cases_run) + " checks, " + std::to_string(r.failures.size()) +
             " failures");
}

void stratification() {
  std::size_t cells = 0;
  std::size_t bad = 0;
  for (int n = 1; n <= 10; ++n) {
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> kj;
    std::map<std::size_t, std::size_t> k_only;
    for_each_dyck(n, [&](const Path& p) {
      const auto c = classify_dnkj(p);
      ++kj[{c.k, c.j}];
      ++k_only[c.k];
    });
    Count sum = 0;
    for (long k = 0; k <= n; ++k) {
      ++cells;
      bad += dnk_count(n, k) != make_count(k_only[static_cast<std::size_t>(k)]);
      sum += dnk_count(n, k);
      for (long j = 0; j <= n; ++j) {
        ++cells;
        bad += dnkj_count(n, k, j) !=
               make_count(kj[{static_cast<std::size_t>(k), static_cast<std::size_t>(j)}]);
      }
    }
    ++cells;
    bad += sum != catalan(n);
  }
  report(6, "D_{n,k,j} stratification for n <= 10", bad == 0,
         std::to_string(cells) + " cells, " + std::to_string(bad) + " mismatches");
}

void distributions() {
  const auto r = verify_distributions(10);
  report(7, "Narayana distributions for n <= 10", r.passed(),
         std::to_string(r.cases_run) + " checks, " + std::to_string(r.failures.size()) +
             " failures");
}

void oeis_prefixes() {
  std::size_t ok = 0;
  std::string detail;
  const char* ids[] = {"A000346", "A097613", "A002054", "A002694", "A000984", "A057552"};
  for (const char* id : ids) {
    const auto& b = find_binding(id);
    std::ifstream in(std::string(CATALAN_LAB_TEST_DATA) + "/b" + (id + 1) + ".txt");
    const auto theirs = read_bfile(in);
    const auto cmp = compare_bfile(oeis_terms(b, 10), theirs, b.offset - b.oeis_offset);
    if (cmp.matched() && cmp.compared >= 10) {
      ++ok;
    } else if (detail.empty()) {
      detail = std::string(id) + ": " + cmp.detail;
    }
  }
  const bool area_prefix = oeis_terms(find_binding("A000346"), 5)[4].value == 386;
  report(8, "OEIS prefixes against b-files, 10 terms each", ok == 6 && area_prefix,
         std::to_string(ok) + "/6 sequences match" + (detail.empty() ? "" : ", " + detail));
}

void sampler() {
  std::mt19937_64 rng(20240601);
  std::map<Path, long> hits;
  for (const auto& p : enumerate_dyck(4)) hits[p] = 0;
  const long draws = 100000;
  for (long i = 0; i < draws; ++i) ++hits[uniform_dyck_sample(4, rng)];
  const double expected = static_cast<double>(draws) / 14.0;
  double chi2 = 0;
  for (const auto& [p, c] : hits) chi2 += (c - expected) * (c - expected) / expected;
  // 0.999 quantile of chi-square with 13 degrees of freedom.
  const double critical = 34.52817897487089;
  std::ostringstream d;
  d << "chi2 = " << chi2 << " over " << hits.size() << " cells, critical " << critical;
  report(9, "uniform sampler on D_4, 1e5 draws", hits.size() == 14 && chi2 < critical, d.str());
}

}  // namespace

int main() {
  closed_form_totals();
  per_ell();
  identity_sweep();
  bijections();
  cardinalities();
  stratification();
  distributions();
  oeis_prefixes();
  sampler();
  std::cout << (failed ? "acceptance: " + std::to_string(failed) + " criteria failed"
                       : std::string("acceptance: all criteria pass"))
            << std::endl;
  return failed ? 1 : 0;
}
