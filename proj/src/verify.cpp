#include "catalan_lab/verify.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "catalan_lab/bijections.hpp"
#include "catalan_lab/formulas.hpp"
#include "catalan_lab/words.hpp"

namespace catalan_lab {

void VerifyReport::merge(const VerifyReport& other) {
  cases_run += other.cases_run;
  failures.insert(failures.end(), other.failures.begin(), other.failures.end());
  elapsed += other.elapsed;
}

void VerifyReport::print(std::ostream& os, bool with_timing) const {
  os << "suite " << suite << ": " << cases_run << " cases, " << failures.size()
     << " failures";
  if (with_timing) os << ", " << elapsed.count() << " s";
  os << (passed() ? " [PASS]" : " [FAIL]") << '\n';
  for (const auto& f : failures) {
    os << "  FAIL " << f.input << ": expected " << f.expected << ", got " << f.got << '\n';
  }
}

namespace {

class Timer {
 public:
  explicit Timer(VerifyReport& r) : r_(r), t0_(std::chrono::steady_clock::now()) {}
  ~Timer() { r_.elapsed = std::chrono::steady_clock::now() - t0_; }

 private:
  VerifyReport& r_;
  std::chrono::steady_clock::time_point t0_;
};

void check_cap(int n_max, int cap, const char* suite) {
  if (n_max > cap) {
    throw LimitError(std::string("verify suite ") + suite + " refused for n-max " +
                         std::to_string(n_max),
                     cap);
  }
}

std::string tag(const std::string& what, int n) { return what + " n=" + std::to_string(n); }

// Every marked occurrence of `pattern` (under `filter`) across D_n.
std::vector<MarkedPath> marked_occurrences(int n, const Path& pattern,
                                           const OccurrenceFilter& filter = AnyOccurrence{}) {
  std::vector<MarkedPath> out;
  for_each_dyck(n, [&](const Path& p) {
    for (auto i : find_factor(p, pattern, filter)) out.emplace_back(p, i, pattern.length());
  });
  return out;
}

// Empty when (a, b) is not reachable.
template <class Pred>
std::set<Path> lattice_subset(int a, int b, Pred pred) {
  std::set<Path> out;
  if (a < 0 || a < (b < 0 ? -b : b) || (a - b) % 2 != 0) return out;
  for_each_lattice(PointClass::make(a, b), [&](const Path& p) {
    if (pred(p)) out.insert(p);
  });
  return out;
}

// Checks a split-reverse family: injective, image equal to `target`,
// cardinality equal to `formula`, inverse recovers every mark.
void check_split_family(VerifyReport& r, const std::string& name, int n,
                        const std::vector<MarkedPath>& domain, const SplitVariant& v,
                        const std::set<Path>& target, const Count& formula) {
  std::set<Path> image;
  bool inverse_ok = true;
  for (const auto& mp : domain) {
    const Path img = split_reverse(mp, v);
    image.insert(img);
    inverse_ok = inverse_ok && split_reverse_inverse(img, v) == mp;
  }
  r.expect_eq(tag(name + " injective", n), domain.size(), image.size());
  r.expect(tag(name + " image equals target set", n), image == target);
  r.expect_eq(tag(name + " cardinality", n), formula, make_count(domain.size()));
  r.expect(tag(name + " inverse", n), inverse_ok);
}

void bijection_split_maps(VerifyReport& r, int n) {
  const auto dips_below = [](int level) {
    return [level](const Path& p) { return p.min_height() < level; };
  };
  check_split_family(r, "D_n(UU)", n, marked_occurrences(n, Path::parse("UU")),
                     SplitVariant::ascent(),
                     lattice_subset(2 * n - 1, 1, dips_below(0)),
                     binomial(2 * n - 1, n - 2));
  if (n >= 1) {
    check_split_family(r, "D_n(UDU)", n, marked_occurrences(n, Path::parse("UDU")),
                       SplitVariant::udu(),
                       lattice_subset(2 * n - 2, 0, dips_below(0)),
                       binomial(2 * n - 2, n - 2));
    check_split_family(r, "D_n(DDU)", n, marked_occurrences(n, Path::parse("DDU")),
                       SplitVariant::descent(),
                       lattice_subset(2 * n - 2, -2, dips_below(-2)),
                       binomial(2 * n - 2, n - 3));
  }
  if (n >= 2) {
    check_split_family(r, "D_n(UUDDU)", n, marked_occurrences(n, Path::parse("UUDDU")),
                       SplitVariant::sym_peak(),
                       lattice_subset(2 * n - 4, 2,
                                      [](const Path&) { return true; }),
                       binomial(2 * n - 4, n - 3));
    check_split_family(r, "J_n", n,
                       marked_occurrences(n - 2, Path::parse("U"), MinStepHeight{0, 2}),
                       SplitVariant::marked_up(),
                       lattice_subset(2 * n - 4, 2, dips_below(0)),
                       binomial(2 * n - 4, n - 4));
    check_split_family(r, "K_n", n,
                       marked_occurrences(n - 2, Path::parse("D"), MinStepHeight{0, 2}),
                       SplitVariant::marked_down(),
                       lattice_subset(2 * n - 4, -2, dips_below(-3)),
                       binomial(2 * n - 4, n - 5));
  }
}

void bijection_marked_counts(VerifyReport& r, int n) {
  // 1-valleys: UD^jUU with j >= 2.
  std::size_t valleys = 0;
  for (int j = 2; j <= n; ++j) {
    const Path pat = Path::parse("U") + power(Step::D, j) + Path::parse("UU");
    valleys += marked_occurrences(n, pat).size();
  }
  r.expect_eq(tag("sum_j |D_n(UD^jUU)|", n), binomial(2 * n - 3, n - 4), make_count(valleys));

  const Path uudd = Path::parse("UUDD");
  const auto non_terminal = marked_occurrences(n, uudd, NonTerminalOccurrence{});
  r.expect_eq(tag("non-terminal UUDD", n), binomial(2 * n - 3, n - 3),
              make_count(non_terminal.size()));
  if (n >= 2) {
    const auto all = marked_occurrences(n, uudd);
    r.expect_eq(tag("|D_n(UUDD)| = (2n-3)C_{n-2}", n), (2 * n - 3) * catalan(n - 2),
                make_count(all.size()));
  }

  // Terminal UUDD -> P_(2n-3,-1) staying at or above -1.
  if (n >= 2) {
    std::set<Path> image;
    bool inverse_ok = true;
    for (const auto& mp : marked_occurrences(n, uudd, TerminalOccurrence{})) {
      const Path img = terminal_peak_map(mp);
      image.insert(img);
      inverse_ok = inverse_ok && terminal_peak_inverse(img) == mp;
    }
    const auto target = lattice_subset(2 * n - 3, -1,
                                       [](const Path& p) { return p.min_height() >= -1; });
    r.expect(tag("terminal UUDD image", n), image == target);
    r.expect(tag("terminal UUDD inverse", n), inverse_ok);
  }

  // E_m, G_n, L_n.
  const auto e = marked_occurrences(n, Path::parse("U"), MinStepHeight{0, 2});
  r.expect_eq(tag("|E_m|", n), n * catalan(n) - (catalan(n + 1) - catalan(n)),
              make_count(e.size()));
  if (n >= 1) {
    const auto g = lattice_subset(2 * n - 2, 0,
                                  [](const Path& p) { return p.min_height() <= -2; });
    r.expect_eq(tag("|G_n|", n), binomial(2 * n - 2, n - 3), make_count(g.size()));
  }
  std::size_t l_count = 0;
  for (int b = -2 * n; b < 0; b += 2) {
    for_each_lattice(PointClass::make(2 * n, b), [&](const Path&) { ++l_count; });
  }
  Count four;
  mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(n));
  r.expect_eq(tag("|L_n|", n), half_exact(four - binomial(2 * n, n)), make_count(l_count));
}

void bijection_f(VerifyReport& r, int n) {
  if (n < 1) return;
  std::set<Path> image;
  bool inverse_ok = true;
  std::size_t domain = 0;
  for_each_lattice(PointClass::make(2 * n - 2, 0), [&](const Path& p) {
    if (p.min_height() < -1) return;
    ++domain;
    const Path q = f_weak_ascents(p);
    image.insert(q);
    inverse_ok = inverse_ok && f_inverse(q) == p;
  });
  const auto dn = enumerate_dyck(n);
  r.expect_eq(tag("f domain size", n), catalan(n), make_count(domain));
  r.expect(tag("f image is D_n", n), image == std::set<Path>(dn.begin(), dn.end()));
  r.expect(tag("f inverse", n), inverse_ok);
}

void bijection_unit_mark(VerifyReport& r, int n) {
  std::set<Path> image;
  std::size_t domain = 0;
  bool inverse_ok = true;
  for_each_dyck(n, [&](const Path& p) {
    const auto count = units(p).size();
    for (std::size_t u = 1; u <= count; ++u) {
      ++domain;
      const Path q = unit_mark_map(p, u);
      image.insert(q);
      inverse_ok = inverse_ok && unit_mark_inverse(q) == UnitMark{p, u};
    }
  });
  std::set<Path> target;
  for_each_dyck(n + 1, [&](const Path& p) {
    if (units(p).size() >= 2) target.insert(p);
  });
  r.expect_eq(tag("unit_mark injective", n), domain, image.size());
  r.expect(tag("unit_mark image = multi-unit D_{n+1}", n), image == target);
  r.expect_eq(tag("unit_mark count", n), catalan(n + 1) - catalan(n), make_count(domain));
  r.expect(tag("unit_mark inverse", n), inverse_ok);
}

void bijection_sym_valley(VerifyReport& r, int n) {
  std::size_t total = 0;
  for (int ell = 1; ell + 1 <= n; ++ell) {
    const Path pat = Path::parse("UD") + power(Path::parse("DU"), ell) + Path::parse("U");
    const auto targets = marked_occurrences(n, pat);
    std::set<MarkedPath> image;
    bool inverse_ok = true;
    const auto base = marked_occurrences(n - ell - 1, Path::parse("U"), MinStepHeight{0, 2});
    for (const auto& mp : base) {
      const auto ins = sym_valley_insert(mp, ell);
      image.insert(ins);
      const auto back = sym_valley_remove(ins);
      inverse_ok = inverse_ok && back.base == mp && back.ell == ell;
    }
    const std::string what = "sym_valley_insert l=" + std::to_string(ell);
    r.expect_eq(tag(what + " injective", n), base.size(), image.size());
    r.expect(tag(what + " image", n),
             image == std::set<MarkedPath>(targets.begin(), targets.end()));
    r.expect(tag(what + " inverse", n), inverse_ok);
    total += targets.size();
  }
  r.expect_eq(tag("symmetric valley total", n), closed_total(std::max(n, 1), StatId(StatKind::SymValley)) * (n >= 1),
              make_count(total));
}

void bijection_peaks(VerifyReport& r, int n) {
  if (n < 1) return;
  std::map<std::size_t, std::set<Path>> dnk0;
  for_each_dyck(n, [&](const Path& p) {
    const auto c = classify_dnkj(p);
    if (c.j != 0) return;
    dnk0[c.k].insert(p);
    const auto pv = peak_decompose(p);
    r.expect(tag("peak vector valid " + p.to_string(), n), pv.valid());
    r.expect_eq(tag("peak rebuild " + p.to_string(), n), p, peak_rebuild(pv));
  });
  for (long k = 0; 2 * k <= n - 1; ++k) {
    // Enumerate slot fills: y compositions (weak) of n-k-1, z compositions of n-k.
    std::map<Path, std::size_t> preimages;
    std::vector<SlotFill> fill(static_cast<std::size_t>(k + 1));
    std::size_t fills = 0;
    auto rec = [&](auto&& self, std::size_t i, long y_left, long z_left) -> void {
      if (i == fill.size() - 1) {
        if (z_left < 1) return;
        fill[i] = {y_left, z_left};
        ++fills;
        ++preimages[peak_rebuild(dnk0_from_slots(fill))];
        return;
      }
      for (long y = 0; y <= y_left; ++y) {
        for (long z = 1; z <= z_left - 1; ++z) {
          fill[i] = {y, z};
          self(self, i + 1, y_left - y, z_left - z);
        }
      }
    };
    rec(rec, 0, n - k - 1, n - k);
    const std::string what = "slot fills k=" + std::to_string(k);
    r.expect_eq(tag(what + " count", n), binomial(n - 1, k) * binomial(n - k - 1, k),
                make_count(fills));
    std::set<Path> hit;
    bool uniform = true;
    for (const auto& [p, c] : preimages) {
      hit.insert(p);
      uniform = uniform && c == static_cast<std::size_t>(k + 1);
    }
    r.expect(tag(what + " image = D_{n,k,0}", n), hit == dnk0[static_cast<std::size_t>(k)]);
    r.expect(tag(what + " (k+1)-to-1", n), uniform);
  }
}

void bijection_insert_ud(VerifyReport& r, int n) {
  for_each_dyck(n, [&](const Path& p) {
    const auto rem = remove_ud(p);
    const auto c = classify_dnkj(p);
    const auto c0 = classify_dnkj(rem.precursor);
    r.expect(tag("remove_ud precursor has no UDU " + p.to_string(), n), c0.j == 0);
    r.expect_eq(tag("remove_ud keeps k " + p.to_string(), n), c.k, c0.k);
    r.expect_eq(tag("remove_ud count = j " + p.to_string(), n), c.j, rem.positions.size());
    r.expect_eq(tag("insert(remove(p)) " + p.to_string(), n), p,
                insert_ud(rem.precursor, rem.positions));
  });
  // Forward direction: every precursor and every multiset of slots.
  for (int j = 0; j < n; ++j) {
    for_each_dyck(n - j, [&](const Path& pre) {
      if (classify_dnkj(pre).j != 0) return;
      const std::size_t slots = pre.ups();
      std::vector<std::size_t> pos;
      auto rec = [&](auto&& self, std::size_t from) -> void {
        if (pos.size() == static_cast<std::size_t>(j)) {
          const Path q = insert_ud(pre, pos);
          const auto back = remove_ud(q);
          r.expect(tag("remove(insert) " + pre.to_string(), n),
                   back.precursor == pre && back.positions == pos);
          return;
        }
        for (std::size_t s = from; s < slots; ++s) {
          pos.push_back(s);
          self(self, s);
          pos.pop_back();
        }
      };
      rec(rec, 0);
    });
  }
}

void bijection_area(VerifyReport& r, int n) {
  std::set<Path> image;
  std::size_t domain = 0;
  bool inverse_ok = true;
  Count phi_total = 0;
  for_each_dyck(n, [&](const Path& p) {
    const auto hp = p.height_profile();
    for (std::size_t i = 0; i < p.length(); ++i) {
      if (p[i] != Step::U) continue;
      phi_total += hp[i];
      for (int j = 0; j < hp[i]; ++j) {
        const auto am = AreaMark::make(p, i, j);
        const Path img = area_map_g(am);
        ++domain;
        image.insert(img);
        inverse_ok = inverse_ok && g_inverse(img) == am;
      }
    }
  });
  std::set<Path> ln;
  for (int b = -2 * n; b < 0; b += 2) {
    for_each_lattice(PointClass::make(2 * n, b), [&](const Path& p) { ln.insert(p); });
  }
  bool back_ok = true;
  for (const auto& lam : ln) back_ok = back_ok && area_map_g(g_inverse(lam)) == lam;
  r.expect_eq(tag("g injective", n), domain, image.size());
  r.expect(tag("g image = L_n", n), image == ln);
  r.expect(tag("g_inverse(g(x)) = x", n), inverse_ok);
  r.expect(tag("g(g_inverse(y)) = y", n), back_ok);
  r.expect_eq(tag("sum phi = |L_n|", n), make_count(ln.size()), phi_total);
}

void bijection_misc(VerifyReport& r, int n) {
  // iota both ways.
  for_each_catalan(n, [&](const Word& w) {
    r.expect_eq(tag("iota_inv(iota(w)) " + w.to_string(), n), w, iota_inv(iota(w)));
  });
  for_each_dyck(n, [&](const Path& p) {
    r.expect_eq(tag("iota(iota_inv(p)) " + p.to_string(), n), p, iota(iota_inv(p)));
    r.expect(tag("reverse_complement on D_n " + p.to_string(), n),
             is_dyck(reverse_complement(p)) && reverse_complement(reverse_complement(p)) == p);
  });
  // Symvae2 block sizes.
  if (n >= 2) {
    std::map<std::pair<int, int>, std::size_t> blocks;
    for_each_lattice(PointClass::make(2 * n - 1, 1), [&](const Path& lam) {
      const auto b = classify_symvae2(lam);
      ++blocks[{static_cast<int>(b.kind), b.i}];
    });
    r.expect_eq(tag("symvae2 exceptional block", n), std::size_t{1},
                blocks[{static_cast<int>(SymvaeBranch::Kind::Exceptional), 0}]);
    for (int i = 1; i <= n - 1; ++i) {
      r.expect_eq(tag("symvae2 upper block i=" + std::to_string(i), n),
                  binomial(2 * i, i - 1),
                  make_count(blocks[{static_cast<int>(SymvaeBranch::Kind::Upper), i}]));
      r.expect_eq(tag("symvae2 lower block i=" + std::to_string(i), n),
                  binomial(2 * i - 1, i),
                  make_count(blocks[{static_cast<int>(SymvaeBranch::Kind::Lower), i}]));
    }
  }
}

void raney_uniqueness(VerifyReport& r, std::size_t max_len) {
  std::vector<long> seq;
  std::size_t bad = 0;
  std::size_t seen = 0;
  auto rec = [&](auto&& self, long sum) -> void {
    if (!seq.empty() && sum == 1) {
      ++seen;
      std::size_t good = 0;
      std::size_t which = 0;
      for (std::size_t s = 1; s <= seq.size(); ++s) {
        long acc = 0;
        bool pos = true;
        for (std::size_t i = 0; i < seq.size(); ++i) {
          acc += seq[(s - 1 + i) % seq.size()];
          pos = pos && acc > 0;
        }
        if (pos) ++good, which = s;
      }
      if (good != 1 || which != raney_shift(seq)) ++bad;
    }
    if (seq.size() == max_len) return;
    for (long v = -3; v <= 3; ++v) {
      seq.push_back(v);
      self(self, sum + v);
      seq.pop_back();
    }
  };
  rec(rec, 0);
  r.expect_eq("raney uniqueness, length <= " + std::to_string(max_len) + " (" +
                  std::to_string(seen) + " sequences)",
              std::size_t{0}, bad);
}

}  // namespace

VerifyReport verify_bijections(int n_max) {
  check_cap(n_max, kBijectionsCap, "bijections");
  VerifyReport r;
  r.suite = "bijections";
  Timer t(r);
  for (int n = 0; n <= n_max; ++n) {
    bijection_misc(r, n);
    bijection_split_maps(r, n);
    bijection_marked_counts(r, n);
    bijection_f(r, n);
    bijection_unit_mark(r, n);
    bijection_sym_valley(r, n);
    bijection_peaks(r, n);
    bijection_insert_ud(r, n);
    if (n <= 7) bijection_area(r, n);
  }
  // reflect_after_touch is an involution on the paths of P_(6,0) touching -1.
  for_each_lattice(PointClass::make(6, 0), [&](const Path& p) {
    if (p.min_height() > -1) return;
    const Path q = reflect_after_touch(p, -1);
    r.expect("reflect involution " + p.to_string(),
             reflect_after_touch(q, -1) == p && q.final_height() == -2);
  });
  raney_uniqueness(r, static_cast<std::size_t>(std::min(n_max, 6)));
  return r;
}

VerifyReport verify_transport(int n_max) {
  check_cap(n_max, kTransportCap, "transport");
  VerifyReport r;
  r.suite = "transport";
  Timer t(r);
  const Path uu = Path::parse("UU");
  const Path udu = Path::parse("UDU");
  const Path ddu = Path::parse("DDU");
  const Path uudd = Path::parse("UUDD");
  const Path uuddu = Path::parse("UUDDU");
  for (int n = 0; n <= n_max; ++n) {
    for_each_catalan(n, [&](const Word& w) {
      const Path p = iota(w);
      const auto adl = asc_des_lev(w);
      const std::string in = tag(w.to_string(), n);
      std::size_t sym = 0;
      for (int ell = 1; 2 * ell + 3 <= static_cast<int>(p.length()); ++ell) {
        sym += count_factor(p, Path::parse("UD") + power(Path::parse("DU"), ell) +
                                   Path::parse("U"));
      }
      std::size_t one_valleys = 0;
      for (int j = 2; j + 3 <= static_cast<int>(p.length()); ++j) {
        one_valleys += count_factor(p, Path::parse("U") + power(Step::D, j) + uu);
      }
      std::size_t phi = 0;
      const auto hp = p.height_profile();
      for (std::size_t i = 0; i < p.length(); ++i) {
        if (p[i] == Step::U) phi += static_cast<std::size_t>(hp[i]);
      }
      r.expect_eq("sym-valley " + in, sym, stat_value(w, StatKind::SymValley));
      r.expect_eq("1-valley " + in, one_valleys, stat_value(w, StatId(StatKind::EllValley, 1)));
      r.expect_eq("1-sym-peak " + in, count_factor(p, uuddu),
                  stat_value(w, StatId(StatKind::SymPeak, 1)));
      r.expect_eq("1-peak " + in, count_factor(p, uudd, NonTerminalOccurrence{}),
                  stat_value(w, StatId(StatKind::EllPeak, 1)));
      r.expect_eq("des " + in, count_factor(p, ddu), adl.des);
      r.expect_eq("asc " + in, count_factor(p, uu), adl.asc);
      r.expect_eq("asc+des+lev " + in, w.empty() ? 0 : w.size() - 1, adl.asc + adl.des + adl.lev);
      if (n >= 1) {
        r.expect_eq("runs-desc " + in, 1 + count_factor(p, uu) + count_factor(p, udu),
                    stat_value(w, StatKind::RunsDesc));
        r.expect_eq("runs-weak-asc " + in, 1 + adl.des, stat_value(w, StatKind::RunsWeakAsc));
        r.expect_eq("runs-asc " + in, 1 + adl.des + adl.lev, stat_value(w, StatKind::RunsAsc));
        r.expect_eq("runs-weak-desc " + in, 1 + adl.asc, stat_value(w, StatKind::RunsWeakDesc));
        r.expect_eq("semi " + in, w.size() + 1 + adl.asc, stat_value(w, StatKind::Semi));
        r.expect_eq("peaks = runs-asc " + in, count_factor(p, Path::parse("UD")),
                    stat_value(w, StatKind::RunsAsc));
      }
      r.expect_eq("corner-hu " + in, adl.asc, stat_value(w, StatKind::CornerHU));
      r.expect_eq("corner-dh " + in, adl.des, stat_value(w, StatKind::CornerDH));
      r.expect_eq("area " + in, phi, stat_value(w, StatKind::Area));
    });
    // ell shift for valley/peak totals.
    for (int ell = 2; n - ell + 1 >= 4; ++ell) {
      const int m = n - ell + 1;
      for (StatKind k : {StatKind::EllValley, StatKind::EllPeak, StatKind::SymPeak}) {
        r.expect_eq(tag(stat_name(k) + " shift l=" + std::to_string(ell), n),
                    brute_total(m, StatId(k, 1)), brute_total(n, StatId(k, ell)));
      }
    }
  }
  return r;
}

VerifyReport verify_distributions(int n_max) {
  check_cap(n_max, kDistributionsCap, "distributions");
  VerifyReport r;
  r.suite = "distributions";
  Timer t(r);
  for (int n = 1; n <= n_max; ++n) {
    std::map<std::size_t, std::size_t> runs_asc;
    std::map<std::size_t, std::size_t> runs_weak_desc;
    for_each_catalan(n, [&](const Word& w) {
      ++runs_asc[stat_value(w, StatKind::RunsAsc)];
      ++runs_weak_desc[stat_value(w, StatKind::RunsWeakDesc)];
    });
    std::map<std::size_t, std::size_t> peaks;
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> kj;
    std::map<std::size_t, std::size_t> k_only;
    for_each_dyck(n, [&](const Path& p) {
      ++peaks[count_factor(p, Path::parse("UD"))];
      const auto c = classify_dnkj(p);
      ++kj[{c.k, c.j}];
      ++k_only[c.k];
    });
    for (int k = 1; k <= n; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      const std::string in = tag("k=" + std::to_string(k), n);
      r.expect_eq("runs-asc histogram " + in, narayana(n, k), make_count(runs_asc[uk]));
      r.expect_eq("runs-weak-desc histogram " + in, narayana(n, k),
                  make_count(runs_weak_desc[uk]));
      r.expect_eq("peaks histogram " + in, narayana(n, k), make_count(peaks[uk]));
    }
    Count sum_k = 0;
    for (long k = 0; 2 * k <= n - 1; ++k) {
      const auto uk = static_cast<std::size_t>(k);
      r.expect_eq(tag("|D_{n,k}| k=" + std::to_string(k), n), dnk_count(n, k),
                  make_count(k_only[uk]));
      sum_k += dnk_count(n, k);
      for (long j = 0; j <= n - 2 * k - 1; ++j) {
        r.expect_eq(tag("|D_{n,k,j}| k=" + std::to_string(k) + " j=" + std::to_string(j), n),
                    dnkj_count(n, k, j), make_count(kj[{uk, static_cast<std::size_t>(j)}]));
      }
    }
    r.expect_eq(tag("sum_k |D_{n,k}| = C_n", n), catalan(n), sum_k);
    std::size_t total = 0;
    for (const auto& [key, c] : kj) total += c;
    r.expect_eq(tag("strata cover D_n", n), catalan(n), make_count(total));
  }
  return r;
}

VerifyReport verify_identities(int n_max) {
  check_cap(n_max, kIdentitiesCap, "identities");
  VerifyReport r;
  r.suite = "identities";
  Timer t(r);
  for (long n = 1; n <= n_max; ++n) {
    for (IdentityId id : kAllIdentities) {
      if (n < identity_min_n(id)) continue;
      if (id == IdentityId::Binomiden) {
        for (long k = 0; 2 * k <= n - 1; ++k) {
          const auto res = identity_check(id, n, k);
          r.expect_eq(identity_name(id) + " n=" + std::to_string(n) + " k=" + std::to_string(k),
                      res.lhs, res.rhs);
        }
        continue;
      }
      const auto res = identity_check(id, n);
      r.expect_eq(identity_name(id) + " n=" + std::to_string(n), res.lhs, res.rhs);
    }
    if (n >= 2) {
      r.expect_eq("Semie2 second form n=" + std::to_string(n), binomial(2 * n + 1, n),
                  2 * binomial(2 * n, n - 1) + catalan(n));
    }
  }
  // Set-cardinality sides by enumeration where that is affordable.
  for (int n = 1; n <= std::min(n_max, 9); ++n) {
    const auto terminal = marked_occurrences(n, Path::parse("UUDD"), TerminalOccurrence{});
    if (n >= 3) {
      r.expect_eq("EllPeake1 enumerated n=" + std::to_string(n),
                  identity_check(IdentityId::EllPeake1, n).lhs, make_count(terminal.size()));
    }
    const auto e = marked_occurrences(n, Path::parse("U"), MinStepHeight{0, 2});
    r.expect_eq("EmCount enumerated m=" + std::to_string(n),
                identity_check(IdentityId::EmCount, n).lhs, make_count(e.size()));
  }
  return r;
}

}  // namespace catalan_lab
