#include "catalan_lab/words.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <numeric>
#include <thread>

namespace catalan_lab {

Word::Word(std::vector<int> letters) : letters_(std::move(letters)) {
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i == 0 ? letters_[0] != 1 : letters_[i] < 1 || letters_[i] > letters_[i - 1] + 1) {
      throw DomainError("not a Catalan word at position " + std::to_string(i + 1));
    }
  }
}

Word Word::parse(std::string_view text) {
  std::vector<int> letters;
  const bool separated = text.find_first_of(", ") != std::string_view::npos;
  std::size_t i = 0;
  while (i < text.size()) {
    const auto c = static_cast<unsigned char>(text[i]);
    if (c == ',' || std::isspace(c)) {
      ++i;
      continue;
    }
    if (separated) {
      int v = 0;
      bool any = false;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        v = v * 10 + (text[i] - '0');
        any = true;
        ++i;
      }
      if (!any) throw DomainError("invalid letter in word text");
      letters.push_back(v);
    } else if (std::isdigit(c)) {
      letters.push_back(c - '0');
      ++i;
    } else if (std::isalpha(c)) {
      letters.push_back(10 + std::tolower(c) - 'a');
      ++i;
    } else {
      throw DomainError("invalid letter in word text");
    }
  }
  return Word(std::move(letters));
}

std::string Word::to_string() const {
  std::string out;
  out.reserve(letters_.size());
  for (int a : letters_) {
    out.push_back(a < 10 ? static_cast<char>('0' + a) : static_cast<char>('a' + a - 10));
  }
  return out;
}

StatId::StatId(StatKind k, std::optional<int> l) : kind(k), ell(l) {
  if (ell && *ell < 1) throw DomainError("ell must be at least 1");
  if (!takes_ell()) ell.reset();
}

bool StatId::takes_ell() const {
  return kind == StatKind::SymValley || kind == StatKind::EllValley ||
         kind == StatKind::SymPeak || kind == StatKind::EllPeak;
}

namespace {

constexpr std::array<std::pair<StatKind, const char*>, 12> kNames{{
    {StatKind::SymValley, "sym-valley"},
    {StatKind::EllValley, "ell-valley"},
    {StatKind::SymPeak, "sym-peak"},
    {StatKind::EllPeak, "ell-peak"},
    {StatKind::RunsDesc, "runs-desc"},
    {StatKind::RunsWeakAsc, "runs-weak-asc"},
    {StatKind::RunsAsc, "runs-asc"},
    {StatKind::RunsWeakDesc, "runs-weak-desc"},
    {StatKind::CornerHU, "corner-hu"},
    {StatKind::CornerDH, "corner-dh"},
    {StatKind::Semi, "semi"},
    {StatKind::Area, "area"},
}};

}  // namespace

std::string stat_name(StatKind kind) {
  for (const auto& [k, name] : kNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

std::string stat_name(const StatId& s) {
  auto out = stat_name(s.kind);
  if (s.ell) out += ":" + std::to_string(*s.ell);
  return out;
}

StatId parse_stat(std::string_view text) {
  std::optional<int> ell;
  const auto colon = text.find(':');
  std::string_view name = text.substr(0, colon);
  if (colon != std::string_view::npos) {
    const auto digits = text.substr(colon + 1);
    if (digits.empty() || !std::all_of(digits.begin(), digits.end(), [](char c) {
          return std::isdigit(static_cast<unsigned char>(c));
        })) {
      throw DomainError("invalid ell in statistic '" + std::string(text) + "'");
    }
    ell = std::stoi(std::string(digits));
  }
  for (const auto& [k, n] : kNames) {
    if (name == n) return StatId(k, ell);
  }
  throw DomainError("unknown statistic '" + std::string(text) + "'");
}

std::size_t Bargraph::hu_corners() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    c += steps[i] == BargraphStep::Z && steps[i + 1] == BargraphStep::X;
  }
  return c;
}

std::size_t Bargraph::dh_corners() const {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 1 < steps.size(); ++i) {
    c += steps[i] == BargraphStep::Y && steps[i + 1] == BargraphStep::Z;
  }
  return c;
}

std::size_t Bargraph::semi_perimeter() const {
  return columns + static_cast<std::size_t>(
                       std::count(steps.begin(), steps.end(), BargraphStep::X));
}

std::string Bargraph::to_string() const {
  std::string out;
  for (auto s : steps) {
    if (!out.empty()) out.push_back(' ');
    out.push_back(s == BargraphStep::X ? 'X' : s == BargraphStep::Y ? 'Y' : 'Z');
  }
  return out;
}

Path iota(const Word& w) {
  Path p;
  int h = 0;
  for (int a : w.letters()) {
    for (; h > a - 1; --h) p.append(Step::D);
    p.append(Step::U);
    h = a;
  }
  for (; h > 0; --h) p.append(Step::D);
  return p;
}

Word iota_inv(const Path& p) {
  if (!is_dyck(p)) throw DomainError("iota_inv: not a Dyck path " + p.to_string());
  std::vector<int> letters;
  int h = 0;
  for (Step s : p.steps()) {
    h += delta(s);
    if (s == Step::U) letters.push_back(h);
  }
  return Word(std::move(letters));
}

AscDesLev asc_des_lev(const Word& w) {
  AscDesLev r{0, 0, 0};
  for (std::size_t i = 1; i < w.size(); ++i) {
    if (w[i] > w[i - 1]) {
      ++r.asc;
    } else if (w[i] < w[i - 1]) {
      ++r.des;
    } else {
      ++r.lev;
    }
  }
  return r;
}

namespace {

// Walks the bargraph boundary, calling fn(step) for each unit step.
template <class Fn>
void walk_bargraph(const Word& w, Fn&& fn) {
  int h = 0;
  for (int a : w.letters()) {
    for (; h < a; ++h) fn(BargraphStep::X);
    for (; h > a; --h) fn(BargraphStep::Y);
    fn(BargraphStep::Z);
  }
  for (; h > 0; --h) fn(BargraphStep::Y);
}

struct BargraphCounters {
  std::size_t hu = 0;
  std::size_t dh = 0;
  std::size_t x = 0;
};

BargraphCounters bargraph_counters(const Word& w) {
  BargraphCounters c;
  std::optional<BargraphStep> prev;
  walk_bargraph(w, [&](BargraphStep s) {
    if (prev == BargraphStep::Z && s == BargraphStep::X) ++c.hu;
    if (prev == BargraphStep::Y && s == BargraphStep::Z) ++c.dh;
    if (s == BargraphStep::X) ++c.x;
    prev = s;
  });
  return c;
}

// Length of the run of letters equal to `value` starting at i.
std::size_t run_of(std::span<const int> a, std::size_t i, int value) {
  std::size_t j = i;
  while (j < a.size() && a[j] == value) ++j;
  return j - i;
}

bool ell_ok(const StatId& s, std::size_t len) {
  return !s.ell || static_cast<std::size_t>(*s.ell) == len;
}

// a (a-1)^l a, a > 1
std::size_t sym_valleys(std::span<const int> a, const StatId& s) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    if (a[i] <= 1) continue;
    const auto len = run_of(a, i + 1, a[i] - 1);
    const auto j = i + 1 + len;
    if (len >= 1 && j < a.size() && a[j] == a[i] && ell_ok(s, len)) ++c;
  }
  return c;
}

// a b^l (b+1), a > b
std::size_t ell_valleys(std::span<const int> a, const StatId& s) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    const int b = a[i + 1];
    if (b >= a[i]) continue;
    const auto len = run_of(a, i + 1, b);
    const auto j = i + 1 + len;
    if (j < a.size() && a[j] == b + 1 && ell_ok(s, len)) ++c;
  }
  return c;
}

// a (a+1)^l a for SymPeak; a (a+1)^l b with b <= a for EllPeak.
std::size_t peaks(std::span<const int> a, const StatId& s, bool symmetric) {
  std::size_t c = 0;
  for (std::size_t i = 0; i + 2 < a.size(); ++i) {
    const auto len = run_of(a, i + 1, a[i] + 1);
    const auto j = i + 1 + len;
    if (len == 0 || j >= a.size() || !ell_ok(s, len)) continue;
    if (symmetric ? a[j] == a[i] : a[j] <= a[i]) ++c;
  }
  return c;
}

// Number of maximal runs; `continues(prev, cur)` says whether cur extends
// the current run.
template <class Rel>
std::size_t maximal_runs(std::span<const int> a, Rel continues) {
  if (a.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < a.size(); ++i) {
    if (!continues(a[i - 1], a[i])) ++runs;
  }
  return runs;
}

}  // namespace

Bargraph bargraph_path(const Word& w) {
  if (w.empty()) throw DomainError("bargraph of the empty word is undefined");
  Bargraph b;
  b.columns = w.size();
  walk_bargraph(w, [&](BargraphStep s) { b.steps.push_back(s); });
  return b;
}

std::size_t stat_value(const Word& w, const StatId& s) {
  const auto a = w.letters();
  switch (s.kind) {
    case StatKind::SymValley:
      return sym_valleys(a, s);
    case StatKind::EllValley:
      return ell_valleys(a, s);
    case StatKind::SymPeak:
      return peaks(a, s, true);
    case StatKind::EllPeak:
      return peaks(a, s, false);
    case StatKind::RunsDesc:
      return maximal_runs(a, [](int x, int y) { return x > y; });
    case StatKind::RunsWeakAsc:
      return maximal_runs(a, [](int x, int y) { return x <= y; });
    case StatKind::RunsAsc:
      return maximal_runs(a, [](int x, int y) { return x < y; });
    case StatKind::RunsWeakDesc:
      return maximal_runs(a, [](int x, int y) { return x >= y; });
    case StatKind::CornerHU:
      return bargraph_counters(w).hu;
    case StatKind::CornerDH:
      return bargraph_counters(w).dh;
    case StatKind::Semi:
      if (w.empty()) throw DomainError("semi-perimeter is undefined on the empty word");
      return w.size() + bargraph_counters(w).x;
    case StatKind::Area:
      return static_cast<std::size_t>(std::accumulate(a.begin(), a.end(), 0));
  }
  return 0;
}

Count brute_total(int n, const StatId& s, int ceiling) {
  if (s.kind == StatKind::Semi && n == 0) {
    throw DomainError("semi-perimeter is undefined on the empty word");
  }
  std::uint64_t total = 0;
  for_each_catalan(n, [&](const Word& w) { total += stat_value(w, s); }, ceiling);
  return make_count(total);
}

Count brute_total_parallel(int n, const StatId& s, unsigned threads, int ceiling) {
  detail::check_ceiling(n, ceiling, "Catalan word enumeration");
  if (threads <= 1 || n < 4) return brute_total(n, s, ceiling);
  if (s.kind == StatKind::Semi && n == 0) {
    throw DomainError("semi-perimeter is undefined on the empty word");
  }
  const auto prefixes = enumerate_catalan(std::min(n, 5), ceiling);
  std::vector<std::uint64_t> partial(threads, 0);
  std::vector<std::thread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      for (std::size_t i = t; i < prefixes.size(); i += threads) {
        for_each_catalan_with_prefix(
            n, prefixes[i], [&](const Word& w) { partial[t] += stat_value(w, s); }, ceiling);
      }
    });
  }
  for (auto& th : pool) th.join();
  return make_count(std::accumulate(partial.begin(), partial.end(), std::uint64_t{0}));
}

std::vector<Word> enumerate_catalan(int n, int ceiling) {
  std::vector<Word> out;
  for_each_catalan(n, [&](const Word& w) { out.push_back(w); }, ceiling);
  return out;
}

}  // namespace catalan_lab
