#include "catalan_lab/words.hpp"

#include <cstdlib>
#include <vector>

#include "catalan_lab/errors.hpp"
#include "gtest/gtest.h"

using namespace catalan_lab;

namespace {

// Oracle stats, written straight from the factor definitions: try every
// start i and every l, and test the literal factor.
std::size_t naive_factor_count(const std::vector<int>& w, StatKind kind, int only_ell) {
  std::size_t count = 0;
  const int n = static_cast<int>(w.size());
  for (int i = 0; i < n; ++i) {
    for (int l = 1; i + l + 1 < n; ++l) {
      if (only_ell && l != only_ell) continue;
      const int a = w[i];
      const int b = w[i + 1];
      const int last = w[i + l + 1];
      bool middle = true;
      for (int t = 1; t <= l; ++t) middle = middle && w[i + t] == b;
      if (!middle) continue;
      switch (kind) {
        case StatKind::SymValley:  // a (a-1)^l a, a > 1
          count += b == a - 1 && last == a && a > 1;
          break;
        case StatKind::EllValley:  // a b^l (b+1), a > b >= 1
          count += a > b && last == b + 1;
          break;
        case StatKind::SymPeak:  // a (a+1)^l a
          count += b == a + 1 && last == a;
          break;
        case StatKind::EllPeak:  // a (a+1)^l c, c <= a
          count += b == a + 1 && last <= a;
          break;
        default:
          break;
      }
    }
  }
  return count;
}

std::size_t naive_runs(const std::vector<int>& w, bool (*joins)(int, int)) {
  if (w.empty()) return 0;
  std::size_t r = 1;
  for (std::size_t i = 1; i < w.size(); ++i) r += !joins(w[i - 1], w[i]);
  return r;
}

std::size_t naive_stat(const std::vector<int>& w, const StatId& s) {
  switch (s.kind) {
    case StatKind::SymValley:
    case StatKind::EllValley:
    case StatKind::SymPeak:
    case StatKind::EllPeak:
      return naive_factor_count(w, s.kind, s.ell.value_or(0));
    case StatKind::RunsDesc:
      return naive_runs(w, [](int x, int y) { return y < x; });
    case StatKind::RunsWeakAsc:
      return naive_runs(w, [](int x, int y) { return y >= x; });
    case StatKind::RunsAsc:
      return naive_runs(w, [](int x, int y) { return y > x; });
    case StatKind::RunsWeakDesc:
      return naive_runs(w, [](int x, int y) { return y <= x; });
    case StatKind::CornerHU: {
      std::size_t c = 0;
      for (std::size_t i = 1; i < w.size(); ++i) c += w[i] > w[i - 1];
      return c;
    }
    case StatKind::CornerDH: {
      std::size_t c = 0;
      for (std::size_t i = 1; i < w.size(); ++i) c += w[i] < w[i - 1];
      return c;
    }
    case StatKind::Semi: {
      std::size_t perim = 2 * w.size() + w.front() + w.back();
      for (std::size_t i = 1; i < w.size(); ++i) perim += std::abs(w[i] - w[i - 1]);
      return perim / 2;
    }
    case StatKind::Area: {
      std::size_t a = 0;
      for (int x : w) a += static_cast<std::size_t>(x);
      return a;
    }
  }
  return 0;
}

std::vector<int> to_vec(const Word& w) { return {w.letters().begin(), w.letters().end()}; }

}  // namespace

TEST(WordParse, Forms) {
  EXPECT_EQ(Word::parse("1221").size(), 4u);
  EXPECT_EQ(Word::parse("1,2,3"), Word::parse("123"));
  EXPECT_EQ(Word::parse("1 2 3 4 5 6 7 8 9 10").to_string(), "123456789a");
  EXPECT_EQ(Word::parse("123456789a"), Word::parse("1,2,3,4,5,6,7,8,9,10"));
  EXPECT_THROW(Word::parse("13"), DomainError);
  EXPECT_THROW(Word::parse("2"), DomainError);
  EXPECT_THROW(Word(std::vector<int>{1, 0}), DomainError);
}

TEST(StatNames, RoundTrip) {
  for (StatKind k : kAllStatKinds) {
    EXPECT_EQ(parse_stat(stat_name(k)).kind, k);
  }
  EXPECT_EQ(stat_name(StatId(StatKind::EllPeak, 2)), "ell-peak:2");
  EXPECT_EQ(parse_stat("ell-peak:2"), StatId(StatKind::EllPeak, 2));
  EXPECT_FALSE(StatId(StatKind::Area, 3).ell.has_value());
  EXPECT_THROW(parse_stat("nope"), DomainError);
  EXPECT_THROW(StatId(StatKind::SymPeak, 0), DomainError);
}

TEST(Iota, Examples) {
  EXPECT_EQ(iota(Word::parse("123321")), Path::parse("u^3dud^2ud^2ud"));
  EXPECT_EQ(iota(Word::parse("1212")), Path::parse("UUDDUUDD"));
  EXPECT_EQ(iota(Word()), Path());
  EXPECT_EQ(iota_inv(Path::parse("UDUD")), Word::parse("11"));
  EXPECT_THROW(iota_inv(Path::parse("UDDU")), DomainError);
}

TEST(Iota, BijectiveUpToTen) {
  for (int n = 0; n <= 10; ++n) {
    std::size_t count = 0;
    for_each_catalan(n, [&](const Word& w) {
      ++count;
      const Path p = iota(w);
      ASSERT_TRUE(is_dyck(p));
      ASSERT_EQ(p.ups(), w.size());
      ASSERT_EQ(iota_inv(p), w);
    });
    std::size_t paths = 0;
    for_each_dyck(n, [&](const Path&) { ++paths; });
    EXPECT_EQ(count, paths);
  }
}

TEST(Bargraph, Walk) {
  const Bargraph b = bargraph_path(Word::parse("121"));
  EXPECT_EQ(b.columns, 3u);
  EXPECT_EQ(b.to_string(), "X Z X Z Y Z Y");
  EXPECT_EQ(b.hu_corners(), 1u);
  EXPECT_EQ(b.dh_corners(), 1u);
  EXPECT_EQ(b.semi_perimeter(), 5u);
  EXPECT_THROW(bargraph_path(Word()), DomainError);
}

TEST(StatValue, Examples) {
  EXPECT_EQ(stat_value(Word::parse("1221"), StatKind::SymValley), 0u);
  EXPECT_EQ(stat_value(Word::parse("1232"), StatKind::SymPeak), 1u);
  EXPECT_EQ(stat_value(Word::parse("12332"), StatId(StatKind::SymPeak, 2)), 1u);
  EXPECT_EQ(stat_value(Word::parse("12332"), StatId(StatKind::SymPeak, 1)), 0u);
  EXPECT_EQ(stat_value(Word::parse("12221"), StatId(StatKind::SymPeak, 3)), 1u);
  EXPECT_EQ(stat_value(Word::parse("12112"), StatKind::EllValley), 1u);
  EXPECT_EQ(stat_value(Word::parse("1211"), StatKind::RunsDesc), 3u);
  EXPECT_EQ(stat_value(Word::parse("11"), StatKind::Area), 2u);
  EXPECT_EQ(stat_value(Word::parse("12"), StatKind::Semi), 4u);
  EXPECT_THROW(stat_value(Word(), StatKind::Semi), DomainError);
}

TEST(AscDesLev, SumsToLengthMinusOne) {
  const auto adl = asc_des_lev(Word::parse("122312"));
  EXPECT_EQ(adl, (AscDesLev{3, 1, 1}));
}

TEST(StatValue, MatchesNaiveDefinitions) {
  std::vector<StatId> stats;
  for (StatKind k : kAllStatKinds) stats.emplace_back(k);
  for (int l = 1; l <= 4; ++l) {
    for (StatKind k : {StatKind::SymValley, StatKind::EllValley, StatKind::SymPeak,
                       StatKind::EllPeak}) {
      stats.emplace_back(k, l);
    }
  }
  for (int n = 1; n <= 9; ++n) {
    for_each_catalan(n, [&](const Word& w) {
      for (const auto& s : stats) {
        ASSERT_EQ(stat_value(w, s), naive_stat(to_vec(w), s))
            << w.to_string() << ' ' << stat_name(s);
      }
    });
  }
}

TEST(BruteTotal, Anchors) {
  EXPECT_EQ(brute_total(4, StatKind::SymValley), 1);
  EXPECT_EQ(brute_total(4, StatKind::SymPeak), 5);
  EXPECT_EQ(brute_total(2, StatKind::RunsDesc), 4);
  EXPECT_EQ(brute_total(2, StatKind::Semi), 7);
  EXPECT_EQ(brute_total(3, StatKind::Area), 22);
  EXPECT_EQ(brute_total(2, StatKind::RunsWeakAsc), 2);
  EXPECT_EQ(brute_total(0, StatKind::Area), 0);
}

TEST(BruteTotal, ParallelAgrees) {
  for (StatKind k : kAllStatKinds) {
    EXPECT_EQ(brute_total_parallel(9, StatId(k), 3), brute_total(9, StatId(k)));
  }
}

TEST(Enumeration, CatalanWords) {
  const auto c4 = enumerate_catalan(4);
  ASSERT_EQ(c4.size(), 14u);
  EXPECT_EQ(c4.front().to_string(), "1111");
  EXPECT_EQ(c4.back().to_string(), "1234");
  EXPECT_EQ(enumerate_catalan(0).size(), 1u);
  EXPECT_THROW(enumerate_catalan(17), LimitError);
}
