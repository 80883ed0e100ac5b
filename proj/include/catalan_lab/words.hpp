#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "catalan_lab/count.hpp"
#include "catalan_lab/paths.hpp"

namespace catalan_lab {

namespace detail {
struct WordAccess;
}

// A Catalan word: w_1 = 1 and w_{i+1} <= w_i + 1.
class Word {
 public:
  Word() = default;
  // Throws DomainError if the letters do not form a Catalan word.
  explicit Word(std::vector<int> letters);

  // Digits 1-9 then a=10, b=11, ...; commas or spaces separate multi-digit
  // letters ("1,2,10").
  static Word parse(std::string_view text);

  std::span<const int> letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  int operator[](std::size_t i) const { return letters_[i]; }

  // Inverse of parse for the compact single-character form.
  std::string to_string() const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  friend struct detail::WordAccess;
  std::vector<int> letters_;
};

enum class StatKind {
  SymValley,
  EllValley,
  SymPeak,
  EllPeak,
  RunsDesc,
  RunsWeakAsc,
  RunsAsc,
  RunsWeakDesc,
  CornerHU,
  CornerDH,
  Semi,
  Area,
};

inline constexpr StatKind kAllStatKinds[] = {
    StatKind::SymValley,   StatKind::EllValley,    StatKind::SymPeak,
    StatKind::EllPeak,     StatKind::RunsDesc,     StatKind::RunsWeakAsc,
    StatKind::RunsAsc,     StatKind::RunsWeakDesc, StatKind::CornerHU,
    StatKind::CornerDH,    StatKind::Semi,         StatKind::Area,
};

// Statistic selector. For the four valley/peak kinds an absent ell means
// "summed over every ell >= 1"; ell is ignored by the other kinds.
struct StatId {
  StatKind kind;
  std::optional<int> ell;

  StatId(StatKind k, std::optional<int> l = std::nullopt);

  bool takes_ell() const;
  friend bool operator==(const StatId&, const StatId&) = default;
};

// Kebab-case names: sym-valley, ell-valley, ..., corner-hu, semi, area.
std::string stat_name(StatKind kind);
std::string stat_name(const StatId& s);  // "ell-peak:2" when ell is present
// Accepts "name" or "name:ell". Throws DomainError on unknown names.
StatId parse_stat(std::string_view text);

enum class BargraphStep : std::uint8_t { X, Y, Z };  // (0,1), (0,-1), (1,0)

struct Bargraph {
  std::size_t columns = 0;
  std::vector<BargraphStep> steps;

  std::size_t hu_corners() const;  // Z directly followed by X
  std::size_t dh_corners() const;  // Y directly followed by Z
  std::size_t semi_perimeter() const;
  std::string to_string() const;  // "X Z Y"
};

struct AscDesLev {
  std::size_t asc;
  std::size_t des;
  std::size_t lev;
  friend bool operator==(const AscDesLev&, const AscDesLev&) = default;
};

Path iota(const Word& w);
Word iota_inv(const Path& p);

AscDesLev asc_des_lev(const Word& w);

// Boundary walk of the bargraph from (0,0) to (n,0). Throws on the empty word.
Bargraph bargraph_path(const Word& w);

std::size_t stat_value(const Word& w, const StatId& s);

// Sum of stat_value over C_n by full enumeration.
Count brute_total(int n, const StatId& s, int ceiling = kDefaultCeiling);
// Same total, sharded by word prefix over `threads` workers.
Count brute_total_parallel(int n, const StatId& s, unsigned threads,
                           int ceiling = kDefaultCeiling);

namespace detail {

struct WordAccess {
  static std::vector<int>& letters(Word& w) { return w.letters_; }
};

template <class Fn>
void catalan_rec(Word& buf, std::size_t total, Fn& fn) {
  auto& l = WordAccess::letters(buf);
  if (l.size() == total) {
    fn(static_cast<const Word&>(buf));
    return;
  }
  const int top = l.empty() ? 1 : l.back() + 1;
  for (int a = 1; a <= top; ++a) {
    l.push_back(a);
    catalan_rec(buf, total, fn);
    l.pop_back();
  }
}

}  // namespace detail

// Visits C_n in numeric lexicographic order, restricted to words that start
// with `prefix` (which must itself be a Catalan word).
template <class Fn>
void for_each_catalan_with_prefix(int n, const Word& prefix, Fn&& fn,
                                  int ceiling = kDefaultCeiling) {
  detail::check_ceiling(n, ceiling, "Catalan word enumeration");
  if (prefix.size() > static_cast<std::size_t>(n)) return;
  Word buf = prefix;
  detail::catalan_rec(buf, static_cast<std::size_t>(n), fn);
}

template <class Fn>
void for_each_catalan(int n, Fn&& fn, int ceiling = kDefaultCeiling) {
  for_each_catalan_with_prefix(n, Word{}, fn, ceiling);
}

std::vector<Word> enumerate_catalan(int n, int ceiling = kDefaultCeiling);

}  // namespace catalan_lab
