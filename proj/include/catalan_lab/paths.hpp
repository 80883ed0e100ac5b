#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "catalan_lab/errors.hpp"

namespace catalan_lab {

// Default semilength ceiling for exhaustive enumeration. C_16 is about 35M.
inline constexpr int kDefaultCeiling = 16;

// U = (1,1), D = (1,-1). U orders before D.
enum class Step : std::uint8_t { U = 0, D = 1 };

constexpr Step complement(Step s) { return s == Step::U ? Step::D : Step::U; }
constexpr int delta(Step s) { return s == Step::U ? 1 : -1; }
constexpr char to_char(Step s) { return s == Step::U ? 'U' : 'D'; }

namespace detail {
struct PathAccess;
}

// A finite sequence of up/down steps starting at the origin.
class Path {
 public:
  Path() = default;
  explicit Path(std::vector<Step> steps) : steps_(std::move(steps)) {}

  // Accepts "UUDD", "uudd" and exponent forms such as "u^3dud^2" or "u3dud2".
  static Path parse(std::string_view text);

  std::span<const Step> steps() const { return steps_; }
  std::size_t length() const { return steps_.size(); }
  bool empty() const { return steps_.empty(); }
  Step operator[](std::size_t i) const { return steps_[i]; }

  std::size_t ups() const;
  std::size_t downs() const { return length() - ups(); }
  int final_height() const;
  // Minimum prefix sum, the origin included; 0 for the empty path.
  int min_height() const;
  // Height after each step; size() == length().
  std::vector<int> height_profile() const;
  // Height after the first `prefix_len` steps.
  int height_after(std::size_t prefix_len) const;

  Path slice(std::size_t start, std::size_t len) const;
  Path& append(Step s) {
    steps_.push_back(s);
    return *this;
  }
  Path& append(const Path& other);

  std::string to_string() const;

  friend Path operator+(Path lhs, const Path& rhs) { return lhs.append(rhs); }
  friend bool operator==(const Path&, const Path&) = default;
  friend std::strong_ordering operator<=>(const Path& a, const Path& b) {
    return a.steps_ <=> b.steps_;
  }

 private:
  friend struct detail::PathAccess;
  std::vector<Step> steps_;
};

// Repeats `s` k times.
Path power(Step s, std::size_t k);
Path power(const Path& p, std::size_t k);

// A path with one designated contiguous factor.
class MarkedPath {
 public:
  MarkedPath(Path path, std::size_t mark_start, std::size_t mark_len);

  const Path& path() const { return path_; }
  std::size_t mark_start() const { return mark_start_; }
  std::size_t mark_len() const { return mark_len_; }
  std::size_t mark_end() const { return mark_start_ + mark_len_; }
  Path marked_factor() const { return path_.slice(mark_start_, mark_len_); }
  Path before_mark() const { return path_.slice(0, mark_start_); }
  Path after_mark() const {
    return path_.slice(mark_end(), path_.length() - mark_end());
  }

  friend bool operator==(const MarkedPath&, const MarkedPath&) = default;
  friend auto operator<=>(const MarkedPath&, const MarkedPath&) = default;

 private:
  Path path_;
  std::size_t mark_start_;
  std::size_t mark_len_;
};

// Endpoint (a, b) of the class P_(a,b) of unrestricted paths.
struct PointClass {
  int a;
  int b;

  // Throws DomainError unless a >= |b| and a, b have the same parity.
  static PointClass make(int a, int b);
};

struct IndexRange {
  std::size_t start;
  std::size_t length;
  friend bool operator==(const IndexRange&, const IndexRange&) = default;
};

// Occurrence predicates for count_factor.
struct AnyOccurrence {};
// The step at `offset` within the pattern must end at height >= min_height.
struct MinStepHeight {
  std::size_t offset;
  int min_height;
};
// The pattern ends in D and every step after the occurrence is D, i.e. its
// trailing D's belong to the final run of D steps.
struct TerminalOccurrence {};
struct NonTerminalOccurrence {};

using OccurrenceFilter = std::variant<AnyOccurrence, MinStepHeight,
                                      TerminalOccurrence, NonTerminalOccurrence>;

struct DnkjClass {
  std::size_t k;  // occurrences of DDU
  std::size_t j;  // occurrences of UDU
  friend bool operator==(const DnkjClass&, const DnkjClass&) = default;
};

bool is_dyck(const Path& p);
Path reverse_complement(const Path& p);

// Start indices of (possibly overlapping) occurrences of `pattern`.
std::vector<std::size_t> find_factor(const Path& p, const Path& pattern,
                                     const OccurrenceFilter& filter = AnyOccurrence{});
std::size_t count_factor(const Path& p, const Path& pattern,
                         const OccurrenceFilter& filter = AnyOccurrence{});

std::vector<IndexRange> units(const Path& p);
DnkjClass classify_dnkj(const Path& p);

namespace detail {

struct PathAccess {
  static std::vector<Step>& steps(Path& p) { return p.steps_; }
};

void check_ceiling(int n, int ceiling, const char* what);

template <class Fn>
void dyck_rec(Path& buf, std::size_t total, int height, std::size_t ups_left,
              Fn& fn) {
  auto& s = PathAccess::steps(buf);
  if (s.size() == total) {
    fn(static_cast<const Path&>(buf));
    return;
  }
  if (ups_left > 0) {
    s.push_back(Step::U);
    dyck_rec(buf, total, height + 1, ups_left - 1, fn);
    s.pop_back();
  }
  if (height > 0) {
    s.push_back(Step::D);
    dyck_rec(buf, total, height - 1, ups_left, fn);
    s.pop_back();
  }
}

template <class Fn>
void lattice_rec(Path& buf, std::size_t total, int height, int target, Fn& fn) {
  auto& s = PathAccess::steps(buf);
  if (s.size() == total) {
    fn(static_cast<const Path&>(buf));
    return;
  }
  const int left_after = static_cast<int>(total - s.size()) - 1;
  for (Step st : {Step::U, Step::D}) {
    const int h = height + delta(st);
    if (h - target <= left_after && target - h <= left_after) {
      s.push_back(st);
      lattice_rec(buf, total, h, target, fn);
      s.pop_back();
    }
  }
}

}  // namespace detail

// Visits every Dyck path of semilength n in lexicographic order (U < D)
// whose first steps equal `prefix`. Nothing is materialized.
template <class Fn>
void for_each_dyck_with_prefix(int n, const Path& prefix, Fn&& fn,
                               int ceiling = kDefaultCeiling) {
  detail::check_ceiling(n, ceiling, "Dyck enumeration");
  const auto total = static_cast<std::size_t>(2 * n);
  if (prefix.length() > total || prefix.min_height() < 0 ||
      prefix.ups() > static_cast<std::size_t>(n)) {
    return;
  }
  Path buf = prefix;
  detail::dyck_rec(buf, total, prefix.final_height(), n - prefix.ups(), fn);
}

template <class Fn>
void for_each_dyck(int n, Fn&& fn, int ceiling = kDefaultCeiling) {
  for_each_dyck_with_prefix(n, Path{}, fn, ceiling);
}

// Visits P_(a,b) in lexicographic order. a is bounded by 2 * ceiling.
template <class Fn>
void for_each_lattice(PointClass pc, Fn&& fn, int ceiling = kDefaultCeiling) {
  pc = PointClass::make(pc.a, pc.b);
  if (pc.a > 2 * ceiling) {
    throw LimitError("lattice enumeration length " + std::to_string(pc.a) +
                         " exceeds twice the ceiling",
                     ceiling);
  }
  Path buf;
  detail::lattice_rec(buf, static_cast<std::size_t>(pc.a), 0, pc.b, fn);
}

std::vector<Path> enumerate_dyck(int n, int ceiling = kDefaultCeiling);
std::vector<Path> enumerate_lattice(PointClass pc, int ceiling = kDefaultCeiling);

}  // namespace catalan_lab
