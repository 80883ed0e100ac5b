#include "catalan_lab/paths.hpp"

#include <algorithm>
#include <cctype>
#include <cstdlib>
#include <type_traits>

namespace catalan_lab {

Path Path::parse(std::string_view text) {
  std::vector<Step> steps;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = static_cast<char>(std::toupper(static_cast<unsigned char>(text[i])));
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    if (c != 'U' && c != 'D') {
      throw DomainError(std::string("invalid step character '") + text[i] + "'");
    }
    ++i;
    if (i < text.size() && text[i] == '^') ++i;
    std::size_t reps = 1;
    if (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
      reps = 0;
      while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
        reps = reps * 10 + static_cast<std::size_t>(text[i] - '0');
        ++i;
      }
    }
    steps.insert(steps.end(), reps, c == 'U' ? Step::U : Step::D);
  }
  return Path(std::move(steps));
}

std::size_t Path::ups() const {
  return static_cast<std::size_t>(std::count(steps_.begin(), steps_.end(), Step::U));
}

int Path::final_height() const { return height_after(steps_.size()); }

int Path::min_height() const {
  int h = 0;
  int lo = 0;
  for (Step s : steps_) {
    h += delta(s);
    lo = std::min(lo, h);
  }
  return lo;
}

std::vector<int> Path::height_profile() const {
  std::vector<int> out;
  out.reserve(steps_.size());
  int h = 0;
  for (Step s : steps_) {
    h += delta(s);
    out.push_back(h);
  }
  return out;
}

int Path::height_after(std::size_t prefix_len) const {
  int h = 0;
  for (std::size_t i = 0; i < prefix_len; ++i) h += delta(steps_[i]);
  return h;
}

Path Path::slice(std::size_t start, std::size_t len) const {
  return Path(std::vector<Step>(steps_.begin() + static_cast<std::ptrdiff_t>(start),
                                steps_.begin() + static_cast<std::ptrdiff_t>(start + len)));
}

Path& Path::append(const Path& other) {
  steps_.insert(steps_.end(), other.steps_.begin(), other.steps_.end());
  return *this;
}

std::string Path::to_string() const {
  std::string out;
  out.reserve(steps_.size());
  for (Step s : steps_) out.push_back(to_char(s));
  return out;
}

Path power(Step s, std::size_t k) { return Path(std::vector<Step>(k, s)); }

Path power(const Path& p, std::size_t k) {
  Path out;
  for (std::size_t i = 0; i < k; ++i) out.append(p);
  return out;
}

MarkedPath::MarkedPath(Path path, std::size_t mark_start, std::size_t mark_len)
    : path_(std::move(path)), mark_start_(mark_start), mark_len_(mark_len) {
  if (mark_len_ == 0) throw DomainError("marked factor must be nonempty");
  if (mark_start_ + mark_len_ > path_.length()) {
    throw DomainError("marked factor runs past the end of the path");
  }
}

PointClass PointClass::make(int a, int b) {
  if (a < 0 || a < std::abs(b)) throw DomainError("point class needs a >= |b|");
  if ((a - b) % 2 != 0) throw DomainError("point class needs a = b (mod 2)");
  return PointClass{a, b};
}

bool is_dyck(const Path& p) {
  int h = 0;
  for (Step s : p.steps()) {
    h += delta(s);
    if (h < 0) return false;
  }
  return h == 0;
}

Path reverse_complement(const Path& p) {
  std::vector<Step> out(p.steps().rbegin(), p.steps().rend());
  for (Step& s : out) s = complement(s);
  return Path(std::move(out));
}

namespace {

bool matches_at(std::span<const Step> s, std::span<const Step> pat, std::size_t i) {
  return std::equal(pat.begin(), pat.end(), s.begin() + static_cast<std::ptrdiff_t>(i));
}

bool is_terminal(std::span<const Step> s, std::span<const Step> pat, std::size_t i) {
  if (pat.back() != Step::D) return false;
  return std::all_of(s.begin() + static_cast<std::ptrdiff_t>(i + pat.size()), s.end(),
                     [](Step x) { return x == Step::D; });
}

}  // namespace

std::vector<std::size_t> find_factor(const Path& p, const Path& pattern,
                                     const OccurrenceFilter& filter) {
  if (pattern.empty()) throw DomainError("factor pattern must be nonempty");
  if (const auto* mh = std::get_if<MinStepHeight>(&filter);
      mh != nullptr && mh->offset >= pattern.length()) {
    throw DomainError("height filter offset lies outside the pattern");
  }
  std::vector<std::size_t> hits;
  const auto s = p.steps();
  const auto pat = pattern.steps();
  if (pat.size() > s.size()) return hits;

  int h = 0;  // height before position i
  for (std::size_t i = 0; i + pat.size() <= s.size(); h += delta(s[i]), ++i) {
    if (!matches_at(s, pat, i)) continue;
    const bool keep = std::visit(
        [&](const auto& f) -> bool {
          using F = std::decay_t<decltype(f)>;
          if constexpr (std::is_same_v<F, AnyOccurrence>) {
            return true;
          } else if constexpr (std::is_same_v<F, MinStepHeight>) {
            int end = h;
            for (std::size_t t = 0; t <= f.offset; ++t) end += delta(pat[t]);
            return end >= f.min_height;
          } else if constexpr (std::is_same_v<F, TerminalOccurrence>) {
            return is_terminal(s, pat, i);
          } else {
            return !is_terminal(s, pat, i);
          }
        },
        filter);
    if (keep) hits.push_back(i);
  }
  return hits;
}

std::size_t count_factor(const Path& p, const Path& pattern,
                         const OccurrenceFilter& filter) {
  return find_factor(p, pattern, filter).size();
}

std::vector<IndexRange> units(const Path& p) {
  if (!is_dyck(p)) throw DomainError("units: path is not a Dyck path " + p.to_string());
  std::vector<IndexRange> out;
  int h = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i < p.length(); ++i) {
    h += delta(p[i]);
    if (h == 0) {
      out.push_back({start, i + 1 - start});
      start = i + 1;
    }
  }
  return out;
}

DnkjClass classify_dnkj(const Path& p) {
  if (!is_dyck(p)) throw DomainError("classify_dnkj: path is not a Dyck path");
  static const Path ddu = Path::parse("DDU");
  static const Path udu = Path::parse("UDU");
  return {count_factor(p, ddu), count_factor(p, udu)};
}

namespace detail {

void check_ceiling(int n, int ceiling, const char* what) {
  if (n < 0) throw DomainError(std::string(what) + ": n must be nonnegative");
  if (n > ceiling) {
    throw LimitError(std::string(what) + " refused for n = " + std::to_string(n), ceiling);
  }
}

}  // namespace detail

std::vector<Path> enumerate_dyck(int n, int ceiling) {
  std::vector<Path> out;
  for_each_dyck(n, [&](const Path& p) { out.push_back(p); }, ceiling);
  return out;
}

std::vector<Path> enumerate_lattice(PointClass pc, int ceiling) {
  std::vector<Path> out;
  for_each_lattice(pc, [&](const Path& p) { out.push_back(p); }, ceiling);
  return out;
}

}  // namespace catalan_lab
