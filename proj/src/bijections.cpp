#include "catalan_lab/bijections.hpp"

#include <map>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace catalan_lab {

Path reflect_after_touch(const Path& p, int level) {
  std::size_t touch = p.length() + 1;
  int h = 0;
  if (level == 0) touch = 0;
  for (std::size_t i = 0; i < p.length() && touch > p.length(); ++i) {
    h += delta(p[i]);
    if (h == level) touch = i + 1;
  }
  if (touch > p.length()) {
    throw DomainError("path " + p.to_string() + " never touches y = " + std::to_string(level));
  }
  std::vector<Step> out(p.steps().begin(), p.steps().end());
  for (std::size_t i = touch; i < out.size(); ++i) out[i] = complement(out[i]);
  return Path(std::move(out));
}

SplitVariant SplitVariant::ascent() { return {"ascent", Path::parse("UU"), Step::D}; }
SplitVariant SplitVariant::udu() { return {"udu", Path::parse("UDU"), Step::D}; }
SplitVariant SplitVariant::descent() { return {"descent", Path::parse("DDU"), Step::D}; }
SplitVariant SplitVariant::sym_peak() { return {"sym-peak", Path::parse("UUDDU"), Step::U}; }
SplitVariant SplitVariant::marked_up() { return {"marked-up", Path::parse("U"), Step::U}; }
SplitVariant SplitVariant::marked_down() { return {"marked-down", Path::parse("D"), Step::D}; }

Path split_reverse(const MarkedPath& mp, const SplitVariant& v) {
  if (mp.marked_factor() != v.pattern) {
    throw DomainError("marked factor " + mp.marked_factor().to_string() +
                      " does not match the " + v.name + " pattern");
  }
  Path out = reverse_complement(mp.before_mark());
  out.append(v.survivor);
  out.append(reverse_complement(mp.after_mark()));
  return out;
}

MarkedPath split_reverse_inverse(const Path& image, const SplitVariant& v) {
  const int lo = image.min_height();
  const std::size_t len = image.length();
  // Candidate split point t: a prefix length where the height equals lo.
  std::size_t t = len + 1;
  int h = 0;
  for (std::size_t i = 0; i <= len; ++i) {
    if (i > 0) h += delta(image[i - 1]);
    if (h != lo) continue;
    if (v.survivor == Step::D) {
      t = i;
      break;
    }
    t = i;  // keep the rightmost
  }
  std::size_t first_len = 0;  // length of r(a')
  if (v.survivor == Step::U) {
    if (t >= len || image[t] != Step::U) {
      throw DomainError("no U after the rightmost minimum of " + image.to_string());
    }
    first_len = t;
  } else {
    if (t == 0 || t > len || image[t - 1] != Step::D) {
      throw DomainError("no D before the leftmost minimum of " + image.to_string());
    }
    first_len = t - 1;
  }
  const Path before = reverse_complement(image.slice(0, first_len));
  const Path after =
      reverse_complement(image.slice(first_len + 1, len - first_len - 1));
  Path pre = before + v.pattern + after;
  if (!is_dyck(pre)) {
    throw DomainError(image.to_string() + " is not in the image of the " + v.name + " map");
  }
  return MarkedPath(std::move(pre), before.length(), v.pattern.length());
}

Path unit_mark_map(const Path& dp, std::size_t unit_index) {
  const auto us = units(dp);
  if (unit_index < 1 || unit_index > us.size()) {
    throw DomainError("unit index " + std::to_string(unit_index) + " out of range");
  }
  const auto& chosen = us[unit_index - 1];
  Path out;
  out.append(Step::U);
  out.append(dp.slice(0, chosen.start));
  out.append(Step::D);
  out.append(dp.slice(chosen.start, dp.length() - chosen.start));
  return out;
}

UnitMark unit_mark_inverse(const Path& p) {
  const auto us = units(p);
  if (us.size() < 2) throw DomainError("unit_mark_inverse needs at least two units");
  const Path alpha = p.slice(1, us[0].length - 2);
  const Path rest = p.slice(us[0].length, p.length() - us[0].length);
  return {alpha + rest, units(alpha).size() + 1};
}

MarkedPath sym_valley_insert(const MarkedPath& mp, int ell) {
  if (ell < 1) throw DomainError("ell must be at least 1");
  const Path& p = mp.path();
  if (!is_dyck(p)) throw DomainError("sym_valley_insert needs a Dyck path");
  if (mp.mark_len() != 1 || p[mp.mark_start()] != Step::U) {
    throw DomainError("sym_valley_insert needs a single marked U");
  }
  if (p.height_after(mp.mark_end()) < 2) {
    throw DomainError("the marked U must end at height two or more");
  }
  Path out = p.slice(0, mp.mark_end());
  out.append(Step::D);
  out.append(power(Path::parse("DU"), static_cast<std::size_t>(ell)));
  out.append(Step::U);
  out.append(mp.after_mark());
  return MarkedPath(std::move(out), mp.mark_start(), 2 * static_cast<std::size_t>(ell) + 3);
}

SymValleyPreimage sym_valley_remove(const MarkedPath& mp) {
  const std::size_t len = mp.mark_len();
  if (len < 5 || len % 2 == 0) throw DomainError("marked factor is not UD(DU)^lU");
  const int ell = static_cast<int>((len - 3) / 2);
  const Path expected = Path::parse("UD") + power(Path::parse("DU"), ell) + Path::parse("U");
  if (mp.marked_factor() != expected || !is_dyck(mp.path())) {
    throw DomainError("marked factor is not UD(DU)^lU in a Dyck path");
  }
  const Path& p = mp.path();
  Path base = p.slice(0, mp.mark_start() + 1);
  base.append(mp.after_mark());
  return {MarkedPath(std::move(base), mp.mark_start(), 1), ell};
}

Path f_weak_ascents(const Path& p) {
  if (p.final_height() != 0) throw DomainError("f needs a path ending at height 0");
  if (p.min_height() < -1) throw DomainError("f needs a path staying at or above -1");
  if (p.min_height() == 0) return Path::parse("U") + p + Path::parse("D");
  // p = pi0 DU pi1 DU ... pit with every pi Dyck; each DU is a visit to -1.
  std::vector<Path> pieces;
  Path cur;
  int h = 0;
  for (std::size_t i = 0; i < p.length(); ++i) {
    h += delta(p[i]);
    if (h == -1) {
      pieces.push_back(cur);
      cur = Path{};
      ++i;  // the U back to the axis
      h = 0;
      continue;
    }
    cur.append(p[i]);
  }
  pieces.push_back(cur);
  Path out;
  for (const auto& piece : pieces) {
    out.append(Step::U);
    out.append(piece);
    out.append(Step::D);
  }
  return out;
}

Path f_inverse(const Path& dp) {
  if (dp.empty()) throw DomainError("f_inverse needs a nonempty Dyck path");
  const auto us = units(dp);
  if (us.size() == 1) return dp.slice(1, dp.length() - 2);
  Path out;
  for (std::size_t i = 0; i < us.size(); ++i) {
    if (i > 0) out.append(Path::parse("DU"));
    out.append(dp.slice(us[i].start + 1, us[i].length - 2));
  }
  return out;
}

std::size_t raney_shift(std::span<const long> values) {
  if (values.empty()) throw DomainError("raney_shift needs a nonempty sequence");
  if (std::accumulate(values.begin(), values.end(), 0L) != 1) {
    throw DomainError("raney_shift needs a sequence summing to 1");
  }
  // Start right after the rightmost minimum of the prefix sums P_0..P_{m-1}.
  long prefix = 0;
  long lo = 0;
  std::size_t at = 0;
  for (std::size_t i = 0; i + 1 < values.size(); ++i) {
    prefix += values[i];
    if (prefix <= lo) {
      lo = prefix;
      at = i + 1;
    }
  }
  return at + 1;
}

long PeakVector::semilength() const {
  long sum = 0;
  for (const auto& pr : pairs) sum += pr.a;
  return sum + static_cast<long>(pairs.size());
}

bool PeakVector::valid() const {
  if (pairs.empty()) return false;
  long sa = 0;
  long sb = 0;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& pr = pairs[i];
    if (pr.a < 0 || pr.b < 0) return false;
    if (i + 1 < pairs.size() && pr.b < 1) return false;
    sa += pr.a;
    sb += pr.b;
    if (sa < sb) return false;
  }
  return sa == sb;
}

PeakVector peak_decompose(const Path& p) {
  if (!is_dyck(p) || p.empty()) throw DomainError("peak_decompose needs a nonempty Dyck path");
  static const Path udu = Path::parse("UDU");
  if (count_factor(p, udu) != 0) throw DomainError("peak_decompose: path contains UDU");
  PeakVector pv;
  std::size_t i = 0;
  while (i < p.length()) {
    long ups = 0;
    long downs = 0;
    while (i < p.length() && p[i] == Step::U) ++ups, ++i;
    while (i < p.length() && p[i] == Step::D) ++downs, ++i;
    pv.pairs.push_back({ups - 1, downs - 1});
  }
  return pv;
}

Path peak_rebuild(const PeakVector& pv) {
  if (!pv.valid()) throw DomainError("peak_rebuild: invalid peak vector");
  Path out;
  for (const auto& pr : pv.pairs) {
    out.append(power(Step::U, static_cast<std::size_t>(pr.a + 1)));
    out.append(power(Step::D, static_cast<std::size_t>(pr.b + 1)));
  }
  return out;
}

PeakVector dnk0_from_slots(std::span<const SlotFill> fill) {
  if (fill.empty()) throw DomainError("dnk0_from_slots needs at least one slot");
  long sy = 0;
  long sz = 0;
  std::vector<long> diffs;
  for (const auto& s : fill) {
    if (s.y < 0 || s.z < 1) throw DomainError("slots need y >= 0 and z >= 1");
    sy += s.y;
    sz += s.z;
    diffs.push_back(s.z - s.y);
  }
  if (sz != sy + 1) throw DomainError("slots need one more D than U in total");
  const auto shifted = cyclic_shift<SlotFill>(fill, raney_shift(diffs));
  PeakVector pv;
  for (auto it = shifted.rbegin(); it != shifted.rend(); ++it) {
    pv.pairs.push_back({it->y, it->z});
  }
  pv.pairs.back().b -= 1;
  if (!pv.valid()) throw std::logic_error("cycle-lemma rotation produced an invalid vector");
  return pv;
}

Path insert_ud(const Path& precursor, std::span<const std::size_t> positions) {
  if (!is_dyck(precursor)) throw DomainError("insert_ud needs a Dyck precursor");
  static const Path udu = Path::parse("UDU");
  if (count_factor(precursor, udu) != 0) throw DomainError("insert_ud: precursor contains UDU");
  std::vector<std::size_t> per_slot(precursor.ups(), 0);
  for (auto q : positions) {
    if (q >= per_slot.size()) {
      throw DomainError("insert position " + std::to_string(q) + " has no U step");
    }
    ++per_slot[q];
  }
  Path out;
  std::size_t q = 0;
  for (Step s : precursor.steps()) {
    if (s == Step::U) {
      out.append(power(Path::parse("UD"), per_slot[q]));
      ++q;
    }
    out.append(s);
  }
  return out;
}

UdRemoval remove_ud(const Path& p) {
  if (!is_dyck(p)) throw DomainError("remove_ud needs a Dyck path");
  std::vector<std::pair<Step, std::size_t>> tagged;
  for (std::size_t i = 0; i < p.length(); ++i) tagged.emplace_back(p[i], i);
  std::vector<std::size_t> removed;  // original index of each deleted U
  for (;;) {
    std::size_t i = 0;
    for (; i + 2 < tagged.size(); ++i) {
      if (tagged[i].first == Step::U && tagged[i + 1].first == Step::D &&
          tagged[i + 2].first == Step::U) {
        break;
      }
    }
    if (i + 2 >= tagged.size()) break;
    removed.push_back(tagged[i].second);
    tagged.erase(tagged.begin() + static_cast<std::ptrdiff_t>(i),
                 tagged.begin() + static_cast<std::ptrdiff_t>(i + 2));
  }
  UdRemoval out;
  std::vector<std::size_t> up_origins;
  for (const auto& [s, orig] : tagged) {
    out.precursor.append(s);
    if (s == Step::U) up_origins.push_back(orig);
  }
  for (auto r : removed) {
    const auto it = std::upper_bound(up_origins.begin(), up_origins.end(), r);
    if (it == up_origins.end()) throw std::logic_error("deleted UD with no surviving U after it");
    out.positions.push_back(static_cast<std::size_t>(it - up_origins.begin()));
  }
  std::sort(out.positions.begin(), out.positions.end());
  return out;
}

AreaMark AreaMark::make(Path path, std::size_t marked_u_index, int j) {
  if (!is_dyck(path)) throw DomainError("area mark needs a Dyck path");
  if (marked_u_index >= path.length() || path[marked_u_index] != Step::U) {
    throw DomainError("area mark must designate a U step");
  }
  const int m = path.height_after(marked_u_index + 1);
  if (j < 0 || j >= m) throw DomainError("area mark needs 0 <= j < m");
  return AreaMark{std::move(path), marked_u_index, m, j};
}

Path area_map_g(const AreaMark& am) {
  const AreaMark checked = AreaMark::make(am.path, am.marked_u_index, am.j);
  if (checked.m != am.m) throw DomainError("area mark height does not match its path");
  const Path& p = am.path;
  const std::size_t start = am.marked_u_index + 1;
  // The D that first brings the path down to height m-j-1 after the mark.
  std::size_t split = p.length();
  int h = am.m;
  for (std::size_t i = start; i < p.length(); ++i) {
    h += delta(p[i]);
    if (h == am.m - am.j - 1) {
      split = i;
      break;
    }
  }
  const Path alpha = p.slice(0, am.marked_u_index);
  Path out = p.slice(start, split - start);
  out.append(Step::D);
  out.append(reverse_complement(alpha));
  out.append(Step::D);
  out.append(reverse_complement(p.slice(split + 1, p.length() - split - 1)));
  return out;
}

AreaMark g_inverse(const Path& lambda) {
  const int fin = lambda.final_height();
  if (lambda.length() % 2 != 0 || fin >= 0) {
    throw DomainError("g_inverse needs an even-length path ending below the axis");
  }
  const int j = -fin / 2 - 1;
  const int m = -lambda.min_height() - j - 1;
  std::size_t a = 0;
  std::size_t b = 0;
  int h = 0;
  for (std::size_t i = 1; i <= lambda.length(); ++i) {
    h += delta(lambda[i - 1]);
    if (a == 0 && h == -j - 1) a = i;
    if (b == 0 && h == -m - j - 1) {
      b = i;
      break;
    }
  }
  const Path s1 = lambda.slice(0, a - 1);
  const Path alpha = reverse_complement(lambda.slice(a, b - 1 - a));
  const Path s2 = reverse_complement(lambda.slice(b, lambda.length() - b));
  Path pi = alpha;
  pi.append(Step::U);
  pi.append(s1);
  pi.append(Step::D);
  pi.append(s2);
  AreaMark am = AreaMark::make(std::move(pi), alpha.length(), j);
  if (am.m != m) throw DomainError("g_inverse: inconsistent heights");
  return am;
}

Path terminal_peak_map(const MarkedPath& mp) {
  const Path& p = mp.path();
  if (!is_dyck(p) || mp.marked_factor() != Path::parse("UUDD")) {
    throw DomainError("terminal_peak_map needs a marked UUDD in a Dyck path");
  }
  const Path tail = mp.after_mark();
  if (tail.ups() != 0) throw DomainError("terminal_peak_map: the UUDD is not terminal");
  Path out = power(Step::U, tail.length());
  out.append(Step::D);
  out.append(reverse_complement(mp.before_mark()));
  return out;
}

MarkedPath terminal_peak_inverse(const Path& image) {
  std::size_t j = 0;
  while (j < image.length() && image[j] == Step::U) ++j;
  if (j >= image.length()) throw DomainError("terminal_peak_inverse: no D step");
  const Path alpha = reverse_complement(image.slice(j + 1, image.length() - j - 1));
  Path pi = alpha + Path::parse("UUDD") + power(Step::D, j);
  if (!is_dyck(pi)) throw DomainError("terminal_peak_inverse: not in the image");
  return MarkedPath(std::move(pi), alpha.length(), 4);
}

SymvaeBranch classify_symvae2(const Path& lambda) {
  if (lambda.length() % 2 == 0 || lambda.final_height() != 1) {
    throw DomainError("classify_symvae2 needs a path in P_(2n-1,1)");
  }
  const int n = static_cast<int>(lambda.length() + 1) / 2;
  if (lambda == power(Path::parse("UD"), static_cast<std::size_t>(n - 1)) + Path::parse("U")) {
    return {SymvaeBranch::Kind::Exceptional, 0};
  }
  const auto hp = lambda.height_profile();  // hp[t-1] = height at x = t
  for (int i = n - 1; i >= 1; --i) {
    if (hp[static_cast<std::size_t>(2 * i - 1)] == 2) return {SymvaeBranch::Kind::Upper, i};
    if (hp[static_cast<std::size_t>(2 * i - 2)] == -1) return {SymvaeBranch::Kind::Lower, i};
  }
  throw std::logic_error("classify_symvae2: no branch for " + lambda.to_string());
}

}  // namespace catalan_lab
