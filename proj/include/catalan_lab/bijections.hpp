#pragma once

#include <algorithm>
#include <cstddef>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "catalan_lab/paths.hpp"

namespace catalan_lab {

// Complements every step after the first point at height `level`
// (the origin counts as a point). Throws if the path never reaches it.
Path reflect_after_touch(const Path& p, int level);

// The template a' X a'' -> r(a') s r(a'') with X the marked pattern and s
// the surviving step. One instance per marked family.
struct SplitVariant {
  std::string name;
  Path pattern;
  Step survivor;

  static SplitVariant ascent();      // UU  -> D, image in P_(2n-1,1) below axis
  static SplitVariant udu();         // UDU -> D, image in P_(2n-2,0) below axis
  static SplitVariant descent();     // DDU -> D, image in P_(2n-2,-2), min <= -3
  static SplitVariant sym_peak();    // UUDDU -> U, image is all of P_(2n-4,2)
  static SplitVariant marked_up();   // U -> U on J_n (height >= 2)
  static SplitVariant marked_down(); // D -> D on K_n (height >= 2)
};

Path split_reverse(const MarkedPath& mp, const SplitVariant& v);
// Recovers the marked path. A U survivor sits right after the rightmost
// minimum point of the image; a D survivor ends at its leftmost minimum.
MarkedPath split_reverse_inverse(const Path& image, const SplitVariant& v);

// dp = a p' b with p' the unit_index-th unit (1-based) -> u a d p' b.
Path unit_mark_map(const Path& dp, std::size_t unit_index);

struct UnitMark {
  Path path;
  std::size_t unit_index;
  friend bool operator==(const UnitMark&, const UnitMark&) = default;
};
UnitMark unit_mark_inverse(const Path& p);

// Inserts D (DU)^ell U right after the marked U (which must end at height
// >= 2) and marks the resulting U D (DU)^ell U factor.
MarkedPath sym_valley_insert(const MarkedPath& mp, int ell);

struct SymValleyPreimage {
  MarkedPath base;
  int ell;
};
SymValleyPreimage sym_valley_remove(const MarkedPath& mp);

// Lattice path to (2n-2, 0) that never goes below -1 -> Dyck path of
// semilength n, via the decomposition at its visits to height -1.
Path f_weak_ascents(const Path& p);
Path f_inverse(const Path& dp);

// The unique 1-based cyclic shift r with every partial sum of
// s_r, ..., s_m, s_1, ..., s_{r-1} positive. Requires sum == 1.
std::size_t raney_shift(std::span<const long> values);
// Applies the shift r (1-based) to a sequence.
template <class T>
std::vector<T> cyclic_shift(std::span<const T> values, std::size_t r) {
  std::vector<T> out(values.begin(), values.end());
  std::rotate(out.begin(), out.begin() + static_cast<std::ptrdiff_t>(r - 1), out.end());
  return out;
}

struct PeakPair {
  long a;  // length of the U run before the peak's UD
  long b;  // length of the D run after it
  friend bool operator==(const PeakPair&, const PeakPair&) = default;
  friend auto operator<=>(const PeakPair&, const PeakPair&) = default;
};

// ((a_1,b_1),...,(a_{k+1},b_{k+1})) describing a member of D_{n,k,0}.
struct PeakVector {
  std::vector<PeakPair> pairs;

  std::size_t k() const { return pairs.size() - 1; }
  long semilength() const;
  // b_i >= 1 for i <= k, equal sums, and dominating prefix sums of a.
  bool valid() const;
  friend bool operator==(const PeakVector&, const PeakVector&) = default;
  friend auto operator<=>(const PeakVector&, const PeakVector&) = default;
};

PeakVector peak_decompose(const Path& p);
Path peak_rebuild(const PeakVector& pv);

struct SlotFill {
  long y;  // U steps, >= 0
  long z;  // D steps, >= 1
};

// Rotates the slot fill by the cycle-lemma shift of z_i - y_i, removes one
// D from the first slot and reverses the order. (k+1)-to-1 onto D_{n,k,0}.
PeakVector dnk0_from_slots(std::span<const SlotFill> fill);

// Inserts one UD before the q-th U step (0-based) for each q in `positions`
// (a multiset, any order).
Path insert_ud(const Path& precursor, std::span<const std::size_t> positions);

struct UdRemoval {
  Path precursor;
  std::vector<std::size_t> positions;  // sorted
};
// Repeatedly deletes the UD opening the leftmost UDU factor.
UdRemoval remove_ud(const Path& p);

// A Dyck path with a marked U of end height m and a choice 0 <= j < m.
struct AreaMark {
  Path path;
  std::size_t marked_u_index;
  int m;
  int j;

  static AreaMark make(Path path, std::size_t marked_u_index, int j);
  friend bool operator==(const AreaMark&, const AreaMark&) = default;
};

// Image has length 2n and final height -2j-2.
Path area_map_g(const AreaMark& am);
AreaMark g_inverse(const Path& lambda);

// Terminal occurrence a UUDD D^j -> U^j D r(a), into the paths of
// P_(2n-3,-1) that never go below -1.
Path terminal_peak_map(const MarkedPath& mp);
MarkedPath terminal_peak_inverse(const Path& image);

struct SymvaeBranch {
  enum class Kind { Exceptional, Upper, Lower };
  Kind kind;
  int i;  // 0 for the exceptional path
};

// Branch of lambda in P_(2n-1,1): the exceptional (UD)^{n-1}U, or the
// largest i with lambda through (2i, 2) (Upper) or (2i-1, -1) (Lower).
SymvaeBranch classify_symvae2(const Path& lambda);

// Uniform Dyck path of semilength n by cycle-lemma rotation of a random
// arrangement of n U's and n+1 D's.
template <class URBG>
Path uniform_dyck_sample(int n, URBG& rng) {
  if (n < 0) throw DomainError("sample: n must be nonnegative");
  std::vector<Step> arrangement(static_cast<std::size_t>(n), Step::U);
  arrangement.resize(static_cast<std::size_t>(2 * n + 1), Step::D);
  // Fisher-Yates with an explicit draw so results depend only on the engine.
  for (std::size_t i = arrangement.size(); i > 1; --i) {
    const auto r = static_cast<std::size_t>(rng() % i);
    std::swap(arrangement[i - 1], arrangement[r]);
  }
  std::vector<long> values;
  values.reserve(arrangement.size());
  for (Step s : arrangement) values.push_back(delta(complement(s)));
  const std::size_t r = raney_shift(values);
  std::vector<Step> rotated = cyclic_shift<Step>(arrangement, r);
  std::vector<Step> steps;
  steps.reserve(rotated.size() - 1);
  for (std::size_t i = 1; i < rotated.size(); ++i) steps.push_back(complement(rotated[i]));
  return Path(std::move(steps));
}

}  // namespace catalan_lab
