#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "catalan_lab/count.hpp"
#include "catalan_lab/words.hpp"

namespace catalan_lab {

// Pascal rows 0..max_row, built once at construction and read-only after.
class BinomialTable {
 public:
  explicit BinomialTable(long max_row);

  long max_row() const { return max_row_; }
  // Requires 0 <= k <= n <= max_row.
  const Count& at(long n, long k) const { return rows_[n][k]; }

 private:
  long max_row_;
  std::vector<std::vector<Count>> rows_;
};

// binom(n, k); zero when n < 0, k < 0 or k > n. Rows up to the shared
// table's limit come from Pascal's triangle, larger ones from the
// multiplicative formula.
Count binomial(long n, long k);
// Multiplicative evaluation only, bypassing the table.
Count binomial_multiplicative(long n, long k);
// Row limit of the shared Pascal table.
long binomial_table_limit();

Count pow2(long e);
Count catalan(long n);
// N(n,k) = binom(n,k) binom(n,k-1) / n; zero unless 1 <= k <= n.
Count narayana(long n, long k);

// Exact division by 2; throws std::logic_error on an odd value.
Count half_exact(const Count& v);
// Exact division; throws std::logic_error when d does not divide v.
Count divide_exact(const Count& v, const Count& d);

// Closed-form total of s over C_n (n >= 1). For the valley/peak kinds an
// absent ell gives the total over every ell.
Count closed_total(int n, const StatId& s);

// |D_{n,k}|: Dyck paths with exactly k DDU factors.
Count dnk_count(long n, long k);
// |D_{n,k,j}|: ... and exactly j UDU factors.
Count dnkj_count(long n, long k, long j);

enum class IdentityId {
  Cniden,
  Cniden2,
  Symvae1,
  Symvae2,
  EllPeake1,
  Weakasce1,
  Binomiden,
  Semie2,
  EmCount,
  HalfCentral,
  ICatalan,
};

inline constexpr IdentityId kAllIdentities[] = {
    IdentityId::Cniden,    IdentityId::Cniden2,   IdentityId::Symvae1,
    IdentityId::Symvae2,   IdentityId::EllPeake1, IdentityId::Weakasce1,
    IdentityId::Binomiden, IdentityId::Semie2,    IdentityId::EmCount,
    IdentityId::HalfCentral, IdentityId::ICatalan,
};

struct IdentityResult {
  Count lhs;
  Count rhs;
  bool holds;
};

std::string identity_name(IdentityId id);
IdentityId parse_identity(std::string_view name);
// Smallest n for which the identity is stated.
long identity_min_n(IdentityId id);

// Evaluates both sides exactly. Binomiden requires aux = k with
// 0 <= k <= (n-1)/2. Throws DomainError below the validity range.
IdentityResult identity_check(IdentityId id, long n, std::optional<long> aux = std::nullopt);

}  // namespace catalan_lab
