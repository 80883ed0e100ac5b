#include "catalan_lab/formulas.hpp"

#include <array>
#include <stdexcept>
#include <utility>

namespace catalan_lab {

namespace {

// Covers every binomial the identity sweeps up to n = 300 touch (2n + 2).
constexpr long kSharedTableRows = 640;

const BinomialTable& shared_table() {
  static const BinomialTable table(kSharedTableRows);
  return table;
}

}  // namespace

BinomialTable::BinomialTable(long max_row) : max_row_(max_row) {
  rows_.resize(static_cast<std::size_t>(max_row + 1));
  for (long n = 0; n <= max_row; ++n) {
    auto& row = rows_[n];
    row.resize(static_cast<std::size_t>(n + 1));
    row[0] = 1;
    row[n] = 1;
    for (long k = 1; k < n; ++k) row[k] = rows_[n - 1][k - 1] + rows_[n - 1][k];
  }
}

Count binomial_multiplicative(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  if (k > n - k) k = n - k;
  Count r = 1;
  for (long i = 1; i <= k; ++i) {
    r *= n - k + i;
    mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), static_cast<unsigned long>(i));
  }
  return r;
}

Count binomial(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  const auto& t = shared_table();
  if (n <= t.max_row()) return t.at(n, k);
  return binomial_multiplicative(n, k);
}

long binomial_table_limit() { return kSharedTableRows; }

Count pow2(long e) {
  if (e < 0) throw DomainError("pow2 of a negative exponent");
  Count r;
  mpz_ui_pow_ui(r.get_mpz_t(), 2, static_cast<unsigned long>(e));
  return r;
}

Count half_exact(const Count& v) {
  if (mpz_odd_p(v.get_mpz_t())) {
    throw std::logic_error("halving an odd intermediate " + v.get_str());
  }
  Count r = v;
  mpz_divexact_ui(r.get_mpz_t(), r.get_mpz_t(), 2);
  return r;
}

Count divide_exact(const Count& v, const Count& d) {
  if (!mpz_divisible_p(v.get_mpz_t(), d.get_mpz_t())) {
    throw std::logic_error(v.get_str() + " is not divisible by " + d.get_str());
  }
  Count r;
  mpz_divexact(r.get_mpz_t(), v.get_mpz_t(), d.get_mpz_t());
  return r;
}

Count catalan(long n) {
  if (n < 0) throw DomainError("catalan: n must be nonnegative");
  return divide_exact(binomial(2 * n, n), n + 1);
}

Count narayana(long n, long k) {
  if (n < 1 || k < 1 || k > n) return 0;
  return divide_exact(binomial(n, k) * binomial(n, k - 1), n);
}

Count closed_total(int n, const StatId& s) {
  if (n < 1) throw DomainError("closed_total: n must be at least 1");
  const long m = n;
  switch (s.kind) {
    case StatKind::SymValley: {
      if (s.ell) {
        // |E_{n-l-1}| = binom(2m, m-2) marked up steps of height >= 2.
        const long e = m - *s.ell - 1;
        return e < 0 ? Count(0) : binomial(2 * e, e - 2);
      }
      Count central = 0;
      for (long k = 1; k <= m; ++k) central += binomial(2 * k, k);
      return (3 * m - 2) * catalan(m - 1) - half_exact(central);
    }
    case StatKind::EllValley: {
      if (s.ell) return binomial(2 * m - 2 * *s.ell - 1, m - *s.ell - 3);
      Count t = 0;
      for (long l = 1; l <= m; ++l) t += binomial(2 * m - 2 * l - 1, m - l - 3);
      return t;
    }
    case StatKind::SymPeak: {
      if (s.ell) return binomial(2 * m - 2 * *s.ell - 2, m - *s.ell - 2);
      Count t = 0;
      for (long k = 0; k <= m - 3; ++k) t += binomial(2 * k + 2, k);
      return t;
    }
    case StatKind::EllPeak: {
      if (s.ell) return binomial(2 * m - 2 * *s.ell - 1, m - *s.ell - 2);
      Count t = 0;
      for (long l = 1; l <= m; ++l) t += binomial(2 * m - 2 * l - 1, m - l - 2);
      return t;
    }
    case StatKind::RunsDesc:
      return binomial(2 * m, m) - binomial(2 * m - 2, m - 1);
    case StatKind::RunsWeakAsc:
      return binomial(2 * m - 2, m - 1);
    case StatKind::RunsAsc:
    case StatKind::RunsWeakDesc:
      return binomial(2 * m - 1, m);
    case StatKind::CornerHU:
      return binomial(2 * m - 1, m - 2);
    case StatKind::CornerDH:
      return binomial(2 * m - 2, m - 3);
    case StatKind::Semi:
      return half_exact(binomial(2 * m + 2, m + 1) - binomial(2 * m, m));
    case StatKind::Area: {
      Count four;
      mpz_ui_pow_ui(four.get_mpz_t(), 4, static_cast<unsigned long>(m));
      return half_exact(four - binomial(2 * m, m));
    }
  }
  return 0;
}

namespace {

bool dnk_in_range(long n, long k) { return n >= 1 && k >= 0 && 2 * k <= n - 1; }

// |D_{n,k,0}| = binom(n-1,k) binom(n-k-1,k) / (k+1)
Count dnk0_count(long n, long k) {
  if (!dnk_in_range(n, k)) return 0;
  return divide_exact(binomial(n - 1, k) * binomial(n - k - 1, k), k + 1);
}

}  // namespace

Count dnk_count(long n, long k) {
  if (!dnk_in_range(n, k)) return 0;
  return divide_exact(binomial(n - 1, k) * binomial(n - k - 1, k) * pow2(n - 2 * k - 1),
                      k + 1);
}

Count dnkj_count(long n, long k, long j) {
  if (!dnk_in_range(n, k) || j < 0 || j > n - 2 * k - 1) return 0;
  return dnk0_count(n - j, k) * binomial(n - 1, j);
}

namespace {

constexpr std::array<std::pair<IdentityId, const char*>, 11> kIdentityNames{{
    {IdentityId::Cniden, "Cniden"},
    {IdentityId::Cniden2, "Cniden2"},
    {IdentityId::Symvae1, "Symvae1"},
    {IdentityId::Symvae2, "Symvae2"},
    {IdentityId::EllPeake1, "EllPeake1"},
    {IdentityId::Weakasce1, "Weakasce1"},
    {IdentityId::Binomiden, "Binomiden"},
    {IdentityId::Semie2, "Semie2"},
    {IdentityId::EmCount, "EmCount"},
    {IdentityId::HalfCentral, "HalfCentral"},
    {IdentityId::ICatalan, "ICatalan"},
}};

IdentityResult make_result(Count lhs, Count rhs) {
  const bool holds = lhs == rhs;
  return {std::move(lhs), std::move(rhs), holds};
}

// binom(2i, i-1) + binom(2i-1, i)
Count symvae_block(long i) { return binomial(2 * i, i - 1) + binomial(2 * i - 1, i); }

}  // namespace

std::string identity_name(IdentityId id) {
  for (const auto& [i, name] : kIdentityNames) {
    if (i == id) return name;
  }
  return "unknown";
}

IdentityId parse_identity(std::string_view name) {
  for (const auto& [i, n] : kIdentityNames) {
    if (name == n) return i;
  }
  throw DomainError("unknown identity '" + std::string(name) + "'");
}

long identity_min_n(IdentityId id) {
  switch (id) {
    case IdentityId::Symvae1:
    case IdentityId::EllPeake1:
    case IdentityId::Weakasce1:
      return 3;
    case IdentityId::Symvae2:
    case IdentityId::Semie2:
      return 2;
    default:
      return 1;
  }
}

IdentityResult identity_check(IdentityId id, long n, std::optional<long> aux) {
  if (n < identity_min_n(id)) {
    throw DomainError(identity_name(id) + " is stated for n >= " +
                      std::to_string(identity_min_n(id)));
  }
  switch (id) {
    case IdentityId::Cniden: {
      Count rhs = 0;
      for (long k = 1; k <= (n + 1) / 2; ++k) {
        rhs += divide_exact(binomial(n, k) * binomial(n - k, k - 1) * pow2(n - 2 * k + 1), n);
      }
      return make_result(catalan(n), rhs);
    }
    case IdentityId::Cniden2: {
      Count rhs = 0;
      for (long k = 0; k <= (n - 1) / 2; ++k) {
        rhs += divide_exact(
            binomial(n - 1, k) * binomial(n - k - 1, k) * pow2(n - 2 * k - 1), k + 1);
      }
      return make_result(catalan(n), rhs);
    }
    case IdentityId::Symvae1: {
      Count rhs = 1 + binomial(2 * n - 1, n) + binomial(2 * n - 3, n - 1);
      for (long i = 1; i <= n - 2; ++i) rhs += symvae_block(i);
      return make_result((3 * n - 1) * catalan(n - 1), rhs);
    }
    case IdentityId::Symvae2: {
      Count rhs = 1;
      for (long i = 1; i <= n - 1; ++i) rhs += symvae_block(i);
      return make_result(binomial(2 * n - 1, n), rhs);
    }
    case IdentityId::EllPeake1: {
      // |D_n(u^2d^2)| = (2n-3) C_{n-2}; |F_n| = number of 1-peaks.
      const Count marked = (2 * n - 3) * catalan(n - 2);
      const Count non_terminal = closed_total(static_cast<int>(n), StatId(StatKind::EllPeak, 1));
      return make_result(marked - non_terminal,
                         binomial(2 * n - 3, n - 2) - binomial(2 * n - 3, n - 3));
    }
    case IdentityId::Weakasce1:
      return make_result(binomial(2 * n, n), binomial(2 * n - 2, n - 1) + catalan(n) +
                                                 binomial(2 * n - 1, n - 2) +
                                                 binomial(2 * n - 2, n - 2));
    case IdentityId::Binomiden: {
      if (!aux) throw DomainError("Binomiden needs the auxiliary k");
      const long k = *aux;
      if (k < 0 || 2 * k > n - 1) throw DomainError("Binomiden needs 0 <= k <= (n-1)/2");
      Count lhs = 0;
      for (long j = 0; j <= n - 2 * k - 1; ++j) {
        lhs += binomial(n - j - 1, k) * binomial(n - j - k - 1, k) * binomial(n - 1, j);
      }
      return make_result(lhs,
                         binomial(n - 1, k) * binomial(n - k - 1, k) * pow2(n - 2 * k - 1));
    }
    case IdentityId::Semie2:
      return make_result(binomial(2 * n + 1, n), binomial(2 * n - 1, n - 1) + catalan(n) +
                                                     binomial(2 * n, n - 1) +
                                                     binomial(2 * n - 1, n - 2));
    case IdentityId::EmCount: {
      const Count cm = catalan(n);
      return make_result(n * cm - (catalan(n + 1) - cm), binomial(2 * n, n - 2));
    }
    case IdentityId::HalfCentral:
      return make_result(half_exact(binomial(2 * n, n)), binomial(2 * n - 1, n));
    case IdentityId::ICatalan:
      return make_result(n * catalan(n), binomial(2 * n, n - 1));
  }
  throw DomainError("unknown identity");
}

}  // namespace catalan_lab
