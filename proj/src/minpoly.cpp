#include <algorithm>
#include <array>
#include <random>

#include "garland/error.hpp"
#include "garland/spectra.hpp"

namespace garland {

namespace {

void matvec(const ScaledIntegerMatrix& a, const std::vector<Integer>& x, std::vector<Integer>& y) {
  for (std::size_t r = 0; r < a.dim; ++r) {
    mpz_ptr out = y[r].get_mpz_t();
    mpz_set_ui(out, 0);
    for (std::size_t k = a.row_start[r]; k < a.row_start[r + 1]; ++k) {
      mpz_srcptr in = x[a.col[k]].get_mpz_t();
      if (mpz_sgn(in) == 0) continue;
      const std::int64_t v = a.value[k];
      if (v > 0) {
        mpz_addmul_ui(out, in, static_cast<unsigned long>(v));
      } else {
        mpz_submul_ui(out, in, static_cast<unsigned long>(-v));
      }
    }
  }
}

// Divide u and t by the gcd of all their entries.
void remove_content(std::vector<Integer>& u, std::vector<Integer>& t) {
  Integer g = 0;
  for (const auto* vec : {&u, &t}) {
    for (const auto& x : *vec) {
      if (x == 0) continue;
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
      if (g == 1) return;
    }
  }
  if (g <= 1) return;
  for (auto* vec : {&u, &t}) {
    for (auto& x : *vec) {
      if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    }
  }
}

std::vector<Integer> seed_vector(std::size_t dim, std::uint64_t seed, int round) {
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(round));
  std::vector<Integer> v(dim);
  for (auto& x : v) x = static_cast<long>(rng() % 7) - 3;
  return v;
}

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mod_of(const Integer& x, u64 prime) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), prime);
  return r.get_ui();
}

}  // namespace

RatPolynomial krylov_local_minimal_polynomial(const ScaledIntegerMatrix& a, const std::vector<Integer>& v) {
  struct Row {
    std::vector<Integer> r;
    std::size_t pivot;
    std::vector<Integer> comb;
  };
  std::vector<Row> basis;
  std::vector<Integer> cur = v, next(a.dim);
  Integer g, fa, fb;
  for (std::size_t k = 0;; ++k) {
    std::vector<Integer> u = cur;
    std::vector<Integer> t(k + 1, 0);
    t[k] = 1;
    for (const auto& row : basis) {
      const Integer& up = u[row.pivot];
      if (up == 0) continue;
      mpz_gcd(g.get_mpz_t(), up.get_mpz_t(), row.r[row.pivot].get_mpz_t());
      fa = row.r[row.pivot] / g;
      fb = up / g;
      for (std::size_t i = 0; i < u.size(); ++i) {
        if (row.r[i] == 0) {
          if (u[i] != 0) u[i] *= fa;
        } else {
          u[i] = fa * u[i] - fb * row.r[i];
        }
      }
      for (std::size_t j = 0; j < t.size(); ++j) {
        t[j] *= fa;
        if (j < row.comb.size()) t[j] -= fb * row.comb[j];
      }
      remove_content(u, t);
    }
    auto nz = std::find_if(u.begin(), u.end(), [](const Integer& x) { return x != 0; });
    if (nz == u.end()) {
      std::vector<Rational> coeffs(t.size());
      for (std::size_t j = 0; j < t.size(); ++j) coeffs[j] = Rational(t[j], t[k]);
      return RatPolynomial(std::move(coeffs));
    }
    const auto pivot = static_cast<std::size_t>(nz - u.begin());
    basis.push_back(Row{std::move(u), pivot, std::move(t)});
    matvec(a, cur, next);
    std::swap(cur, next);
  }
}

std::optional<std::size_t> find_unannihilated_column(const ScaledIntegerMatrix& a, const RatPolynomial& p,
                                                     const std::vector<std::size_t>& columns, int* primes_used) {
  const std::size_t n = a.dim;
  std::vector<std::size_t> cols = columns;
  if (cols.empty()) {
    cols.resize(n);
    for (std::size_t j = 0; j < n; ++j) cols[j] = j;
  }
  // Integer polynomial P = L p.
  Integer l = 1;
  for (const auto& c : p.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Integer> big(p.coeffs().size());
  for (std::size_t k = 0; k < big.size(); ++k) big[k] = p.coeffs()[k].get_num() * (l / p.coeffs()[k].get_den());

  // |(P(A) e_j)_i| <= sum_k |P_k| r^k with r the max absolute row sum.
  const Integer r = a.row_norm();
  Integer bound = 0, power = 1;
  for (const auto& c : big) {
    bound += abs(c) * power;
    power *= r;
  }
  const Integer needed = 2 * bound + 1;

  Integer modulus_product = 1;
  Integer prime = Integer(1) << 50;
  int used = 0;
  const int d = p.degree();
  constexpr std::size_t kBlock = 8;
  std::vector<u64> aval(a.value.size());
  std::vector<std::array<u64, kBlock>> y(n), z(n);
  while (modulus_product < needed) {
    mpz_nextprime(prime.get_mpz_t(), prime.get_mpz_t());
    const u64 m = prime.get_ui();
    ++used;
    modulus_product *= prime;
    for (std::size_t k = 0; k < a.value.size(); ++k) {
      const std::int64_t v = a.value[k];
      aval[k] = v >= 0 ? static_cast<u64>(v) % m : (m - static_cast<u64>(-v) % m) % m;
    }
    std::vector<u64> pk(big.size());
    for (std::size_t k = 0; k < big.size(); ++k) pk[k] = mod_of(big[k], m);

    for (std::size_t start = 0; start < cols.size(); start += kBlock) {
      const std::size_t width = std::min(kBlock, cols.size() - start);
      for (auto& row : y) row.fill(0);
      for (std::size_t b = 0; b < width; ++b) y[cols[start + b]][b] = pk[d];
      for (int k = d - 1; k >= 0; --k) {
        for (std::size_t row = 0; row < n; ++row) {
          std::array<u128, kBlock> acc{};
          for (std::size_t e = a.row_start[row]; e < a.row_start[row + 1]; ++e) {
            const u64 av = aval[e];
            const auto& src = y[a.col[e]];
            for (std::size_t b = 0; b < kBlock; ++b) acc[b] += static_cast<u128>(av) * src[b];
          }
          for (std::size_t b = 0; b < kBlock; ++b) z[row][b] = static_cast<u64>(acc[b] % m);
        }
        for (std::size_t b = 0; b < width; ++b) {
          auto& cell = z[cols[start + b]][b];
          cell = static_cast<u64>((static_cast<u128>(cell) + pk[k]) % m);
        }
        std::swap(y, z);
      }
      for (std::size_t b = 0; b < width; ++b) {
        for (std::size_t row = 0; row < n; ++row) {
          if (y[row][b] != 0) {
            if (primes_used) *primes_used = used;
            return cols[start + b];
          }
        }
      }
    }
  }
  if (primes_used) *primes_used = used;
  return std::nullopt;
}

RatPolynomial minimal_polynomial(const LinearOperator& op, std::size_t dim, const MinimalPolynomialOptions& options,
                                 MinimalPolynomialInfo* info) {
  if (op.dim != dim || op.domain_degree != op.codomain_degree) throw Error(ErrorCode::NotSquare, "operator is not square");
  const SparseRationalMatrix m = materialize(op);
  if (m.rows != dim || m.cols != dim) throw Error(ErrorCode::NotSquare, "operator is not square");
  if (dim == 0) return RatPolynomial::constant(1);
  const ScaledIntegerMatrix a = to_scaled_integer(m);

  MinimalPolynomialInfo stats;
  RatPolynomial poly = RatPolynomial::constant(1);
  int unchanged = 0;
  for (int round = 0; unchanged < options.stable_rounds; ++round) {
    auto local = krylov_local_minimal_polynomial(a, seed_vector(dim, options.seed, round));
    ++stats.krylov_seeds;
    auto merged = lcm(poly, local);
    if (merged == poly) {
      ++unchanged;
    } else {
      poly = std::move(merged);
      unchanged = 0;
    }
    if (poly.degree() == static_cast<int>(dim)) break;
  }

  const std::vector<std::size_t> columns = options.certification_columns.value_or(std::vector<std::size_t>{});
  stats.certified_columns = columns.empty() ? dim : columns.size();
  for (std::size_t attempt = 0;; ++attempt) {
    int primes = 0;
    auto failing = find_unannihilated_column(a, poly, columns, &primes);
    stats.certification_primes = primes;
    if (!failing) break;
    std::vector<Integer> e(dim, 0);
    e[*failing] = 1;
    auto merged = lcm(poly, krylov_local_minimal_polynomial(a, e));
    ++stats.krylov_seeds;
    if (merged == poly || attempt > dim) {
      throw Error(ErrorCode::CertificationFailed, "polynomial does not annihilate basis vector " + std::to_string(*failing));
    }
    poly = std::move(merged);
  }
  if (info) *info = stats;
  // Minimal polynomial of A / scale: p(scale x) / scale^deg.
  return poly.compose_scale(Rational(a.scale)).monic();
}

}  // namespace garland
