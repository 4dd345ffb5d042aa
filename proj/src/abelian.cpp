#include "fpknot/abelian.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fpknot {

namespace {

long long checked_add(long long a, long long b) {
  long long r;
  if (__builtin_add_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

long long checked_sub(long long a, long long b) {
  long long r;
  if (__builtin_sub_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r;
  if (__builtin_mul_overflow(a, b, &r)) throw std::overflow_error("integer overflow");
  return r;
}

long long checked_neg(long long a) { return checked_sub(0, a); }

long long abs_ll(long long a) { return a < 0 ? checked_neg(a) : a; }

}  // namespace

std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> m) {
  const std::size_t rows = m.size();
  const std::size_t cols = rows ? m[0].size() : 0;
  for (const auto& row : m) {
    if (row.size() != cols) throw std::invalid_argument("ragged matrix");
  }
  const std::size_t dim = std::min(rows, cols);
  std::vector<long long> diag(dim, 0);

  std::size_t k = 0;
  while (k < dim) {
    // Pick the nonzero entry of least magnitude in the trailing submatrix.
    std::size_t pr = rows, pc = cols;
    for (std::size_t i = k; i < rows; ++i) {
      for (std::size_t j = k; j < cols; ++j) {
        if (m[i][j] == 0) continue;
        if (pr == rows || abs_ll(m[i][j]) < abs_ll(m[pr][pc])) {
          pr = i;
          pc = j;
        }
      }
    }
    if (pr == rows) break;  // trailing submatrix is zero
    std::swap(m[k], m[pr]);
    for (std::size_t i = k; i < rows; ++i) std::swap(m[i][k], m[i][pc]);

    bool clean = false;
    while (!clean) {
      clean = true;
      // Clear the pivot column with row operations, improving the pivot when
      // a remainder appears.
      for (std::size_t i = k + 1; i < rows; ++i) {
        if (m[i][k] == 0) continue;
        long long q = m[i][k] / m[k][k];
        for (std::size_t j = k; j < cols; ++j) {
          m[i][j] = checked_sub(m[i][j], checked_mul(q, m[k][j]));
        }
        if (m[i][k] != 0) {
          std::swap(m[k], m[i]);
          clean = false;
        }
      }
      if (!clean) continue;
      // Same for the pivot row with column operations.
      for (std::size_t j = k + 1; j < cols; ++j) {
        if (m[k][j] == 0) continue;
        long long q = m[k][j] / m[k][k];
        for (std::size_t i = k; i < rows; ++i) {
          m[i][j] = checked_sub(m[i][j], checked_mul(q, m[i][k]));
        }
        if (m[k][j] != 0) {
          for (std::size_t i = k; i < rows; ++i) std::swap(m[i][k], m[i][j]);
          clean = false;
        }
      }
      if (!clean) continue;
      // The pivot must divide every remaining entry; if not, fold the
      // offending row in and restart the clearing loop.
      for (std::size_t i = k + 1; i < rows && clean; ++i) {
        for (std::size_t j = k + 1; j < cols && clean; ++j) {
          if (m[i][j] % m[k][k] != 0) {
            for (std::size_t jj = k; jj < cols; ++jj) {
              m[k][jj] = checked_add(m[k][jj], m[i][jj]);
            }
            clean = false;
          }
        }
      }
    }
    diag[k] = abs_ll(m[k][k]);
    ++k;
  }
  return diag;
}

AbelianInvariants abelianization(const Presentation& p) {
  std::vector<std::vector<long long>> m(p.relators.size(),
                                        std::vector<long long>(p.rank(), 0));
  for (std::size_t r = 0; r < p.relators.size(); ++r) {
    const Word& w = p.relators[r];
    for (std::size_t i = 0; i < w.size(); ++i) {
      m[r][w.gen_at(i)] = checked_add(m[r][w.gen_at(i)], w.sign_at(i));
    }
  }
  std::vector<long long> diag = smith_normal_form(std::move(m));
  AbelianInvariants inv;
  std::size_t rank_of_lattice = 0;
  for (long long d : diag) {
    if (d != 0) ++rank_of_lattice;
    if (d > 1) inv.factors.push_back(d);
  }
  // Free part: one zero per generator not constrained by the lattice.
  for (std::size_t i = rank_of_lattice; i < p.rank(); ++i) inv.factors.push_back(0);
  return inv;
}

TriangleClass classify_triangle(long long l, long long m, long long n) {
  for (long long v : {l, m, n}) {
    if (v > -2 && v < 2) throw std::invalid_argument("triangle parameters need magnitude >= 2");
    if (v > (1ll << 40) || v < -(1ll << 40)) {
      throw std::overflow_error("triangle parameter magnitude too large");
    }
  }
  const __int128 L = l < 0 ? -(__int128)l : (__int128)l;
  const __int128 M = m < 0 ? -(__int128)m : (__int128)m;
  const __int128 N = n < 0 ? -(__int128)n : (__int128)n;
  // 1/L + 1/M + 1/N vs 1  <=>  MN + LN + LM vs LMN
  const __int128 num = M * N + L * N + L * M;
  const __int128 den = L * M * N;
  TriangleClass out;
  if (num > den) {
    out.kind = TriangleKind::spherical;
    const __int128 order = 2 * den / (num - den);
    out.dyck_order = static_cast<long long>(order);
    out.coxeter_order = static_cast<long long>(2 * order);
  } else if (num == den) {
    out.kind = TriangleKind::euclidean;
  } else {
    out.kind = TriangleKind::hyperbolic;
  }
  return out;
}

int howlett_rank(long long l, long long m, long long n) {
  // The pretzel parity pattern: l even, m and n odd, with the usual
  // magnitude bounds. Anything else is outside the implemented rule.
  if (l % 2 != 0 || abs_ll(l) < 2 || m % 2 == 0 || abs_ll(m) < 3 || n % 2 == 0 ||
      abs_ll(n) < 3) {
    throw std::domain_error("howlett_rank implements only the (even, odd, odd) pattern");
  }
  return 1;
}

DistinctnessReport distinctness_report(const PretzelParams& p1, const PretzelParams& p2) {
  std::vector<long long> m1{abs_ll(p1.l), abs_ll(p1.m), abs_ll(p1.n)};
  std::vector<long long> m2{abs_ll(p2.l), abs_ll(p2.m), abs_ll(p2.n)};
  std::sort(m1.begin(), m1.end());
  std::sort(m2.begin(), m2.end());
  if (m1 == m2) {
    return {Distinctness::inconclusive, "equal magnitude multisets"};
  }
  TriangleClass c1 = classify_triangle(p1.l, p1.m, p1.n);
  TriangleClass c2 = classify_triangle(p2.l, p2.m, p2.n);
  if (c1.kind != c2.kind) {
    return {Distinctness::distinct, "triangle kinds differ"};
  }
  if (c1.kind == TriangleKind::spherical && c1.coxeter_order != c2.coxeter_order) {
    return {Distinctness::distinct,
            "coxeter orders differ: " + std::to_string(*c1.coxeter_order) + " vs " +
                std::to_string(*c2.coxeter_order)};
  }
  return {Distinctness::inconclusive, "no finite certificate distinguishes the quotients"};
}

}  // namespace fpknot
