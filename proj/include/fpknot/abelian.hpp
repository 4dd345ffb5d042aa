#ifndef FPKNOT_ABELIAN_HPP
#define FPKNOT_ABELIAN_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpknot/builders.hpp"
#include "fpknot/presentation.hpp"

namespace fpknot {

// Diagonal d1 | d2 | ... of the Smith normal form, nonnegative, zeros last.
// Exact checked 64-bit integer arithmetic: overflow throws, never wraps.
std::vector<long long> smith_normal_form(std::vector<std::vector<long long>> mat);

// Invariant factors of the abelianization: divisors > 1 in a divisibility
// chain, then one 0 per infinite cyclic factor. Factors of 1 are omitted.
struct AbelianInvariants {
  std::vector<long long> factors;
  friend bool operator==(const AbelianInvariants&, const AbelianInvariants&) = default;
};

// Smith normal form of the relator-exponent-sum matrix (rows = relators,
// columns = generators).
AbelianInvariants abelianization(const Presentation& p);

enum class TriangleKind { spherical, euclidean, hyperbolic };

struct TriangleClass {
  TriangleKind kind = TriangleKind::hyperbolic;
  std::optional<long long> dyck_order;     // engaged iff spherical
  std::optional<long long> coxeter_order;  // 2 * dyck_order when finite
};

// Sign of 1/|l| + 1/|m| + 1/|n| - 1 in exact rational arithmetic.
TriangleClass classify_triangle(long long l, long long m, long long n);

// H2 of the triangle Coxeter group with one even and two odd edge weights is
// elementary abelian of rank 1. Only that parity pattern is implemented; any
// other pattern is refused rather than extrapolated.
int howlett_rank(long long l, long long m, long long n);

enum class Distinctness { distinct, inconclusive };

struct DistinctnessReport {
  Distinctness verdict = Distinctness::inconclusive;
  std::string certificate;
};

// Distinct when the magnitude multisets differ AND the Coxeter quotients are
// certified non-isomorphic (different triangle kinds, or both spherical with
// different finite orders). Never claims isotopy.
DistinctnessReport distinctness_report(const PretzelParams& p1, const PretzelParams& p2);

}  // namespace fpknot

#endif  // FPKNOT_ABELIAN_HPP
