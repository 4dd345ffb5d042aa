#ifndef FPKNOT_TESTS_ORACLES_HPP
#define FPKNOT_TESTS_ORACLES_HPP

// Brute-force models used as independent oracles by the tests. Everything
// here is deliberately naive: direct enumeration over matrices, permutations
// and minors, with no shared code paths into the library algorithms.

#include <cstdint>
#include <vector>

#include "fpknot/cayley.hpp"

namespace oracles {

// Number of 2x2 matrices over Z_q with determinant 1.
std::uint64_t sl2_order(int q);

using Perm = std::vector<int>;

Perm identity(int degree);
Perm compose(const Perm& first, const Perm& second);  // apply first, then second
Perm inverse(const Perm& p);
bool is_even(const Perm& p);
std::uint64_t perm_order(const Perm& p);

// All even permutations of {0..degree-1} in lexicographic order.
std::vector<Perm> even_permutations(int degree);

// Closure of the generating set under composition.
std::vector<Perm> closure(const std::vector<Perm>& gens, int degree);

// Order of G / [G, G] for an explicit element list.
std::uint64_t abelian_quotient_order(const std::vector<Perm>& group, int degree);

// First pair (u, v) in lexicographic order with u^p = v^q = (uv)^r = id,
// u, v nontrivial, generating the whole group. Empty result when none.
std::vector<Perm> von_dyck_pair(const std::vector<Perm>& group, int degree, int p, int q, int r);

// Invariant factors of an integer matrix via gcds of k x k minors:
// d_k = gcd(k-minors) / gcd((k-1)-minors). Returns min(rows, cols) entries,
// zeros after the rank is exhausted.
std::vector<long long> invariant_factors_by_minors(const std::vector<std::vector<long long>>& m);

// Cut vertices by deleting each vertex and recounting components.
std::vector<std::uint32_t> articulation_by_recount(const fpknot::SimpleGraph& g);

}  // namespace oracles

#endif  // FPKNOT_TESTS_ORACLES_HPP
