#ifndef FPKNOT_BUILDERS_HPP
#define FPKNOT_BUILDERS_HPP

#include "fpknot/presentation.hpp"

namespace fpknot {

// Twist parameters of the 3-stranded pretzel family: l even with |l| >= 2,
// m and n odd with |m|, |n| >= 3. Checked at construction.
struct PretzelParams {
  long long l, m, n;
  PretzelParams(long long l_, long long m_, long long n_);
};

// < a, b, c | a^4, b^4, c^4, (bc)^m, (ca)^n, (ab)^l a^-2, a^2 b^-2, a^2 c^-2 >
// Signed parameters are used literally as exponents.
Presentation klein_group(const PretzelParams& p);

// The six-generator, six-relator meridional presentation of the pretzel knot
// group on a, b, c, alpha, beta, gamma. The half-twist formulas are derived
// for positive parameters only; negatives are refused.
Presentation wirtinger_pretzel(const PretzelParams& p);

// wirtinger_pretzel plus the relators alpha*a, beta*b, gamma*c (alpha = a^-1
// and so on); isomorphic to klein_group(p).
Presentation klein_group_from_wirtinger(const PretzelParams& p);

// < a, b, c | a^2, b^2, c^2, (bc)^m, (ca)^n, (ab)^l >
Presentation coxeter_quotient(const PretzelParams& p);

// < u, v | u^l, v^m, (uv)^n >, any integer triple with |.| >= 2.
Presentation dyck_group(long long l, long long m, long long n);

// Six-generator presentation on the segment lifts a1, a2, b1, b2, c1, c2 of
// the double cover of the exterior:
// < a1..c2 | a1 a2 (a1 b2)^-l, b1 b2 (a1 b2)^-l, c1 c2 (a1 b2)^-l,
//            (b1 c2)^m, (c1 a2)^n, (a1 a2)^2 >
Presentation lift_double_cover(const PretzelParams& p);

}  // namespace fpknot

#endif  // FPKNOT_BUILDERS_HPP
