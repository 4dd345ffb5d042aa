#include "fpknot/builders.hpp"

#include <stdexcept>

namespace fpknot {

namespace {

long long llabs_checked(long long v) { return v < 0 ? -v : v; }

constexpr long long kMaxParamMagnitude = 1 << 20;

void check_param_magnitude(long long v) {
  if (llabs_checked(v) > kMaxParamMagnitude) {
    throw std::invalid_argument("parameter magnitude too large");
  }
}

Word gen(int g, int sign = 1) { return Word::generator(g, sign); }

}  // namespace

PretzelParams::PretzelParams(long long l_, long long m_, long long n_) : l(l_), m(m_), n(n_) {
  if (l % 2 != 0 || llabs_checked(l) < 2) {
    throw std::invalid_argument("l must be even with |l| >= 2");
  }
  if (m % 2 == 0 || llabs_checked(m) < 3) {
    throw std::invalid_argument("m must be odd with |m| >= 3");
  }
  if (n % 2 == 0 || llabs_checked(n) < 3) {
    throw std::invalid_argument("n must be odd with |n| >= 3");
  }
  check_param_magnitude(l);
  check_param_magnitude(m);
  check_param_magnitude(n);
}

Presentation klein_group(const PretzelParams& p) {
  const Word a = gen(0), b = gen(1), c = gen(2);
  std::vector<Word> rels;
  rels.push_back(a.pow(4));
  rels.push_back(b.pow(4));
  rels.push_back(c.pow(4));
  rels.push_back((b * c).pow(p.m));
  rels.push_back((c * a).pow(p.n));
  rels.push_back((a * b).pow(p.l) * a.pow(-2));
  rels.push_back(a.pow(2) * b.pow(-2));
  rels.push_back(a.pow(2) * c.pow(-2));
  return Presentation({"a", "b", "c"}, std::move(rels));
}

Presentation wirtinger_pretzel(const PretzelParams& p) {
  if (p.l <= 0 || p.m <= 0 || p.n <= 0) {
    throw std::invalid_argument("wirtinger_pretzel requires positive parameters");
  }
  const Word a = gen(0), b = gen(1), c = gen(2);
  const Word alpha = gen(3), beta = gen(4), gamma = gen(5);
  const long long hl = p.l / 2, hm = (p.m - 1) / 2, hn = (p.n - 1) / 2;

  const Word ab1 = a * b.inverse();   // a b^-1
  const Word ba1 = b * a.inverse();   // b a^-1
  const Word c1a1 = c.inverse() * a.inverse();
  const Word ac = a * c;
  const Word bc = b * c;
  const Word c1b1 = c.inverse() * b.inverse();

  std::vector<Word> rels;
  // alpha = (a b^-1)^(l/2) a (b a^-1)^(l/2)
  rels.push_back(alpha.inverse() * ab1.pow(hl) * a * ba1.pow(hl));
  // alpha = (c^-1 a^-1)^((n-1)/2) c (a c)^((n-1)/2)
  rels.push_back(alpha.inverse() * c1a1.pow(hn) * c * ac.pow(hn));
  // beta = (a b^-1)^((l-2)/2) a b a^-1 (b a^-1)^((l-2)/2)
  rels.push_back(beta.inverse() * ab1.pow(hl - 1) * a * b * a.inverse() * ba1.pow(hl - 1));
  // beta = (b c)^((m-1)/2) b c b^-1 (c^-1 b^-1)^((m-1)/2)
  rels.push_back(beta.inverse() * bc.pow(hm) * b * c * b.inverse() * c1b1.pow(hm));
  // gamma = (b c)^((m-1)/2) b (c^-1 b^-1)^((m-1)/2)
  rels.push_back(gamma.inverse() * bc.pow(hm) * b * c1b1.pow(hm));
  // gamma = (c^-1 a^-1)^((n-1)/2) c^-1 a c (a c)^((n-1)/2)
  rels.push_back(gamma.inverse() * c1a1.pow(hn) * c.inverse() * a * c * ac.pow(hn));

  return Presentation({"a", "b", "c", "alpha", "beta", "gamma"}, std::move(rels));
}

Presentation klein_group_from_wirtinger(const PretzelParams& p) {
  Presentation pres = wirtinger_pretzel(p);
  const Word a = gen(0), b = gen(1), c = gen(2);
  const Word alpha = gen(3), beta = gen(4), gamma = gen(5);
  std::vector<Word> rels = pres.relators;
  rels.push_back(alpha * a);
  rels.push_back(beta * b);
  rels.push_back(gamma * c);
  return Presentation(pres.generators, std::move(rels));
}

Presentation coxeter_quotient(const PretzelParams& p) {
  const Word a = gen(0), b = gen(1), c = gen(2);
  std::vector<Word> rels;
  rels.push_back(a.pow(2));
  rels.push_back(b.pow(2));
  rels.push_back(c.pow(2));
  rels.push_back((b * c).pow(p.m));
  rels.push_back((c * a).pow(p.n));
  rels.push_back((a * b).pow(p.l));
  return Presentation({"a", "b", "c"}, std::move(rels));
}

Presentation dyck_group(long long l, long long m, long long n) {
  for (long long v : {l, m, n}) {
    if (llabs_checked(v) < 2) {
      throw std::invalid_argument("dyck_group parameters need magnitude >= 2");
    }
    check_param_magnitude(v);
  }
  const Word u = gen(0), v = gen(1);
  std::vector<Word> rels;
  rels.push_back(u.pow(l));
  rels.push_back(v.pow(m));
  rels.push_back((u * v).pow(n));
  return Presentation({"u", "v"}, std::move(rels));
}

Presentation lift_double_cover(const PretzelParams& p) {
  const Word a1 = gen(0), a2 = gen(1), b1 = gen(2), b2 = gen(3), c1 = gen(4), c2 = gen(5);
  const Word core = (a1 * b2).pow(-p.l);
  std::vector<Word> rels;
  rels.push_back(a1 * a2 * core);
  rels.push_back(b1 * b2 * core);
  rels.push_back(c1 * c2 * core);
  rels.push_back((b1 * c2).pow(p.m));
  rels.push_back((c1 * a2).pow(p.n));
  rels.push_back((a1 * a2).pow(2));
  return Presentation({"a1", "a2", "b1", "b2", "c1", "c2"}, std::move(rels));
}

}  // namespace fpknot
