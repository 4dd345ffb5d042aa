#include "fpknot/perm.hpp"

#include <numeric>
#include <stdexcept>

#include "fpknot/builders.hpp"

namespace fpknot {

namespace {

std::uint64_t lcm_checked(std::uint64_t a, std::uint64_t b) {
  std::uint64_t g = std::gcd(a, b);
  std::uint64_t q = a / g;
  if (b != 0 && q > UINT64_MAX / b) throw std::overflow_error("permutation order overflow");
  return q * b;
}

}  // namespace

std::vector<std::uint32_t> PermRep::permutation_of(const Word& w) const {
  if (w.max_generator() >= static_cast<int>(alphabet.size())) {
    throw std::invalid_argument("word uses a foreign alphabet");
  }
  std::vector<std::uint32_t> p(degree);
  for (std::uint32_t x = 0; x < degree; ++x) p[x] = x;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const auto& img = images[w.gen_at(i)];
    if (w.sign_at(i) > 0) {
      for (auto& x : p) x = img[x];
    } else {
      // apply the inverse permutation
      std::vector<std::uint32_t> inv(degree);
      for (std::uint32_t y = 0; y < degree; ++y) inv[img[y]] = y;
      for (auto& x : p) x = inv[x];
    }
  }
  return p;
}

PermRep perm_rep(const CosetTable& t) {
  PermRep r;
  r.degree = t.index;
  r.alphabet = t.alphabet;
  r.regular = t.regular();
  r.images.resize(t.rank());
  for (std::size_t g = 0; g < t.rank(); ++g) {
    auto& img = r.images[g];
    img.resize(t.index);
    std::vector<bool> hit(t.index, false);
    for (std::size_t c = 0; c < t.index; ++c) {
      img[c] = t.at(c, g);
      if (hit[img[c]]) throw std::logic_error("generator column is not a bijection");
      hit[img[c]] = true;
    }
  }
  return r;
}

std::uint64_t permutation_order(const std::vector<std::uint32_t>& p) {
  std::vector<bool> seen(p.size(), false);
  std::uint64_t order = 1;
  for (std::uint32_t x = 0; x < p.size(); ++x) {
    if (seen[x]) continue;
    std::uint64_t len = 0;
    std::uint32_t y = x;
    do {
      seen[y] = true;
      y = p[y];
      ++len;
    } while (y != x);
    order = lcm_checked(order, len);
  }
  return order;
}

std::uint64_t element_order(const Word& w, const PermRep& r) {
  return permutation_order(r.permutation_of(w));
}

HomCheckResult hom_check(const Presentation& src, const std::vector<Word>& images,
                         const PermRep& target) {
  if (images.size() != src.rank()) {
    throw std::invalid_argument("one image word required per source generator");
  }
  for (std::size_t i = 0; i < src.relators.size(); ++i) {
    const Word& r = src.relators[i];
    Word mapped;
    for (std::size_t j = 0; j < r.size(); ++j) {
      const Word& img = images[r.gen_at(j)];
      mapped = mapped * (r.sign_at(j) > 0 ? img : img.inverse());
    }
    auto p = target.permutation_of(mapped);
    for (std::uint32_t x = 0; x < p.size(); ++x) {
      if (p[x] != x) return {false, i};
    }
  }
  return {true, 0};
}

bool is_surjective(const std::vector<Word>& images, const PermRep& target) {
  if (!target.regular) {
    throw std::invalid_argument("surjectivity test needs a regular representation");
  }
  std::vector<std::vector<std::uint32_t>> perms;
  perms.reserve(images.size());
  for (const Word& w : images) perms.push_back(target.permutation_of(w));
  // Orbit of coset 0 under the generated subgroup; in the regular action its
  // size equals the order of that subgroup. Forward closure suffices: on a
  // finite set each permutation's inverse is a positive power of it.
  std::vector<bool> seen(target.degree, false);
  std::vector<std::uint32_t> queue{0};
  seen[0] = true;
  for (std::size_t pos = 0; pos < queue.size(); ++pos) {
    std::uint32_t x = queue[pos];
    for (const auto& p : perms) {
      if (!seen[p[x]]) {
        seen[p[x]] = true;
        queue.push_back(p[x]);
      }
    }
  }
  return queue.size() == target.degree;
}

SesReport ses_check(int delta, const EnumLimits& limits) {
  if (delta != 3 && delta != 5) throw std::invalid_argument("delta must be 3 or 5");
  SesReport report;
  report.delta = delta;
  Presentation g = klein_group(PretzelParams(2, 3, delta));
  EnumOutcome out = enumerate_cosets(g, {}, limits);
  if (out.overflowed()) throw std::runtime_error("enumeration exceeded limits in ses_check");
  const CosetTable& t = *out.table;
  PermRep rep = perm_rep(t);
  report.group_order = t.index;

  // Sign map: every generator goes to the nontrivial element of the 2-element
  // group, so an element is in the kernel iff its representative word has
  // even length.
  std::vector<Word> reps = coset_representatives(t);
  std::uint64_t kernel = 0;
  bool split = false;
  for (const Word& w : reps) {
    if (w.size() % 2 == 0) {
      ++kernel;
    } else if (element_order(w, rep) == 2) {
      split = true;
    }
  }
  report.kernel_order = kernel;
  report.quotient_ok = (2 * kernel == report.group_order);
  report.split = split;
  return report;
}

}  // namespace fpknot
