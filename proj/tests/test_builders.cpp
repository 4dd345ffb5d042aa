#include <doctest.h>

#include <algorithm>

#include "fpknot/builders.hpp"
#include "fpknot/coset_table.hpp"
#include "fpknot/perm.hpp"
#include "fpknot/text.hpp"

using namespace fpknot;

namespace {

Word kw(std::string_view text) {
  return parse_word(text, {"a", "b", "c"});
}

Word ww(std::string_view text) {
  return parse_word(text, {"a", "b", "c", "alpha", "beta", "gamma"});
}

std::size_t order_of(const Presentation& p) {
  EnumOutcome out = enumerate_cosets(p, {});
  REQUIRE_FALSE(out.overflowed());
  return out.table->index;
}

// Canonical form of a relator class under cyclic rotation and inversion:
// the least rotation of the word or of its inverse.
Word relator_class(const Word& r) {
  Word best;
  bool first = true;
  for (const Word& base : {r, r.inverse()}) {
    const auto& c = base.code();
    for (std::size_t s = 0; s < std::max<std::size_t>(c.size(), 1); ++s) {
      std::vector<letter_t> rot;
      for (std::size_t i = 0; i < c.size(); ++i) rot.push_back(c[(s + i) % c.size()]);
      Word cand = Word::from_letters(rot);
      if (first || cand < best) {
        best = cand;
        first = false;
      }
    }
  }
  return best;
}

std::vector<Word> relator_class_set(const std::vector<Word>& rels) {
  std::vector<Word> out;
  for (const Word& r : rels) out.push_back(relator_class(cyclic_reduce(r)));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_SUITE_BEGIN("knot_builders");

TEST_CASE("pretzel parameter validation") {
  CHECK_THROWS_AS(PretzelParams(3, 3, 3), std::invalid_argument);   // l odd
  CHECK_THROWS_AS(PretzelParams(0, 3, 3), std::invalid_argument);   // |l| < 2
  CHECK_THROWS_AS(PretzelParams(2, 4, 3), std::invalid_argument);   // m even
  CHECK_THROWS_AS(PretzelParams(2, 3, 1), std::invalid_argument);   // |n| < 3
  CHECK_NOTHROW(PretzelParams(-2, -3, 5));
}

TEST_CASE("klein group presentation shape") {
  Presentation p = klein_group(PretzelParams(2, 3, 3));
  CHECK(p.generators == std::vector<std::string>{"a", "b", "c"});
  REQUIRE(p.relators.size() == 8);
  CHECK(p.relators[5] == kw("(a*b)^2*a^-2"));

  Presentation q = klein_group(PretzelParams(2, 3, 5));
  CHECK(q.relators[4] == kw("(c*a)^5"));

  Presentation neg = klein_group(PretzelParams(-2, 3, 3));
  CHECK(neg.relators[5] == kw("(a*b)^-2*a^-2"));
  CHECK(order_of(neg) == order_of(p));
}

TEST_CASE("wirtinger presentation instantiates the half-twist formulas") {
  Presentation p = wirtinger_pretzel(PretzelParams(2, 3, 3));
  CHECK(p.generators.size() == 6);
  REQUIRE(p.relators.size() == 6);
  CHECK(p.relators[0] == ww("alpha^-1*(a*b^-1)*a*(b*a^-1)"));
  CHECK(p.relators[4] == ww("gamma^-1*(b*c)*b*(c^-1*b^-1)"));

  Presentation q = wirtinger_pretzel(PretzelParams(4, 5, 3));
  CHECK(q.generators.size() == 6);
  CHECK(q.relators.size() == 6);

  CHECK_THROWS_AS(wirtinger_pretzel(PretzelParams(-2, 3, 3)), std::invalid_argument);
}

TEST_CASE("wirtinger plus band relators") {
  Presentation p = klein_group_from_wirtinger(PretzelParams(2, 3, 3));
  CHECK(p.generators.size() == 6);
  CHECK(p.relators.size() == 9);
  CHECK(p.relators[6] == ww("alpha*a"));
  CHECK(order_of(p) == 48);
  CHECK(order_of(klein_group_from_wirtinger(PretzelParams(2, 3, 5))) == 240);
}

TEST_CASE("klein group and its wirtinger form are isomorphic") {
  // Mutually inverse generator maps across every finite positive triple:
  // a,b,c fix; alpha -> a^-1 and so on.
  const long long finite_positive[][3] = {{2, 3, 3}, {2, 3, 5}, {2, 5, 3}};
  for (const auto& t : finite_positive) {
    PretzelParams params(t[0], t[1], t[2]);
    Presentation k = klein_group(params);
    Presentation w = klein_group_from_wirtinger(params);

    EnumOutcome ko = enumerate_cosets(k, {});
    EnumOutcome wo = enumerate_cosets(w, {});
    REQUIRE_FALSE(ko.overflowed());
    REQUIRE_FALSE(wo.overflowed());
    CHECK(ko.table->index == wo.table->index);

    PermRep krep = perm_rep(*ko.table);
    PermRep wrep = perm_rep(*wo.table);
    const Word a = Word::generator(0), b = Word::generator(1), c = Word::generator(2);
    std::vector<Word> into_w{a, b, c};
    std::vector<Word> into_k{a, b, c, a.inverse(), b.inverse(), c.inverse()};
    CHECK(hom_check(k, into_w, wrep).holds);
    CHECK(is_surjective(into_w, wrep));
    CHECK(hom_check(w, into_k, krep).holds);
    CHECK(is_surjective(into_k, krep));
  }
}

TEST_CASE("coxeter quotient") {
  Presentation p = coxeter_quotient(PretzelParams(2, 3, 3));
  CHECK(print_presentation(p) == "< a, b, c | a^2, b^2, c^2, (b*c)^3, (c*a)^3, (a*b)^2 >");
  CHECK(order_of(p) == 24);
  CHECK(order_of(coxeter_quotient(PretzelParams(2, 3, 5))) == 120);
  // a has order 2 in the quotient
  EnumOutcome out = enumerate_cosets(p, {});
  CHECK(element_order(Word::generator(0), perm_rep(*out.table)) == 2);
}

TEST_CASE("von dyck builder") {
  CHECK(print_presentation(dyck_group(2, 3, 5)) == "< u, v | u^2, v^3, (u*v)^5 >");
  CHECK(order_of(dyck_group(2, 3, 3)) == 12);
  CHECK(order_of(dyck_group(2, 3, 5)) == 60);
  CHECK_THROWS_AS(dyck_group(1, 3, 5), std::invalid_argument);
}

TEST_CASE("six-lift double cover presentation") {
  Presentation p = lift_double_cover(PretzelParams(2, 3, 3));
  CHECK(p.generators ==
        std::vector<std::string>{"a1", "a2", "b1", "b2", "c1", "c2"});
  REQUIRE(p.relators.size() == 6);
  const auto& names = p.generators;
  CHECK(p.relators[0] == parse_word("a1*a2*(a1*b2)^-2", names));
  CHECK(p.relators[3] == parse_word("(b1*c2)^3", names));
  CHECK(p.relators[5] == parse_word("(a1*a2)^2", names));
}

TEST_CASE("large twist parameters build, print and re-parse") {
  Presentation p = dyck_group(2, 3, 1000001);
  std::string text = print_presentation(p);
  CHECK(text == "< u, v | u^2, v^3, (u*v)^1000001 >");
  CHECK(parse_presentation(text).relators == p.relators);
  CHECK_THROWS_AS(dyck_group(2, 3, 1ll << 21), std::invalid_argument);
}

TEST_CASE("sign flips never change the enumerated order") {
  const std::size_t base = order_of(klein_group(PretzelParams(2, 3, 3)));
  for (int sl : {2, -2}) {
    for (int sm : {3, -3}) {
      for (int sn : {3, -3}) {
        CHECK(order_of(klein_group(PretzelParams(sl, sm, sn))) == base);
      }
    }
  }
}

TEST_CASE("no letter substitution realizes the m<->n swap syntactically") {
  // The swapped-parameter Klein groups are isomorphic (orders and
  // abelianizations agree) but not by any generator-letter substitution:
  // exhaustive search over all 48 letter maps.
  Presentation lhs = klein_group(PretzelParams(2, 3, 5));
  Presentation rhs = klein_group(PretzelParams(2, 5, 3));
  std::vector<Word> target = relator_class_set(rhs.relators);

  const std::vector<letter_t> images_pool{make_letter(0, 1),  make_letter(0, -1),
                                          make_letter(1, 1),  make_letter(1, -1),
                                          make_letter(2, 1),  make_letter(2, -1)};
  bool any_match = false;
  for (letter_t ia : images_pool) {
    for (letter_t ib : images_pool) {
      for (letter_t ic : images_pool) {
        if (letter_gen(ia) == letter_gen(ib) || letter_gen(ia) == letter_gen(ic) ||
            letter_gen(ib) == letter_gen(ic)) {
          continue;
        }
        std::vector<Word> mapped;
        for (const Word& r : lhs.relators) {
          std::vector<letter_t> letters;
          for (std::size_t i = 0; i < r.size(); ++i) {
            letter_t img = r.gen_at(i) == 0 ? ia : r.gen_at(i) == 1 ? ib : ic;
            letters.push_back(r.sign_at(i) > 0 ? img : -img);
          }
          mapped.push_back(Word::from_letters(letters));
        }
        if (relator_class_set(mapped) == target) any_match = true;
      }
    }
  }
  CHECK_FALSE(any_match);

  // The semantic facts still hold at desk scale.
  CHECK(order_of(lhs) == 240);
  CHECK(order_of(rhs) == 240);
}

TEST_SUITE_END();
