#include <doctest.h>

#include <algorithm>

#include "fpknot/abelian.hpp"
#include "fpknot/builders.hpp"
#include "fpknot/certify.hpp"
#include "fpknot/schreier.hpp"
#include "fpknot/text.hpp"
#include "oracles.hpp"

using namespace fpknot;

namespace {

CosetTable table_of(const Presentation& g, const std::vector<Word>& sub = {}) {
  EnumOutcome out = enumerate_cosets(g, sub);
  REQUIRE_FALSE(out.overflowed());
  return *out.table;
}

std::vector<Word> sign_kernel_gens() {
  const Word a = Word::generator(0), b = Word::generator(1), c = Word::generator(2);
  return {a * a, a * b, a * c};
}

std::size_t order_of(const Presentation& p, std::size_t max_cosets = 65536) {
  EnumLimits limits;
  limits.max_cosets = max_cosets;
  EnumOutcome out = enumerate_cosets(p, {}, limits);
  REQUIRE_FALSE(out.overflowed());
  return out.table->index;
}

}  // namespace

TEST_SUITE_BEGIN("subgroup_rewrite");

TEST_CASE("schreier transversal examples") {
  // index 1
  CosetTable whole = table_of(dyck_group(2, 3, 3),
                              {Word::generator(0), Word::generator(1)});
  REQUIRE(whole.index == 1);
  SchreierData s1 = schreier_transversal(whole);
  CHECK(s1.transversal == std::vector<Word>{Word()});

  // sign-map kernel of the Klein group: transversal {empty, a}
  Presentation k = klein_group(PretzelParams(2, 3, 3));
  CosetTable kt = table_of(k, sign_kernel_gens());
  REQUIRE(kt.index == 2);
  SchreierData s2 = schreier_transversal(kt);
  CHECK(s2.transversal == std::vector<Word>{Word(), Word::generator(0)});

  // Z2 inside Z4
  Presentation z4 = parse_presentation("< a | a^4 >");
  CosetTable z4t = table_of(z4, {Word::generator(0).pow(2)});
  REQUIRE(z4t.index == 2);
  SchreierData s3 = schreier_transversal(z4t);
  CHECK(s3.transversal == std::vector<Word>{Word(), Word::generator(0)});
}

TEST_CASE("schreier generator count obeys the index formula") {
  struct Case {
    Presentation g;
    std::vector<Word> sub;
  } cases[] = {
      {klein_group(PretzelParams(2, 3, 3)), sign_kernel_gens()},
      {klein_group(PretzelParams(2, 3, 5)), sign_kernel_gens()},
      {parse_presentation("< a | a^4 >"), {Word::generator(0).pow(2)}},
      {klein_group(PretzelParams(2, 3, 3)), {Word::generator(0)}},
      {dyck_group(2, 3, 5), {Word::generator(0)}},
  };
  for (auto& c : cases) {
    CosetTable t = table_of(c.g, c.sub);
    SchreierData s = schreier_transversal(t);
    CHECK(s.sub_generators.size() == t.index * t.rank() - (t.index - 1));
  }
}

TEST_CASE("rewriting the cyclic subgroup") {
  Presentation z4 = parse_presentation("< a | a^4 >");
  CosetTable t = table_of(z4, {Word::generator(0).pow(2)});
  SchreierData s = schreier_transversal(t);
  Presentation sub = rewrite_subgroup_presentation(z4, t, s);
  REQUIRE(sub.rank() == 1);
  // every relator is x^2 (one per coset)
  REQUIRE(sub.relators.size() == 2);
  for (const Word& r : sub.relators) CHECK(r == Word::generator(0).pow(2));
  CHECK(order_of(sub) == 2);
}

TEST_CASE("index-1 rewriting returns the original relators up to relabeling") {
  Presentation g = dyck_group(2, 3, 3);
  CosetTable t = table_of(g, {Word::generator(0), Word::generator(1)});
  SchreierData s = schreier_transversal(t);
  Presentation sub = rewrite_subgroup_presentation(g, t, s);
  CHECK(sub.rank() == g.rank());
  REQUIRE(sub.relators.size() == g.relators.size());
  for (std::size_t i = 0; i < g.relators.size(); ++i) {
    CHECK(sub.relators[i].code() == cyclic_reduce(g.relators[i]).code());
  }
}

TEST_CASE("cover degree law for the sign-map kernels") {
  for (int delta : {3, 5}) {
    Presentation g = klein_group(PretzelParams(2, 3, delta));
    CosetTable t = table_of(g, sign_kernel_gens());
    REQUIRE(t.index == 2);
    SchreierData s = schreier_transversal(t);
    Presentation sub = rewrite_subgroup_presentation(g, t, s);
    const std::size_t ambient = order_of(g);
    CHECK(order_of(sub) * t.index == ambient);
    CHECK(order_of(sub) == oracles::sl2_order(delta));
  }
}

TEST_CASE("branch relator filling") {
  Presentation g = klein_group(PretzelParams(2, 3, 3));
  CosetTable t = table_of(g, sign_kernel_gens());
  SchreierData s = schreier_transversal(t);
  Presentation sub = rewrite_subgroup_presentation(g, t, s);

  // a swaps the two cosets: one cycle, relator = rewriting of a^2 = the
  // single subgroup letter for the pair (coset 2, a).
  Presentation filled = add_branch_relators(sub, t, s, Word::generator(0));
  REQUIRE(filled.relators.size() == sub.relators.size() + 1);
  const Word appended = filled.relators.back();
  REQUIRE(appended.size() == 1);
  CHECK(s.sub_generators[appended.gen_at(0)].generator == 0);
  CHECK(s.sub_generators[appended.gen_at(0)].coset == 1);

  // a^2 fixes both cosets: one relator per coset
  Presentation filled2 = add_branch_relators(sub, t, s, Word::generator(0).pow(2));
  CHECK(filled2.relators.size() == sub.relators.size() + 2);

  CHECK_THROWS_AS(add_branch_relators(sub, t, s, Word::generator(5)), std::invalid_argument);
}

TEST_CASE("tietze simplification") {
  // eliminate x = 1
  Presentation p = parse_presentation("< x, y | x, (x*y)^3 >");
  Presentation simp = tietze_simplify(p);
  CHECK(simp.generators == std::vector<std::string>{"y"});
  REQUIRE(simp.relators.size() == 1);
  CHECK(simp.relators[0] == Word::generator(0).pow(3));

  // already simplified: fixed point
  Presentation q = dyck_group(2, 3, 5);
  Presentation qs = tietze_simplify(q);
  CHECK(qs.generators == q.generators);
  CHECK(qs.relators == q.relators);

  // order is preserved
  Presentation r = parse_presentation("< x, y, z | x*y^-1, x^4, (x*z)^2, z^2 >");
  CHECK(order_of(tietze_simplify(r)) == order_of(r));
}

TEST_CASE("double branched cover pipeline") {
  DbcTrace t33 = branched_double_cover_traced(PretzelParams(2, 3, 3));
  CHECK(t33.kernel_table.index == 2);
  CHECK(t33.relators_rewritten == 16);  // 2 cosets x 8 relators
  CHECK(t33.relators_filled == t33.relators_rewritten + 3);
  CHECK(t33.presentation.rank() == 2);
  CHECK(order_of(t33.presentation) == 12);
  CHECK(abelianization(t33.presentation) == AbelianInvariants{{3}});

  Presentation dbc5 = branched_double_cover(PretzelParams(2, 3, 5));
  CHECK(order_of(dbc5) == 60);
  CHECK(abelianization(dbc5).factors.empty());

  // hyperbolic case: presentation exists, classifier says infinite, and a
  // bounded enumeration overflows
  Presentation dbc7 = branched_double_cover(PretzelParams(2, 3, 7));
  CHECK(classify_triangle(2, 3, 7).kind == TriangleKind::hyperbolic);
  EnumLimits limits;
  limits.max_cosets = 4096;
  CHECK(enumerate_cosets(dbc7, {}, limits).overflowed());
}

TEST_CASE("order preservation through simplification in the pipeline") {
  for (int delta : {3, 5}) {
    Presentation g = klein_group(PretzelParams(2, 3, delta));
    CosetTable t = table_of(g, sign_kernel_gens());
    SchreierData s = schreier_transversal(t);
    Presentation sub = rewrite_subgroup_presentation(g, t, s);
    for (int gen = 0; gen < 3; ++gen) {
      sub = add_branch_relators(sub, t, s, Word::generator(gen));
    }
    CHECK(order_of(tietze_simplify(sub)) == order_of(sub));
  }
}

TEST_CASE("double cover is the von dyck group, certified both ways") {
  const std::uint64_t a4 = oracles::even_permutations(4).size();
  const std::uint64_t a5 = oracles::even_permutations(5).size();
  struct Case {
    int delta;
    std::uint64_t order;
  } cases[] = {{3, a4}, {5, a5}};
  for (const auto& c : cases) {
    Presentation dbc = branched_double_cover(PretzelParams(2, 3, c.delta));
    MutualCertificate cert = mutual_surjection_certificate(dbc, dyck_group(2, 3, c.delta));
    CHECK(cert.certified);
    CHECK(cert.order == c.order);
  }
}

TEST_CASE("the six-lift presentation admits an integer quotient") {
  // The displayed lift presentation, with or without the meridian fillings,
  // maps onto the integers (x1 -> +1, x2 -> -1 kills every relator), so its
  // enumeration can never finish. The honest pipeline above, by contrast,
  // lands on the finite von Dyck groups.
  for (int delta : {3, 5}) {
    Presentation lift = lift_double_cover(PretzelParams(2, 3, delta));
    AbelianInvariants unfilled = abelianization(lift);
    CHECK(std::count(unfilled.factors.begin(), unfilled.factors.end(), 0) >= 1);

    std::vector<Word> rels = lift.relators;
    rels.push_back(Word::generator(0) * Word::generator(1));
    rels.push_back(Word::generator(2) * Word::generator(3));
    rels.push_back(Word::generator(4) * Word::generator(5));
    Presentation filled(lift.generators, std::move(rels));
    AbelianInvariants inv = abelianization(filled);
    CHECK(std::count(inv.factors.begin(), inv.factors.end(), 0) == 1);
    EnumLimits limits;
    limits.max_cosets = 4096;
    CHECK(enumerate_cosets(filled, {}, limits).overflowed());
  }
}

TEST_SUITE_END();
