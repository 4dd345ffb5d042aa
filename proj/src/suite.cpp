#include "fpknot/suite.hpp"

#include <numeric>
#include <random>
#include <sstream>

#include "fpknot/abelian.hpp"
#include "fpknot/builders.hpp"
#include "fpknot/cayley.hpp"
#include "fpknot/certify.hpp"
#include "fpknot/json_io.hpp"
#include "fpknot/perm.hpp"
#include "fpknot/schreier.hpp"
#include "fpknot/text.hpp"

namespace fpknot {

namespace {

constexpr unsigned kSeed = 20230917;

std::string show_factors(const AbelianInvariants& inv) {
  std::string s = "[";
  for (std::size_t i = 0; i < inv.factors.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(inv.factors[i]);
  }
  return s + "]";
}

class Suite {
 public:
  explicit Suite(const SuiteOptions& options) : _options(options) {}

  SuiteReport run() {
    group_orders();
    meridian_orders();
    ses_reports();
    double_cover();
    lifted_cover_with_fillings();
    wirtinger_isomorphisms();
    klein_abelianizations();
    triangle_classification();
    howlett_checks();
    cayley_checks();
    property_suites();
    sign_independence();
    _report.all_pass = true;
    for (const auto& c : _report.checks) _report.all_pass = _report.all_pass && c.pass;
    return std::move(_report);
  }

 private:
  void add(const std::string& name, const std::string& expected, const std::string& computed) {
    _report.checks.push_back({name, expected, computed, expected == computed});
  }

  std::string order_of(const Presentation& p) {
    EnumOutcome out = enumerate_cosets(p, {}, _options.limits);
    if (out.overflowed()) {
      return "exceeds " + std::to_string(_options.limits.max_cosets) + " cosets";
    }
    return std::to_string(out.table->index);
  }

  Presentation klein_2_3_3() {
    Presentation p = klein_group(PretzelParams(2, 3, 3));
    if (_options.inject_fault) {
      std::vector<Word> rels = p.relators;
      rels.push_back(Word::generator(0));  // wrong relator a = 1
      return Presentation(p.generators, std::move(rels));
    }
    return p;
  }

  void group_orders() {
    add("klein_2_3_3_order", "48", order_of(klein_2_3_3()));
    add("klein_2_3_5_order", "240", order_of(klein_group(PretzelParams(2, 3, 5))));
    add("klein_2_3_5_index_of_meridian_subgroup", "60", [&] {
      Presentation g = klein_group(PretzelParams(2, 3, 5));
      EnumOutcome out = enumerate_cosets(g, {Word::generator(0)}, _options.limits);
      return out.overflowed() ? std::string("overflow") : std::to_string(out.table->index);
    }());
  }

  void meridian_orders() {
    for (int delta : {3, 5}) {
      Presentation g = klein_group(PretzelParams(2, 3, delta));
      EnumOutcome out = enumerate_cosets(g, {}, _options.limits);
      std::string tag = "_2_3_" + std::to_string(delta);
      if (out.overflowed()) {
        add("meridian_orders" + tag, "4/4/4", "overflow");
        continue;
      }
      PermRep rep = perm_rep(*out.table);
      const Word a = Word::generator(0), b = Word::generator(1), c = Word::generator(2);
      std::ostringstream orders;
      orders << element_order(a, rep) << "/" << element_order(b, rep) << "/"
             << element_order(c, rep);
      add("meridian_orders" + tag, "4/4/4", orders.str());
      bool squares_agree = rep.permutation_of(a.pow(2)) == rep.permutation_of(b.pow(2)) &&
                           rep.permutation_of(b.pow(2)) == rep.permutation_of(c.pow(2));
      add("meridian_squares_agree" + tag, "true", squares_agree ? "true" : "false");
    }
  }

  void ses_reports() {
    SesReport r3 = ses_check(3, _options.limits);
    SesReport r5 = ses_check(5, _options.limits);
    add("ses_3_kernel_order", "24", std::to_string(r3.kernel_order));
    add("ses_5_kernel_order", "120", std::to_string(r5.kernel_order));
    add("ses_3_quotient_ok", "true", r3.quotient_ok ? "true" : "false");
    add("ses_5_quotient_ok", "true", r5.quotient_ok ? "true" : "false");
    add("ses_5_split", "true", r5.split ? "true" : "false");
    add("ses_3_split", "false", r3.split ? "true" : "false");
  }

  void double_cover() {
    struct Case {
      int delta;
      const char* order;
      const char* invariants;
    } cases[] = {{3, "12", "[3]"}, {5, "60", "[]"}};
    for (const auto& c : cases) {
      std::string tag = "_2_3_" + std::to_string(c.delta);
      Presentation dbc = branched_double_cover(PretzelParams(2, 3, c.delta), _options.limits);
      add("double_cover_order" + tag, c.order, order_of(dbc));
      add("double_cover_abelianization" + tag, c.invariants, show_factors(abelianization(dbc)));
      MutualCertificate cert =
          mutual_surjection_certificate(dbc, dyck_group(2, 3, c.delta), _options.limits);
      add("double_cover_dyck_certificate" + tag, "certified",
          cert.certified ? "certified" : "not certified");
    }
  }

  void lifted_cover_with_fillings() {
    for (int delta : {3, 5}) {
      Presentation lift = lift_double_cover(PretzelParams(2, 3, delta));
      std::vector<Word> rels = lift.relators;
      // meridian fillings: a1 a2, b1 b2, c1 c2
      rels.push_back(Word::generator(0) * Word::generator(1));
      rels.push_back(Word::generator(2) * Word::generator(3));
      rels.push_back(Word::generator(4) * Word::generator(5));
      Presentation filled(lift.generators, std::move(rels));
      std::string tag = "_2_3_" + std::to_string(delta);
      std::string computed = order_of(filled);
      if (computed.rfind("exceeds", 0) == 0) {
        // A zero invariant factor witnesses a surjection onto the integers:
        // the filled group is infinite and no enumeration can finish.
        computed += "; abelianization " + show_factors(abelianization(filled)) +
                    " has a zero factor, so the group is infinite";
      }
      add("lifted_cover_filled_order" + tag, delta == 3 ? "12" : "60", computed);
    }
  }

  void wirtinger_isomorphisms() {
    for (int delta : {3, 5}) {
      std::string tag = "_2_3_" + std::to_string(delta);
      PretzelParams p(2, 3, delta);
      Presentation k = klein_group(p);
      Presentation w = klein_group_from_wirtinger(p);
      EnumOutcome ko = enumerate_cosets(k, {}, _options.limits);
      EnumOutcome wo = enumerate_cosets(w, {}, _options.limits);
      if (ko.overflowed() || wo.overflowed()) {
        add("wirtinger_klein_isomorphic" + tag, "true", "overflow");
        continue;
      }
      add("wirtinger_order_matches_klein" + tag, std::to_string(ko.table->index),
          std::to_string(wo.table->index));
      PermRep krep = perm_rep(*ko.table);
      PermRep wrep = perm_rep(*wo.table);
      const Word a = Word::generator(0), b = Word::generator(1), c = Word::generator(2);
      // a, b, c generate the Wirtinger group as well.
      std::vector<Word> into_w{a, b, c};
      // alpha = a^-1, beta = b^-1, gamma = c^-1 under the collapse.
      std::vector<Word> into_k{a, b, c, a.inverse(), b.inverse(), c.inverse()};
      bool ok = hom_check(k, into_w, wrep).holds && is_surjective(into_w, wrep) &&
                hom_check(w, into_k, krep).holds && is_surjective(into_k, krep);
      add("wirtinger_klein_isomorphic" + tag, "true", ok ? "true" : "false");
    }
  }

  void klein_abelianizations() {
    struct Case {
      long long l, m, n;
    } cases[] = {{2, 3, 3}, {2, 3, 5}, {4, 3, 5}, {2, 5, 7}, {-2, 3, 3}};
    for (const auto& c : cases) {
      std::string tag = std::to_string(c.l) + "_" + std::to_string(c.m) + "_" +
                        std::to_string(c.n);
      add("klein_abelianization_" + tag, "[2]",
          show_factors(abelianization(klein_group(PretzelParams(c.l, c.m, c.n)))));
    }
  }

  std::string classify_str(long long l, long long m, long long n) {
    TriangleClass c = classify_triangle(l, m, n);
    std::string kind = c.kind == TriangleKind::spherical    ? "spherical"
                       : c.kind == TriangleKind::euclidean  ? "euclidean"
                                                            : "hyperbolic";
    if (c.coxeter_order) kind += " coxeter " + std::to_string(*c.coxeter_order);
    return kind;
  }

  void triangle_classification() {
    add("classify_2_3_3", "spherical coxeter 24", classify_str(2, 3, 3));
    add("classify_2_3_5", "spherical coxeter 120", classify_str(2, 3, 5));
    add("classify_2_3_6", "euclidean", classify_str(2, 3, 6));
    add("classify_2_3_7", "hyperbolic", classify_str(2, 3, 7));
    EnumOutcome out = enumerate_cosets(dyck_group(2, 3, 7), {}, _options.limits);
    add("dyck_2_3_7_enumeration", "overflow", out.overflowed() ? "overflow" : "finite");
    // Cross-check: spherical triangle orders match the enumerated von Dyck
    // group orders.
    for (int delta : {3, 5}) {
      TriangleClass c = classify_triangle(2, 3, delta);
      EnumOutcome d = enumerate_cosets(dyck_group(2, 3, delta), {}, _options.limits);
      add("dyck_order_matches_formula_2_3_" + std::to_string(delta),
          std::to_string(*c.dyck_order),
          d.overflowed() ? "overflow" : std::to_string(d.table->index));
    }
  }

  void howlett_checks() {
    auto rank_str = [](long long l, long long m, long long n) -> std::string {
      try {
        return std::to_string(howlett_rank(l, m, n));
      } catch (const std::domain_error&) {
        return "refused";
      }
    };
    add("howlett_rank_2_3_3", "1", rank_str(2, 3, 3));
    add("howlett_rank_4_5_7", "1", rank_str(4, 5, 7));
    add("howlett_rank_2_4_6", "refused", rank_str(2, 4, 6));
    add("howlett_rank_3_5_7", "refused", rank_str(3, 5, 7));
  }

  static std::vector<std::uint32_t> articulation_by_recount(const SimpleGraph& g) {
    auto components_without = [&](std::int64_t removed) {
      std::size_t comps = 0;
      std::vector<bool> seen(g.n, false);
      for (std::uint32_t s = 0; s < g.n; ++s) {
        if (seen[s] || std::int64_t(s) == removed) continue;
        ++comps;
        std::vector<std::uint32_t> stack{s};
        seen[s] = true;
        while (!stack.empty()) {
          std::uint32_t v = stack.back();
          stack.pop_back();
          for (std::uint32_t w : g.adj[v]) {
            if (!seen[w] && std::int64_t(w) != removed) {
              seen[w] = true;
              stack.push_back(w);
            }
          }
        }
      }
      return comps;
    };
    std::size_t base = components_without(-1);
    std::vector<std::uint32_t> cuts;
    for (std::uint32_t v = 0; v < g.n; ++v) {
      if (components_without(v) > base) cuts.push_back(v);
    }
    return cuts;
  }

  void cayley_checks() {
    for (int delta : {3, 5}) {
      EnumOutcome out = enumerate_cosets(dyck_group(2, 3, delta), {}, _options.limits);
      std::string tag = "_2_3_" + std::to_string(delta);
      if (out.overflowed()) {
        add("cayley_cut_vertices" + tag, "none", "overflow");
        continue;
      }
      SimpleGraph g = build_cayley(perm_rep(*out.table), {0, 1});
      auto cuts = articulation_points(g);
      add("cayley_cut_vertices" + tag, "none",
          cuts.empty() ? "none" : std::to_string(cuts.size()) + " found");
    }
    // Detector vs delete-and-recount on random graphs of at most 12 vertices.
    std::mt19937 rng(kSeed);
    std::size_t mismatches = 0;
    for (int i = 0; i < 100; ++i) {
      std::uniform_int_distribution<std::size_t> nd(1, 12);
      SimpleGraph g;
      g.n = nd(rng);
      g.adj.resize(g.n);
      std::uniform_int_distribution<int> coin(0, 9);
      for (std::uint32_t v = 0; v < g.n; ++v) {
        for (std::uint32_t w = v + 1; w < g.n; ++w) {
          if (coin(rng) < 3) {
            g.adj[v].push_back(w);
            g.adj[w].push_back(v);
          }
        }
      }
      if (articulation_points(g) != articulation_by_recount(g)) ++mismatches;
    }
    add("articulation_matches_recount_oracle", "0 mismatches",
        std::to_string(mismatches) + " mismatches");
  }

  void property_suites() {
    std::mt19937 rng(kSeed);

    // Parser round-trips on random words and presentations.
    {
      std::size_t failures = 0;
      const std::vector<std::string> alphabet{"a", "b", "c", "d"};
      std::uniform_int_distribution<int> len(0, 12), gen(0, 3), sign(0, 1);
      for (int i = 0; i < 100; ++i) {
        std::vector<letter_t> letters;
        int L = len(rng);
        for (int j = 0; j < L; ++j) letters.push_back(make_letter(gen(rng), sign(rng) ? 1 : -1));
        Word w = Word::from_letters(letters);
        if (!(parse_word(print_word(w, alphabet), alphabet) == w)) ++failures;
        std::vector<Word> rels;
        int R = len(rng) % 4;
        for (int r = 0; r < R; ++r) {
          std::vector<letter_t> rl;
          int RL = len(rng);
          for (int j = 0; j < RL; ++j) rl.push_back(make_letter(gen(rng), sign(rng) ? 1 : -1));
          rels.push_back(Word::from_letters(rl));
        }
        Presentation p(alphabet, std::move(rels));
        Presentation q = parse_presentation(print_presentation(p));
        if (!(q.generators == p.generators && q.relators == p.relators)) ++failures;
      }
      add("property_parser_roundtrip", "0 failures", std::to_string(failures) + " failures");
    }

    // Coset-table soundness: every relator closes at every coset, every
    // subgroup generator fixes coset 0, action is consistent.
    {
      std::size_t failures = 0, instances = 0;
      std::uniform_int_distribution<int> kd(2, 24), pick(0, 2);
      while (instances < 100) {
        Presentation g;
        std::vector<Word> sub;
        int which = pick(rng);
        if (which == 0) {
          int k = kd(rng);
          g = parse_presentation("< a | a^" + std::to_string(k) + " >");
          int d = 1 + kd(rng) % k;
          sub.push_back(Word::generator(0).pow(d));
        } else if (which == 1) {
          g = dyck_group(2, 2, kd(rng));
        } else {
          g = dyck_group(2, 3, 3 + kd(rng) % 3);  // 3, 4 or 5
        }
        EnumOutcome out = enumerate_cosets(g, sub, _options.limits);
        if (out.overflowed()) continue;
        ++instances;
        const CosetTable& t = *out.table;
        bool ok = true;
        for (std::size_t c = 0; c < t.index && ok; ++c) {
          for (std::size_t col = 0; col < t.columns() && ok; ++col) {
            ok = t.at(t.at(c, col), t.inverse_column(col)) == c;
          }
        }
        for (const Word& r : g.relators) {
          for (std::size_t c = 0; c < t.index && ok; ++c) ok = t.trace(c, r) == c;
        }
        for (const Word& h : sub) ok = ok && t.trace(0, h) == 0;
        if (!ok) ++failures;
      }
      add("property_table_soundness", "0 failures", std::to_string(failures) + " failures");
    }

    // Regular-representation order law and Lagrange divisibility on random
    // words in the two Klein groups.
    {
      std::size_t failures = 0;
      for (int delta : {3, 5}) {
        EnumOutcome out =
            enumerate_cosets(klein_group(PretzelParams(2, 3, delta)), {}, _options.limits);
        if (out.overflowed()) {
          ++failures;
          continue;
        }
        PermRep rep = perm_rep(*out.table);
        std::uniform_int_distribution<int> len(0, 8), gen(0, 2), sign(0, 1);
        for (int i = 0; i < 60; ++i) {
          std::vector<letter_t> letters;
          int L = len(rng);
          for (int j = 0; j < L; ++j) letters.push_back(make_letter(gen(rng), sign(rng) ? 1 : -1));
          Word w = Word::from_letters(letters);
          std::uint64_t ord = element_order(w, rep);
          // order by iterated multiplication
          auto p = rep.permutation_of(w);
          std::vector<std::uint32_t> acc(p.size());
          for (std::uint32_t x = 0; x < p.size(); ++x) acc[x] = x;
          std::uint64_t naive = 0;
          do {
            for (auto& x : acc) x = p[x];
            ++naive;
            bool ident = true;
            for (std::uint32_t x = 0; x < acc.size(); ++x) ident = ident && acc[x] == x;
            if (ident) break;
          } while (naive <= rep.degree);
          if (naive != ord) ++failures;
          if (rep.degree % ord != 0) ++failures;
        }
      }
      add("property_regular_order_law_and_lagrange", "0 failures",
          std::to_string(failures) + " failures");
    }

    // Smith normal form: divisibility chain and minor-gcd law on random
    // 3x3 matrices with entries in [-9, 9].
    {
      std::size_t failures = 0;
      std::uniform_int_distribution<long long> entry(-9, 9);
      for (int i = 0; i < 100; ++i) {
        std::vector<std::vector<long long>> m(3, std::vector<long long>(3));
        for (auto& row : m) {
          for (auto& v : row) v = entry(rng);
        }
        std::vector<long long> d = smith_normal_form(m);
        for (std::size_t k = 0; k + 1 < d.size(); ++k) {
          if (d[k] == 0 && d[k + 1] != 0) ++failures;
          if (d[k] != 0 && d[k + 1] % d[k] != 0) ++failures;
        }
        // gcd of k x k minors equals d1*...*dk
        auto g1 = [&] {
          long long g = 0;
          for (const auto& row : m) {
            for (long long v : row) g = std::gcd(g, v);
          }
          return g;
        }();
        long long g2 = 0;
        for (int r1 = 0; r1 < 3; ++r1) {
          for (int r2 = r1 + 1; r2 < 3; ++r2) {
            for (int c1 = 0; c1 < 3; ++c1) {
              for (int c2 = c1 + 1; c2 < 3; ++c2) {
                g2 = std::gcd(g2, m[r1][c1] * m[r2][c2] - m[r1][c2] * m[r2][c1]);
              }
            }
          }
        }
        long long g3 = m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
                       m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
                       m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
        if (g3 < 0) g3 = -g3;
        if (d[0] != g1) ++failures;
        if (d[0] * d[1] != g2) ++failures;
        if (d[0] * d[1] * d[2] != g3) ++failures;
      }
      add("property_snf_chain_and_minor_gcd", "0 failures",
          std::to_string(failures) + " failures");
    }

    // Determinism: byte-identical JSON for repeated enumerations.
    {
      bool identical = true;
      for (int round = 0; round < 2; ++round) {
        Presentation g = round == 0 ? klein_group(PretzelParams(2, 3, 3)) : dyck_group(2, 3, 5);
        EnumOutcome first = enumerate_cosets(g, {}, _options.limits);
        EnumOutcome second = enumerate_cosets(g, {}, _options.limits);
        if (first.overflowed() || second.overflowed()) {
          identical = false;
          continue;
        }
        identical = identical &&
                    table_to_json(*first.table).dump() == table_to_json(*second.table).dump();
      }
      add("property_determinism_byte_identical", "true", identical ? "true" : "false");
    }
  }

  void sign_independence() {
    std::string detail;
    for (int sl : {2, -2}) {
      for (int sm : {3, -3}) {
        for (int sn : {3, -3}) {
          EnumOutcome out =
              enumerate_cosets(klein_group(PretzelParams(sl, sm, sn)), {}, _options.limits);
          if (!detail.empty()) detail += "/";
          detail += out.overflowed() ? "overflow" : std::to_string(out.table->index);
        }
      }
    }
    add("sign_independence_orders", "48/48/48/48/48/48/48/48", detail);
  }

  SuiteOptions _options;
  SuiteReport _report;
};

}  // namespace

SuiteReport run_verification_suite(const SuiteOptions& options) { return Suite(options).run(); }

}  // namespace fpknot
