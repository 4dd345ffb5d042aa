#include "fpknot/schreier.hpp"

#include <algorithm>
#include <stdexcept>

namespace fpknot {

SchreierData schreier_transversal(const CosetTable& t) {
  SchreierData s;
  s.transversal = coset_representatives(t);
  const std::size_t ngens = t.rank();
  s.pair_to_sub.assign(t.index * ngens, std::nullopt);
  for (std::size_t i = 0; i < t.index; ++i) {
    for (std::size_t g = 0; g < ngens; ++g) {
      std::size_t j = t.at(i, g);
      Word schreier_gen =
          s.transversal[i] * Word::generator(static_cast<int>(g)) * s.transversal[j].inverse();
      if (schreier_gen.empty()) continue;  // tree edge
      std::string name = t.alphabet[g] + "_" + std::to_string(i + 1);
      s.pair_to_sub[i * ngens + g] = s.sub_generators.size();
      s.sub_generators.push_back({i, g, std::move(name)});
    }
  }
  return s;
}

Word rewrite_word(const CosetTable& t, const SchreierData& s, std::size_t start, const Word& w) {
  const std::size_t ngens = t.rank();
  std::vector<letter_t> letters;
  std::size_t c = start;
  for (std::size_t i = 0; i < w.size(); ++i) {
    const std::size_t g = static_cast<std::size_t>(w.gen_at(i));
    if (w.sign_at(i) > 0) {
      if (auto sub = s.pair_to_sub[c * ngens + g]) {
        letters.push_back(make_letter(static_cast<int>(*sub), 1));
      }
      c = t.at(c, g);
    } else {
      std::size_t k = t.at(c, ngens + g);  // k.g == c
      if (auto sub = s.pair_to_sub[k * ngens + g]) {
        letters.push_back(make_letter(static_cast<int>(*sub), -1));
      }
      c = k;
    }
  }
  return Word::from_letters(letters);
}

Presentation rewrite_subgroup_presentation(const Presentation& g, const CosetTable& t,
                                           const SchreierData& s) {
  if (g.generators != t.alphabet) throw std::invalid_argument("presentation/table mismatch");
  if (s.pair_to_sub.size() != t.index * t.rank()) {
    throw std::invalid_argument("transversal does not belong to this table");
  }
  std::vector<std::string> names;
  names.reserve(s.sub_generators.size());
  for (const auto& label : s.sub_generators) names.push_back(label.name);
  std::vector<Word> relators;
  relators.reserve(t.index * g.relators.size());
  for (std::size_t i = 0; i < t.index; ++i) {
    for (const Word& r : g.relators) {
      relators.push_back(cyclic_reduce(rewrite_word(t, s, i, r)));
    }
  }
  return Presentation(std::move(names), std::move(relators));
}

Presentation add_branch_relators(const Presentation& sub, const CosetTable& t,
                                 const SchreierData& s, const Word& w) {
  if (w.max_generator() >= static_cast<int>(t.rank())) {
    throw std::invalid_argument("branch word uses a foreign alphabet");
  }
  std::vector<Word> relators = sub.relators;
  std::vector<bool> seen(t.index, false);
  for (std::size_t start = 0; start < t.index; ++start) {
    if (seen[start]) continue;
    std::size_t len = 0;
    std::size_t c = start;
    do {
      seen[c] = true;
      c = t.trace(c, w);
      ++len;
    } while (c != start);
    relators.push_back(
        cyclic_reduce(rewrite_word(t, s, start, w.pow(static_cast<long long>(len)))));
  }
  return Presentation(sub.generators, std::move(relators));
}

namespace {

// Least cyclic rotation of the relator or of its inverse: two relators with
// the same key have the same normal closure. Relators beyond the length cap
// keep their literal form as the key, so the scan stays linear on huge
// inputs at the price of a weaker dedupe there.
Word relator_key(const Word& r) {
  constexpr std::size_t kKeyLengthCap = 4096;
  if (r.size() > kKeyLengthCap) return r;
  Word best;
  bool first = true;
  for (const Word& base : {r, r.inverse()}) {
    const auto& c = base.code();
    const std::size_t n = std::max<std::size_t>(c.size(), 1);
    for (std::size_t s = 0; s < n; ++s) {
      std::vector<letter_t> rot;
      rot.reserve(c.size());
      for (std::size_t i = 0; i < c.size(); ++i) rot.push_back(c[(s + i) % c.size()]);
      Word cand = Word::from_letters(rot);
      if (first || cand < best) {
        best = std::move(cand);
        first = false;
      }
    }
  }
  return best;
}

std::size_t occurrences(const Word& w, int gen) {
  std::size_t k = 0;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.gen_at(i) == gen) ++k;
  }
  return k;
}

Word substitute(const Word& w, int gen, const Word& replacement) {
  Word out;
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (w.gen_at(i) == gen) {
      out = out * (w.sign_at(i) > 0 ? replacement : replacement.inverse());
    } else {
      out = out * Word::generator(w.gen_at(i), w.sign_at(i));
    }
  }
  return out;
}

Word drop_generator_reindex(const Word& w, int gen) {
  std::vector<letter_t> letters;
  letters.reserve(w.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    int g = w.gen_at(i);
    letters.push_back(make_letter(g > gen ? g - 1 : g, w.sign_at(i)));
  }
  return Word::from_letters(letters);
}

}  // namespace

Presentation tietze_simplify(const Presentation& p) {
  constexpr int kMaxPasses = 100;
  std::vector<std::string> gens = p.generators;
  std::vector<Word> rels = p.relators;

  for (int pass = 0; pass < kMaxPasses; ++pass) {
    bool changed = false;

    // Normalize: cyclic reduction, drop empties and duplicates (up to
    // rotation and inversion, which preserve the normal closure).
    std::vector<Word> cleaned;
    std::vector<Word> keys;
    for (const Word& r : rels) {
      Word c = cyclic_reduce(r);
      if (c.empty()) {
        changed = true;
        continue;
      }
      Word key = relator_key(c);
      if (std::find(keys.begin(), keys.end(), key) != keys.end()) {
        changed = true;
        continue;
      }
      if (!(c == r)) changed = true;
      keys.push_back(std::move(key));
      cleaned.push_back(std::move(c));
    }
    rels = std::move(cleaned);

    // One elimination per pass: a generator occurring exactly once in some
    // relator can be solved for and substituted away. Candidate with the
    // shortest defining relator wins.
    std::size_t best_rel = rels.size();
    int best_gen = -1;
    for (std::size_t ri = 0; ri < rels.size(); ++ri) {
      for (std::size_t li = 0; li < rels[ri].size(); ++li) {
        int g = rels[ri].gen_at(li);
        if (occurrences(rels[ri], g) != 1) continue;
        if (best_gen == -1 || rels[ri].size() < rels[best_rel].size()) {
          best_rel = ri;
          best_gen = g;
        }
        break;  // relator candidates beyond the first generator tie on length
      }
    }
    if (best_gen >= 0) {
      const Word r = rels[best_rel];
      // Rotate so the single occurrence leads: r = g^e * u, hence
      // g = u^-1 when e = +1 and g = u when e = -1.
      std::size_t at = 0;
      while (rels[best_rel].gen_at(at) != best_gen) ++at;
      std::vector<letter_t> rotated;
      for (std::size_t i = 0; i < r.size(); ++i) rotated.push_back(r.at((at + i) % r.size()));
      Word rot = Word::from_letters(rotated);
      Word tail = Word::from_letters(
          std::vector<letter_t>(rot.code().begin() + 1, rot.code().end()));
      Word value = rot.sign_at(0) > 0 ? tail.inverse() : tail;

      std::vector<Word> next;
      for (std::size_t ri = 0; ri < rels.size(); ++ri) {
        if (ri == best_rel) continue;
        next.push_back(drop_generator_reindex(substitute(rels[ri], best_gen, value), best_gen));
      }
      rels = std::move(next);
      gens.erase(gens.begin() + best_gen);
      changed = true;
    }

    if (!changed) break;
  }
  return Presentation(std::move(gens), std::move(rels));
}

DbcTrace branched_double_cover_traced(const PretzelParams& p, const EnumLimits& limits) {
  Presentation g = klein_group(p);
  const Word a = Word::generator(0), b = Word::generator(1), c = Word::generator(2);
  std::vector<Word> kernel_gens{a * a, a * b, a * c};
  EnumOutcome out = enumerate_cosets(g, kernel_gens, limits);
  if (out.overflowed()) {
    throw std::runtime_error("sign-map kernel enumeration exceeded limits");
  }
  DbcTrace trace;
  trace.kernel_table = *out.table;
  if (trace.kernel_table.index != 2) {
    throw std::logic_error("sign-map kernel does not have index 2");
  }
  trace.schreier = schreier_transversal(trace.kernel_table);
  Presentation sub = rewrite_subgroup_presentation(g, trace.kernel_table, trace.schreier);
  trace.relators_rewritten = sub.relators.size();
  for (const Word& meridian : {a, b, c}) {
    sub = add_branch_relators(sub, trace.kernel_table, trace.schreier, meridian);
  }
  trace.relators_filled = sub.relators.size();
  trace.presentation = tietze_simplify(sub);
  trace.relators_simplified = trace.presentation.relators.size();
  return trace;
}

Presentation branched_double_cover(const PretzelParams& p, const EnumLimits& limits) {
  return branched_double_cover_traced(p, limits).presentation;
}

}  // namespace fpknot
