#ifndef FPKNOT_SCHREIER_HPP
#define FPKNOT_SCHREIER_HPP

#include <optional>
#include <string>
#include <vector>

#include "fpknot/builders.hpp"
#include "fpknot/coset_table.hpp"
#include "fpknot/presentation.hpp"

namespace fpknot {

// Schreier transversal and generator labels for a complete coset table.
// The transversal is prefix-closed, each representative the shortest-lex word
// reaching its coset. The Schreier generator of a pair (coset i, generator g)
// is t_i * g * t_{i.g}^-1; it is the identity exactly on tree edges.
struct SchreierData {
  struct Label {
    std::size_t coset;      // 0-based
    std::size_t generator;  // ambient generator index
    std::string name;       // subgroup generator name, e.g. "a_2"
  };

  std::vector<Word> transversal;
  std::vector<Label> sub_generators;  // nontrivial pairs in (coset, generator) order
  // (coset * rank + generator) -> index into sub_generators, or nullopt when
  // the Schreier generator is the identity.
  std::vector<std::optional<std::size_t>> pair_to_sub;
};

SchreierData schreier_transversal(const CosetTable& t);

// Rewrites t_start * w * t_{start.w}^-1 into subgroup letters. For a relator
// (or any word fixing the start coset) this is the Reidemeister-Schreier
// rewriting of the conjugated relator.
Word rewrite_word(const CosetTable& t, const SchreierData& s, std::size_t start, const Word& w);

// One relator per (coset, relator) pair: the rewriting of t_i * r * t_i^-1,
// freely and cyclically reduced, identity letters dropped, empties dropped.
Presentation rewrite_subgroup_presentation(const Presentation& g, const CosetTable& t,
                                           const SchreierData& s);

// For each cycle of the permutation w induces on cosets, appends the
// rewriting of w^(cycle length) started at the cycle's minimal coset: the
// relator killing that lift of w.
Presentation add_branch_relators(const Presentation& sub, const CosetTable& t,
                                 const SchreierData& s, const Word& w);

// Fixed-point pass: free/cyclic reduction, drop empty and duplicate relators,
// then eliminate one generator that occurs exactly once in some relator by
// solving and substituting. Capped at 100 passes. Isomorphism-preserving.
Presentation tietze_simplify(const Presentation& p);

struct DbcTrace {
  CosetTable kernel_table;
  SchreierData schreier;
  std::size_t relators_rewritten = 0;
  std::size_t relators_filled = 0;
  std::size_t relators_simplified = 0;
  Presentation presentation;
};

// Full double-branched-cover pipeline: klein_group(p); enumerate over the
// index-2 sign-map kernel <a^2, ab, ac>; Schreier transversal; rewrite; fill
// the meridians a, b, c; Tietze-simplify. Presents the fundamental group of
// the double cover of the 4-sphere branched along the Klein bottle.
DbcTrace branched_double_cover_traced(const PretzelParams& p, const EnumLimits& limits = {});
Presentation branched_double_cover(const PretzelParams& p, const EnumLimits& limits = {});

}  // namespace fpknot

#endif  // FPKNOT_SCHREIER_HPP
