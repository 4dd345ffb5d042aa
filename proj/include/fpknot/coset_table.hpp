#ifndef FPKNOT_COSET_TABLE_HPP
#define FPKNOT_COSET_TABLE_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "fpknot/presentation.hpp"

namespace fpknot {

struct EnumLimits {
  std::size_t max_cosets = 65536;
  std::optional<std::uint64_t> max_definitions;
};

// Deterministic perturbations of the enumeration strategy. Different
// strategies produce different raw tables for the same input; the
// standardized tables are identical.
struct EnumStrategy {
  unsigned relator_rotation = 0;
  bool fill_rows_first = false;
};

struct EnumStats {
  std::uint64_t cosets_defined = 0;
  std::uint64_t coincidences = 0;
  std::uint64_t lookaheads = 0;
};

// A complete, consistent, standardized coset table. Cosets are 0-based
// internally (coset 0 is the subgroup itself) and 1-based in the JSON
// serialization. Columns are ordered generators first, then inverses.
struct CosetTable {
  std::vector<std::string> alphabet;
  std::vector<Word> subgroup;  // generators of H, words over the alphabet
  std::size_t index = 0;
  std::vector<std::uint32_t> entries;  // index rows * 2*rank columns

  std::size_t rank() const noexcept { return alphabet.size(); }
  std::size_t columns() const noexcept { return 2 * alphabet.size(); }
  std::uint32_t at(std::size_t coset, std::size_t column) const {
    return entries[coset * columns() + column];
  }
  std::size_t column_of(letter_t l) const {
    return letter_sign(l) > 0 ? std::size_t(letter_gen(l))
                              : alphabet.size() + std::size_t(letter_gen(l));
  }
  std::size_t inverse_column(std::size_t column) const {
    return column < alphabet.size() ? column + alphabet.size() : column - alphabet.size();
  }
  bool regular() const noexcept { return subgroup.empty(); }
  std::size_t trace(std::size_t start, const Word& w) const;
};

struct EnumOutcome {
  std::optional<CosetTable> table;
  EnumStats stats;
  bool overflowed() const noexcept { return !table.has_value(); }
};

// Todd-Coxeter coset enumeration (HLT-style relator scanning with immediate
// coincidence handling and a lookahead pass under space pressure) of g
// relative to the subgroup generated by the given words. Deterministic.
// Resource exhaustion is a value (no table), not an error.
EnumOutcome enumerate_cosets(const Presentation& g, const std::vector<Word>& subgroup_gens,
                             const EnumLimits& limits = {}, const EnumStrategy& strategy = {});

// Renumbers cosets into first-appearance order, scanning rows in increasing
// order and columns generators-then-inverses. Idempotent.
CosetTable standardize(const CosetTable& t);

// Validates completeness, action consistency, relator closure at every coset
// and subgroup-generator stabilization of coset 0. Throws std::logic_error.
void verify_table(const CosetTable& t, const Presentation& g);

// Shortest-lex representative word per coset: breadth-first from coset 0 with
// ties broken by the fixed column order. Representative of coset 0 is empty;
// the set is prefix-closed.
std::vector<Word> coset_representatives(const CosetTable& t);

}  // namespace fpknot

#endif  // FPKNOT_COSET_TABLE_HPP
