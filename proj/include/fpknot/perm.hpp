#ifndef FPKNOT_PERM_HPP
#define FPKNOT_PERM_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "fpknot/coset_table.hpp"
#include "fpknot/presentation.hpp"

namespace fpknot {

// Permutation images of the generators acting on the cosets of a complete
// table. In a regular representation (trivial subgroup) the permutation
// order of a word equals the order of its group element.
struct PermRep {
  std::size_t degree = 0;
  std::vector<std::string> alphabet;
  std::vector<std::vector<std::uint32_t>> images;  // one permutation per generator
  bool regular = false;

  std::vector<std::uint32_t> permutation_of(const Word& w) const;
};

PermRep perm_rep(const CosetTable& t);

// Least common multiple of the cycle lengths; overflow-checked.
std::uint64_t permutation_order(const std::vector<std::uint32_t>& p);

std::uint64_t element_order(const Word& w, const PermRep& r);

struct HomCheckResult {
  bool holds = false;
  std::size_t failed_relator = 0;  // meaningful only when !holds
};

// Does mapping generator i of src to images[i] (a word over the target
// alphabet) define a homomorphism into the group of the target rep?
HomCheckResult hom_check(const Presentation& src, const std::vector<Word>& images,
                         const PermRep& target);

// Orbit test on a regular representation: true iff the image permutations
// move coset 0 onto every coset, i.e. the images generate the whole group.
bool is_surjective(const std::vector<Word>& images, const PermRep& target);

// Short-exact-sequence report for klein_group(2,3,delta): kernel of the sign
// map (generators all map to the nontrivial element of the 2-element group),
// order-2 quotient, and whether the sequence splits (an order-2 element
// outside the kernel, found by exhaustive scan).
struct SesReport {
  int delta = 0;
  std::uint64_t group_order = 0;
  std::uint64_t kernel_order = 0;
  bool quotient_ok = false;
  bool split = false;
};

SesReport ses_check(int delta, const EnumLimits& limits = {});

}  // namespace fpknot

#endif  // FPKNOT_PERM_HPP
