#ifndef FPKNOT_CERTIFY_HPP
#define FPKNOT_CERTIFY_HPP

#include <vector>

#include "fpknot/coset_table.hpp"
#include "fpknot/perm.hpp"
#include "fpknot/presentation.hpp"

namespace fpknot {

// Isomorphism certificate for two finite presentations: equal enumerated
// orders plus a surjective homomorphism in each direction (which pins the
// isomorphism class for finite groups). Image words are found by exhaustive
// search over coset representatives, deterministic in shortest-lex order.
struct MutualCertificate {
  bool certified = false;
  std::uint64_t order = 0;
  std::vector<Word> forward;   // generator of a -> word over b
  std::vector<Word> backward;  // generator of b -> word over a
};

// Search is bounded: presentations of rank > 3 or order > 512 are reported
// uncertified rather than searched.
MutualCertificate mutual_surjection_certificate(const Presentation& a, const Presentation& b,
                                                const EnumLimits& limits = {});

// One direction only: words over the target's alphabet, one per source
// generator, passing hom_check and is_surjective. Empty when none exists.
std::vector<Word> find_surjection(const Presentation& src, const CosetTable& target_table);

}  // namespace fpknot

#endif  // FPKNOT_CERTIFY_HPP
