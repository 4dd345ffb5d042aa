#ifndef FPKNOT_PRESENTATION_HPP
#define FPKNOT_PRESENTATION_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fpknot/word.hpp"

namespace fpknot {

// Lowercase letter followed by letters, digits or underscores.
bool valid_generator_name(std::string_view name);

// A finite presentation: generator alphabet plus relator list.
// Relators are freely reduced (Word invariant); empty relators are dropped;
// every relator letter must index into the alphabet.
struct Presentation {
  std::vector<std::string> generators;
  std::vector<Word> relators;

  Presentation() = default;
  Presentation(std::vector<std::string> gens, std::vector<Word> rels);

  std::size_t rank() const noexcept { return generators.size(); }
  std::optional<std::size_t> generator_index(std::string_view name) const;
};

}  // namespace fpknot

#endif  // FPKNOT_PRESENTATION_HPP
