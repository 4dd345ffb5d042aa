#include "fpknot/presentation.hpp"

#include <cctype>
#include <stdexcept>
#include <unordered_set>

namespace fpknot {

bool valid_generator_name(std::string_view name) {
  if (name.empty()) return false;
  if (!(name[0] >= 'a' && name[0] <= 'z')) return false;
  for (char ch : name.substr(1)) {
    if (!(std::isalnum(static_cast<unsigned char>(ch)) || ch == '_')) return false;
  }
  return true;
}

Presentation::Presentation(std::vector<std::string> gens, std::vector<Word> rels)
    : generators(std::move(gens)) {
  std::unordered_set<std::string_view> seen;
  for (const auto& g : generators) {
    if (!valid_generator_name(g)) {
      throw std::invalid_argument("invalid generator name: '" + g + "'");
    }
    if (!seen.insert(g).second) {
      throw std::invalid_argument("duplicate generator name: '" + g + "'");
    }
  }
  relators.reserve(rels.size());
  for (auto& r : rels) {
    if (r.empty()) continue;  // empty relators are dropped
    if (r.max_generator() >= static_cast<int>(generators.size())) {
      throw std::invalid_argument("relator references a generator outside the alphabet");
    }
    relators.push_back(std::move(r));
  }
}

std::optional<std::size_t> Presentation::generator_index(std::string_view name) const {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    if (generators[i] == name) return i;
  }
  return std::nullopt;
}

}  // namespace fpknot
