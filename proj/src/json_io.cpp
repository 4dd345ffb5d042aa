#include "fpknot/json_io.hpp"

#include <stdexcept>

#include "fpknot/text.hpp"

namespace fpknot {

using nlohmann::json;

json table_to_json(const CosetTable& t) {
  json rows = json::array();
  for (std::size_t c = 0; c < t.index; ++c) {
    json row = json::array();
    for (std::size_t col = 0; col < t.columns(); ++col) {
      row.push_back(t.at(c, col) + 1);
    }
    rows.push_back(std::move(row));
  }
  return json{{"alphabet", t.alphabet}, {"index", t.index}, {"table", std::move(rows)}};
}

CosetTable table_from_json(const json& j) {
  CosetTable t;
  t.alphabet = j.at("alphabet").get<std::vector<std::string>>();
  t.index = j.at("index").get<std::size_t>();
  const auto& rows = j.at("table");
  if (rows.size() != t.index) throw std::invalid_argument("table row count mismatch");
  t.entries.reserve(t.index * 2 * t.alphabet.size());
  for (const auto& row : rows) {
    if (row.size() != 2 * t.alphabet.size()) {
      throw std::invalid_argument("table column count mismatch");
    }
    for (const auto& v : row) {
      std::size_t coset = v.get<std::size_t>();
      if (coset < 1 || coset > t.index) throw std::invalid_argument("coset out of range");
      t.entries.push_back(static_cast<std::uint32_t>(coset - 1));
    }
  }
  return t;
}

json invariants_to_json(const AbelianInvariants& inv) {
  return json{{"invariant_factors", inv.factors}};
}

json triangle_to_json(const TriangleClass& c) {
  const char* kind = c.kind == TriangleKind::spherical    ? "spherical"
                     : c.kind == TriangleKind::euclidean  ? "euclidean"
                                                          : "hyperbolic";
  json j{{"kind", kind}};
  j["dyck_order"] = c.dyck_order ? json(*c.dyck_order) : json("infinite");
  j["coxeter_order"] = c.coxeter_order ? json(*c.coxeter_order) : json("infinite");
  return j;
}

json ses_to_json(const SesReport& r) {
  return json{{"delta", r.delta},
              {"group_order", r.group_order},
              {"kernel_order", r.kernel_order},
              {"quotient_ok", r.quotient_ok},
              {"split", r.split}};
}

json graph_to_json(const SimpleGraph& g) {
  json edges = json::array();
  for (std::uint32_t v = 0; v < g.n; ++v) {
    for (std::uint32_t w : g.adj[v]) {
      if (v < w) edges.push_back(json::array({v, w}));
    }
  }
  return json{{"n", g.n}, {"edges", std::move(edges)}};
}

json presentation_to_json(const Presentation& p) {
  json relators = json::array();
  for (const Word& r : p.relators) relators.push_back(print_word(r, p.generators));
  return json{{"text", print_presentation(p)},
              {"generators", p.generators},
              {"relators", std::move(relators)}};
}

}  // namespace fpknot
