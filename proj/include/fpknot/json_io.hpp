#ifndef FPKNOT_JSON_IO_HPP
#define FPKNOT_JSON_IO_HPP

#include <json.hpp>

#include "fpknot/abelian.hpp"
#include "fpknot/cayley.hpp"
#include "fpknot/coset_table.hpp"
#include "fpknot/perm.hpp"
#include "fpknot/presentation.hpp"

// Stable JSON shapes shared by the CLI and the file formats. All payloads are
// deterministic: byte-identical across runs for identical inputs.

namespace fpknot {

// {"alphabet": [names], "index": N, "table": [[images per column]]},
// columns generators then inverses, cosets 1-based.
nlohmann::json table_to_json(const CosetTable& t);
CosetTable table_from_json(const nlohmann::json& j);

// {"invariant_factors": [ints]}
nlohmann::json invariants_to_json(const AbelianInvariants& inv);

// {"kind": "spherical|euclidean|hyperbolic", "dyck_order": int|"infinite",
//  "coxeter_order": int|"infinite"}
nlohmann::json triangle_to_json(const TriangleClass& c);

// {"delta": d, "group_order": N, "kernel_order": K, "quotient_ok": b, "split": b}
nlohmann::json ses_to_json(const SesReport& r);

// {"n": N, "edges": [[i, j]...]} with i < j, sorted lexicographically, 0-based.
nlohmann::json graph_to_json(const SimpleGraph& g);

// {"text": "...", "generators": [...], "relators": [printed words]}
nlohmann::json presentation_to_json(const Presentation& p);

}  // namespace fpknot

#endif  // FPKNOT_JSON_IO_HPP
