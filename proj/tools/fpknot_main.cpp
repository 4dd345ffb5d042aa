// fpknot - finitely presented group computations for the pretzel Klein
// bottle family: presentation builders, Todd-Coxeter enumeration,
// Reidemeister-Schreier double covers, abelianization and graph checks,
// with deterministic JSON reports.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "fpknot/abelian.hpp"
#include "fpknot/builders.hpp"
#include "fpknot/cayley.hpp"
#include "fpknot/certify.hpp"
#include "fpknot/coset_table.hpp"
#include "fpknot/json_io.hpp"
#include "fpknot/perm.hpp"
#include "fpknot/schreier.hpp"
#include "fpknot/suite.hpp"
#include "fpknot/text.hpp"

namespace {

using nlohmann::json;
using namespace fpknot;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;
constexpr int kExitResourceLimit = 3;

struct CommandContext {
  bool json_output = false;
  EnumLimits limits;
  EnumStats stats;
  std::chrono::steady_clock::time_point started = std::chrono::steady_clock::now();

  EnumOutcome enumerate(const Presentation& g, const std::vector<Word>& sub = {}) {
    EnumOutcome out = enumerate_cosets(g, sub, limits);
    stats.cosets_defined += out.stats.cosets_defined;
    stats.coincidences += out.stats.coincidences;
    return out;
  }

  json stats_json() const {
    auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                  std::chrono::steady_clock::now() - started)
                  .count();
    return json{{"cosets_defined", stats.cosets_defined},
                {"coincidences", stats.coincidences},
                {"wall_ms", ms}};
  }

  void emit(const std::string& command, const json& params, const json& result) const {
    if (!json_output) return;
    json report{
        {"command", command}, {"params", params}, {"result", result}, {"stats", stats_json()}};
    std::cout << report.dump() << "\n";
  }
};

// Exception carrying the process exit code through command handlers.
struct CommandExit {
  int code;
  std::string message;
};

std::size_t default_max_cosets() {
  if (const char* env = std::getenv("FPKNOT_MAX_COSETS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end && *end == '\0' && v >= 1) return static_cast<std::size_t>(v);
  }
  return 65536;
}

// A group argument is either a builder flag with three integer parameters or
// a positional presentation: inline text when it starts with '<', otherwise a
// file in the presentation grammar.
struct GroupArg {
  std::vector<long long> klein, coxeter, dyck, wirtinger, wirtinger_klein, lift_dbc;
  std::string positional;

  void attach(CLI::App* cmd, bool positional_required = false) {
    cmd->add_option("--klein", klein, "Klein bottle group for parameters L M N")
        ->expected(3);
    cmd->add_option("--coxeter", coxeter, "Coxeter quotient for parameters L M N")->expected(3);
    cmd->add_option("--dyck", dyck, "von Dyck group for parameters L M N")->expected(3);
    cmd->add_option("--wirtinger", wirtinger, "six-generator pretzel knot group")->expected(3);
    cmd->add_option("--wirtinger-klein", wirtinger_klein,
                    "Wirtinger presentation with the Klein bottle band relators")
        ->expected(3);
    cmd->add_option("--paper-dbc", lift_dbc, "six-lift double cover presentation")->expected(3);
    auto* pos = cmd->add_option("group", positional,
                                "inline presentation '< ... >' or a file containing one");
    if (positional_required) pos->required();
  }

  Presentation resolve() const {
    int flags = !klein.empty() + !coxeter.empty() + !dyck.empty() + !wirtinger.empty() +
                !wirtinger_klein.empty() + !lift_dbc.empty() + !positional.empty();
    if (flags != 1) {
      throw CommandExit{kExitInputError, "give exactly one group (builder flag or presentation)"};
    }
    if (!klein.empty()) return klein_group(PretzelParams(klein[0], klein[1], klein[2]));
    if (!coxeter.empty()) {
      return coxeter_quotient(PretzelParams(coxeter[0], coxeter[1], coxeter[2]));
    }
    if (!dyck.empty()) return dyck_group(dyck[0], dyck[1], dyck[2]);
    if (!wirtinger.empty()) {
      return wirtinger_pretzel(PretzelParams(wirtinger[0], wirtinger[1], wirtinger[2]));
    }
    if (!wirtinger_klein.empty()) {
      return klein_group_from_wirtinger(
          PretzelParams(wirtinger_klein[0], wirtinger_klein[1], wirtinger_klein[2]));
    }
    if (!lift_dbc.empty()) {
      return lift_double_cover(PretzelParams(lift_dbc[0], lift_dbc[1], lift_dbc[2]));
    }
    std::string text = positional;
    if (auto built = try_builder_spec(text)) return *built;
    if (text.find('<') == std::string::npos) {
      std::ifstream in(text);
      if (!in) throw CommandExit{kExitInputError, "cannot open file '" + text + "'"};
      std::ostringstream buf;
      buf << in.rdbuf();
      text = buf.str();
    }
    return parse_presentation(text);
  }

  // Builder shorthand usable wherever a group string is expected:
  // "klein:2,3,3", "dyck:2,3,5", ...
  static std::optional<Presentation> try_builder_spec(const std::string& text) {
    auto colon = text.find(':');
    if (colon == std::string::npos) return std::nullopt;
    std::string kind = text.substr(0, colon);
    static const std::vector<std::string> kinds{"klein",  "coxeter",        "dyck",
                                                "wirtinger", "wirtinger-klein", "paper-dbc"};
    if (std::find(kinds.begin(), kinds.end(), kind) == kinds.end()) return std::nullopt;
    std::vector<long long> v;
    std::stringstream ss(text.substr(colon + 1));
    std::string item;
    while (std::getline(ss, item, ',')) {
      try {
        std::size_t used = 0;
        v.push_back(std::stoll(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::exception&) {
        throw CommandExit{kExitInputError, "bad builder parameter '" + item + "' in '" + text + "'"};
      }
    }
    if (v.size() != 3) {
      throw CommandExit{kExitInputError, "builder spec needs three parameters: '" + text + "'"};
    }
    if (kind == "klein") return klein_group(PretzelParams(v[0], v[1], v[2]));
    if (kind == "coxeter") return coxeter_quotient(PretzelParams(v[0], v[1], v[2]));
    if (kind == "dyck") return dyck_group(v[0], v[1], v[2]);
    if (kind == "wirtinger") return wirtinger_pretzel(PretzelParams(v[0], v[1], v[2]));
    if (kind == "wirtinger-klein") {
      return klein_group_from_wirtinger(PretzelParams(v[0], v[1], v[2]));
    }
    return lift_double_cover(PretzelParams(v[0], v[1], v[2]));
  }
};

json params_json(std::initializer_list<std::pair<std::string, json>> kv) {
  json j = json::object();
  for (const auto& [k, v] : kv) j[k] = v;
  return j;
}

// ---- build ----------------------------------------------------------------

void cmd_build(CommandContext& ctx, const std::string& kind, long long l, long long m,
               long long n) {
  Presentation p;
  if (kind == "klein") {
    p = klein_group(PretzelParams(l, m, n));
  } else if (kind == "wirtinger") {
    p = wirtinger_pretzel(PretzelParams(l, m, n));
  } else if (kind == "wirtinger-klein") {
    p = klein_group_from_wirtinger(PretzelParams(l, m, n));
  } else if (kind == "coxeter") {
    p = coxeter_quotient(PretzelParams(l, m, n));
  } else if (kind == "dyck") {
    p = dyck_group(l, m, n);
  } else if (kind == "paper-dbc") {
    p = lift_double_cover(PretzelParams(l, m, n));
  } else {
    throw CommandExit{kExitInputError, "unknown builder kind '" + kind + "'"};
  }
  if (!ctx.json_output) std::cout << print_presentation(p) << "\n";
  ctx.emit("build", params_json({{"kind", kind}, {"l", l}, {"m", m}, {"n", n}}),
           presentation_to_json(p));
}

// ---- order ----------------------------------------------------------------

void cmd_order(CommandContext& ctx, const GroupArg& group) {
  Presentation p = group.resolve();
  EnumOutcome out = ctx.enumerate(p);
  if (out.overflowed()) {
    if (!ctx.json_output) std::cout << "exceeds limit " << ctx.limits.max_cosets << "\n";
    ctx.emit("order", params_json({{"presentation", print_presentation(p)}}),
             json{{"overflow", true}, {"limit", ctx.limits.max_cosets}});
    throw CommandExit{kExitResourceLimit, ""};
  }
  if (!ctx.json_output) std::cout << out.table->index << "\n";
  ctx.emit("order", params_json({{"presentation", print_presentation(p)}}),
           json{{"index", out.table->index}});
}

// ---- element-order ---------------------------------------------------------

void cmd_element_order(CommandContext& ctx, const GroupArg& group, const std::string& word_text) {
  Presentation p = group.resolve();
  Word w = parse_word(word_text, p.generators);
  EnumOutcome out = ctx.enumerate(p);
  if (out.overflowed()) {
    if (!ctx.json_output) std::cout << "exceeds limit " << ctx.limits.max_cosets << "\n";
    throw CommandExit{kExitResourceLimit, ""};
  }
  std::uint64_t order = element_order(w, perm_rep(*out.table));
  if (!ctx.json_output) std::cout << order << "\n";
  ctx.emit("element-order",
           params_json({{"presentation", print_presentation(p)}, {"word", word_text}}),
           json{{"order", order}});
}

// ---- meridian-order ---------------------------------------------------------

void cmd_meridian_order(CommandContext& ctx, long long l, long long m, long long n) {
  PretzelParams params(l, m, n);
  Presentation g = klein_group(params);
  EnumOutcome out = ctx.enumerate(g);
  const json cmd_params = params_json({{"l", l}, {"m", m}, {"n", n}});
  if (!out.overflowed()) {
    std::uint64_t order = element_order(Word::generator(0), perm_rep(*out.table));
    if (!ctx.json_output) {
      std::cout << order << " (direct, group order " << out.table->index << ")\n";
    }
    ctx.emit("meridian-order", cmd_params,
             json{{"order", order}, {"method", "direct"}, {"group_order", out.table->index}});
    return;
  }

  // The finite-quotient route: map a, b, c to themselves in the Klein group
  // of a smaller parameter triple whose middle entries divide m and n.
  auto divides = [](long long d, long long v) { return v % d == 0; };
  std::vector<std::pair<long long, long long>> targets;
  for (auto [dm, dn] : {std::pair<long long, long long>{3, 3}, {3, 5}, {5, 3}}) {
    if (divides(dm, m < 0 ? -m : m) && divides(dn, n < 0 ? -n : n)) targets.emplace_back(dm, dn);
  }
  for (auto [dm, dn] : targets) {
    Presentation target = klein_group(PretzelParams(2, dm, dn));
    EnumOutcome tout = ctx.enumerate(target);
    if (tout.overflowed()) continue;
    PermRep rep = perm_rep(*tout.table);
    std::vector<Word> images{Word::generator(0), Word::generator(1), Word::generator(2)};
    if (!hom_check(g, images, rep).holds) continue;
    if (!is_surjective(images, rep)) continue;
    std::uint64_t order = element_order(Word::generator(0), rep);
    if (!ctx.json_output) {
      std::cout << order << " certified via quotient (2," << dm << "," << dn << ")\n";
    }
    ctx.emit("meridian-order", cmd_params,
             json{{"order", order},
                  {"method", "quotient"},
                  {"quotient", json::array({2, dm, dn})}});
    return;
  }
  if (!ctx.json_output) std::cout << "no certificate\n";
  ctx.emit("meridian-order", cmd_params, json{{"order", nullptr}, {"method", "none"}});
}

// ---- hom-check ---------------------------------------------------------------

void cmd_hom_check(CommandContext& ctx, const GroupArg& from, const GroupArg& to,
                   const std::vector<std::string>& assignments) {
  Presentation src = from.resolve();
  Presentation dst = to.resolve();
  std::vector<Word> images(src.rank());
  std::vector<bool> assigned(src.rank(), false);
  for (const std::string& text : assignments) {
    auto eq = text.find('=');
    if (eq == std::string::npos) {
      throw CommandExit{kExitInputError, "--send expects generator=word, got '" + text + "'"};
    }
    auto gen = src.generator_index(text.substr(0, eq));
    if (!gen) {
      throw CommandExit{kExitInputError,
                        "unknown source generator '" + text.substr(0, eq) + "'"};
    }
    images[*gen] = parse_word(text.substr(eq + 1), dst.generators);
    assigned[*gen] = true;
  }
  for (std::size_t i = 0; i < src.rank(); ++i) {
    if (!assigned[i]) {
      throw CommandExit{kExitInputError, "missing image for generator '" + src.generators[i] + "'"};
    }
  }
  EnumOutcome out = ctx.enumerate(dst);
  if (out.overflowed()) {
    if (!ctx.json_output) std::cout << "exceeds limit " << ctx.limits.max_cosets << "\n";
    throw CommandExit{kExitResourceLimit, ""};
  }
  PermRep rep = perm_rep(*out.table);
  HomCheckResult res = hom_check(src, images, rep);
  bool surjective = res.holds && is_surjective(images, rep);
  json result{{"holds", res.holds},
              {"failed_relator", res.holds ? json(nullptr) : json(res.failed_relator)},
              {"surjective", res.holds ? json(surjective) : json(nullptr)}};
  if (!ctx.json_output) {
    if (res.holds) {
      std::cout << "holds (surjective: " << (surjective ? "true" : "false") << ")\n";
    } else {
      std::cout << "fails at relator " << res.failed_relator << " ("
                << print_word(src.relators[res.failed_relator], src.generators) << ")\n";
    }
  }
  ctx.emit("hom-check",
           params_json({{"from", print_presentation(src)}, {"to", print_presentation(dst)}}),
           result);
  if (!res.holds) throw CommandExit{kExitCheckFailed, ""};
}

// ---- ses ---------------------------------------------------------------------

void cmd_ses(CommandContext& ctx, int delta) {
  if (delta != 3 && delta != 5) throw CommandExit{kExitInputError, "delta must be 3 or 5"};
  SesReport report = ses_check(delta, ctx.limits);
  if (!ctx.json_output) {
    std::cout << "group order " << report.group_order << ", kernel order " << report.kernel_order
              << ", quotient of order 2: " << (report.quotient_ok ? "yes" : "no")
              << ", splits: " << (report.split ? "yes" : "no") << "\n";
  }
  ctx.emit("ses", params_json({{"delta", delta}}), ses_to_json(report));
}

// ---- dbc --------------------------------------------------------------------

void cmd_dbc(CommandContext& ctx, long long l, long long m, long long n) {
  PretzelParams params(l, m, n);
  DbcTrace trace = branched_double_cover_traced(params, ctx.limits);
  const Presentation& p = trace.presentation;
  AbelianInvariants inv = abelianization(p);
  TriangleClass cls = classify_triangle(l, m, n);

  json trace_json;
  {
    json transversal = json::array();
    for (const Word& t : trace.schreier.transversal) {
      transversal.push_back(print_word(t, trace.kernel_table.alphabet));
    }
    json labels = json::array();
    for (const auto& label : trace.schreier.sub_generators) {
      labels.push_back(json{{"name", label.name},
                            {"coset", label.coset + 1},
                            {"generator", trace.kernel_table.alphabet[label.generator]}});
    }
    trace_json = json{{"transversal", std::move(transversal)},
                      {"schreier_generators", std::move(labels)},
                      {"relators_after_rewrite", trace.relators_rewritten},
                      {"relators_after_filling", trace.relators_filled},
                      {"relators_after_simplify", trace.relators_simplified}};
  }

  json result{{"presentation", presentation_to_json(p)},
              {"trace", std::move(trace_json)},
              {"abelian_invariants", inv.factors},
              {"triangle", triangle_to_json(cls)}};

  std::string order_line;
  if (cls.kind == TriangleKind::spherical) {
    EnumOutcome out = ctx.enumerate(p);
    if (out.overflowed()) {
      result["order"] = json{{"overflow", true}, {"limit", ctx.limits.max_cosets}};
      order_line = "order exceeds limit " + std::to_string(ctx.limits.max_cosets);
    } else {
      MutualCertificate cert =
          mutual_surjection_certificate(p, dyck_group(l, m, n), ctx.limits);
      result["order"] = out.table->index;
      result["dyck_cross_check"] = cert.certified ? "certified" : "not certified";
      order_line = "order " + std::to_string(out.table->index) + ", von Dyck cross-check " +
                   (cert.certified ? "certified" : "NOT certified");
    }
  } else {
    result["order"] = "infinite";
    order_line = "infinite (";
    order_line += cls.kind == TriangleKind::euclidean ? "euclidean" : "hyperbolic";
    order_line += " triangle class)";
  }

  if (!ctx.json_output) {
    std::cout << print_presentation(p) << "\n";
    std::cout << "abelian invariants " << invariants_to_json(inv)["invariant_factors"].dump()
              << "\n";
    std::cout << order_line << "\n";
  }
  ctx.emit("dbc", params_json({{"l", l}, {"m", m}, {"n", n}}), result);
}

// ---- abelianize ---------------------------------------------------------------

void cmd_abelianize(CommandContext& ctx, const GroupArg& group) {
  Presentation p = group.resolve();
  AbelianInvariants inv = abelianization(p);
  if (!ctx.json_output) {
    std::cout << invariants_to_json(inv)["invariant_factors"].dump() << "\n";
  }
  ctx.emit("abelianize", params_json({{"presentation", print_presentation(p)}}),
           invariants_to_json(inv));
}

// ---- classify -----------------------------------------------------------------

void cmd_classify(CommandContext& ctx, long long l, long long m, long long n) {
  TriangleClass cls = classify_triangle(l, m, n);
  json j = triangle_to_json(cls);
  if (!ctx.json_output) {
    std::cout << j["kind"].get<std::string>();
    if (cls.dyck_order) {
      std::cout << ", dyck order " << *cls.dyck_order << ", coxeter order " << *cls.coxeter_order;
    } else {
      std::cout << ", infinite";
    }
    std::cout << "\n";
  }
  ctx.emit("classify", params_json({{"l", l}, {"m", m}, {"n", n}}), j);
}

// ---- cayley-cut ----------------------------------------------------------------

void cmd_cayley_cut(CommandContext& ctx, const GroupArg& group, std::string gens_csv) {
  Presentation p = group.resolve();
  EnumOutcome out = ctx.enumerate(p);
  if (out.overflowed()) {
    if (!ctx.json_output) std::cout << "exceeds limit " << ctx.limits.max_cosets << "\n";
    throw CommandExit{kExitResourceLimit, ""};
  }
  std::vector<std::size_t> gens;
  if (gens_csv.empty()) {
    for (std::size_t i = 0; i < p.rank(); ++i) gens.push_back(i);
  } else {
    std::stringstream ss(gens_csv);
    std::string name;
    while (std::getline(ss, name, ',')) {
      auto idx = p.generator_index(name);
      if (!idx) throw CommandExit{kExitInputError, "unknown generator '" + name + "'"};
      gens.push_back(*idx);
    }
  }
  SimpleGraph graph = build_cayley(perm_rep(*out.table), gens);
  auto cuts = articulation_points(graph);
  if (!ctx.json_output) {
    if (cuts.empty()) {
      std::cout << "no cut vertices (order " << graph.n << ", " << graph.edge_count()
                << " edges)\n";
    } else {
      std::cout << cuts.size() << " cut vertices:";
      for (auto v : cuts) std::cout << " " << v;
      std::cout << "\n";
    }
  }
  json result{{"graph", graph_to_json(graph)}, {"cut_vertices", cuts}};
  ctx.emit("cayley-cut", params_json({{"presentation", print_presentation(p)}}), result);
}

// ---- paper-suite ----------------------------------------------------------------

void cmd_paper_suite(CommandContext& ctx, bool inject_fault) {
  SuiteOptions options;
  options.limits = ctx.limits;
  options.inject_fault = inject_fault;
  SuiteReport report = run_verification_suite(options);
  if (!ctx.json_output) {
    for (const auto& c : report.checks) {
      std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": expected " << c.expected
                << ", computed " << c.computed << "\n";
    }
    std::size_t failed = 0;
    for (const auto& c : report.checks) failed += c.pass ? 0 : 1;
    std::cout << (report.all_pass ? "all checks passed"
                                  : std::to_string(failed) + " check(s) failed")
              << "\n";
  } else {
    json checks = json::array();
    for (const auto& c : report.checks) {
      checks.push_back(json{{"name", c.name},
                            {"expected", c.expected},
                            {"computed", c.computed},
                            {"pass", c.pass}});
    }
    ctx.emit("paper-suite", params_json({}),
             json{{"checks", std::move(checks)}, {"all_pass", report.all_pass}});
  }
  if (!report.all_pass) throw CommandExit{kExitCheckFailed, ""};
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finitely presented group computations for pretzel Klein bottles"};
  app.require_subcommand(1);

  CommandContext ctx;
  ctx.limits.max_cosets = default_max_cosets();
  app.add_flag("--json", ctx.json_output, "emit a JSON report on stdout");
  app.add_option("--max-cosets", ctx.limits.max_cosets, "coset limit for enumerations")
      ->check(CLI::PositiveNumber);

  // build
  auto* build = app.add_subcommand("build", "print a presentation from the builder family");
  std::string build_kind;
  long long bl = 0, bm = 0, bn = 0;
  build->add_option("kind", build_kind,
                    "one of: klein, wirtinger, wirtinger-klein, coxeter, dyck, paper-dbc")
      ->required();
  build->add_option("l", bl)->required();
  build->add_option("m", bm)->required();
  build->add_option("n", bn)->required();
  build->callback([&] { cmd_build(ctx, build_kind, bl, bm, bn); });

  // order
  auto* order = app.add_subcommand("order", "group order by coset enumeration");
  GroupArg order_group;
  order_group.attach(order);
  order->callback([&] { cmd_order(ctx, order_group); });

  // element-order
  auto* elord = app.add_subcommand("element-order", "order of a word's image in the group");
  GroupArg elord_group;
  std::string elord_word;
  elord_group.attach(elord);
  elord->add_option("--word", elord_word, "word over the group's generators")->required();
  elord->callback([&] { cmd_element_order(ctx, elord_group, elord_word); });

  // meridian-order
  auto* meridian = app.add_subcommand("meridian-order",
                                      "order of the meridian a, directly or via a finite quotient");
  long long ml = 0, mm = 0, mn = 0;
  meridian->add_option("l", ml)->required();
  meridian->add_option("m", mm)->required();
  meridian->add_option("n", mn)->required();
  meridian->callback([&] { cmd_meridian_order(ctx, ml, mm, mn); });

  // hom-check
  auto* hom = app.add_subcommand("hom-check", "test a generator assignment for being a hom");
  GroupArg hom_from, hom_to;
  std::vector<std::string> hom_sends;
  hom->add_option("--from", hom_from.positional, "source presentation (inline or file)")
      ->required();
  hom->add_option("--to", hom_to.positional, "target presentation (inline or file)")->required();
  hom->add_option("--send", hom_sends, "generator=word assignment (repeatable)")
      ->take_all();
  hom->callback([&] { cmd_hom_check(ctx, hom_from, hom_to, hom_sends); });

  // ses
  auto* ses = app.add_subcommand("ses", "short exact sequence report for klein(2,3,delta)");
  int ses_delta = 0;
  ses->add_option("delta", ses_delta, "3 or 5")->required();
  ses->callback([&] { cmd_ses(ctx, ses_delta); });

  // dbc
  auto* dbc = app.add_subcommand("dbc", "double branched cover group via Reidemeister-Schreier");
  long long dl = 0, dm = 0, dn = 0;
  dbc->add_option("l", dl)->required();
  dbc->add_option("m", dm)->required();
  dbc->add_option("n", dn)->required();
  dbc->callback([&] { cmd_dbc(ctx, dl, dm, dn); });

  // abelianize
  auto* ab = app.add_subcommand("abelianize", "invariant factors of the abelianization");
  GroupArg ab_group;
  ab_group.attach(ab);
  ab->callback([&] { cmd_abelianize(ctx, ab_group); });

  // classify
  auto* classify = app.add_subcommand("classify", "triangle trichotomy for parameters l m n");
  long long cl = 0, cm = 0, cn = 0;
  classify->add_option("l", cl)->required();
  classify->add_option("m", cm)->required();
  classify->add_option("n", cn)->required();
  classify->callback([&] { cmd_classify(ctx, cl, cm, cn); });

  // cayley-cut
  auto* cayley = app.add_subcommand("cayley-cut", "cut vertices of a finite Cayley graph");
  GroupArg cayley_group;
  std::string cayley_gens;
  cayley_group.attach(cayley);
  cayley->add_option("--gens", cayley_gens, "comma-separated generator names (default: all)");
  cayley->callback([&] { cmd_cayley_cut(ctx, cayley_group, cayley_gens); });

  // paper-suite
  auto* suite = app.add_subcommand("paper-suite", "run the built-in verification battery");
  bool inject_fault = false;
  suite->add_flag("--inject-fault", inject_fault)->group("");
  suite->callback([&] { cmd_paper_suite(ctx, inject_fault); });

  // Global flags (--json, --max-cosets) are accepted after the subcommand too.
  for (auto* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitInputError;
  } catch (const CommandExit& e) {
    if (!e.message.empty()) std::cerr << "error: " << e.message << "\n";
    return e.code;
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::overflow_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitOk;
}
