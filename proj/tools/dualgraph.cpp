// Command-line calculator for normal surface singularities presented as
// weighted dual graphs: fundamental cycles, genera, Yau sequences, canonical
// cycles, classification data and brute-force verification of the closed-form
// statements.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dualgraph/canonical.hpp"
#include "dualgraph/classify.hpp"
#include "dualgraph/enumerate.hpp"
#include "dualgraph/errors.hpp"
#include "dualgraph/fundamental.hpp"
#include "dualgraph/genus.hpp"
#include "dualgraph/graphio.hpp"
#include "dualgraph/oracle.hpp"
#include "dualgraph/yau.hpp"

namespace {

using dualgraph::Coeff;
using dualgraph::Cycle;
using dualgraph::RationalCycle;
using dualgraph::WeightedDualGraph;
using ordered_json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitInputError = 2;

std::string format_cycle(const WeightedDualGraph& g, const Cycle& c) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << ' ';
    os << g.name(i) << '=' << c[i];
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string format_cycle(const WeightedDualGraph& g, const RationalCycle& c) {
  std::ostringstream os;
  bool first = true;
  for (int i = 0; i < g.size(); ++i) {
    if (c[i] == 0) continue;
    if (!first) os << ' ';
    os << g.name(i) << '=' << c[i].get_str();
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

ordered_json cycle_json(const WeightedDualGraph& g, const Cycle& c) {
  ordered_json j = ordered_json::object();
  for (int i = 0; i < g.size(); ++i) j[g.name(i)] = c[i];
  return j;
}

ordered_json cycle_json(const WeightedDualGraph& g, const RationalCycle& c) {
  ordered_json j = ordered_json::object();
  for (int i = 0; i < g.size(); ++i) j[g.name(i)] = c[i].get_str();
  return j;
}

ordered_json report_json(const dualgraph::TheoremReport& r) {
  ordered_json j;
  j["id"] = r.id;
  j["verdict"] = dualgraph::to_string(r.verdict);
  j["hypotheses"] = ordered_json::array();
  for (const auto& h : r.hypotheses) j["hypotheses"].push_back({{"name", h.name}, {"holds", h.holds}});
  if (r.applicable()) {
    j["predicted"] = r.predicted;
    j["computed"] = r.computed;
  }
  if (!r.note.empty()) j["note"] = r.note;
  return j;
}

struct CommandContext {
  std::string file;
  bool json = false;
  bool no_check = false;

  WeightedDualGraph load() const {
    return dualgraph::parse_graph_file(file, {.require_negative_definite = !no_check});
  }
};

void emit(const ordered_json& j) { std::cout << j.dump(2) << "\n"; }

int cmd_fundamental(const CommandContext& ctx) {
  const WeightedDualGraph g = ctx.load();
  const auto result = dualgraph::fundamental_cycle(g);
  const Coeff z2 = intersect(g, result.cycle, result.cycle);
  if (ctx.json) {
    ordered_json j;
    j["z"] = cycle_json(g, result.cycle);
    j["z_squared"] = z2;
    j["sequence"] = ordered_json::array();
    for (int step : result.sequence.steps) j["sequence"].push_back(g.name(step));
    emit(j);
  } else {
    std::cout << "Z: " << format_cycle(g, result.cycle) << "\n";
    std::cout << "Z^2 = " << z2 << "\n";
    std::cout << "computation sequence length: " << result.sequence.steps.size() << "\n";
  }
  return kExitOk;
}

int cmd_genus(const CommandContext& ctx) {
  const WeightedDualGraph g = ctx.load();
  const Cycle z = dualgraph::fundamental_cycle(g).cycle;
  const Coeff z2 = intersect(g, z, z);
  const Coeff chi_z = dualgraph::chi(g, z);
  const Coeff pf = dualgraph::arithmetic_genus(g, z);
  if (ctx.json) {
    ordered_json j;
    j["z"] = cycle_json(g, z);
    j["degree"] = -z2;
    j["chi_z"] = chi_z;
    j["p_f"] = pf;
    j["minimal_resolution"] = g.is_minimal_resolution();
    emit(j);
  } else {
    std::cout << "Z: " << format_cycle(g, z) << "\n";
    std::cout << "degree = " << -z2 << "\n";
    std::cout << "chi(Z) = " << chi_z << "\n";
    std::cout << "p_f = " << pf << "\n";
    std::cout << "minimal resolution: " << (g.is_minimal_resolution() ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_yau(const CommandContext& ctx) {
  const WeightedDualGraph g = ctx.load();
  const auto yau = dualgraph::yau_sequence(g);
  const Coeff pf = dualgraph::arithmetic_genus(g, yau.z());
  const Coeff pa_y = dualgraph::arithmetic_genus(g, yau.yau_cycle);
  if (ctx.json) {
    ordered_json j;
    j["p_f"] = pf;
    j["m"] = yau.length;
    j["z_min"] = cycle_json(g, yau.z_min);
    j["sequence"] = ordered_json::array();
    for (const Cycle& d : yau.sequence) j["sequence"].push_back(cycle_json(g, d));
    j["yau_cycle"] = cycle_json(g, yau.yau_cycle);
    j["pa_yau_cycle"] = pa_y;
    emit(j);
  } else {
    std::cout << "p_f = " << pf << "\n";
    std::cout << "Z_min: " << format_cycle(g, yau.z_min) << "\n";
    std::cout << "m = " << yau.length << "\n";
    for (std::size_t i = 0; i < yau.sequence.size(); ++i)
      std::cout << "D_" << (i + 1) << ": " << format_cycle(g, yau.sequence[i]) << "\n";
    std::cout << "Y: " << format_cycle(g, yau.yau_cycle) << "\n";
    std::cout << "p_a(Y) = " << pa_y << " = m (p_f - 1) + 1\n";
  }
  return kExitOk;
}

int cmd_canonical(const CommandContext& ctx) {
  const WeightedDualGraph g = ctx.load();
  const auto can = dualgraph::canonical_cycle(g);
  const auto reports = dualgraph::check_canonical_theorems(g);
  if (ctx.json) {
    ordered_json j;
    j["z_k"] = cycle_json(g, can.z_k);
    j["numerically_gorenstein"] = can.is_numerically_gorenstein;
    j["checks"] = ordered_json::array();
    for (const auto& r : reports) j["checks"].push_back(report_json(r));
    emit(j);
  } else {
    std::cout << "Z_K: " << format_cycle(g, can.z_k) << "\n";
    std::cout << "numerically Gorenstein: " << (can.is_numerically_gorenstein ? "yes" : "no")
              << "\n";
    for (const auto& r : reports) std::cout << r.to_text() << "\n";
  }
  return kExitOk;
}

int cmd_classify(const CommandContext& ctx) {
  const WeightedDualGraph g = ctx.load();
  const auto cr = dualgraph::classify(g);
  if (ctx.json) {
    ordered_json j;
    j["essentially_irreducible"] = cr.ei.holds;
    if (cr.ei.holds) {
      j["special_vertex"] = g.name(cr.ei.special_vertex);
      j["k"] = cr.ei.k;
      j["branches"] = ordered_json::array();
      for (std::size_t i = 0; i < cr.branches.size(); ++i) {
        ordered_json b;
        b["vertices"] = ordered_json::array();
        for (int v : cr.branches[i]) b["vertices"].push_back(g.name(v));
        if (cr.branch_shapes[i]) {
          b["type"] = std::string(1, cr.branch_shapes[i]->family) +
                      std::to_string(cr.branch_shapes[i]->rank);
        }
        b["in_negative_set"] =
            std::find(cr.negative_set.begin(), cr.negative_set.end(), static_cast<int>(i)) !=
            cr.negative_set.end();
        j["branches"].push_back(b);
      }
      j["gamma_prime"] = ordered_json::array();
      for (int v : cr.gamma_prime) j["gamma_prime"].push_back(g.name(v));
      j["yau_length"] = cr.yau_length;
      if (cr.matched.case_id != 0) {
        ordered_json mc;
        mc["case"] = cr.matched.case_id;
        if (cr.matched.case_id == 1) {
          mc["m_prime"] = cr.matched.m_prime;
          mc["n_prime"] = cr.matched.n_prime;
        } else {
          mc["n_prime"] = cr.matched.n_prime;
        }
        if (cr.matched.case_id == 4) mc["k_prime"] = cr.matched.k_prime;
        if (cr.matched.case_id == 2 || cr.matched.case_id == 5)
          mc["edge_to_A"] = (cr.matched.variant == 1 ? "single" : "double");
        j["matched"] = mc;
        j["dm_restricted"] = cycle_json(g, cr.dm_restricted);
        j["zmin_restricted"] = cycle_json(g, cr.zmin_restricted);
        j["admissible"] = cr.admissible;
      } else {
        j["matched"] = nullptr;
      }
      j["dm_equals_zmin"] = cr.dm_equals_zmin;
    }
    emit(j);
  } else {
    if (!cr.ei.holds) {
      std::cout << "essentially irreducible: no\n";
      return kExitOk;
    }
    std::cout << "essentially irreducible: yes (A = " << g.name(cr.ei.special_vertex)
              << ", k = " << cr.ei.k << ")\n";
    for (std::size_t i = 0; i < cr.branches.size(); ++i) {
      std::cout << "branch " << (i + 1) << ":";
      if (cr.branch_shapes[i])
        std::cout << " " << cr.branch_shapes[i]->family << cr.branch_shapes[i]->rank;
      std::cout << " {";
      for (int v : cr.branches[i]) std::cout << ' ' << g.name(v);
      std::cout << " }";
      if (std::find(cr.negative_set.begin(), cr.negative_set.end(), static_cast<int>(i)) !=
          cr.negative_set.end())
        std::cout << " [in S]";
      std::cout << "\n";
    }
    std::cout << "Gamma':";
    for (int v : cr.gamma_prime) std::cout << ' ' << g.name(v);
    std::cout << "\n";
    std::cout << "m = " << cr.yau_length << "\n";
    if (cr.yau_length > 1) {
      if (cr.matched.case_id == 0) {
        std::cout << "matched case: unmatched (warning: outside the classified shapes)\n";
      } else {
        std::cout << "matched case: " << cr.matched.case_id;
        if (cr.matched.case_id == 1)
          std::cout << " (m'=" << cr.matched.m_prime << ", n'=" << cr.matched.n_prime << ")";
        else
          std::cout << " (n'=" << cr.matched.n_prime << ")";
        if (cr.matched.case_id == 4) std::cout << " (k'=" << cr.matched.k_prime << ")";
        if (cr.matched.case_id == 2 || cr.matched.case_id == 5)
          std::cout << (cr.matched.variant == 1 ? " [single edge]" : " [double edge]");
        std::cout << "\n";
        std::cout << "D_m|Gamma' (table): " << format_cycle(g, cr.dm_restricted) << "\n";
        std::cout << "Z_min|Gamma' (table): " << format_cycle(g, cr.zmin_restricted) << "\n";
        std::cout << "admissible (tables predict D_m = Z_min): " << (cr.admissible ? "yes" : "no")
                  << "\n";
      }
    }
    std::cout << "computed D_m = Z_min: " << (cr.dm_equals_zmin ? "yes" : "no") << "\n";
  }
  return kExitOk;
}

int cmd_pa_max(const CommandContext& ctx, Coeff bound) {
  const WeightedDualGraph g = ctx.load();
  const auto result = dualgraph::pa_max(g, bound);
  if (ctx.json) {
    ordered_json j;
    j["pa_max"] = result.value;
    j["maximizer"] = cycle_json(g, result.maximizer);
    j["box_bound"] = result.box_bound;
    j["boundary_clear"] = result.boundary_clear;
    emit(j);
  } else {
    std::cout << "p_a(V,o) = " << result.value << "\n";
    std::cout << "maximizer: " << format_cycle(g, result.maximizer) << "\n";
    std::cout << "box bound = " << result.box_bound
              << (result.boundary_clear ? " (interior certificate holds)" : "") << "\n";
  }
  return kExitOk;
}

int cmd_verify(const CommandContext& ctx, const std::string& theorem) {
  const WeightedDualGraph g = ctx.load();
  std::vector<dualgraph::TheoremReport> reports;
  if (theorem.empty()) {
    reports = dualgraph::verify_all(g);
  } else {
    reports.push_back(dualgraph::verify_named(g, theorem));
  }
  bool failed = false;
  for (const auto& r : reports)
    if (r.verdict == dualgraph::Verdict::fail) failed = true;
  if (ctx.json) {
    ordered_json j = ordered_json::array();
    for (const auto& r : reports) j.push_back(report_json(r));
    emit(j);
  } else {
    for (const auto& r : reports) std::cout << r.to_text() << "\n";
  }
  return failed ? kExitCheckFailed : kExitOk;
}

int cmd_enumerate(const dualgraph::EnumerationOptions& options, bool json) {
  const auto summary = dualgraph::enumerate_and_verify(options);
  if (json)
    std::cout << summary.to_json();
  else
    std::cout << summary.to_text();
  int written = 0;
  for (const auto& f : summary.failures) {
    const std::string path = "enumerate-failure-" + std::to_string(written++) + ".graph";
    std::ofstream out(path);
    out << "# " << f.check_id << ": " << f.detail << "\n" << f.graph;
    std::cerr << "wrote reproducer " << path << "\n";
  }
  return summary.all_passed() ? kExitOk : kExitCheckFailed;
}

int cmd_dot(const CommandContext& ctx) {
  const WeightedDualGraph g = ctx.load();
  std::cout << dualgraph::to_dot(g);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact calculator for weighted dual graphs of normal surface singularities"};
  app.require_subcommand(1);

  CommandContext ctx;
  Coeff pa_bound = 0;
  std::string theorem;
  dualgraph::EnumerationOptions enum_options;
  bool enum_json = false;

  auto add_graph_command = [&](const std::string& name, const std::string& help) {
    CLI::App* cmd = app.add_subcommand(name, help);
    cmd->add_option("file", ctx.file, "graph file (text or JSON)")->required();
    cmd->add_flag("--json", ctx.json, "emit JSON instead of text");
    cmd->add_flag("--no-check", ctx.no_check, "skip the negative-definiteness check");
    return cmd;
  };

  CLI::App* fundamental = add_graph_command("fundamental", "fundamental cycle and its Laufer computation sequence");
  CLI::App* genus = add_graph_command("genus", "degree, chi(Z) and the fundamental genus");
  CLI::App* yau = add_graph_command("yau", "Yau sequence, Yau cycle and Z_min");
  CLI::App* canonical = add_graph_command("canonical", "canonical cycle and the canonical-cycle checks");
  CLI::App* classify = add_graph_command("classify", "essential irreducibility, Gamma' and the matched shape");
  CLI::App* pa_max_cmd = add_graph_command("pa-max", "brute-force arithmetic genus p_a(V,o)");
  pa_max_cmd->add_option("--bound", pa_bound, "initial per-coordinate search bound");
  CLI::App* verify = add_graph_command("verify", "check the closed-form statements on one graph");
  verify->add_option("--theorem", theorem, "A, B, C or a statement number (3.2, 3.6, 3.8, 3.9, ...)");
  CLI::App* dot = add_graph_command("dot", "Graphviz DOT export");

  CLI::App* enumerate = app.add_subcommand("enumerate", "enumerate small graphs and verify every statement");
  enumerate->add_option("--max-vertices", enum_options.max_vertices, "vertex cap (default 8)");
  enumerate->add_flag("--json", enum_json, "emit JSON instead of text");
  bool vary_all = false;
  enumerate->add_flag("--all-vertices", vary_all, "vary weight/genus on every vertex instead of one special vertex");
  enumerate->add_option("--special-weights", enum_options.special_weights, "weights for the special vertex");
  enumerate->add_option("--special-genera", enum_options.special_genera, "genera for the special vertex");
  enumerate->add_option("--weights", enum_options.weights, "all-vertices mode weight palette");
  enumerate->add_option("--genera", enum_options.genera, "all-vertices mode genus palette");
  enumerate->add_option("--threads", enum_options.threads, "worker threads (0 = hardware)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (fundamental->parsed()) return cmd_fundamental(ctx);
    if (genus->parsed()) return cmd_genus(ctx);
    if (yau->parsed()) return cmd_yau(ctx);
    if (canonical->parsed()) return cmd_canonical(ctx);
    if (classify->parsed()) return cmd_classify(ctx);
    if (pa_max_cmd->parsed()) return cmd_pa_max(ctx, pa_bound);
    if (verify->parsed()) return cmd_verify(ctx, theorem);
    if (dot->parsed()) return cmd_dot(ctx);
    if (enumerate->parsed()) {
      enum_options.vary_all_vertices = vary_all;
      return cmd_enumerate(enum_options, enum_json);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitInputError;
  }
  return kExitInputError;
}
