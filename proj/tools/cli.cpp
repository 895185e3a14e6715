#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "glc/colour_engine.hpp"
#include "glc/errors.hpp"
#include "glc/families.hpp"
#include "glc/gadget_dd.hpp"
#include "glc/graph.hpp"
#include "glc/random.hpp"
#include "glc/separation_lab.hpp"
#include "glc/star_kmn.hpp"

namespace glc::cli {

namespace {

using Json = nlohmann::ordered_json;

struct Options {
  std::string graph;
  std::string family;
  std::string lists_path;
  std::string case_name;
  std::size_t n = 0;
  std::size_t k = 2;
  std::size_t m = 0;
  std::size_t d = 0;
  std::optional<std::size_t> gadget_n;
  std::size_t trials = 200;
  std::size_t greedy_samples = 20;
  std::size_t palette = 0;
  std::uint64_t seed = 0;
  std::uint64_t max_nodes = SearchLimits{}.max_nodes;
  std::uint64_t max_assignments = SearchLimits{}.max_assignments;
  unsigned jobs = 1;
  bool json = false;
  std::string out_graph;
  std::string out_lists;
  std::string report_path;

  SearchLimits limits() const { return {max_nodes, max_assignments, jobs}; }
};

Graph resolve_graph(const std::string& spec) {
  if (std::filesystem::is_regular_file(spec)) return load_graph(spec);
  return make_named(spec);
}

ListAssignment load_lists(const std::string& path, std::size_t vertex_count) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open list file " + path);
  return read_list_assignment(in, vertex_count);
}

std::string rational_text(const Rational& r) {
  auto text = std::to_string(r.numerator());
  if (r.denominator() != 1) text += "/" + std::to_string(r.denominator());
  return text;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot write " + path);
  out << text;
}

std::string lists_text(const ListAssignment& lists) {
  std::ostringstream s;
  write_list_assignment(s, lists);
  return s.str();
}

std::string colouring_text(const Colouring& phi) {
  std::ostringstream s;
  write_colouring(s, phi);
  return s.str();
}

Json colouring_json(const Colouring& phi) { return Json(phi.colours()); }

// Each command writes to `out` and returns its exit code.

int run_member(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto f = parse_family(o.family);
  const bool result = member(g, f);
  if (o.json) {
    out << Json{{"command", "member"}, {"family", to_string(f)}, {"member", result}}.dump() << "\n";
  } else {
    out << (result ? "true" : "false") << "\n";
  }
  return result ? kOk : kFalseVerdict;
}

int run_chi(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto f = parse_family(o.family);
  const auto phi = optimal_colouring(g, f, o.limits());
  const auto value = phi.image().size();
  if (o.json) {
    out << Json{{"command", "chi"}, {"family", to_string(f)}, {"chi", value},
                {"colouring", colouring_json(phi)}}.dump()
        << "\n";
  } else {
    out << value << "\n";
  }
  return kOk;
}

int run_ch(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto f = parse_family(o.family);
  const auto value = ch(g, f, o.limits());
  if (o.json) {
    out << Json{{"command", "ch"}, {"family", to_string(f)}, {"ch", value}}.dump() << "\n";
  } else {
    out << value << "\n";
  }
  return kOk;
}

int run_choosable(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto f = parse_family(o.family);
  if (o.n == 0) throw std::invalid_argument("--n must be positive");
  const auto verdict = is_n_choosable(g, o.n, f, o.limits());
  if (o.json) {
    Json j{{"command", "choosable"},
           {"family", to_string(f)},
           {"n", o.n},
           {"choosable", verdict.choosable},
           {"assignments_checked", verdict.assignments_checked},
           {"core_size", verdict.core_size}};
    if (verdict.bad_assignment) j["bad_assignment"] = verdict.bad_assignment->lists();
    out << j.dump() << "\n";
  } else {
    out << (verdict.choosable ? "true" : "false") << "\n";
    if (verdict.bad_assignment) out << lists_text(*verdict.bad_assignment);
  }
  return verdict.choosable ? kOk : kFalseVerdict;
}

int run_colour_list(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto f = parse_family(o.family);
  const auto lists = load_lists(o.lists_path, g.vertex_count());
  const auto phi = find_list_colouring(g, lists, f, o.limits());
  if (o.json) {
    Json j{{"command", "colour-list"}, {"family", to_string(f)}, {"found", phi.has_value()}};
    if (phi) j["colouring"] = colouring_json(*phi);
    out << j.dump() << "\n";
  } else if (phi) {
    out << colouring_text(*phi);
  } else {
    out << "none\n";
  }
  return phi ? kOk : kFalseVerdict;
}

int run_star_kmn(const Options& o, std::ostream& out) {
  if (o.k < 2) throw std::invalid_argument("--k must be at least 2");
  if (o.n == 0) throw std::invalid_argument("--n must be positive");
  const std::size_t m = star_part_size(o.k);
  const Graph g = make_complete_bipartite(m, o.n);
  ListAssignment lists;
  if (!o.lists_path.empty()) {
    lists = load_lists(o.lists_path, g.vertex_count());
  } else {
    const std::size_t palette = o.palette == 0 ? 3 * o.k : o.palette;
    Rng rng(o.seed);
    lists = random_list_assignment(g.vertex_count(), o.k, palette, rng);
  }
  const auto result = star_colour_kmn(o.k, g, lists);
  const bool valid = is_valid_list_colouring(g, lists, result.colouring, family::StarForest{});
  if (!valid) throw InvariantViolation("extension", "output is not a star-forest colouring");

  if (o.json) {
    Json trace = Json::array();
    for (auto [c, gain] : result.heavy.growth_trace) trace.push_back({c, gain});
    Json matching = Json::array();
    for (auto [v, c] : result.matching) matching.push_back({v, c});
    out << Json{{"command", "star-kmn"},
                {"k", o.k},
                {"m", m},
                {"n", o.n},
                {"c_prime", result.heavy.c_prime},
                {"a_prime", result.heavy.a_prime},
                {"growth_trace", trace},
                {"matching", matching},
                {"valid", valid},
                {"colouring", colouring_json(result.colouring)}}
               .dump()
        << "\n";
    return kOk;
  }
  out << "K_{" << m << "," << o.n << "} k=" << o.k << "\n";
  out << "C':";
  for (Colour c : result.heavy.c_prime) out << ' ' << c;
  out << "\nA':";
  for (Vertex v : result.heavy.a_prime) out << ' ' << v;
  out << "\ngrowth:";
  for (auto [c, gain] : result.heavy.growth_trace) out << ' ' << c << '+' << gain;
  out << "\nmatching:";
  for (auto [v, c] : result.matching) out << ' ' << v << "->" << c;
  out << "\nvalid: true\ncolouring:\n" << colouring_text(result.colouring);
  return kOk;
}

int run_gadget(const Options& o, std::ostream& out) {
  if (o.m == 0) throw std::invalid_argument("--m must be positive");
  const auto gadget = build_gadget(o.m, o.d, o.gadget_n);
  const bool ok = verify_gadget_structure(gadget.spec, gadget.graph, gadget.lists);
  if (!ok) throw InvariantViolation("gadget-structure", "freshly built gadget failed its check");

  if (!o.out_graph.empty()) {
    std::ostringstream s;
    write_graph(s, gadget.graph);
    write_file(o.out_graph, s.str());
  }
  if (!o.out_lists.empty()) write_file(o.out_lists, lists_text(gadget.lists));
  std::ostringstream table;
  write_block_table(table, gadget.spec);
  const auto checksum = block_table_checksum(gadget.spec);
  char hex[19];
  std::snprintf(hex, sizeof hex, "0x%016llx", static_cast<unsigned long long>(checksum));
  if (!o.report_path.empty()) {
    write_file(o.report_path, table.str() + "structure_verified true\nchecksum " + hex + "\n");
  }
  if (o.json) {
    out << Json{{"command", "gadget"},         {"m", o.m},
                {"d", o.d},                    {"n", gadget.spec.n},
                {"blocks", gadget.spec.blocks.size()},
                {"structure_verified", ok},    {"checksum", hex}}
               .dump()
        << "\n";
  } else {
    out << "gadget K_{" << o.m << "," << gadget.spec.n << "} d=" << o.d
        << " blocks=" << gadget.spec.blocks.size() << " structure_verified=true checksum=" << hex
        << "\n";
  }
  return kOk;
}

int run_separation_cmd(const Options& o, std::ostream& out) {
  SeparationOptions options;
  options.k = o.k;
  options.d = o.d;
  options.trials = o.trials;
  options.seed = o.seed;
  options.greedy_samples = o.greedy_samples;
  options.palette = o.palette;
  const auto report = run_separation(options);
  out << (o.json ? report.to_json() : report.to_text());
  return kOk;
}

int run_mad(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto value = mad(g);
  if (o.json) {
    out << Json{{"command", "mad"},
                {"numerator", value.numerator()},
                {"denominator", value.denominator()}}
               .dump()
        << "\n";
  } else {
    out << rational_text(value) << "\n";
  }
  return kOk;
}

int run_colnum(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto order = degeneracy_order(g);
  if (o.json) {
    out << Json{{"command", "colnum"},
                {"colouring_number", order.colouring_number},
                {"ordering", order.ordering}}
               .dump()
        << "\n";
  } else {
    out << order.colouring_number << "\n";
  }
  return kOk;
}

int run_inequality(const Options& o, std::ostream& out) {
  const auto g = resolve_graph(o.graph);
  const auto c = parse_inequality_case(o.case_name);
  const auto r = check_inequality(g, c, o.limits());
  if (o.json) {
    out << Json{{"command", "inequality"}, {"case", c.name}, {"constant", c.constant},
                {"lhs", r.lhs},           {"rhs", r.rhs},   {"holds", r.holds},
                {"tight", r.tight}}
               .dump()
        << "\n";
  } else {
    out << c.name << ": " << r.lhs << " <= " << r.rhs << " holds=" << (r.holds ? "true" : "false")
        << " tight=" << (r.tight ? "true" : "false") << "\n";
  }
  return r.holds ? kOk : kFalseVerdict;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized list colouring toolkit", "glc"};
  app.require_subcommand(1);
  Options o;

  auto add_limits = [&](CLI::App* sub) {
    sub->add_option("--max-nodes", o.max_nodes, "Node cap per colouring search");
    sub->add_option("--max-assignments", o.max_assignments, "Cap on enumerated list assignments");
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  };
  auto add_graph = [&](CLI::App* sub) {
    sub->add_option("--graph", o.graph, "Generator (K4, P5, C6, Kb2_4) or graph file")->required();
  };
  auto add_family = [&](CLI::App* sub) {
    sub->add_option("--family", o.family, "cluster:<k> maxdeg:<d> forest starforest linforest "
                                          "colnum:<k> mad:<p>[/<q>]")
        ->required();
  };

  std::vector<std::pair<CLI::App*, int (*)(const Options&, std::ostream&)>> commands;
  auto command = [&](const char* name, const char* help, int (*fn)(const Options&, std::ostream&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_flag("--json", o.json, "Machine-readable output");
    sub->add_option("--seed", o.seed, "Random seed");
    commands.emplace_back(sub, fn);
    return sub;
  };

  auto* member_cmd = command("member", "Family membership of a graph", run_member);
  add_graph(member_cmd);
  add_family(member_cmd);

  auto* chi_cmd = command("chi", "Exact G-chromatic number", run_chi);
  add_graph(chi_cmd);
  add_family(chi_cmd);
  add_limits(chi_cmd);

  auto* ch_cmd = command("ch", "Exact G-choice number", run_ch);
  add_graph(ch_cmd);
  add_family(ch_cmd);
  add_limits(ch_cmd);

  auto* choosable_cmd = command("choosable", "Decide n-choosability, with a witness if not",
                                run_choosable);
  add_graph(choosable_cmd);
  add_family(choosable_cmd);
  choosable_cmd->add_option("--n", o.n, "List size")->required();
  add_limits(choosable_cmd);

  auto* colour_list_cmd = command("colour-list", "Find an L-colouring", run_colour_list);
  add_graph(colour_list_cmd);
  add_family(colour_list_cmd);
  colour_list_cmd->add_option("--lists", o.lists_path, "List assignment file")->required();
  add_limits(colour_list_cmd);

  auto* star_cmd = command("star-kmn", "Star-forest colouring of K_{k(k+1)-1,n}", run_star_kmn);
  star_cmd->add_option("--k", o.k, "List size (>= 2)")->required();
  star_cmd->add_option("--n", o.n, "Size of side B")->required();
  star_cmd->add_option("--palette", o.palette, "Random colours drawn from 0..p-1 (default 3k)");
  star_cmd->add_option("--lists", o.lists_path, "Use this list file instead of random lists");

  auto* gadget_cmd = command("gadget", "Build and verify the defective-choosability gadget",
                             run_gadget);
  gadget_cmd->add_option("--m", o.m, "Size of side A")->required();
  gadget_cmd->add_option("--d", o.d, "Defect")->required();
  gadget_cmd->add_option("--n", o.gadget_n, "Size of side B (default (dm+1)*m^m)");
  gadget_cmd->add_option("--out-graph", o.out_graph, "Write the graph here");
  gadget_cmd->add_option("--out-lists", o.out_lists, "Write the list assignment here");
  gadget_cmd->add_option("--report", o.report_path, "Write the block table report here");

  auto* separation_cmd = command("separation", "Certify the ch vs ch_S separation",
                                 run_separation_cmd);
  separation_cmd->add_option("--k", o.k, "Star list size (>= 2)")->required();
  separation_cmd->add_option("--d", o.d, "Defect")->required();
  separation_cmd->add_option("--trials", o.trials, "Random star-colouring trials");
  separation_cmd->add_option("--greedy-samples", o.greedy_samples, "Random greedy samples");
  separation_cmd->add_option("--palette", o.palette, "Palette for star trials (default 3k)");

  auto* mad_cmd = command("mad", "Exact maximum average degree", run_mad);
  add_graph(mad_cmd);

  auto* colnum_cmd = command("colnum", "Colouring number (degeneracy + 1)", run_colnum);
  add_graph(colnum_cmd);

  auto* inequality_cmd = command("inequality", "Check chi_G <= c * chi_G' on a graph",
                                 run_inequality);
  add_graph(inequality_cmd);
  inequality_cmd->add_option("--case", o.case_name,
                             "proper-forest, star-forest, proper-mad:<k>, cluster:<k>:<k'>")
      ->required();
  add_limits(inequality_cmd);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kUsage;
  }

  for (auto [sub, fn] : commands) {
    if (!sub->parsed()) continue;
    try {
      return fn(o, out);
    } catch (const BudgetExceeded& e) {
      err << "budget exceeded: " << e.what() << "\n";
      return kBudget;
    } catch (const InvariantViolation& e) {
      err << "internal invariant violation: " << e.what() << "\n";
      return kInvariant;
    } catch (const std::invalid_argument& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    } catch (const std::out_of_range& e) {
      err << "error: " << e.what() << "\n";
      return kUsage;
    }
  }
  err << app.help();
  return kUsage;
}

}  // namespace glc::cli
