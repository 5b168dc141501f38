#include <functional>
#include <ostream>
#include <vector>

#include <CLI11.hpp>

#include "report.hpp"
#include "ukd_cli/cli.hpp"

namespace ukd::cli {

namespace {

constexpr const char* kCsvSchemas = R"(CSV columns:
  check         ukd,ir,x,position_x,position_next
  path          step,node
  count         k,n,method,count
  series        n,count
  gf            power,numerator,denominator
  prohibitions  length,pattern
  graph         pattern_length,labelled,nodes,arcs,scc
  poset         relation,u,v   (relation is cover or incomparable)
  classify      realizations,walks
  crucial       k,n,crucial    (crucial is empty when none exists)
  ir-dist       ir,count
  m-dist        m,count
  realize       permutation

Exit status: 0 success, 2 usage or invalid input, 3 budget exceeded,
4 engines disagree or a fit does not verify, 1 internal error.)";

std::string csv_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string render(const Report& report, const std::string& format) {
  if (report.dot) return *report.dot;
  std::string out;
  if (format == "csv") {
    auto line = [&](const std::vector<std::string>& fields) {
      for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
      }
      out += '\n';
    };
    line(report.csv_header);
    for (const auto& row : report.csv_rows) line(row);
  } else if (format == "plain") {
    for (const auto& text : report.plain) out += text + '\n';
  } else {
    Json envelope;
    envelope["schema_version"] = "1";
    envelope["command"] = report.command;
    envelope["parameters"] = report.parameters;
    envelope["method"] = report.method;
    envelope["result"] = report.result;
    out = envelope.dump() + '\n';
  }
  return out;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Uniquely k-determined permutations: counting, prohibitions, overlap graphs and posets",
               "ukd"};
  app.require_subcommand(1);
  app.footer(kCsvSchemas);

  Options o;
  std::function<Report(const Options&)> action;

  auto add = [&](const char* name, const char* help, Report (*fn)(const Options&)) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "csv", "plain"}))
        ->capture_default_str();
    sub->add_flag("--seedless", o.seedless, "Accepted for reproducible scripts; output never depends on a seed");
    sub->callback([&action, fn] { action = fn; });
    return sub;
  };
  auto with_perm = [&](CLI::App* sub) {
    sub->add_option("permutation", o.permutation, "Permutation, compact (13542) or comma separated (1,3,5,4,2)")
        ->required();
    return sub;
  };
  auto with_k = [&](CLI::App* sub) {
    sub->add_option("--k", o.k, "Window length")->capture_default_str();
    return sub;
  };
  auto with_n = [&](CLI::App* sub, const char* help) {
    sub->add_option("--n", o.n, help);
    return sub;
  };
  auto with_budget_n = [&](CLI::App* sub) {
    sub->add_option("--budget-n", o.budget_n, "Largest n for exhaustive enumeration of S_n")
        ->capture_default_str();
    return sub;
  };
  auto with_budget_nodes = [&](CLI::App* sub) {
    sub->add_option("--budget-nodes", o.budget_nodes,
                    "Most candidate patterns enumerated when building a graph (0: per-engine default)")
        ->capture_default_str();
    return sub;
  };
  auto with_variant = [&](CLI::App* sub) {
    sub->add_option("--variant", o.variant, "Transfer graph: node (node-based) or arc (arc-labeled)")
        ->check(CLI::IsMember({"node", "arc"}));
    return sub;
  };

  with_k(with_perm(add("check", "Decide unique k-determination and report a violated pair", cmd_check)));
  with_k(with_perm(add("path", "Window path of a permutation, and its Hamiltonian path when unique", cmd_path)));

  auto* count = with_variant(with_budget_nodes(with_budget_n(
      with_n(with_k(add("count", "Number of uniquely k-determined n-permutations", cmd_count)), "Length"))));
  count->add_option("--method", o.method, "Counting engine")
      ->check(CLI::IsMember({"auto", "brute", "hamiltonian", "transfer"}))
      ->capture_default_str();

  with_budget_nodes(with_n(with_k(add("series", "Counts for n = 0..N, cross-checked between engines", cmd_series)),
                           "Largest n"));

  auto* gf = with_budget_nodes(
      with_n(with_k(add("gf", "Fit a rational generating function to the counts", cmd_gf)), "Largest n fitted (default 24)"));
  gf->add_option("--degree-bound", o.degree_bound, "Largest recurrence order accepted")->capture_default_str();

  with_k(add("prohibitions", "Irreducible prohibited patterns", cmd_prohibitions));

  auto* graph = with_variant(with_budget_nodes(with_k(add("graph", "Overlap graph P_k or its pruned transfer graph", cmd_graph))));
  graph->add_flag("--pruned", o.pruned, "Transfer graph whose walks are the uniquely k-determined permutations");
  graph->add_flag("--dot", o.dot, "Emit DOT instead of statistics");

  auto* poset = with_k(with_perm(add("poset", "Value poset forced by the window path", cmd_poset)));
  poset->add_flag("--dot", o.dot, "Emit the Hasse diagram as DOT");

  with_budget_nodes(with_budget_n(with_n(
      with_k(add("classify", "Classify the walks of P_k by how many permutations realise them", cmd_classify)),
      "Permutation length")));

  auto* crucial = with_budget_n(with_k(add("crucial", "Search for crucial permutations", cmd_crucial)));
  crucial->add_option("--max-n", o.max_n, "Largest n searched (default 9)");

  with_budget_n(with_n(add("ir-dist", "Distribution of the IR index over S_n", cmd_ir_dist), "Length"));
  with_budget_n(with_n(with_k(add("m-dist", "How many n-permutations are m-k-determined, by m", cmd_m_dist)),
                       "Length"));
  with_k(with_perm(add("realize", "All permutations sharing the window path of a permutation", cmd_realize)));

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    const auto chosen = app.get_subcommands();
    out << (chosen.empty() ? app.help() : chosen.front()->help());
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    for (const auto* sub : app.get_subcommands()) err << sub->help();
    if (app.get_subcommands().empty()) err << app.help();
    return kUsageError;
  }

  try {
    out << render(action(o), o.format);
    return kOk;
  } catch (const InvalidInput& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const ResourceLimit& e) {
    err << "budget exceeded: " << e.what() << '\n';
    return kResourceLimit;
  } catch (const ConsistencyError& e) {
    err << "consistency failure: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const FitFailure& e) {
    err << "fit failed: " << e.what() << '\n';
    return kConsistencyError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << '\n';
    return kInternalError;
  }
}

}  // namespace ukd::cli
