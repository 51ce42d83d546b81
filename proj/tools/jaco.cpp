// jaco: command-line front end for the Jaco graph engine.
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jaco/commands.hpp"

namespace {

using jaco::Count;
namespace cli = jaco::cli;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jaco graph J_n(1) engine: degree tables, edge counts, exports"};
  app.require_subcommand(1);
  app.fallthrough();

  cli::Options opts;
  std::string out_path;
  app.add_flag("--json", opts.json, "Machine-readable JSON output");
  app.add_flag("--bare", opts.bare, "Omit the versioned header comment");
  app.add_flag("--force", opts.force, "Run the brute-force oracle past its size guard");
  app.add_option("--out", out_path, "Write output to FILE instead of stdout");

  Count n = 0;
  std::string format;
  std::string method = "all";

  auto* table = app.add_subcommand("table", "Degree table rows 1..n");
  table->add_option("n", n, "Number of rows")->required();
  format = "csv";
  table->add_option("--format", format, "csv | pretty")->check(CLI::IsMember({"csv", "pretty"}));

  auto* edges = app.add_subcommand("edges", "Edge count of J_n(1)");
  edges->add_option("n", n, "Vertex count")->required();
  edges->add_option("--method", method, "oracle | fisher | zeckendorf | reconstruction | all")
      ->check(CLI::IsMember({"oracle", "fisher", "zeckendorf", "reconstruction", "all"}));

  Count lo = 0;
  Count hi = 0;
  auto* crosscheck = app.add_subcommand("crosscheck", "Compare every method over lo..hi");
  crosscheck->add_option("lo", lo, "First n")->required();
  crosscheck->add_option("hi", hi, "Last n")->required();

  std::string export_format = "edgelist";
  auto* exp = app.add_subcommand("export", "Arc list of J_n(1)");
  exp->add_option("n", n, "Vertex count")->required();
  exp->add_option("--format", export_format, "edgelist | dot")
      ->check(CLI::IsMember({"edgelist", "dot"}));

  auto* zeck = app.add_subcommand("zeck", "Zeckendorf form of n with d+(v_n) and d-(v_n)");
  zeck->add_option("n", n, "Positive integer")->required();

  std::vector<Count> bench_ns;
  auto* bench = app.add_subcommand("bench", "Time each method on the given sizes");
  bench->add_option("n", bench_ns, "Sizes to benchmark");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return cli::kExitUsage;
  }

  std::ofstream file;
  if (!out_path.empty()) {
    file.open(out_path);
    if (!file) {
      std::cerr << "error: cannot open " << out_path << " for writing\n";
      return cli::kExitUsage;
    }
  }
  std::ostream& out = out_path.empty() ? std::cout : file;

  if (*table) {
    const auto f = format == "pretty" ? cli::TableFormat::kPretty : cli::TableFormat::kCsv;
    return cli::cmd_table(n, f, opts, out, std::cerr);
  }
  if (*edges) {
    const cli::MethodSelection sel = method == "all" ? std::nullopt : jaco::parse_method(method);
    return cli::cmd_edges(n, sel, opts, out, std::cerr);
  }
  if (*crosscheck) return cli::cmd_crosscheck(lo, hi, opts, out, std::cerr);
  if (*exp) {
    const auto f = export_format == "dot" ? cli::ExportFormat::kDot : cli::ExportFormat::kEdgeList;
    return cli::cmd_export(n, f, opts, out, std::cerr);
  }
  if (*zeck) return cli::cmd_zeck(n, opts, out, std::cerr);
  if (*bench) return cli::cmd_bench(bench_ns, opts, out, std::cerr);
  return cli::kExitUsage;
}
