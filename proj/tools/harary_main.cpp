// Command-line front end: compute Harary spectral radii for user graphs,
// generate the built-in graph families, and run the verification suites.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "harary/enumerate.hpp"
#include "harary/families.hpp"
#include "harary/graph.hpp"
#include "harary/graph6.hpp"
#include "harary/invariants.hpp"
#include "harary/report.hpp"
#include "harary/spectral.hpp"
#include "harary/verify.hpp"

namespace {

using harary::Graph;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitAssertionFailed = 1;
constexpr int kExitUsage = 2;

std::string read_all(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open input file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Edge-list files start with a digit or a comment; graph6 bytes sit at
// ASCII 63 and above.
Graph parse_graph_input(const std::string& text, std::string& detected) {
  std::size_t pos = text.find_first_not_of(" \t\r\n");
  if (pos == std::string::npos) throw std::invalid_argument("empty input");
  char first = text[pos];
  if ((first >= '0' && first <= '9') || first == '#') {
    detected = "edge-list";
    std::istringstream in(text);
    return harary::read_edge_list(in);
  }
  detected = "graph6";
  std::size_t end = text.find_first_of("\r\n", pos);
  std::string line = text.substr(pos, end == std::string::npos ? end : end - pos);
  return harary::decode_graph6(line);
}

void emit(const json& report, const std::string& format, const std::string& out_path) {
  if (!out_path.empty()) {
    std::ofstream out(out_path);
    if (!out) throw std::invalid_argument("cannot open output file: " + out_path);
    out << report.dump(2) << "\n";
  }
  if (format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (format == "csv") {
    std::cout << harary::render_csv(report);
  } else {
    std::cout << harary::render_table(report);
  }
}

struct RhoOptions {
  std::string input;
  std::string format = "table";
  std::string out;
};

int run_rho(const RhoOptions& opt) {
  std::string detected;
  Graph g = parse_graph_input(read_all(opt.input), detected);
  harary::SpectralResult res = harary::spectral_radius(g);

  json entry;
  entry["id"] = "rho";
  entry["params"] = {{"input", opt.input}, {"format", detected},
                     {"n", std::to_string(g.vertex_count())}};
  entry["radius"] = harary::format_real(res.radius);
  entry["residual"] = harary::format_real(res.residual);
  entry["iterations"] = res.iterations;
  json vec = json::array();
  for (double x : res.vector) vec.push_back(harary::format_real(x));
  entry["vector"] = vec;
  json report;
  report["schema"] = 1;
  report["command"] = "rho";
  report["cases"] = json::array({entry});

  if (!opt.out.empty()) {
    std::ofstream out(opt.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.out);
    out << report.dump(2) << "\n";
  }
  if (opt.format == "json") {
    std::cout << report.dump(2) << "\n";
  } else if (opt.format == "csv") {
    std::cout << harary::render_csv(report);
  } else {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.12g", res.radius);
    std::cout << "n = " << g.vertex_count() << "\n";
    std::cout << "rho = " << buf << "\n";
    std::cout << "vector =";
    for (double x : res.vector) {
      std::snprintf(buf, sizeof buf, " %.12g", x);
      std::cout << buf;
    }
    std::cout << "\n";
    std::snprintf(buf, sizeof buf, "%.3g", res.residual);
    std::cout << "residual = " << buf << "\n";
    std::cout << "iterations = " << res.iterations << "\n";
  }
  return kExitOk;
}

struct GenOptions {
  std::string family;
  std::string out;
};

int run_gen(const GenOptions& opt) {
  Graph g = harary::generate(harary::parse_family(opt.family));
  std::string line = harary::encode_graph6(g);
  if (opt.out.empty() || opt.out == "-") {
    std::cout << line << "\n";
  } else {
    std::ofstream out(opt.out);
    if (!out) throw std::invalid_argument("cannot open output file: " + opt.out);
    out << line << "\n";
  }
  return kExitOk;
}

struct VerifyOptions {
  std::string which = "all";
  int min_n = 4;
  int max_n = 7;
  int jobs = 1;
  double tol = harary::kMarginTolerance;
  std::string format = "table";
  std::string out;
  std::string classes_file;
};

int run_verify(const VerifyOptions& opt) {
  std::vector<harary::ExtremalFamily> families;
  if (opt.which == "matching" || opt.which == "all") {
    families.push_back(harary::ExtremalFamily::MatchingNumber);
  }
  if (opt.which == "bipartite" || opt.which == "all") {
    families.push_back(harary::ExtremalFamily::BipartiteMatchingNumber);
  }
  if (opt.which == "cut-edges" || opt.which == "all") {
    families.push_back(harary::ExtremalFamily::CutEdgeCount);
  }
  if (families.empty()) {
    throw std::invalid_argument("--which must be matching, bipartite, cut-edges or all");
  }

  std::vector<Graph> pool;
  if (!opt.classes_file.empty()) {
    std::ifstream in(opt.classes_file);
    if (!in) throw std::invalid_argument("cannot open class file: " + opt.classes_file);
    pool = harary::read_graph6_stream(in);
  }

  std::vector<harary::VerificationReport> reports;
  for (harary::ExtremalFamily family : families) {
    std::vector<harary::VerificationReport> part =
        pool.empty()
            ? harary::extremal_suite(family, opt.min_n, opt.max_n, opt.jobs)
            : harary::extremal_suite(family, pool, opt.min_n, opt.max_n);
    for (auto& r : part) reports.push_back(std::move(r));
  }

  json report = harary::report_to_json("verify " + opt.which, reports);
  emit(report, opt.format, opt.out);

  bool all_ok = true;
  for (const harary::VerificationReport& r : reports) {
    if (r.feasible && !r.matches_theorem) all_ok = false;
    if (r.feasible && !(r.runner_up_gap > opt.tol)) all_ok = false;
  }
  if (!all_ok) {
    std::cerr << "verification failed: a class maximizer disagrees with the "
                 "predicted graph\n";
    return kExitAssertionFailed;
  }
  return kExitOk;
}

struct LemmaOptions {
  std::string id;
  int max_total = 12;
  int max_n = 0;  // 0: per-id default
  int samples = 500;
  std::uint32_t seed = 20240817;
  double tol = harary::kMarginTolerance;
  std::string format = "table";
  std::string out;
};

int run_lemma(const LemmaOptions& opt) {
  std::vector<harary::VerificationReport> reports;
  double threshold = opt.tol;
  if (opt.id == "2.2") {
    int max_n = opt.max_n > 0 ? opt.max_n : 10;
    reports.push_back(harary::check_edge_monotonicity(opt.samples, max_n, opt.seed));
  } else if (opt.id == "2.4") {
    int max_n = opt.max_n > 0 ? opt.max_n : 6;
    reports.push_back(harary::check_eigenvector_symmetry(max_n));
    threshold = 0.0;  // rows carry (bound - deviation)
  } else if (opt.id == "3.1") {
    reports.push_back(harary::clique_shift_grid(opt.max_total));
  } else if (opt.id == "3.2") {
    reports.push_back(harary::odd_clique_collapse_grid(opt.max_total));
  } else if (opt.id == "4.2") {
    int max_n = opt.max_n > 0 ? opt.max_n : 30;
    for (int n = 4; n <= max_n; ++n) {
      reports.push_back(harary::check_bipartite_chain(n));
    }
  } else if (opt.id == "4.4") {
    reports.push_back(harary::bipartite_rewire_grid(opt.max_total));
  } else if (opt.id == "5.1") {
    reports.push_back(harary::cut_edge_contraction_grid(opt.max_total));
  } else if (opt.id == "5.2") {
    reports.push_back(harary::pendant_merge_grid(opt.max_total));
  } else {
    throw std::invalid_argument("unknown check id \"" + opt.id + "\"");
  }

  json report = harary::report_to_json("lemma " + opt.id, reports);
  emit(report, opt.format, opt.out);

  std::size_t rows = 0;
  std::size_t failures = 0;
  for (const harary::VerificationReport& r : reports) {
    for (const harary::MarginCase& row : r.margins) {
      ++rows;
      if (!(row.margin > threshold)) ++failures;
    }
  }
  if (failures > 0) {
    std::cerr << failures << " of " << rows << " margins at or below threshold\n";
    return kExitAssertionFailed;
  }
  std::cout << "all " << rows << " margins above threshold\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Harary-matrix spectral radius toolkit"};
  app.require_subcommand(1);

  RhoOptions rho_opt;
  CLI::App* rho = app.add_subcommand(
      "rho", "Spectral radius and principal eigenvector of one graph");
  rho->add_option("input", rho_opt.input,
                  "edge-list or graph6 file ('-' for stdin)")->required();
  rho->add_option("--format", rho_opt.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  rho->add_option("--out", rho_opt.out, "also write the JSON report here");

  GenOptions gen_opt;
  CLI::App* gen = app.add_subcommand("gen", "Generate a family graph as graph6");
  gen->add_option("--family", gen_opt.family,
                  "e.g. complete(5), bipartite(2,5), star(7), "
                  "split_join(2; 1,1,1,1), pendant_clique(4; 2), "
                  "collapsed_split(1,1,3)")->required();
  gen->add_option("--out", gen_opt.out, "output path (default stdout)");

  VerifyOptions verify_opt;
  CLI::App* verify = app.add_subcommand(
      "verify", "Exhaustive extremal searches against the predicted maximizers");
  verify->add_option("--which", verify_opt.which,
                     "matching, bipartite, cut-edges or all");
  verify->add_option("--min-n", verify_opt.min_n, "smallest vertex count")
      ->check(CLI::Range(2, 8));
  verify->add_option("--max-n", verify_opt.max_n,
                     "largest vertex count (8 is slow; off by default)")
      ->check(CLI::Range(2, 8));
  verify->add_option("--jobs", verify_opt.jobs, "worker threads")
      ->check(CLI::PositiveNumber);
  verify->add_option("--tol", verify_opt.tol, "strict-margin threshold");
  verify->add_option("--format", verify_opt.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  verify->add_option("--out", verify_opt.out, "write the JSON report here");
  verify->add_option("--classes", verify_opt.classes_file,
                     "scan this graph6 stream instead of enumerating");

  LemmaOptions lemma_opt;
  CLI::App* lemma = app.add_subcommand(
      "lemma", "Margin checks for the inequality and symmetry properties");
  lemma->add_option("--id", lemma_opt.id,
                    "one of 2.2, 2.4, 3.1, 3.2, 4.2, 4.4, 5.1, 5.2")->required();
  lemma->add_option("--max-total", lemma_opt.max_total,
                    "vertex budget per parameter tuple")
      ->check(CLI::Range(4, 14));
  lemma->add_option("--max-n", lemma_opt.max_n, "vertex bound (ids 2.2, 2.4, 4.2)");
  lemma->add_option("--samples", lemma_opt.samples, "sample count (id 2.2)");
  lemma->add_option("--seed", lemma_opt.seed, "sampling seed (id 2.2)");
  lemma->add_option("--tol", lemma_opt.tol, "strict-margin threshold");
  lemma->add_option("--format", lemma_opt.format, "table, json or csv")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  lemma->add_option("--out", lemma_opt.out, "write the JSON report here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (rho->parsed()) return run_rho(rho_opt);
    if (gen->parsed()) return run_gen(gen_opt);
    if (verify->parsed()) return run_verify(verify_opt);
    if (lemma->parsed()) return run_lemma(lemma_opt);
  } catch (const harary::DisconnectedGraphError& e) {
    std::cerr << e.what() << "\n";
    return kExitAssertionFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
