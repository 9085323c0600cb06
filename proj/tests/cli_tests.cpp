// Integration tests for the command-line tool. The binary path arrives in
// the HARARY_CLI environment variable.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>

#include <json.hpp>

#include "harary/enumerate.hpp"
#include "harary/families.hpp"
#include "harary/graph6.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

int g_failures = 0;

#define EXPECT(cond, label)                                               \
  do {                                                                    \
    if (cond) {                                                           \
      std::cout << "[ok] " << label << "\n";                              \
    } else {                                                              \
      std::cout << "[FAILED] " << label << " at " << __LINE__ << "\n";    \
      ++g_failures;                                                       \
    }                                                                     \
  } while (0)

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run(const std::string& args) {
  const char* cli = std::getenv("HARARY_CLI");
  if (!cli) {
    std::cerr << "HARARY_CLI not set\n";
    std::exit(2);
  }
  std::string cmd = std::string(cli) + " " + args + " 2>&1";
  FILE* pipe = popen(cmd.c_str(), "r");
  if (!pipe) {
    std::cerr << "popen failed\n";
    std::exit(2);
  }
  RunResult result;
  char buf[4096];
  std::size_t got = 0;
  while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) {
    result.output.append(buf, got);
  }
  int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

void write_file(const fs::path& path, const std::string& content) {
  std::ofstream out(path);
  out << content;
}

}  // namespace

int main() {
  char tmpl[] = "/tmp/harary_cli_XXXXXX";
  const char* dir_c = mkdtemp(tmpl);
  if (!dir_c) {
    std::cerr << "mkdtemp failed\n";
    return 2;
  }
  fs::path dir(dir_c);

  // rho on K_{2,2} given as an edge list
  write_file(dir / "k22.txt", "# K_{2,2}\n4 4\n0 2\n0 3\n1 2\n1 3\n");
  {
    RunResult r = run("rho " + (dir / "k22.txt").string());
    EXPECT(r.exit_code == 0, "rho k22 exit");
    EXPECT(r.output.find("rho = 2.5\n") != std::string::npos, "rho k22 value");
    EXPECT(r.output.find("iterations =") != std::string::npos, "rho k22 iters");
  }

  // rho on K_5 given as graph6
  write_file(dir / "k5.g6",
             harary::encode_graph6(harary::generate(harary::family::Complete{5})) +
                 "\n");
  {
    RunResult r = run("rho " + (dir / "k5.g6").string());
    EXPECT(r.exit_code == 0, "rho k5 exit");
    EXPECT(r.output.find("rho = 4\n") != std::string::npos, "rho k5 value");
  }

  // disconnected input: exit 1 with the dedicated message
  write_file(dir / "2k2.txt", "4 2\n0 1\n2 3\n");
  {
    RunResult r = run("rho " + (dir / "2k2.txt").string());
    EXPECT(r.exit_code == 1, "rho disconnected exit");
    EXPECT(r.output.find("graph is disconnected") != std::string::npos,
           "rho disconnected message");
  }

  // unparsable input: exit 2
  write_file(dir / "bad.txt", "not a graph\n");
  {
    RunResult r = run("rho " + (dir / "bad.txt").string());
    EXPECT(r.exit_code == 2, "rho parse error exit");
  }
  {
    RunResult r = run("rho " + (dir / "missing.txt").string());
    EXPECT(r.exit_code == 2, "rho missing file exit");
  }

  // rho json output carries the report schema
  {
    RunResult r = run("rho " + (dir / "k22.txt").string() + " --format json");
    EXPECT(r.exit_code == 0, "rho json exit");
    json doc = json::parse(r.output);
    EXPECT(doc.at("schema") == 1, "rho json schema");
    EXPECT(doc.at("cases")[0].at("radius") == "2.5", "rho json radius string");
  }

  // gen writes the expected graph6 line and is idempotent
  {
    std::string expected = harary::encode_graph6(
        harary::generate(harary::family::CompleteBipartite{2, 5}));
    RunResult a = run("gen --family \"bipartite(2,5)\"");
    RunResult b = run("gen --family \"bipartite(2,5)\"");
    EXPECT(a.exit_code == 0, "gen exit");
    EXPECT(a.output == expected + "\n", "gen bipartite graph6");
    EXPECT(a.output == b.output, "gen idempotent");
  }
  {
    std::string expected = harary::encode_graph6(
        harary::generate(harary::family::PendantClique{4, {2}}));
    RunResult r = run("gen --family \"pendant_clique(4; 2)\" --out " +
                      (dir / "kt.g6").string());
    EXPECT(r.exit_code == 0, "gen out exit");
    std::ifstream in(dir / "kt.g6");
    std::string line;
    std::getline(in, line);
    EXPECT(line == expected, "gen pendant clique file content");
  }
  {
    RunResult r = run("gen --family \"split_join(2; 1,1,1,1)\"");
    std::string expected = harary::encode_graph6(harary::generate(
        harary::family::SplitJoin{2, {1, 1, 1, 1}}));
    EXPECT(r.output == expected + "\n", "gen split join graph6");
  }
  {
    RunResult r = run("gen --family \"nonsense(3)\"");
    EXPECT(r.exit_code == 2, "gen bad family exit");
  }

  // verify: all three suites pass on a small range and report json
  {
    RunResult r = run("verify --which matching --min-n 4 --max-n 5 --format json");
    EXPECT(r.exit_code == 0, "verify matching exit");
    json doc = json::parse(r.output);
    EXPECT(doc.at("command") == "verify matching", "verify command field");
    bool all_match = true;
    for (const auto& entry : doc.at("cases")) {
      if (entry.at("feasible").get<bool>() && !entry.at("matches").get<bool>()) {
        all_match = false;
      }
    }
    EXPECT(all_match, "verify matching all cases match");
  }

  // verify output is identical across worker counts
  {
    RunResult a = run("verify --which cut-edges --min-n 4 --max-n 6 --jobs 1 "
                      "--format json");
    RunResult b = run("verify --which cut-edges --min-n 4 --max-n 6 --jobs 4 "
                      "--format json");
    EXPECT(a.exit_code == 0, "verify jobs=1 exit");
    EXPECT(b.exit_code == 0, "verify jobs=4 exit");
    EXPECT(a.output == b.output, "verify deterministic across jobs");
  }

  // verify over an explicit graph6 class stream
  {
    std::ofstream stream(dir / "classes5.g6");
    for (const auto& g : harary::enumerate_connected(5)) {
      stream << harary::encode_graph6(g) << "\n";
    }
    stream.close();
    RunResult r = run("verify --which bipartite --min-n 5 --max-n 5 --classes " +
                      (dir / "classes5.g6").string());
    EXPECT(r.exit_code == 0, "verify classes stream exit");
  }

  // verify writes the report file
  {
    RunResult r = run("verify --which bipartite --min-n 4 --max-n 4 --out " +
                      (dir / "report.json").string());
    EXPECT(r.exit_code == 0, "verify out exit");
    std::ifstream in(dir / "report.json");
    json doc = json::parse(in);
    EXPECT(doc.at("schema") == 1, "verify report schema");
  }

  // lemma margin suites
  {
    RunResult r = run("lemma --id 3.1 --max-total 9");
    EXPECT(r.exit_code == 0, "lemma 3.1 exit");
    EXPECT(r.output.find("margins above threshold") != std::string::npos,
           "lemma 3.1 summary");
  }
  {
    // the collapse inequality holds on small grids ...
    RunResult r = run("lemma --id 3.2 --max-total 9");
    EXPECT(r.exit_code == 0, "lemma 3.2 small grid exit");
  }
  {
    // ... and reverses on the wide grid, where the tool must report the
    // counterexamples and exit 1
    RunResult r = run("lemma --id 3.2 --max-total 12 --format json");
    EXPECT(r.exit_code == 1, "lemma 3.2 wide grid exit");
    std::size_t json_start = r.output.find('{');
    EXPECT(json_start != std::string::npos, "lemma 3.2 wide grid emits json");
    json doc = json::parse(r.output.substr(
        json_start, r.output.rfind('}') - json_start + 1));
    bool has_counterexample = false;
    for (const auto& entry : doc.at("cases")) {
      if (entry.contains("counterexample_g6")) has_counterexample = true;
    }
    EXPECT(has_counterexample, "lemma 3.2 counterexample in report");
  }
  {
    RunResult r = run("lemma --id 4.2 --max-n 12 --format csv");
    EXPECT(r.exit_code == 0, "lemma 4.2 exit");
    EXPECT(r.output.find("bipartite-chain") != std::string::npos,
           "lemma 4.2 csv rows");
  }
  {
    RunResult r = run("lemma --id 2.2 --samples 10 --max-n 7");
    EXPECT(r.exit_code == 0, "lemma 2.2 exit");
  }
  {
    RunResult r = run("lemma --id 2.4 --max-n 4");
    EXPECT(r.exit_code == 0, "lemma 2.4 exit");
  }
  {
    RunResult r = run("lemma --id 9.9");
    EXPECT(r.exit_code == 2, "lemma unknown id exit");
  }

  // usage errors
  {
    RunResult r = run("");
    EXPECT(r.exit_code == 2, "missing subcommand exit");
  }
  {
    RunResult r = run("verify --min-n 9");
    EXPECT(r.exit_code == 2, "out-of-range flag exit");
  }

  fs::remove_all(dir);
  if (g_failures > 0) {
    std::cout << g_failures << " cli checks failed\n";
    return 1;
  }
  std::cout << "all cli checks passed\n";
  return 0;
}
