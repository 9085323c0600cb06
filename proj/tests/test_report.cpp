#include <doctest.h>

#include <cmath>

#include "harary/report.hpp"
#include "harary/verify.hpp"

using namespace harary;
using nlohmann::json;

TEST_CASE("real formatting keeps 15 significant digits") {
  CHECK(format_real(2.5) == "2.5");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  // 15 significant digits: absolute error below 5 units of the 15th digit
  double value = 1.6861406616345072;
  double back = parse_real(format_real(value));
  CHECK(std::abs(back - value) <= 5e-15);
}

TEST_CASE("margin reports serialize to one case per row") {
  std::vector<int> parts = {2, 3};
  VerificationReport r = check_clique_shift(1, parts);
  std::vector<VerificationReport> rs = {r};
  json doc = report_to_json("lemma 3.1", rs);
  CHECK(doc.at("schema") == 1);
  CHECK(doc.at("command") == "lemma 3.1");
  REQUIRE(doc.at("cases").size() == r.margins.size());
  const auto& c0 = doc.at("cases")[0];
  CHECK(c0.at("id") == "clique-shift");
  CHECK(c0.at("params").at("s") == "1");
  CHECK(c0.contains("margin"));
}

TEST_CASE("search reports carry maximizer, prediction and gap") {
  VerificationReport r = extremal_search({ExtremalFamily::MatchingNumber, 5, 2});
  std::vector<VerificationReport> rs = {r};
  json doc = report_to_json("verify matching", rs);
  const auto& c0 = doc.at("cases")[0];
  CHECK(c0.at("feasible") == true);
  CHECK(c0.at("matches") == true);
  CHECK(c0.at("maximizer_g6") == c0.at("theorem_g6"));
  CHECK(parse_real(c0.at("gap").get<std::string>()) > 1e-9);
  CHECK(parse_real(c0.at("radius").get<std::string>()) ==
        doctest::Approx(4.0).epsilon(1e-10));
}

TEST_CASE("re-running cases from a report reproduces the margins") {
  VerificationReport grid = odd_clique_collapse_grid(9);
  std::vector<VerificationReport> rs = {grid};
  json doc = report_to_json("lemma 3.2", rs);
  int rerun = 0;
  for (const auto& entry : doc.at("cases")) {
    const auto& params = entry.at("params");
    if (!params.contains("kind") || params.at("kind") != "collapse") continue;
    int s = std::stoi(params.at("s").get<std::string>());
    int t = std::stoi(params.at("t").get<std::string>());
    int k = std::stoi(params.at("k").get<std::string>());
    double stored = parse_real(entry.at("margin").get<std::string>());
    VerificationReport again = check_odd_clique_collapse(s, t, k);
    CHECK(std::abs(again.margins[0].margin - stored) <= 1e-12);
    ++rerun;
  }
  CHECK(rerun > 0);
}

TEST_CASE("csv and table renderings come from the json model") {
  std::vector<VerificationReport> rs = {check_bipartite_chain(6)};
  json doc = report_to_json("lemma 4.2", rs);
  std::string csv = render_csv(doc);
  CHECK(csv.find("id,params,margin") == 0);
  CHECK(csv.find("bipartite-chain") != std::string::npos);
  std::string table = render_table(doc);
  CHECK(table.find("command: lemma 4.2") == 0);
  CHECK(table.find("margin=") != std::string::npos);
}
