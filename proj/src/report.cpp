#include "harary/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "harary/graph6.hpp"

namespace harary {

std::string format_real(double value) {
  if (std::isnan(value)) return "nan";
  if (std::isinf(value)) return value > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", value);
  return buf;
}

double parse_real(const std::string& text) {
  if (text == "inf") return std::numeric_limits<double>::infinity();
  if (text == "-inf") return -std::numeric_limits<double>::infinity();
  if (text == "nan") return std::numeric_limits<double>::quiet_NaN();
  return std::stod(text);
}

nlohmann::json report_to_json(const std::string& command,
                              std::span<const VerificationReport> reports) {
  nlohmann::json cases = nlohmann::json::array();
  for (const VerificationReport& report : reports) {
    bool is_search = report.theorem_graph.has_value() || !report.feasible;
    if (is_search) {
      nlohmann::json entry;
      entry["id"] = report.id;
      nlohmann::json params = nlohmann::json::object();
      if (!report.margins.empty()) {
        for (const auto& [key, value] : report.margins.front().params) {
          params[key] = value;
        }
      }
      entry["params"] = params;
      entry["feasible"] = report.feasible;
      if (report.feasible) {
        entry["radius"] = format_real(report.maximizer_radius);
        entry["maximizer_g6"] = encode_graph6(report.maximizers.front());
        if (report.maximizers.size() > 1) {
          nlohmann::json ties = nlohmann::json::array();
          for (const Graph& g : report.maximizers) ties.push_back(encode_graph6(g));
          entry["co_maximizers_g6"] = ties;
        }
        entry["theorem_g6"] = encode_graph6(*report.theorem_graph);
        entry["matches"] = report.matches_theorem;
        entry["gap"] = format_real(report.runner_up_gap);
      }
      if (report.counterexample) {
        entry["counterexample_g6"] = encode_graph6(*report.counterexample);
      }
      cases.push_back(std::move(entry));
    } else {
      for (const MarginCase& row : report.margins) {
        nlohmann::json entry;
        entry["id"] = report.id;
        nlohmann::json params = nlohmann::json::object();
        for (const auto& [key, value] : row.params) params[key] = value;
        entry["params"] = params;
        entry["margin"] = format_real(row.margin);
        cases.push_back(std::move(entry));
      }
      if (report.counterexample) {
        nlohmann::json entry;
        entry["id"] = report.id;
        entry["params"] = {{"note", "counterexample"}};
        entry["counterexample_g6"] = encode_graph6(*report.counterexample);
        cases.push_back(std::move(entry));
      }
    }
  }
  nlohmann::json out;
  out["schema"] = 1;
  out["command"] = command;
  out["cases"] = std::move(cases);
  return out;
}

namespace {

std::string params_brief(const nlohmann::json& params) {
  std::string out;
  for (auto it = params.begin(); it != params.end(); ++it) {
    if (!out.empty()) out += ';';
    out += it.key();
    out += '=';
    out += it.value().get<std::string>();
  }
  return out;
}

}  // namespace

std::string render_table(const nlohmann::json& report) {
  std::ostringstream out;
  out << "command: " << report.at("command").get<std::string>() << "\n";
  for (const auto& entry : report.at("cases")) {
    out << "  " << entry.at("id").get<std::string>() << "  "
        << params_brief(entry.at("params"));
    if (entry.contains("margin")) {
      out << "  margin=" << entry.at("margin").get<std::string>();
    }
    if (entry.contains("radius")) {
      out << "  radius=" << entry.at("radius").get<std::string>();
    }
    if (entry.contains("maximizer_g6")) {
      out << "  maximizer=" << entry.at("maximizer_g6").get<std::string>();
    }
    if (entry.contains("matches")) {
      out << "  matches=" << (entry.at("matches").get<bool>() ? "yes" : "no");
    }
    if (entry.contains("gap")) {
      out << "  gap=" << entry.at("gap").get<std::string>();
    }
    if (entry.contains("feasible") && !entry.at("feasible").get<bool>()) {
      out << "  infeasible";
    }
    if (entry.contains("counterexample_g6")) {
      out << "  counterexample=" << entry.at("counterexample_g6").get<std::string>();
    }
    out << "\n";
  }
  return out.str();
}

std::string render_csv(const nlohmann::json& report) {
  std::ostringstream out;
  out << "id,params,margin,radius,maximizer_g6,theorem_g6,matches,gap\n";
  for (const auto& entry : report.at("cases")) {
    auto field = [&](const char* key) -> std::string {
      if (!entry.contains(key)) return "";
      const auto& v = entry.at(key);
      if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
      return v.get<std::string>();
    };
    out << entry.at("id").get<std::string>() << ',' << '"'
        << params_brief(entry.at("params")) << '"' << ',' << field("margin") << ','
        << field("radius") << ',' << field("maximizer_g6") << ','
        << field("theorem_g6") << ',' << field("matches") << ',' << field("gap")
        << "\n";
  }
  return out.str();
}

}  // namespace harary
