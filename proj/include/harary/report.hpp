#ifndef HARARY_REPORT_HPP
#define HARARY_REPORT_HPP

#include <span>
#include <string>

#include <json.hpp>

#include "harary/verify.hpp"

namespace harary {

// Reals are serialized as decimal strings with 15 significant digits so
// consumers never re-round them. "inf" and "nan" appear verbatim.
std::string format_real(double value);
double parse_real(const std::string& text);

// Report schema (version 1):
//   { "schema": 1, "command": ..., "cases": [
//       { "params": {...}, "margin": "..."} |
//       { "params": {...}, "radius": "...", "maximizer_g6": ...,
//         "theorem_g6": ..., "matches": bool, "gap": "..." } ] }
nlohmann::json report_to_json(const std::string& command,
                              std::span<const VerificationReport> reports);

// Human-readable renderings derived from the JSON model.
std::string render_table(const nlohmann::json& report);
std::string render_csv(const nlohmann::json& report);

}  // namespace harary

#endif  // HARARY_REPORT_HPP
