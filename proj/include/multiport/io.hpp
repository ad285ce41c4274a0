#pragma once

#include <nlohmann/json_fwd.hpp>
#include <string>

#include "multiport/channels.hpp"
#include "multiport/interferometer.hpp"
#include "multiport/protocol.hpp"

namespace multiport {

using json = nlohmann::json;

/// Rounds to `digits` significant digits; reports carry numbers at 12.
double round_sig(double value, int digits = 12);

// State file: { "modes": m, "levels": d,
//               "terms": [ { "occ": [[mode, level, count], ...],
//                            "amp": [re, im] }, ... ] }
// Writers emit "occ" entries in canonical (lexicographic) order; readers
// accept any order.
json state_to_json(const FockVector& v);
FockVector state_from_json(const json& j);

// Ensemble file: { "modes": m, "levels": d,
//                  "components": [ { "weight": w, "state": <state object> }, ... ] }
json ensemble_to_json(const Ensemble& ens);
Ensemble ensemble_from_json(const json& j);

// Unitary file: { "dim": m, "rows": [[ [re, im], ... ], ...] }
json unitary_to_json(const ModeUnitary& u);
ModeUnitary unitary_from_json(const json& j);

// Report: { "N": n, "steps": [{"j": j, "p": p}], "p_success": p,
//           "fidelity": f, "output": <ensemble object> | null }
json report_to_json(const ProtocolReport& report);

/// Flattens a JSON document into "path,value" CSV rows; scalar values keep
/// their exact JSON serialization, so both formats carry identical numbers.
std::string json_to_csv(const json& j);

json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

}  // namespace multiport
