#include "multiport/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>
#include <stdexcept>

namespace multiport {

namespace {

[[noreturn]] void malformed(const std::string& what, const std::string& field) {
  throw std::invalid_argument(what + ": missing or malformed field \"" + field + "\"");
}

int require_int(const json& j, const std::string& what, const std::string& field) {
  if (!j.contains(field) || !j[field].is_number_integer()) malformed(what, field);
  return j[field].get<int>();
}

const json& require_array(const json& j, const std::string& what, const std::string& field) {
  if (!j.contains(field) || !j[field].is_array()) malformed(what, field);
  return j[field];
}

cplx complex_from_pair(const json& j, const std::string& what, const std::string& field) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    malformed(what, field);
  return cplx{j[0].get<double>(), j[1].get<double>()};
}

json complex_to_pair(cplx z) { return json::array({round_sig(z.real()), round_sig(z.imag())}); }

}  // namespace

double round_sig(double value, int digits) {
  if (value == 0.0 || !std::isfinite(value)) return value == 0.0 ? 0.0 : value;
  char buffer[64];
  std::snprintf(buffer, sizeof buffer, "%.*g", digits, value);
  return std::strtod(buffer, nullptr);
}

json state_to_json(const FockVector& v) {
  json terms = json::array();
  for (const auto& [occ, amp] : v.terms()) {
    json slots = json::array();
    for (const OccupationState::Entry& e : occ.entries())
      slots.push_back(json::array({e.mode, e.level, e.count}));
    terms.push_back(json{{"occ", std::move(slots)}, {"amp", complex_to_pair(amp)}});
  }
  return json{{"modes", v.modes()}, {"levels", v.levels()}, {"terms", std::move(terms)}};
}

FockVector state_from_json(const json& j) {
  const std::string what = "state file";
  int modes = require_int(j, what, "modes");
  int levels = require_int(j, what, "levels");
  if (modes < 1) malformed(what, "modes");
  if (levels < 1) malformed(what, "levels");
  FockVector v(modes, levels);
  for (const json& term : require_array(j, what, "terms")) {
    if (!term.is_object() || !term.contains("amp")) malformed(what, "terms[].amp");
    std::vector<OccupationState::Entry> entries;
    for (const json& slot : require_array(term, what, "occ")) {
      if (!slot.is_array() || slot.size() != 3 || !slot[0].is_number_integer() ||
          !slot[1].is_number_integer() || !slot[2].is_number_integer())
        malformed(what, "terms[].occ");
      entries.push_back(OccupationState::Entry{slot[0].get<int>(), slot[1].get<int>(),
                                               slot[2].get<int>()});
    }
    OccupationState occ;
    try {
      occ = OccupationState(std::move(entries));
    } catch (const std::invalid_argument&) {
      malformed(what, "terms[].occ");
    }
    v.add_term(occ, complex_from_pair(term["amp"], what, "terms[].amp"));
  }
  return v;
}

json ensemble_to_json(const Ensemble& ens) {
  json components = json::array();
  for (const Ensemble::Component& c : ens.components())
    components.push_back(
        json{{"weight", round_sig(c.weight)}, {"state", state_to_json(c.state)}});
  return json{{"modes", ens.modes()},
              {"levels", ens.levels()},
              {"components", std::move(components)}};
}

Ensemble ensemble_from_json(const json& j) {
  const std::string what = "ensemble file";
  int modes = require_int(j, what, "modes");
  int levels = require_int(j, what, "levels");
  if (modes < 1) malformed(what, "modes");
  if (levels < 1) malformed(what, "levels");
  Ensemble ens(modes, levels);
  for (const json& comp : require_array(j, what, "components")) {
    if (!comp.is_object() || !comp.contains("weight") || !comp["weight"].is_number())
      malformed(what, "components[].weight");
    if (!comp.contains("state")) malformed(what, "components[].state");
    FockVector state = state_from_json(comp["state"]);
    if (state.modes() != modes || state.levels() != levels)
      malformed(what, "components[].state.modes");
    try {
      ens.add(comp["weight"].get<double>(), std::move(state));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(what + ": components[]: " + e.what());
    }
  }
  ens.validate();
  return ens;
}

json unitary_to_json(const ModeUnitary& u) {
  json rows = json::array();
  for (int r = 0; r < u.dim(); ++r) {
    json row = json::array();
    for (int c = 0; c < u.dim(); ++c) row.push_back(complex_to_pair(u.entry(r, c)));
    rows.push_back(std::move(row));
  }
  return json{{"dim", u.dim()}, {"rows", std::move(rows)}};
}

ModeUnitary unitary_from_json(const json& j) {
  const std::string what = "unitary file";
  int dim = require_int(j, what, "dim");
  if (dim < 1) malformed(what, "dim");
  const json& rows = require_array(j, what, "rows");
  if (static_cast<int>(rows.size()) != dim) malformed(what, "rows");
  Eigen::MatrixXcd m(dim, dim);
  for (int r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim)
      malformed(what, "rows[" + std::to_string(r) + "]");
    for (int c = 0; c < dim; ++c)
      m(r, c) = complex_from_pair(rows[r][c], what, "rows[][]");
  }
  try {
    return ModeUnitary(std::move(m), "file");
  } catch (const std::invalid_argument&) {
    throw std::invalid_argument(what + ": field \"rows\" is not a unitary matrix");
  }
}

json report_to_json(const ProtocolReport& report) {
  json steps = json::array();
  for (const StepStat& s : report.steps)
    steps.push_back(json{{"j", s.j}, {"p", round_sig(s.probability)}});
  json out = json{{"N", report.n},
                  {"steps", std::move(steps)},
                  {"p_success", round_sig(report.success_probability)},
                  {"fidelity", round_sig(report.fidelity_with_singlet)}};
  out["output"] = report.output ? ensemble_to_json(*report.output) : json(nullptr);
  return out;
}

namespace {

std::string csv_escape(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void flatten(const json& node, const std::string& path, std::ostringstream& out) {
  if (node.is_object()) {
    for (const auto& [key, value] : node.items())
      flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (node.is_array()) {
    for (std::size_t i = 0; i < node.size(); ++i)
      flatten(node[i], path + "." + std::to_string(i), out);
    if (node.empty()) out << csv_escape(path) << ",\n";
  } else {
    out << csv_escape(path) << ',' << csv_escape(node.dump()) << '\n';
  }
}

}  // namespace

std::string json_to_csv(const json& j) {
  std::ostringstream out;
  out << "path,value\n";
  flatten(j, "", out);
  return out.str();
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::invalid_argument("cannot parse " + path + ": " + e.what());
  }
  return j;
}

void write_text_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::invalid_argument("cannot open file for writing: " + path);
  out << content;
}

}  // namespace multiport
