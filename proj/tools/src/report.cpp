#include "report.hpp"

#include <ostream>

namespace hnl::cli {

Json report_header(const std::string& command) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  return j;
}

Json to_json(const JacobiReport& r) {
  Json j;
  j["identity"] = r.identity;
  j["operators"] = r.operators;
  j["test_space"] = r.test_space;
  j["test_degree"] = r.test_degree ? Json(*r.test_degree) : Json(nullptr);
  j["test_space_size"] = r.test_space_size;
  j["soundness_bound"] = r.soundness_bound;
  j["bound_met"] = r.bound_met;
  j["tuples_total"] = r.tuples_total;
  j["tuples_checked"] = r.tuples_checked;
  j["vacuous"] = r.vacuous;
  j["pass"] = r.pass;
  if (!r.pass) {
    Json w;
    w["indices"] = *r.witness_indices;
    w["args"] = r.witness_args;
    w["value"] = r.witness_value;
    j["witness"] = std::move(w);
  }
  return j;
}

Json to_json(const DiffOp& op) {
  Json j;
  j["text"] = op.to_string();
  std::vector<std::string> names;
  for (const auto& alts : diffop_variable_names(op.n_vars())) names.push_back(alts.front());
  Json terms = Json::array();
  for (const auto& [orders, coeff] : op.terms()) {
    Json t;
    t["order"] = orders;
    t["coefficient"] = coeff.to_string(names);
    terms.push_back(std::move(t));
  }
  j["by_order"] = std::move(terms);
  return j;
}

Json to_json(const ExteriorTensor& t) {
  Json j;
  j["degree"] = t.degree();
  j["text"] = t.to_string();
  Json comps = Json::array();
  for (const auto& [key, c] : t.components()) {
    Json e;
    e["indices"] = key;
    e["coefficient"] = c.get_str();
    comps.push_back(std::move(e));
  }
  j["components"] = std::move(comps);
  return j;
}

namespace {

std::string scalar_text(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool all_scalars(const Json& a) {
  for (const auto& v : a) {
    if (v.is_structured()) return false;
  }
  return true;
}

void emit_text(const Json& j, std::ostream& out, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  for (auto it = j.begin(); it != j.end(); ++it) {
    const Json& v = it.value();
    if (v.is_object()) {
      out << pad << it.key() << ":\n";
      emit_text(v, out, indent + 2);
    } else if (v.is_array() && all_scalars(v)) {
      out << pad << it.key() << ": ";
      for (std::size_t i = 0; i < v.size(); ++i) out << (i ? ", " : "") << scalar_text(v[i]);
      out << "\n";
    } else if (v.is_array()) {
      out << pad << it.key() << ":\n";
      for (const auto& e : v) {
        if (e.is_object()) {
          out << pad << "  -\n";
          emit_text(e, out, indent + 4);
        } else {
          out << pad << "  - " << (e.is_array() ? e.dump() : scalar_text(e)) << "\n";
        }
      }
    } else {
      out << pad << it.key() << ": " << scalar_text(v) << "\n";
    }
  }
}

}  // namespace

void emit(const Json& report, Format format, std::ostream& out) {
  if (format == Format::json) {
    out << report.dump(2) << "\n";
  } else {
    emit_text(report, out, 0);
  }
}

}  // namespace hnl::cli
