#pragma once

#include <iosfwd>
#include <string>

#include <nlohmann/json.hpp>

#include "hnl/diff_op.hpp"
#include "hnl/homotopy.hpp"
#include "hnl/polynomial.hpp"

namespace hnl::cli {

using Json = nlohmann::ordered_json;

enum class Format { text, json };

inline constexpr int kSchemaVersion = 1;

/// {"schema_version": 1, "command": name}
Json report_header(const std::string& command);

Json to_json(const JacobiReport& r);
Json to_json(const DiffOp& op);
Json to_json(const ExteriorTensor& t);

void emit(const Json& report, Format format, std::ostream& out);

}  // namespace hnl::cli
