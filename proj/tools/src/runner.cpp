#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "commands.hpp"
#include "hnl/error.hpp"
#include "hnl/tools/cli.hpp"

namespace hnl::cli {
namespace {

constexpr const char* kExpectFail = "expect-fail";

std::size_t parse_budget(const std::string& text, const std::string& source) {
  std::size_t used = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != text.size() || v == 0) throw DomainError(source + " must be a positive integer");
  return static_cast<std::size_t>(v);
}

Outcome run_batch(const std::string& manifest, Format format, std::ostream& err) {
  std::ifstream in(manifest);
  if (!in) throw DomainError("cannot read manifest " + manifest);
  Json j = report_header("batch");
  j["manifest"] = manifest;
  Json entries = Json::array();
  std::size_t matched = 0, line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    auto args = split_command_line(line);
    if (args.empty() || args[0].starts_with("#")) continue;
    bool expect_fail = false;
    if (args[0] == kExpectFail) {
      expect_fail = true;
      args.erase(args.begin());
    }
    if (!args.empty() && args[0] == "batch") throw DomainError("manifest line " + std::to_string(line_no) + ": nested batch");
    args.push_back("--format");
    args.push_back("json");
    std::ostringstream sub_out, sub_err;
    const int code = run(args, sub_out, sub_err);
    const int want = expect_fail ? kCheckFailed : kOk;
    Json e;
    e["line"] = line_no;
    e["command"] = line;
    e["exit_code"] = code;
    e["expected_exit_code"] = want;
    e["matched"] = code == want;
    if (code == want) ++matched;
    if (!sub_err.str().empty()) e["stderr"] = sub_err.str();
    try {
      e["report"] = Json::parse(sub_out.str());
    } catch (const Json::parse_error&) {
      e["report"] = nullptr;
    }
    if (format == Format::text) {
      err << (code == want ? "ok   " : "FAIL ") << "line " << line_no << ": " << line << "\n";
    }
    entries.push_back(std::move(e));
  }
  if (entries.empty()) err << "warning: manifest " << manifest << " contains no checks\n";
  j["total"] = entries.size();
  j["matched"] = matched;
  const bool pass = matched == entries.size();
  // The ok/FAIL lines already list the entries in text mode.
  if (format == Format::json) j["entries"] = std::move(entries);
  j["pass"] = pass;
  return {std::move(j), pass ? kOk : kCheckFailed};
}

}  // namespace

std::vector<std::string> split_command_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool in_token = false;
  char quote = 0;
  for (char c : line) {
    if (quote) {
      if (c == quote) {
        quote = 0;
      } else {
        cur += c;
      }
    } else if (c == '"' || c == '\'') {
      quote = c;
      in_token = true;
    } else if (c == ' ' || c == '\t' || c == '\r') {
      if (in_token) out.push_back(cur);
      cur.clear();
      in_token = false;
    } else {
      cur += c;
      in_token = true;
    }
  }
  if (quote) throw DomainError("unterminated quote in: " + line);
  if (in_token) out.push_back(cur);
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact verification of homotopy N-Lie structures built from Wronskians", "hnl");
  app.require_subcommand(1);
  app.fallthrough();

  std::string format_name = "text";
  std::optional<std::string> budget_text;
  unsigned threads = 1;
  app.add_option("--format", format_name, "Output format")
      ->check(CLI::IsMember({"text", "json"}))
      ->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.add_option("--budget", budget_text, "Maximum tuples for a certifying check (env HNL_BUDGET)");
  app.add_option("--threads", threads, "Worker threads for exhaustive searches (0: all cores)");

  auto commands = register_commands(app);
  std::string manifest;
  auto* batch = app.add_subcommand("batch", "Run every command line of a manifest; 'expect-fail' marks expected failures");
  batch->add_option("--manifest", manifest, "Manifest file")->required();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kConfigError;
  }

  const Format format = format_name == "json" ? Format::json : Format::text;
  try {
    Context ctx;
    ctx.search.threads = threads;
    if (budget_text) {
      ctx.search.budget = parse_budget(*budget_text, "--budget");
    } else if (const char* env = std::getenv("HNL_BUDGET")) {
      ctx.search.budget = parse_budget(env, "HNL_BUDGET");
    }
    Outcome result;
    if (batch->parsed()) {
      result = run_batch(manifest, format, err);
    } else {
      for (const auto& c : commands) {
        if (c.app->parsed()) result = c.handler(ctx);
      }
    }
    emit(result.report, format, out);
    return result.exit_code;
  } catch (const BudgetExceeded& e) {
    Json j = report_header("error");
    j["error"] = "budget";
    j["message"] = e.what();
    j["required"] = e.required();
    j["budget"] = e.budget();
    emit(j, format, out);
    err << "error: " << e.what() << "\n";
    return kBudgetRefused;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kConfigError;
  }
}

}  // namespace hnl::cli
