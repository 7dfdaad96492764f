// Batch front end: one job per invocation, stable exit codes.
//   0 = verdict PASS, 1 = FAIL or NOT_APPLICABLE, 2 = input or usage error.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "gabikit/io.hpp"

namespace gabikit {

enum class Verdict { Pass, Fail, NotApplicable };

[[nodiscard]] std::string to_string(Verdict v);

enum class OutputFormat { Text, Structured };

/// One command invocation. Commands: check-algebra, check-gabi, derive-hopf,
/// tricocycloid, double-check, hom-action, adjunction, normality,
/// search-gabi, set-check, set-search.
struct JobSpec {
  std::string command;
  std::vector<std::string> inputs;
  HopfStrategy strategy = HopfStrategy::BetaInverse;
  std::optional<GabiSide> side;  ///< overrides the side of a parsed gabi block
  MonoidLiftLevel level = MonoidLiftLevel::FullLift;
  std::uint64_t cap = kDefaultSearchCap;
  OutputFormat format = OutputFormat::Text;
  std::optional<std::string> modules_file;  ///< extra test modules
};

/// The verdict with its evidence. derived holds serialized structures
/// (comultiplications, antipodes, census lists) that re-parse through the
/// io helpers; it is JSON null when a command derives nothing.
struct ReportDocument {
  Verdict verdict = Verdict::Pass;
  std::vector<Finding> findings;
  std::vector<std::string> notes;
  nlohmann::json derived;
};

/// Dispatch the job to the corresponding library operation. Missing files,
/// parse failures, invariant violations, and operation-level input errors
/// throw input_error (exit code 2 in the binary).
[[nodiscard]] ReportDocument run_job(const JobSpec& job);

/// Exit code implied by a verdict: 0 for PASS, 1 otherwise.
[[nodiscard]] int exit_code(Verdict v);

/// Render a report. Text: a verdict line, then one line per note and per
/// finding. Structured: a JSON document with stable keys {verdict, findings,
/// notes, derived}; byte-identical for identical inputs.
[[nodiscard]] std::string emit_report(const ReportDocument& doc, OutputFormat format);

/// Full command-line entry point: parses arguments, runs the job, writes the
/// report to out and errors to err, and returns the exit code.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace gabikit
