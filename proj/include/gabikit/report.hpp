#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace gabikit {

/// Thrown on malformed input: shape mismatches, field mismatches, violated
/// preconditions. Distinct from a negative check result, which is reported
/// through a Report.
struct input_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// One failed check: which axiom or law, at which witness (basis element,
/// pair, ...), with a human-readable detail line.
struct Finding {
  std::string axiom;
  std::string witness;
  std::string detail;
};

/// Outcome of a verification routine. `findings` lists every violated
/// identity with a witness; an empty list means the checked laws all hold.
/// `notes` carries informational facts (invertibility flags, derived
/// dimensions) that do not affect the verdict.
class Report {
 public:
  [[nodiscard]] bool passed() const { return findings_.empty(); }

  void fail(std::string axiom, std::string witness, std::string detail) {
    findings_.push_back({std::move(axiom), std::move(witness), std::move(detail)});
  }

  void note(std::string text) { notes_.push_back(std::move(text)); }

  /// Appends another report's findings, optionally prefixing each axiom
  /// label (used when aggregating sub-checks).
  void merge(const Report& other, const std::string& prefix = {}) {
    for (const Finding& f : other.findings_) {
      findings_.push_back({prefix.empty() ? f.axiom : prefix + "/" + f.axiom, f.witness, f.detail});
    }
    for (const std::string& n : other.notes_) {
      notes_.push_back(prefix.empty() ? n : prefix + ": " + n);
    }
  }

  [[nodiscard]] const std::vector<Finding>& findings() const { return findings_; }
  [[nodiscard]] const std::vector<std::string>& notes() const { return notes_; }

 private:
  std::vector<Finding> findings_;
  std::vector<std::string> notes_;
};

}  // namespace gabikit
