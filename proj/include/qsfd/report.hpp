#ifndef QSFD_REPORT_HPP
#define QSFD_REPORT_HPP

#include <map>
#include <string>
#include <vector>

namespace qsfd {

/// One located violation inside a verification report.
struct Finding {
  std::string where;
  std::string message;
};

/// Structured pass/fail evidence returned by every verifier. Failures are
/// report contents, not exceptions, so a CLI run can print all of them.
struct VerificationReport {
  std::string check;
  bool pass = true;
  std::vector<Finding> findings;
  std::map<std::string, long> stats;

  void fail(std::string where, std::string message) {
    pass = false;
    findings.push_back({std::move(where), std::move(message)});
  }

  /// "pass" / "FAIL (k findings)" with the check name.
  std::string summary() const;

  /// Multi-line rendering: summary, stats, then one line per finding.
  std::string to_text() const;
};

}  // namespace qsfd

#endif
