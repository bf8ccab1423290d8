#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcv {

// Outcome of one mechanical check.  A mathematical mismatch is data, not an
// exception: the first offending index and value are recorded and the caller
// decides what to do with the verdict.
struct CheckReport {
  std::string id;         // stable machine name, e.g. "cong.c.A27.B24.m9"
  std::string statement;  // human-readable claim, e.g. "c(27n+24) == 0 (mod 9)"
  std::size_t order = 0;  // series order / scan depth actually used
  std::size_t instances = 0;  // coefficients compared or progression terms scanned
  bool ok = true;
  bool conjectural = false;
  // (index n, offending value) for the first failure
  std::optional<std::pair<unsigned long long, std::string>> counterexample;
  double millis = 0.0;

  std::string verdict() const;
  std::string to_json() const;  // one JSON object, schema used by the CLI
};

std::string reports_to_json(const std::vector<CheckReport>& reports);

// Small stopwatch for filling CheckReport::millis.
class Stopwatch {
 public:
  Stopwatch() : t0_(std::chrono::steady_clock::now()) {}
  double millis() const {
    auto dt = std::chrono::steady_clock::now() - t0_;
    return std::chrono::duration<double, std::milli>(dt).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_;
};

}  // namespace qcv
