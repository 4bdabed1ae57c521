#ifndef BASISKIT_REPORT_HPP
#define BASISKIT_REPORT_HPP

#include <algorithm>
#include <cstdint>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "basiskit/io.hpp"
#include "basiskit/representation.hpp"

namespace basiskit {

inline constexpr std::string_view kReportSchema = "basiskit/1";

/// Everything a command did: its checks, its payload and the settings that
/// make the run reproducible.
struct RunReport {
  std::string command;
  std::string backend = "exact";
  double tolerance = kDefaultTolerance;
  std::uint64_t seed = kDefaultSeed;
  std::size_t samples = kDefaultSamples;
  std::vector<Verdict> checks;
  std::vector<std::string> lines;  // human-readable summary
  io::json data = io::json::object();
  double wall_ms = 0.0;

  void add(Verdict v) { checks.push_back(std::move(v)); }

  Verdict& add_flag(std::string name, bool passed, std::vector<std::string> counterexample = {}) {
    Verdict v;
    v.check = std::move(name);
    v.passed = passed;
    v.checked = 1;
    if (!passed) v.counterexample = std::move(counterexample);
    checks.push_back(std::move(v));
    return checks.back();
  }

  [[nodiscard]] bool passed() const {
    return std::all_of(checks.begin(), checks.end(), [](const Verdict& v) { return v.passed; });
  }

  [[nodiscard]] double max_residual() const {
    double m = 0.0;
    for (const auto& v : checks) m = std::max(m, v.max_residual);
    return m;
  }

  [[nodiscard]] double mean_residual() const {
    double sum = 0.0;
    std::size_t n = 0;
    for (const auto& v : checks) {
      sum += v.mean_residual * static_cast<double>(v.checked);
      n += v.checked;
    }
    return n ? sum / static_cast<double>(n) : 0.0;
  }

  // Wall time is left out so that identical runs give identical bytes.
  [[nodiscard]] std::string json_text() const {
    io::json out;
    out["schema"] = std::string(kReportSchema);
    out["command"] = command;
    out["backend"] = backend;
    out["tolerance"] = tolerance;
    out["seed"] = seed;
    out["samples"] = samples;
    out["passed"] = passed();
    io::json cs = io::json::array();
    for (const auto& v : checks) cs.push_back(io::verdict_to_json(v));
    out["checks"] = cs;
    out["residuals"] = io::json{{"max", max_residual()}, {"mean", mean_residual()}};
    out["result"] = data;
    return out.dump(2) + "\n";
  }

  [[nodiscard]] std::string text() const {
    std::ostringstream os;
    os << "$ " << command << "\n";
    for (const auto& l : lines) os << l << "\n";
    if (!checks.empty()) os << "\n";
    std::size_t failed = 0;
    for (const auto& v : checks) {
      os << (v.passed ? "[PASS] " : "[FAIL] ") << v.check << " (" << v.mode << ", " << v.checked << " cases";
      if (v.max_residual > 0.0) os << ", max residual " << v.max_residual;
      os << ")\n";
      if (!v.passed) {
        ++failed;
        os << "       counterexample:";
        for (const auto& c : v.counterexample) os << " " << c;
        os << "\n";
      }
    }
    os << "\nbackend " << backend << ", tolerance " << tolerance << ", seed " << seed << ", samples " << samples
       << ", residual max " << max_residual() << " mean " << mean_residual() << ", wall time " << wall_ms << " ms\n";
    os << (passed() ? "result: PASS" : "result: FAIL") << " (" << checks.size() - failed << "/" << checks.size()
       << " checks)\n";
    return os.str();
  }
};

}  // namespace basiskit

#endif  // BASISKIT_REPORT_HPP
