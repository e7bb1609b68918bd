// Seeded invariant suites over every module, with the consolidated
// discrepancy report.  Findings are data; only invariant violations fail.
#ifndef HALPHEN_VERIFY_HPP
#define HALPHEN_VERIFY_HPP

#include "halphen/report.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace halphen {
namespace verifier {

struct SuiteResult {
  std::string name;
  int passed = 0;
  int failed = 0;
  std::vector<std::string> failures;
};

struct VerifyResult {
  std::vector<SuiteResult> suites;
  report::Report findings;

  bool ok() const {
    for (const auto& s : suites)
      if (s.failed > 0) return false;
    return true;
  }
};

// suite: one of exactmath, weierstrass, algebraization, qes, exact, dist, all.
VerifyResult run_verify(const std::string& suite, std::uint64_t seed);

}  // namespace verifier
}  // namespace halphen

#endif
