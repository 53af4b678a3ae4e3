#ifndef HOMCOUNT_VERIFY_HPP
#define HOMCOUNT_VERIFY_HPP

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace homcount {

struct CheckResult {
  std::string name;
  bool passed = false;
  double seconds = 0;
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<CheckResult> checks;
  double seconds = 0;
  bool passed() const;
  /// One JSON object; timings are left out unless requested so that reports
  /// are reproducible byte for byte.
  std::string to_json(bool with_timings = false) const;
};

struct VerifyOptions {
  std::size_t n = 0;  // 0: the suite's own default size
  unsigned jobs = 1;
};

/// In acceptance order: lovasz, right-lovasz, identities, expressive,
/// forge-isolated, forge-planar-color, star, encoding, two-adaptive,
/// cancellation, right-hom.
const std::vector<std::string>& suite_names();
bool is_suite(std::string_view name);

/// std::invalid_argument for an unknown suite.
SuiteReport run_suite(std::string_view name, const VerifyOptions& options = {});

}  // namespace homcount

#endif  // HOMCOUNT_VERIFY_HPP
