#pragma once

// Executable identity suite: every relation between the exact, series and
// closed-form routes, with residuals and the tolerances they were held to.

#include "contbern/numkernel.hpp"

#include <string>
#include <string_view>
#include <vector>

namespace contbern::verify {

struct Check {
  std::string id;
  std::string tag;  ///< identity name from tag_manifest()
  bool pass = false;
  Real residual;
  Real tolerance;
};

struct VerifyReport {
  std::string suite;
  std::vector<Check> checks;
  /// Manifest tags of this suite that no check exercised.
  std::vector<std::string> missing_tags;
  bool pass = false;  ///< every check passes and missing_tags is empty
};

struct TagEntry {
  std::string_view tag;
  std::string_view suite;  ///< "exact", "hasse" or "beta"
};

/// Every identity the suite must cover, in presentation order.
const std::vector<TagEntry>& tag_manifest();

/// "exact", "hasse", "beta", "all".
const std::vector<std::string_view>& suite_names();

/// Runs `suite`. Each check passes when residual <= max(combined error
/// estimates, tol_floor) (or the wider identity-specific bound where one is
/// intrinsic, e.g. a finite-difference or extrapolation step); exact checks
/// use zero tolerance. Throws std::invalid_argument for an unknown suite.
VerifyReport run(std::string_view suite, const PrecisionCtx& ctx, const Real& tol_floor);

}  // namespace contbern::verify
