#pragma once

#include <string>
#include <vector>

#include "radspec/io.hpp"

namespace radspec::verify {

struct CheckResult {
  std::string id;
  int criterion = 0;
  bool pass = false;
  double measured = 0.0;   ///< worst deviation (or ratio) observed
  double tolerance = 0.0;
  std::string detail;
};

struct Options {
  /// Table-1 and exact-limit checks only.
  bool quick = false;
  /// Multiplies the Coulomb strength of every model the Table-1 check
  /// solves; -1 injects a sign error for mutation testing.
  double coulomb_sign = 1.0;
};

/// Published eigenvalues W_nu (nu = 0..5, gamma = 0, b = 1) for one a.
struct ReferenceBlock {
  double a;
  double eigenvalues[6];
};
extern const ReferenceBlock kReferenceTable[4];
/// Published roots a_{2,0}^{(i)}(b = 1).
extern const double kReferenceRoots[3];

CheckResult check_table(const Options& options);
CheckResult check_truncation_roots();
CheckResult check_placement();
CheckResult check_exact_limit();
CheckResult check_oracle();
CheckResult check_hellmann_feynman();
CheckResult check_asymptote();
CheckResult check_eigenfunctions();
CheckResult check_figure_data();

/// Runs every check (or the quick subset) in criterion order.
std::vector<CheckResult> run(const Options& options = {});

bool all_pass(const std::vector<CheckResult>& results);

io::OutputRecord report(const std::vector<CheckResult>& results,
                        const Options& options);

}  // namespace radspec::verify
