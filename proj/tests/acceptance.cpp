// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <cstdio>
#include <exception>
#include <string>

#include "radspec/format.hpp"
#include "radspec/io.hpp"
#include "radspec/verify.hpp"

using namespace radspec;

int main() {
  try {
    const verify::Options options;
    const auto results = verify::run(options);
    bool ok = true;
    for (const auto& r : results) {
      std::printf("criterion %d %-19s %s  measured=%s tol=%s  %s\n", r.criterion,
                  r.id.c_str(), r.pass ? "PASS" : "FAIL",
                  format_number(r.measured).c_str(),
                  format_number(r.tolerance).c_str(), r.detail.c_str());
      ok = ok && r.pass;
    }

    // Two further full runs must serialize to the same bytes.
    const std::string first = io::to_csv(verify::report(verify::run(options), options));
    const std::string second = io::to_csv(verify::report(verify::run(options), options));
    const std::string third = io::to_csv(verify::report(results, options));
    const bool same = first == second && first == third;
    std::printf("criterion 10 %-18s %s  %zu bytes per report\n", "determinism",
                same ? "PASS" : "FAIL", first.size());
    ok = ok && same;

    std::printf("%s\n", ok ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL");
    return ok ? 0 : 1;
  } catch (const std::exception& e) {
    std::printf("acceptance aborted: %s\n", e.what());
    return 2;
  }
}
