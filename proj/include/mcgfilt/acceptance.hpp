#pragma once

#include <iosfwd>

namespace mcg {

// Runs the eleven acceptance checks, printing one PASS/FAIL line each (with
// elapsed time, and the budget where one is enforced) followed by a final
// "failures: n" line. Returns the number of failed checks. The seed drives
// every randomized battery.
int run_acceptance(std::ostream& out, unsigned seed = 20260822);

}  // namespace mcg
