#pragma once

#include <ostream>

namespace minorforge {

// Runs the full certification battery, one pass/fail line per criterion.
// `quick` shrinks the corpora but keeps every check. Returns true iff all
// criteria pass.
bool run_acceptance(bool quick, std::ostream& os);

}  // namespace minorforge
