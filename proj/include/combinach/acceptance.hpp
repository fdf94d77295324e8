#pragma once

#include <string>

namespace combinach {

// Runs the full acceptance suite, appending one PASS/FAIL line per
// criterion.  The output carries no timestamps or measured durations, so two
// runs on the same build are byte-identical.  Returns true iff every
// criterion passed.
bool run_acceptance(std::string& output);

}  // namespace combinach
