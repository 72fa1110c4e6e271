#pragma once

#include <ostream>

namespace packcert::tools {

/// Runs the built-in examples, rechecks every emitted document and prints a
/// JSON summary. Returns 0 when everything matches, 2 otherwise.
int run_selftest(std::ostream& out, std::ostream& log);

}  // namespace packcert::tools
