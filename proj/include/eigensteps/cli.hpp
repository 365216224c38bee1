#pragma once

#include <iosfwd>

namespace eigensteps {

/// Command-line entry point. Returns 0 on success, 1 on domain errors and
/// negative verification results, 2 on usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace eigensteps
