#pragma once

#include <iosfwd>

namespace parahoric::cli {

// Dispatches argv to the owning module and writes JSON to `out`.
// Exit codes: 0 success, 2 unknown catalog name, 3 malformed input,
// 4 invariant or limit violation.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace parahoric::cli
