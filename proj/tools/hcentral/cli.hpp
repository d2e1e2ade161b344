#pragma once

namespace hcentral::cli {

/// Full command-line front end. Returns the process exit status: 0 on
/// success, 1 on usage/validation/IO errors, 3 when `reproduce` finds a
/// failing check.
int run(int argc, const char* const* argv);

}  // namespace hcentral::cli
