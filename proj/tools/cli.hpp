#pragma once

#include <ostream>

namespace troplab::cli {

/// Entry point shared by the executable and the tests. Exit codes: 0 ok,
/// 1 a proposition-grade check failed, 2 usage or domain error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace troplab::cli
