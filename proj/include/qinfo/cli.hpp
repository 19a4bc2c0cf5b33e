#pragma once

#include <iosfwd>

#include "qinfo/checks.hpp"

namespace qinfo {

inline constexpr int kExitOk = 0;
inline constexpr int kExitViolations = 1;
inline constexpr int kExitUsage = 2;

/// Entry point of the qinfo command line tool. Checks are looked up in
/// catalog, so test builds can pass a catalog with extra checks.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err,
            const Catalog& catalog = Catalog::global());

}  // namespace qinfo
