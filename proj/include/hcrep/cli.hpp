#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace hcrep::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitParse = 2;
inline constexpr int kExitFalse = 3;

/// Runs one command. `args` excludes the program name. Documents not given
/// by a flag are read from `in`, so commands compose through pipes.
int run(const std::vector<std::string>& args, std::istream& in,
        std::ostream& out, std::ostream& err);

}  // namespace hcrep::cli
