#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace schwinger::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitConfig = 2;
inline constexpr int kExitNumerical = 3;

// Full command line, argv[0] included. Table output goes to `out` unless
// --out names a file; diagnostics go to `err`.
int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err);

// "a..b:n", "a..b:n:log", "v1,v2,..." or a single value.
std::vector<double> parse_grid(const std::string& text);

} // namespace schwinger::cli
