#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace walks::cli {

inline constexpr int kOk = 0;
inline constexpr int kCheckFailed = 1;
inline constexpr int kUsage = 2;

inline constexpr const char* kVersion = "0.1.0";

/// Runs `walks` on args (without the program name). Pure function of args
/// except for files named by --out / --spec.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace walks::cli
