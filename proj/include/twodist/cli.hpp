#pragma once

// Command-line front end. `run` takes the arguments after the program name.

#include <ostream>
#include <string>
#include <vector>

namespace twodist::cli {

enum ExitCode { kOk = 0, kNegative = 1, kUsage = 2, kCapExceeded = 3 };

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// 64-bit FNV-1a of the bytes, as 16 lowercase hex digits.
std::string fnv1a_hex(const std::string& bytes);

}  // namespace twodist::cli
