#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lapcen::cli {

/// Environment variable naming the directory that relative --output paths
/// are resolved against.
inline constexpr const char* kOutputDirEnv = "LAPCEN_OUTPUT_DIR";

/// Runs one invocation; args[0] is the program name. Returns 0 on success, 2
/// on usage errors and 1 on data errors (diagnostics go to `err`).
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace lapcen::cli
