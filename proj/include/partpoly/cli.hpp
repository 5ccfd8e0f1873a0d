#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace partpoly::cli {

enum class OutputFormat { table, csv, json };

/// Runs one `partpoly` invocation; `args` excludes the program name.
/// Returns 0 on success, 1 on domain errors and invalid partitions,
/// 2 on usage errors.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

} // namespace partpoly::cli
