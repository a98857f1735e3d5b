#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace spaf::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomain = 1;
inline constexpr int kExitUsage = 2;

/// Runs one command. `args` excludes the program name. Results go to `out`
/// (or the -o file), diagnostics to `err`.
///
///   gen        -n N -m M --caps 1,2,4 --seed S [-o FILE]
///   bottleneck -i GRAPH [--tsv]
///   sssp-af    -i GRAPH -s SOURCE [-o FILE]
///   apsp-af    -i GRAPH [-r N] [--threads N] [-o FILE]
///   query      -i RESULT.json --from I --to J --flow F [--path] [--tsv]
///   verify     [-i GRAPH] [--seeds A..B]
///   bench      -i GRAPH [--repeat K] [-r N] [--threads N]
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace spaf::cli
