#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "spaf/apsp_af.hpp"
#include "spaf/sssp_af.hpp"

namespace spaf {

class ResultFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Writes
///   {"n": N, "flows": [...], "pairs": [{"i": I, "j": J, "t": [[l, f], ...]}, ...]}
/// with 1-indexed vertices, pairs sorted by (i,j), empty staircases omitted,
/// and flows printed as their capacity literal. Output is byte-stable.
void write_result_json(const ApspAfResult& res, std::ostream& out);
std::string result_json_text(const ApspAfResult& res);

/// Reads the format above. Flow values are kept exact. Throws
/// ResultFormatError.
ApspAfResult read_result_json(std::istream& in);
ApspAfResult read_result_json_text(const std::string& text);

/// Single-source result in all-pairs shape: only row `source` is filled.
ApspAfResult as_all_pairs(const SsspAfResult& res);

}  // namespace spaf
