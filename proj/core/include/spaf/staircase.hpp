#pragma once

#include <optional>
#include <span>
#include <vector>

#include "spaf/matrix.hpp"

namespace spaf {

struct StairStep {
  Length length;
  Rank flow;
  friend bool operator==(const StairStep&, const StairStep&) = default;
};

/// Pareto frontier of (path length, carried flow) for one vertex pair. Both
/// coordinates strictly increase along the steps: a longer path is only
/// listed if it carries more flow.
class FlowStaircase {
 public:
  FlowStaircase() = default;
  /// Throws std::invalid_argument if the steps are not strictly increasing in
  /// both coordinates.
  explicit FlowStaircase(std::vector<StairStep> steps);

  std::span<const StairStep> steps() const { return steps_; }
  bool empty() const { return steps_.empty(); }
  std::size_t size() const { return steps_.size(); }
  const StairStep& front() const { return steps_.front(); }
  const StairStep& back() const { return steps_.back(); }

  /// Appends a step; requires length and flow to exceed the last step's.
  void append(Length length, Rank flow);

  /// Replace-or-append: a step whose flow does not exceed the last flow is
  /// ignored; an equal length replaces the last step's flow; otherwise the
  /// step is appended. Returns false if the step was ignored.
  bool record(Length length, Rank flow);

  /// Shortest step carrying at least `min_flow`.
  std::optional<StairStep> lookup(Rank min_flow) const;

  /// Shortest length carrying at least `min_flow`, kUnreachable if none.
  Length length_for(Rank min_flow) const;

  friend bool operator==(const FlowStaircase&, const FlowStaircase&) = default;

 private:
  std::vector<StairStep> steps_;
};

bool is_double_monotone(std::span<const StairStep> steps);

}  // namespace spaf
