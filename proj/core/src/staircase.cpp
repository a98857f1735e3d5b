#include "spaf/staircase.hpp"

#include <algorithm>
#include <stdexcept>

namespace spaf {

bool is_double_monotone(std::span<const StairStep> steps) {
  for (std::size_t k = 1; k < steps.size(); ++k) {
    if (steps[k].length <= steps[k - 1].length || steps[k].flow <= steps[k - 1].flow) return false;
  }
  return true;
}

FlowStaircase::FlowStaircase(std::vector<StairStep> steps) : steps_(std::move(steps)) {
  if (!is_double_monotone(steps_)) throw std::invalid_argument("staircase not strictly increasing");
}

void FlowStaircase::append(Length length, Rank flow) {
  if (!steps_.empty() && (length <= steps_.back().length || flow <= steps_.back().flow)) {
    throw std::logic_error("staircase append out of order");
  }
  steps_.push_back({length, flow});
}

bool FlowStaircase::record(Length length, Rank flow) {
  if (!steps_.empty()) {
    StairStep& last = steps_.back();
    if (flow <= last.flow) return false;
    if (length == last.length) {
      last.flow = flow;
      return true;
    }
  }
  append(length, flow);
  return true;
}

std::optional<StairStep> FlowStaircase::lookup(Rank min_flow) const {
  auto it = std::lower_bound(steps_.begin(), steps_.end(), min_flow,
                             [](const StairStep& s, Rank f) { return s.flow < f; });
  if (it == steps_.end()) return std::nullopt;
  return *it;
}

Length FlowStaircase::length_for(Rank min_flow) const {
  auto step = lookup(min_flow);
  return step ? step->length : kUnreachable;
}

}  // namespace spaf
