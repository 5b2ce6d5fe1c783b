#pragma once

#include <string>
#include <vector>

#include "hive/augmented_layout.hpp"
#include "hive/graph.hpp"
#include "hive/layout.hpp"

namespace hive {

struct Violation {
  std::string code;     // e.g. "pi not bijective", "dummy placement"
  std::string message;  // human readable detail
};

/// Every invariant violation found; an empty result means the layout is ok.
/// With a graph, the vertex count is checked against it as well.
std::vector<Violation> validate_layout(const HiveLayout& layout);
std::vector<Violation> validate_layout(const HiveLayout& layout, const Graph& graph);
std::vector<Violation> validate_layout(const AugmentedLayout& layout, const Graph& graph);

bool has_violation(const std::vector<Violation>& violations, const std::string& code);

}  // namespace hive
