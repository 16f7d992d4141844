#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace rainbow {

// The rainbow reachability searches track used colours in a 64-bit mask and
// refuse palettes that cannot fit it.
struct CapExceeded : std::runtime_error {
  int colour_count;
  explicit CapExceeded(int k)
      : std::runtime_error("colour count " + std::to_string(k) +
                           " exceeds the 64 colour cap of the mask search"),
        colour_count(k) {}
};

// Exact search ran past its leaf budget; the instance is beyond desk scale.
struct BudgetExhausted : std::runtime_error {
  std::uint64_t nodes_explored;
  explicit BudgetExhausted(std::uint64_t nodes)
      : std::runtime_error("exact search budget exhausted after " +
                           std::to_string(nodes) + " leaf visits"),
        nodes_explored(nodes) {}
};

struct PathTooLong : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace rainbow
