#pragma once

#include <cstddef>
#include <string>

namespace tors {

/// Search and size bounds. All fields must be positive.
struct Caps {
  std::size_t subsets = std::size_t{1} << 20;
  std::size_t monotone_maps = 1'000'000;
  // The order relation of a materialized poset costs n^2 bits.
  std::size_t poset_elements = 20'000;
  std::size_t silting_objects = 10'000;
  std::size_t oracle_space = std::size_t{1} << 22;
  std::size_t iso_nodes = 50'000'000;
  std::size_t length_cap = 64;
};

enum class OutputFormat { Json, Dot, Summary };

struct Config {
  Caps caps;
  OutputFormat format = OutputFormat::Summary;
  // Output never depends on scheduling; kept so configs stay forward compatible.
  bool deterministic = true;

  void validate() const;
};

OutputFormat parse_format(const std::string& s);

}  // namespace tors
