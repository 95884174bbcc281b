#pragma once

#include <cstddef>

namespace hilfrac {

/// Size limits applied before anything large is materialized.
struct Limits {
  /// Longest sequence bracket_power or a growth level may produce.
  std::size_t max_entries = 10'000'000;
  /// Largest alpha_i * beta_j cell count per certifier position.
  std::size_t max_cells = 1'000'000;
  /// Search nodes the certifier may visit before giving up.
  std::size_t max_search_nodes = 50'000'000;

  /// Defaults, with HILFRAC_LIMIT (a positive integer) overriding
  /// max_entries and max_cells when set.
  static Limits from_env();
};

}  // namespace hilfrac
