#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Published values used by the verify command.
namespace pdm::cli::reference {

  // [n][r], n = 0..8.
  extern std::vector<std::vector<std::uint64_t>> const motzkin_by_rank;
  // [n][r], n = 0..9.
  extern std::vector<std::vector<std::uint64_t>> const jones_by_rank;
  // n = 1..24.
  extern std::vector<std::uint64_t> const jones_total;
  // n = 1..6.
  extern std::vector<std::uint64_t> const kauffman;
  // n = 1..10.
  extern std::vector<std::uint64_t> const pj_total;

}  // namespace pdm::cli::reference
