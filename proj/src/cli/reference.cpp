#include "reference.hpp"

namespace pdm::cli::reference {

  std::vector<std::vector<std::uint64_t>> const motzkin_by_rank = {
      {1},
      {1, 1},
      {4, 2, 1},
      {16, 11, 3, 1},
      {81, 48, 19, 4, 1},
      {441, 266, 93, 28, 5, 1},
      {2601, 1492, 549, 152, 38, 6, 1},
      {16129, 9042, 3211, 947, 226, 49, 7, 1},
      {104329, 56712, 20004, 5784, 1480, 316, 61, 8, 1},
  };

  std::vector<std::vector<std::uint64_t>> const jones_by_rank = {
      {1},
      {0, 1},
      {1, 0, 1},
      {0, 4, 0, 1},
      {4, 0, 7, 0, 1},
      {0, 25, 0, 10, 0, 1},
      {25, 0, 57, 0, 13, 0, 1},
      {0, 196, 0, 98, 0, 16, 0, 1},
      {196, 0, 522, 0, 148, 0, 19, 0, 1},
      {0, 1764, 0, 1006, 0, 207, 0, 22, 0, 1},
  };

  std::vector<std::uint64_t> const jones_total = {
      1,           2,           5,           12,        36,
      96,          311,         886,         3000,      8944,
      31192,       96138,       342562,      1083028,   3923351,
      12656024,    46455770,    152325850,   565212506, 1878551444,
      7033866580,  23645970022, 89222991344, 302879546290,
  };

  std::vector<std::uint64_t> const kauffman = {1, 1, 3, 5, 15, 31};

  std::vector<std::uint64_t> const pj_total
      = {2, 7, 24, 103, 416, 1998, 8822, 45661, 213674, 1167797};

}  // namespace pdm::cli::reference
