#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "count.hpp"
#include "monoid.hpp"
#include "word.hpp"

namespace pdm::cli {

  enum Exit : int { ok = 0, failed = 1, usage = 2, resource = 3 };

  // Runs one command line (without the program name) and returns the exit
  // status. The report goes to out, diagnostics to err.
  int run(std::vector<std::string> const& args, std::ostream& out,
          std::ostream& err);

  // num / den rounded half up to the given number of places, printed the
  // way the tables print them: "1" when exact 1, otherwise ".xyz".
  std::string fraction(Count const& num, Count const& den, int places = 3);

  // |M_n| or |J_n|.
  Count monoid_size(Monoid m, std::size_t n);

  // One rank of the Motzkin or Jones monoid as a grid of H-classes: rows
  // are left semi-words, columns right semi-words, both in lexicographic
  // order.
  struct Eggbox {
    std::vector<SemiWord>          rows;
    std::vector<SemiWord>          cols;
    std::vector<std::vector<bool>> idempotent;  // [row][col]

    std::size_t set_count() const;
    std::string pbm() const;
  };

  // Throws ValidationError for other monoids or an impossible rank, and
  // ResourceLimitError above max_cells unless force is set.
  Eggbox eggbox(Monoid m, std::size_t n, std::size_t rank, bool force = false,
                std::size_t max_cells = std::size_t{1} << 24);

}  // namespace pdm::cli
