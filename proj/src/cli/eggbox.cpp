#include <sstream>
#include <string>

#include "pdm/cli.hpp"
#include "pdm/diagram.hpp"
#include "pdm/error.hpp"
#include "pdm/interface.hpp"
#include "pdm/seeds.hpp"

namespace pdm::cli {

  std::size_t Eggbox::set_count() const {
    std::size_t total = 0;
    for (auto const& row : idempotent) {
      for (bool b : row) {
        total += b;
      }
    }
    return total;
  }

  std::string Eggbox::pbm() const {
    std::ostringstream os;
    os << "P1\n" << cols.size() << ' ' << rows.size() << '\n';
    for (auto const& row : idempotent) {
      for (std::size_t j = 0; j < row.size(); ++j) {
        os << (j == 0 ? "" : " ") << (row[j] ? '1' : '0');
      }
      os << '\n';
    }
    return os.str();
  }

  Eggbox eggbox(Monoid m, std::size_t n, std::size_t rank, bool force,
                std::size_t max_cells) {
    if (m != Monoid::motzkin && m != Monoid::jones) {
      throw ValidationError("eggbox needs motzkin or jones, not "
                            + std::string(name(m)));
    }
    if (rank > n || (m == Monoid::jones && (n - rank) % 2 != 0)) {
      throw ValidationError("no rank " + std::to_string(rank)
                            + " class in degree " + std::to_string(n));
    }
    auto const alphabet
        = m == Monoid::jones ? Alphabet::no_flat : Alphabet::with_flat;
    Eggbox box;
    box.rows = semiwords(n, rank, alphabet);
    box.cols = box.rows;
    auto const side = box.rows.size();
    if (!force && side != 0 && side > max_cells / side) {
      throw ResourceLimitError("eggbox of " + std::to_string(side) + "x"
                               + std::to_string(side)
                               + " cells is over the limit");
    }
    box.idempotent.assign(side, std::vector<bool>(side, false));
    for (std::size_t i = 0; i < side; ++i) {
      for (std::size_t j = 0; j < side; ++j) {
        box.idempotent[i][j]
            = is_idempotent(diagram_of_pair(box.rows[i], box.cols[j]));
      }
    }
    return box;
  }

}  // namespace pdm::cli
