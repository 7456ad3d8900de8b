#include <algorithm>
#include <sstream>

#include "pdm/cli.hpp"
#include "pdm/error.hpp"
#include "table.hpp"

namespace pdm::cli {

  void Table::add_row(std::string label, std::vector<std::string> row) {
    row.resize(columns.size());
    labels.push_back(std::move(label));
    cells.push_back(std::move(row));
  }

  std::string Table::text() const {
    std::size_t label_width = corner.size();
    for (auto const& l : labels) {
      label_width = std::max(label_width, l.size());
    }
    std::vector<std::size_t> width(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      width[j] = columns[j].size();
      for (auto const& row : cells) {
        width[j] = std::max(width[j], row[j].size());
      }
    }
    std::ostringstream os;
    auto line = [&](std::string const& label,
                    std::vector<std::string> const& row) {
      os << label << std::string(label_width - label.size(), ' ');
      for (std::size_t j = 0; j < row.size(); ++j) {
        os << "  " << std::string(width[j] - row[j].size(), ' ') << row[j];
      }
      os << '\n';
    };
    line(corner, columns);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      line(labels[i], cells[i]);
    }
    return os.str();
  }

  std::string Table::csv() const {
    std::ostringstream os;
    auto line = [&](std::string const& label,
                    std::vector<std::string> const& row) {
      os << label;
      for (auto const& c : row) {
        os << ',' << c;
      }
      os << '\n';
    };
    line(corner, columns);
    for (std::size_t i = 0; i < cells.size(); ++i) {
      line(labels[i], cells[i]);
    }
    return os.str();
  }

  std::string fraction(Count const& num, Count const& den, int places) {
    if (den == 0) {
      throw ValidationError("fraction with zero denominator");
    }
    Count scale = 1;
    for (int i = 0; i < places; ++i) {
      scale *= 10;
    }
    Count const rounded = (2 * num * scale + den) / (2 * den);
    if (rounded == scale) {
      return "1";
    }
    if (rounded > scale) {
      throw ValidationError("fraction above 1");
    }
    auto digits = to_string(rounded);
    digits.insert(0, static_cast<std::size_t>(places) - digits.size(), '0');
    return "." + digits;
  }

  Count monoid_size(Monoid m, std::size_t n) {
    if (m != Monoid::motzkin && m != Monoid::jones) {
      throw ValidationError("no size for " + std::string(name(m)));
    }
    // Paths of length 2n from height 0 back to 0.
    std::size_t const steps = 2 * n;
    std::vector<Count> h(steps + 2, 0);
    h[0] = 1;
    for (std::size_t s = 0; s < steps; ++s) {
      std::vector<Count> next(steps + 2, 0);
      for (std::size_t k = 0; k <= steps; ++k) {
        if (h[k] == 0) {
          continue;
        }
        next[k + 1] += h[k];
        if (k > 0) {
          next[k - 1] += h[k];
        }
        if (m == Monoid::motzkin) {
          next[k] += h[k];
        }
      }
      h = std::move(next);
    }
    return h[0];
  }

}  // namespace pdm::cli
