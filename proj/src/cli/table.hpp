#pragma once

#include <string>
#include <vector>

namespace pdm::cli {

  // Labelled rows of string cells under a header row. Empty cells print
  // as blanks.
  struct Table {
    std::string                           corner;
    std::vector<std::string>              columns;
    std::vector<std::string>              labels;
    std::vector<std::vector<std::string>> cells;

    void add_row(std::string label, std::vector<std::string> row);

    std::string text() const;
    std::string csv() const;
  };

}  // namespace pdm::cli
