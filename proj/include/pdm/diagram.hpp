#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "word.hpp"

namespace pdm {

  // A planar partial matching on n upper and n lower vertices.
  //
  // Vertices live on a single line of 2n "unfolded" positions: upper vertex i
  // is position i - 1 and lower vertex j' is position 2n - j. With that
  // convention planarity is the usual non-crossing condition on a line.
  class Diagram {
   public:
    static constexpr int none = -1;

    Diagram() = default;

    // Throws ValidationError if mate is not a non-crossing partial
    // involution on 2n positions.
    Diagram(std::size_t n, std::vector<int> mate);

    // Edges given by vertex labels: i > 0 is the upper vertex i and -j is
    // the lower vertex j'. Unmentioned vertices are singletons.
    static Diagram from_edges(std::size_t                          n,
                              std::vector<std::pair<int, int>> const& edges);
    static Diagram identity(std::size_t n);

    std::size_t degree() const noexcept {
      return _degree;
    }
    std::span<int const> mates() const noexcept {
      return _mate;
    }
    int mate(std::size_t pos) const noexcept {
      return _mate[pos];
    }

    std::size_t position_of(int vertex) const;

    bool is_upper(int pos) const noexcept {
      return pos < static_cast<int>(_degree);
    }

    bool is_jones() const noexcept;

    // Reflection that swaps the two rows.
    Diagram transpose() const;

    std::string str() const;

    friend bool operator==(Diagram const&, Diagram const&) = default;
    friend auto operator<=>(Diagram const& a, Diagram const& b) {
      if (auto c = a._degree <=> b._degree; c != 0) {
        return c;
      }
      return a._mate <=> b._mate;
    }

   private:
    std::size_t      _degree = 0;
    std::vector<int> _mate;
  };

  struct Product {
    Diagram     diagram;
    std::size_t floating = 0;
  };

  MotzkinWord  word_of(Diagram const& d);
  Diagram      diagram_of(MotzkinWord const& w);
  SemiWordPair pair_of(Diagram const& d);
  Diagram      diagram_of_pair(SemiWordPair const& p);
  Diagram      diagram_of_pair(SemiWord const& left, SemiWord const& right);

  // Concatenation a then b. The count of floating components is the number
  // of connected pieces of the middle row that touch neither outer row.
  Product multiply(Diagram const& a, Diagram const& b);

  std::size_t rank(Diagram const& d) noexcept;

  // True if the singletons can be joined up among themselves without
  // crossing anything, that is d is obtained from a Jones diagram by
  // deleting edges.
  bool is_partial_jones(Diagram const& d);

}  // namespace pdm
