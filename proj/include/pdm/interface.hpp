#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "diagram.hpp"
#include "word.hpp"

namespace pdm {

  enum class ComponentKind {
    cycle,
    inert_path,
    trans_active_path,
    cis_active_path,
    mixed_path
  };

  std::string_view name(ComponentKind kind) noexcept;

  struct GammaComponent {
    ComponentKind    kind = ComponentKind::cycle;
    std::vector<int> vertices;  // ascending, 1-based
    std::size_t      length = 0;
    // Returns (edges at level 0 of the full word) from the diagram's upper
    // row (u) and lower row (l). Zero on paths.
    std::size_t u   = 0;
    std::size_t l   = 0;
    bool        llt = false;
  };

  // The interface graph of a diagram: one row of n vertices. Edges drawn
  // above the row copy the lower-row edges of the diagram, edges below copy
  // the upper-row edges. A vertex with a transversal on the lower row is
  // active upwards, one with a transversal on the upper row is active
  // downwards.
  class InterfaceGraph {
   public:
    explicit InterfaceGraph(Diagram const& d);

    std::size_t degree() const noexcept {
      return _degree;
    }
    // Partners are 1-based; 0 means unmatched on that side.
    int upper_partner(int v) const {
      return _upper[v];
    }
    int lower_partner(int v) const {
      return _lower[v];
    }
    bool upper_return(int v) const {
      return _upper_level[v] == 0;
    }
    bool lower_return(int v) const {
      return _lower_level[v] == 0;
    }
    std::vector<std::pair<int, int>> upper_edges() const;
    std::vector<std::pair<int, int>> lower_edges() const;

    std::vector<int> const& up_active() const noexcept {
      return _up_active;
    }
    std::vector<int> const& down_active() const noexcept {
      return _down_active;
    }
    bool is_up_active(int v) const;
    bool is_down_active(int v) const;

    std::size_t rank() const noexcept {
      return _up_active.size();
    }

   private:
    std::size_t      _degree;
    std::vector<int> _upper;
    std::vector<int> _lower;
    std::vector<int> _upper_level;
    std::vector<int> _lower_level;
    std::vector<int> _up_active;
    std::vector<int> _down_active;
  };

  InterfaceGraph gamma(Diagram const& d);

  // Paths first, in order of their smallest free terminus, then cycles in
  // order of their smallest vertex.
  std::vector<GammaComponent> components(InterfaceGraph const& g);

  bool is_idempotent(Diagram const& d);

  // Joins consecutive pairs of active vertices on each side, leaving one
  // transversal when the rank is odd. Throws ValidationError for
  // non-idempotents.
  Diagram hat(Diagram const& d);

  // Number of floating components of d * d.
  std::size_t self_floating_count(Diagram const& d);

  ////////////////////////////////////////////////////////////////////////
  // Allocation-free scan of a pair of semi-words, used in the hot loops.
  ////////////////////////////////////////////////////////////////////////

  inline constexpr std::size_t max_scan_degree = 64;

  // One half of a diagram in semi-word form. Vertices are 0-based.
  struct HalfGraph {
    HalfGraph() = default;
    explicit HalfGraph(std::span<Symbol const> word);
    explicit HalfGraph(SemiWord const& word) : HalfGraph(word.symbols()) {}

    std::array<std::int8_t, max_scan_degree> partner{};  // -1 if unmatched
    std::uint64_t active  = 0;  // unmatched U
    std::uint64_t returns = 0;  // both endpoints of each level 0 edge
    int           first_active = 0;
    int           degree       = 0;
    int           rank         = 0;
  };

  struct CycleReturns {
    std::uint8_t u          = 0;
    std::uint8_t l          = 0;
    std::uint8_t min_vertex = 0;
    bool         llt        = false;
  };

  struct PairScan {
    bool idempotent  = true;
    int  inert_paths = 0;
    int  trans_paths = 0;
    int  cis_paths   = 0;
    int  mixed_paths = 0;
    int  cycles      = 0;
    std::array<CycleReturns, max_scan_degree / 2> cycle{};
  };

  // Scans the diagram whose upper row is described by upper and whose lower
  // row by lower.
  void scan_pair(HalfGraph const& upper, HalfGraph const& lower, PairScan& out);

}  // namespace pdm
