#include "pdm/interface.hpp"

#include <algorithm>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

  std::string_view name(ComponentKind kind) noexcept {
    switch (kind) {
      case ComponentKind::cycle:
        return "cycle";
      case ComponentKind::inert_path:
        return "inert path";
      case ComponentKind::trans_active_path:
        return "trans-active path";
      case ComponentKind::cis_active_path:
        return "cis-active path";
      default:
        return "mixed path";
    }
  }

  InterfaceGraph::InterfaceGraph(Diagram const& d)
      : _degree(d.degree()),
        _upper(_degree + 1, 0),
        _lower(_degree + 1, 0),
        _upper_level(_degree + 1, -1),
        _lower_level(_degree + 1, -1) {
    int const  n      = static_cast<int>(_degree);
    auto const levels = word_of(d).levels();
    for (int v = 1; v <= n; ++v) {
      int top = d.mate(v - 1);
      if (top >= n) {
        _down_active.push_back(v);
      } else if (top != Diagram::none) {
        _lower[v]       = top + 1;
        _lower_level[v] = levels[v - 1];
      }
      int bottom = d.mate(2 * n - v);
      if (bottom == Diagram::none) {
        continue;
      } else if (bottom < n) {
        _up_active.push_back(v);
      } else {
        _upper[v]       = 2 * n - bottom;
        _upper_level[v] = levels[2 * n - v];
      }
    }
  }

  namespace {
    std::vector<std::pair<int, int>> edges_of(std::vector<int> const& partner) {
      std::vector<std::pair<int, int>> result;
      for (int v = 1; v < static_cast<int>(partner.size()); ++v) {
        if (partner[v] > v) {
          result.emplace_back(v, partner[v]);
        }
      }
      return result;
    }
  }  // namespace

  std::vector<std::pair<int, int>> InterfaceGraph::upper_edges() const {
    return edges_of(_upper);
  }

  std::vector<std::pair<int, int>> InterfaceGraph::lower_edges() const {
    return edges_of(_lower);
  }

  bool InterfaceGraph::is_up_active(int v) const {
    return std::binary_search(_up_active.begin(), _up_active.end(), v);
  }

  bool InterfaceGraph::is_down_active(int v) const {
    return std::binary_search(_down_active.begin(), _down_active.end(), v);
  }

  InterfaceGraph gamma(Diagram const& d) {
    return InterfaceGraph(d);
  }

  std::vector<GammaComponent> components(InterfaceGraph const& g) {
    int const                   n = static_cast<int>(g.degree());
    std::vector<char>           seen(n + 1, 0);
    std::vector<GammaComponent> result;

    auto partner = [&](int v, bool upper) {
      return upper ? g.upper_partner(v) : g.lower_partner(v);
    };
    auto active = [&](int v, bool upper) {
      return upper ? g.is_up_active(v) : g.is_down_active(v);
    };

    for (int v = 1; v <= n; ++v) {
      if (seen[v] || (g.upper_partner(v) != 0 && g.lower_partner(v) != 0)) {
        continue;
      }
      GammaComponent c;
      bool const     start_upper  = g.upper_partner(v) == 0;
      bool const     start_active = active(v, start_upper);
      bool           follow_upper = !start_upper;
      int            cur          = v;
      seen[v]                     = 1;
      c.vertices.push_back(v);
      while (partner(cur, follow_upper) != 0) {
        cur     = partner(cur, follow_upper);
        seen[cur] = 1;
        c.vertices.push_back(cur);
        ++c.length;
        follow_upper = !follow_upper;
      }
      bool const end_active = active(cur, follow_upper);
      if (!start_active && !end_active) {
        c.kind = ComponentKind::inert_path;
      } else if (start_active && end_active) {
        c.kind = follow_upper != start_upper ? ComponentKind::trans_active_path
                                             : ComponentKind::cis_active_path;
      } else {
        c.kind = ComponentKind::mixed_path;
      }
      std::sort(c.vertices.begin(), c.vertices.end());
      result.push_back(std::move(c));
    }

    int threshold = n + 1;
    if (g.rank() > 0) {
      threshold = std::max(g.up_active().front(), g.down_active().front());
    }
    for (int v = 1; v <= n; ++v) {
      if (seen[v]) {
        continue;
      }
      GammaComponent c;
      c.kind            = ComponentKind::cycle;
      c.llt             = v < threshold;
      bool follow_upper = true;
      int  cur          = v;
      do {
        seen[cur] = 1;
        c.vertices.push_back(cur);
        // u counts returns of the diagram's upper row, which sit below the
        // line in the interface graph.
        if (follow_upper) {
          c.l += g.upper_return(cur);
        } else {
          c.u += g.lower_return(cur);
        }
        cur = partner(cur, follow_upper);
        ++c.length;
        follow_upper = !follow_upper;
      } while (cur != v);
      std::sort(c.vertices.begin(), c.vertices.end());
      result.push_back(std::move(c));
    }
    return result;
  }

  bool is_idempotent(Diagram const& d) {
    for (auto const& c : components(gamma(d))) {
      if (c.kind == ComponentKind::cis_active_path
          || c.kind == ComponentKind::mixed_path) {
        return false;
      }
    }
    return true;
  }

  std::size_t self_floating_count(Diagram const& d) {
    std::size_t count = 0;
    for (auto const& c : components(gamma(d))) {
      if (c.kind == ComponentKind::cycle
          || c.kind == ComponentKind::inert_path) {
        ++count;
      }
    }
    return count;
  }

  namespace {
    // Turns every second unmatched U into a D, closing it against the
    // previous one.
    SemiWord pair_off(SemiWord const& w) {
      std::vector<Symbol> symbols(w.symbols().begin(), w.symbols().end());
      std::vector<int>    open;
      for (int p = 0; p < static_cast<int>(symbols.size()); ++p) {
        if (symbols[p] == Symbol::U) {
          open.push_back(p);
        } else if (symbols[p] == Symbol::D) {
          open.pop_back();
        }
      }
      for (std::size_t k = 1; k < open.size(); k += 2) {
        symbols[open[k]] = Symbol::D;
      }
      return SemiWord(std::move(symbols));
    }
  }  // namespace

  Diagram hat(Diagram const& d) {
    if (!is_idempotent(d)) {
      throw ValidationError("hat is only defined on idempotents, got "
                            + d.str());
    }
    auto p = pair_of(d);
    return diagram_of_pair(pair_off(p.left), pair_off(p.right));
  }

  HalfGraph::HalfGraph(std::span<Symbol const> word) {
    if (word.size() > max_scan_degree) {
      throw ValidationError("semi-word longer than "
                            + std::to_string(max_scan_degree));
    }
    partner.fill(-1);
    degree = static_cast<int>(word.size());
    std::array<std::int8_t, max_scan_degree> open{};
    int                                      top = 0;
    for (int p = 0; p < degree; ++p) {
      if (word[p] == Symbol::U) {
        open[top++] = static_cast<std::int8_t>(p);
      } else if (word[p] == Symbol::D) {
        if (top == 0) {
          throw ValidationError("semi-word has a negative prefix sum");
        }
        int q      = open[--top];
        partner[p] = static_cast<std::int8_t>(q);
        partner[q] = static_cast<std::int8_t>(p);
        if (top == 0) {
          returns |= (std::uint64_t(1) << p) | (std::uint64_t(1) << q);
        }
      }
    }
    rank         = top;
    first_active = top > 0 ? open[0] : degree;
    for (int k = 0; k < top; ++k) {
      active |= std::uint64_t(1) << open[k];
    }
  }

  void scan_pair(HalfGraph const& upper, HalfGraph const& lower, PairScan& out) {
    // Gamma's upper side carries the lower row of the diagram and vice
    // versa; down-active vertices are the unmatched U of the upper row.
    int const     n       = upper.degree;
    std::uint64_t visited = 0;
    out                   = PairScan{};

    auto bit = [](int v) { return std::uint64_t(1) << v; };

    for (int v = 0; v < n; ++v) {
      if (visited & bit(v)) {
        continue;
      }
      bool const up_free   = lower.partner[v] < 0;
      bool const down_free = upper.partner[v] < 0;
      if (!up_free && !down_free) {
        continue;
      }
      bool const start_active
          = up_free ? (lower.active & bit(v)) : (upper.active & bit(v));
      bool follow_upper = !up_free;
      int  cur          = v;
      visited |= bit(v);
      while (true) {
        int p = follow_upper ? lower.partner[cur] : upper.partner[cur];
        if (p < 0) {
          break;
        }
        cur = p;
        visited |= bit(cur);
        follow_upper = !follow_upper;
      }
      bool const end_active = follow_upper ? (lower.active & bit(cur))
                                           : (upper.active & bit(cur));
      if (!start_active && !end_active) {
        ++out.inert_paths;
      } else if (start_active && end_active) {
        if (follow_upper != up_free) {
          ++out.trans_paths;
        } else {
          ++out.cis_paths;
          out.idempotent = false;
        }
      } else {
        ++out.mixed_paths;
        out.idempotent = false;
      }
    }

    int const threshold = upper.rank == 0
                              ? n
                              : std::max(upper.first_active,
                                         lower.first_active);
    for (int v = 0; v < n; ++v) {
      if (visited & bit(v)) {
        continue;
      }
      CycleReturns& c = out.cycle[out.cycles++];
      c.min_vertex    = static_cast<std::uint8_t>(v);
      c.llt           = v < threshold;
      int cur         = v;
      do {
        visited |= bit(cur);
        c.l += (lower.returns >> cur) & 1;
        cur = lower.partner[cur];
        visited |= bit(cur);
        c.u += (upper.returns >> cur) & 1;
        cur = upper.partner[cur];
      } while (cur != v);
    }
  }

}  // namespace pdm
