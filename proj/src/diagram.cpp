#include "pdm/diagram.hpp"

#include <string>

#include "pdm/error.hpp"

namespace pdm {

  namespace {
    // Stack matching of a word into a mate array; the word is assumed to be
    // a valid Motzkin word.
    std::vector<int> match_word(std::span<Symbol const> symbols) {
      std::vector<int> mate(symbols.size(), Diagram::none);
      std::vector<int> open;
      for (std::size_t p = 0; p < symbols.size(); ++p) {
        if (symbols[p] == Symbol::U) {
          open.push_back(static_cast<int>(p));
        } else if (symbols[p] == Symbol::D) {
          int q = open.back();
          open.pop_back();
          mate[p] = q;
          mate[q] = static_cast<int>(p);
        }
      }
      return mate;
    }

    std::vector<Symbol> symbols_of(std::span<int const> mate) {
      std::vector<Symbol> result(mate.size());
      for (std::size_t p = 0; p < mate.size(); ++p) {
        if (mate[p] == Diagram::none) {
          result[p] = Symbol::F;
        } else {
          result[p] = mate[p] > static_cast<int>(p) ? Symbol::U : Symbol::D;
        }
      }
      return result;
    }
  }  // namespace

  Diagram::Diagram(std::size_t n, std::vector<int> mate)
      : _degree(n), _mate(std::move(mate)) {
    if (_mate.size() != 2 * n) {
      throw ValidationError("mate array has length "
                            + std::to_string(_mate.size()) + ", expected "
                            + std::to_string(2 * n));
    }
    int const size = static_cast<int>(_mate.size());
    for (int p = 0; p < size; ++p) {
      int q = _mate[p];
      if (q == none) {
        continue;
      }
      if (q < 0 || q >= size || q == p || _mate[q] != p) {
        throw ValidationError("mate array is not a partial involution at "
                              + std::to_string(p));
      }
    }
    // A non-crossing matching is exactly what the stack scan of its own
    // word reproduces.
    if (match_word(symbols_of(_mate)) != _mate) {
      throw ValidationError("diagram is not planar");
    }
  }

  std::size_t Diagram::position_of(int vertex) const {
    int const n = static_cast<int>(_degree);
    if (vertex >= 1 && vertex <= n) {
      return vertex - 1;
    } else if (vertex <= -1 && vertex >= -n) {
      return 2 * n + vertex;
    }
    throw ValidationError("vertex " + std::to_string(vertex)
                          + " out of range for degree "
                          + std::to_string(n));
  }

  Diagram Diagram::from_edges(std::size_t                          n,
                              std::vector<std::pair<int, int>> const& edges) {
    Diagram tmp;
    tmp._degree = n;
    std::vector<int> mate(2 * n, none);
    for (auto [a, b] : edges) {
      auto p = tmp.position_of(a);
      auto q = tmp.position_of(b);
      if (p == q || mate[p] != none || mate[q] != none) {
        throw ValidationError("edges are not a matching");
      }
      mate[p] = static_cast<int>(q);
      mate[q] = static_cast<int>(p);
    }
    return Diagram(n, std::move(mate));
  }

  Diagram Diagram::identity(std::size_t n) {
    std::vector<int> mate(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      mate[i]             = static_cast<int>(2 * n - 1 - i);
      mate[2 * n - 1 - i] = static_cast<int>(i);
    }
    return Diagram(n, std::move(mate));
  }

  bool Diagram::is_jones() const noexcept {
    for (int q : _mate) {
      if (q == none) {
        return false;
      }
    }
    return true;
  }

  Diagram Diagram::transpose() const {
    int const        last = static_cast<int>(_mate.size()) - 1;
    std::vector<int> mate(_mate.size(), none);
    for (int p = 0; p <= last; ++p) {
      if (_mate[last - p] != none) {
        mate[p] = last - _mate[last - p];
      }
    }
    return Diagram(_degree, std::move(mate));
  }

  std::string Diagram::str() const {
    return to_string(symbols_of(_mate));
  }

  MotzkinWord word_of(Diagram const& d) {
    return MotzkinWord(symbols_of(d.mates()));
  }

  Diagram diagram_of(MotzkinWord const& w) {
    return Diagram(w.size() / 2, match_word(w.symbols()));
  }

  SemiWordPair pair_of(Diagram const& d) {
    auto const          symbols = symbols_of(d.mates());
    std::size_t const   n       = d.degree();
    std::vector<Symbol> left(symbols.begin(), symbols.begin() + n);
    std::vector<Symbol> right(n);
    for (std::size_t i = 0; i < n; ++i) {
      right[i] = complement(symbols[2 * n - 1 - i]);
    }
    return {SemiWord(std::move(left)), SemiWord(std::move(right))};
  }

  Diagram diagram_of_pair(SemiWord const& left, SemiWord const& right) {
    if (left.size() != right.size()) {
      throw ValidationError("semi-words of different lengths "
                            + std::to_string(left.size()) + " and "
                            + std::to_string(right.size()));
    }
    if (left.rank() != right.rank()) {
      throw ValidationError("semi-words " + left.str() + " and "
                            + right.str() + " have different ranks");
    }
    std::size_t const   n = left.size();
    std::vector<Symbol> symbols(left.symbols().begin(), left.symbols().end());
    symbols.resize(2 * n);
    for (std::size_t i = 0; i < n; ++i) {
      symbols[2 * n - 1 - i] = complement(right[i]);
    }
    return Diagram(n, match_word(symbols));
  }

  Diagram diagram_of_pair(SemiWordPair const& p) {
    return diagram_of_pair(p.left, p.right);
  }

  Product multiply(Diagram const& a, Diagram const& b) {
    if (a.degree() != b.degree()) {
      throw ValidationError("cannot multiply diagrams of degrees "
                            + std::to_string(a.degree()) + " and "
                            + std::to_string(b.degree()));
    }
    int const n  = static_cast<int>(a.degree());
    int const nn = 2 * n;
    // Middle vertex j (1-based) is lower j' of a, position 2n - j, and
    // upper j of b, position j - 1.
    std::vector<char> seen(n + 1, 0);
    std::vector<int>  mate(nn, Diagram::none);

    // Follows a path that has just arrived at middle vertex j, coming from
    // a (from_a) or from b, and returns the outer position where it leaves
    // in product coordinates, or none.
    auto trace = [&](int j, bool from_a) {
      while (true) {
        seen[j] = 1;
        if (from_a) {
          int r = b.mate(j - 1);
          if (r == Diagram::none) {
            return Diagram::none;
          } else if (r >= n) {
            return r;
          }
          j      = r + 1;
          from_a = false;
        } else {
          int r = a.mate(nn - j);
          if (r == Diagram::none) {
            return Diagram::none;
          } else if (r < n) {
            return r;
          }
          j      = nn - r;
          from_a = true;
        }
      }
    };

    auto link = [&](int p, int q) {
      if (q != Diagram::none) {
        mate[p] = q;
        mate[q] = p;
      }
    };

    for (int p = 0; p < n; ++p) {
      int q = a.mate(p);
      if (q == Diagram::none || mate[p] != Diagram::none) {
        continue;
      }
      if (q < n) {
        link(p, q);
      } else {
        link(p, trace(nn - q, true));
      }
    }
    for (int p = n; p < nn; ++p) {
      int q = b.mate(p);
      if (q == Diagram::none || mate[p] != Diagram::none) {
        continue;
      }
      if (q >= n) {
        link(p, q);
      } else {
        link(p, trace(q + 1, false));
      }
    }

    // Whatever is left in the middle row closes up on itself. Each piece is
    // a cycle or a path, possibly a lone vertex.
    std::size_t floating = 0;
    for (int j = 1; j <= n; ++j) {
      if (seen[j]) {
        continue;
      }
      ++floating;
      // Walk both directions from j.
      seen[j] = 1;
      for (bool from_a : {true, false}) {
        int k = j;
        while (true) {
          int r = from_a ? b.mate(k - 1) : a.mate(nn - k);
          if (r == Diagram::none) {
            break;
          }
          k = from_a ? r + 1 : nn - r;
          if (seen[k]) {
            break;
          }
          seen[k] = 1;
          from_a  = !from_a;
        }
      }
    }
    return {Diagram(a.degree(), std::move(mate)), floating};
  }

  std::size_t rank(Diagram const& d) noexcept {
    int const   n     = static_cast<int>(d.degree());
    std::size_t count = 0;
    for (int p = 0; p < n; ++p) {
      if (d.mate(p) >= n) {
        ++count;
      }
    }
    return count;
  }

  namespace {
    bool chord_is_clear(Diagram const& d, int a, int b) {
      for (int p = a + 1; p < b; ++p) {
        int q = d.mate(p);
        if (q != Diagram::none && (q < a || q > b)) {
          return false;
        }
      }
      return true;
    }

    bool completable(Diagram const& d, std::span<int const> singles) {
      if (singles.empty()) {
        return true;
      }
      for (std::size_t j = 1; j < singles.size(); j += 2) {
        if (chord_is_clear(d, singles[0], singles[j])
            && completable(d, singles.subspan(1, j - 1))
            && completable(d, singles.subspan(j + 1))) {
          return true;
        }
      }
      return false;
    }
  }  // namespace

  bool is_partial_jones(Diagram const& d) {
    std::vector<int> singles;
    for (std::size_t p = 0; p < 2 * d.degree(); ++p) {
      if (d.mate(p) == Diagram::none) {
        singles.push_back(static_cast<int>(p));
      }
    }
    return completable(d, singles);
  }

}  // namespace pdm
