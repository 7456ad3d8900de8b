#pragma once

// Reference computations for the tests, written without the library's
// word machinery.

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "pdm/diagram.hpp"

namespace oracle {

  // Lattice paths of length n from height 0 to height k that stay
  // nonnegative, with (flats) or without flat steps.
  inline std::uint64_t paths(std::size_t n, std::size_t k, bool flats) {
    std::vector<std::uint64_t> row(n + 2, 0);
    row[0] = 1;
    for (std::size_t i = 0; i < n; ++i) {
      std::vector<std::uint64_t> next(n + 2, 0);
      for (std::size_t h = 0; h <= n; ++h) {
        if (row[h] == 0) {
          continue;
        }
        next[h + 1] += row[h];
        if (flats) {
          next[h] += row[h];
        }
        if (h > 0) {
          next[h - 1] += row[h];
        }
      }
      row = next;
    }
    return k <= n ? row[k] : 0;
  }

  inline std::uint64_t catalan(std::size_t k) {
    return paths(2 * k, 0, false);
  }

  inline std::uint64_t motzkin(std::size_t n) {
    return paths(n, 0, true);
  }

  // All non-crossing partial matchings of 2n points, built directly on mate
  // arrays: the first point is either alone or joined to some later point,
  // which splits the rest into an inside and an outside.
  inline void matchings(std::vector<int>& mate, int lo, int hi,
                        std::function<void()> const& emit, bool jones) {
    if (lo >= hi) {
      emit();
      return;
    }
    if (!jones) {
      mate[lo] = pdm::Diagram::none;
      matchings(mate, lo + 1, hi, emit, jones);
    }
    for (int j = lo + 1; j < hi; ++j) {
      if (jones && (j - lo) % 2 == 0) {
        continue;
      }
      mate[lo] = j;
      mate[j]  = lo;
      matchings(
          mate, lo + 1, j,
          [&] { matchings(mate, j + 1, hi, emit, jones); }, jones);
    }
  }

  inline std::vector<pdm::Diagram> all_diagrams(std::size_t n, bool jones) {
    std::vector<pdm::Diagram> result;
    std::vector<int>          mate(2 * n, pdm::Diagram::none);
    matchings(
        mate, 0, static_cast<int>(2 * n),
        [&] { result.emplace_back(n, mate); }, jones);
    return result;
  }

  // Completable to a perfect non-crossing matching iff every region cut out
  // by the arcs holds an even number of singletons.
  inline bool completable_by_parity(pdm::Diagram const& d) {
    int const        size = static_cast<int>(2 * d.degree());
    std::vector<int> stack;          // open arcs
    std::vector<int> count(size + 1, 0);  // singletons per region
    for (int p = 0; p < size; ++p) {
      int const region = stack.empty() ? size : stack.back();
      int const q      = d.mate(p);
      if (q == pdm::Diagram::none) {
        ++count[region];
      } else if (q > p) {
        stack.push_back(p);
      } else {
        stack.pop_back();
      }
    }
    for (int c : count) {
      if (c % 2 != 0) {
        return false;
      }
    }
    return true;
  }

  inline pdm::Diagram const& pick(std::vector<pdm::Diagram> const& pool,
                                  std::mt19937_64&                 rng) {
    std::uniform_int_distribution<std::size_t> dist(0, pool.size() - 1);
    return pool[dist(rng)];
  }

}  // namespace oracle
