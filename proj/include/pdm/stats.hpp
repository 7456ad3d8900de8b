#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "count.hpp"
#include "diagram.hpp"
#include "monoid.hpp"
#include "word.hpp"

namespace pdm {

  // Calls f(left, right) for every idempotent, expanding each seed by all
  // choices of mutations. Only motzkin and jones are valid.
  void for_each_idempotent_pair(
      Monoid m, std::size_t n,
      std::function<void(std::span<Symbol const>, std::span<Symbol const>)> const&
          f);

  void for_each_idempotent(Monoid m, std::size_t n,
                           std::function<void(Diagram const&)> const& f);
  std::vector<Diagram> enumerate_idempotents(Monoid m, std::size_t n);

  // Jones idempotents of degree n by number of cycles c and number of paths
  // p (which is the rank), together with the return sums
  //   s1 = sum over cycles of (u + l),
  //   s2 = sum over ordered pairs of distinct cycles of u_1 * l_2.
  struct StatsGrid {
    using Matrix = std::vector<std::vector<Count>>;  // [c][p]

    std::size_t n = 0;
    Matrix      e;
    Matrix      s1;
    Matrix      s2;

    // Zero outside the stored range, including negative indices.
    static Count const& at(Matrix const& m, long c, long p);

    // Sum over c.
    Count e_rank(long p) const;
    Count s1_rank(long p) const;
    Count s2_rank(long p) const;
    // Sum over p.
    Count e_cycles(long c) const;

    Count meandric_even() const {
      return at(e, 1, 0);
    }
    Count meandric_odd() const {
      return at(e, 0, 1);
    }
  };

  StatsGrid stats_grid(std::size_t n);

  // m_2, ..., m_{n_max}.
  std::vector<Count> meandric(std::size_t n_max);

  struct IdentityResult {
    std::string              name;
    std::size_t              checked = 0;
    std::vector<std::string> failures;

    bool pass() const noexcept {
      return failures.empty();
    }
  };

  std::vector<IdentityResult> verify_identities(std::size_t n_max);

  // Largest single-rank contribution to the Jones idempotent count; ties go
  // to the smaller rank.
  struct DStar {
    std::size_t n    = 0;
    std::size_t rank = 0;
    Count       d_star;
    Count       total;
  };

  std::vector<DStar> d_star_report(std::size_t n_max);

  // Motzkin idempotents along the diagonal rank = n - d: the d-th
  // difference of that sequence. Observed, not proved.
  struct DiagonalDifference {
    std::size_t        d = 0;
    std::vector<Count> differences;

    bool all_one() const;
  };

  std::vector<DiagonalDifference> motzkin_diagonal_report(std::size_t n_max);

}  // namespace pdm
