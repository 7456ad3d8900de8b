#include "pdm/stats.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include "pdm/engine.hpp"
#include "pdm/error.hpp"
#include "pdm/interface.hpp"
#include "pdm/seeds.hpp"

namespace pdm {

  namespace {
    struct ReturnEdges {
      // Positions of the D ends of the level 0 edges of one cycle.
      std::vector<int> upper;  // in the upper-row half
      std::vector<int> lower;  // in the lower-row half
    };

    using PairCallback = std::function<void(std::span<Symbol const>,
                                            std::span<Symbol const>)>;

    void choose(std::vector<ReturnEdges> const& cycles, std::size_t i,
                std::vector<Symbol>& x, std::vector<Symbol>& y,
                PairCallback const& f) {
      if (i == cycles.size()) {
        f(x, y);
        return;
      }
      choose(cycles, i + 1, x, y, f);
      for (int a : cycles[i].upper) {
        for (int b : cycles[i].lower) {
          x[a] = Symbol::U;
          y[b] = Symbol::U;
          choose(cycles, i + 1, x, y, f);
          x[a] = Symbol::D;
          y[b] = Symbol::D;
        }
      }
    }

    void expand(SemiWord const& left, SemiWord const& right,
                PairCallback const& f) {
      HalfGraph const hx(left);
      HalfGraph const hy(right);
      PairScan        scan;
      scan_pair(hx, hy, scan);
      if (!scan.idempotent) {
        return;
      }
      std::vector<ReturnEdges> cycles;
      for (int c = 0; c < scan.cycles; ++c) {
        auto const& cycle = scan.cycle[c];
        if (!cycle.llt || cycle.u == 0 || cycle.l == 0) {
          continue;
        }
        ReturnEdges edges;
        int const   v   = cycle.min_vertex;
        int         cur = v;
        do {
          int next = hy.partner[cur];
          if ((hy.returns >> cur) & 1) {
            edges.lower.push_back(std::max(cur, next));
          }
          cur  = next;
          next = hx.partner[cur];
          if ((hx.returns >> cur) & 1) {
            edges.upper.push_back(std::max(cur, next));
          }
          cur = next;
        } while (cur != v);
        cycles.push_back(std::move(edges));
      }
      std::vector<Symbol> x(left.symbols().begin(), left.symbols().end());
      std::vector<Symbol> y(right.symbols().begin(), right.symbols().end());
      choose(cycles, 0, x, y, f);
    }
  }  // namespace

  void for_each_idempotent_pair(Monoid m, std::size_t n,
                                PairCallback const& f) {
    if (m != Monoid::motzkin && m != Monoid::jones) {
      throw ValidationError("fibre expansion applies to motzkin and jones, "
                            "not "
                            + std::string(name(m)));
    }
    bool const jones = m == Monoid::jones;
    for (std::size_t r = 0; r <= std::min<std::size_t>(n, 1); ++r) {
      if (jones && r != n % 2) {
        continue;
      }
      auto const words
          = semiwords(n, r, jones ? Alphabet::no_flat : Alphabet::with_flat);
      for (auto const& x : words) {
        for (auto const& y : words) {
          expand(x, y, f);
        }
      }
    }
  }

  void for_each_idempotent(Monoid m, std::size_t n,
                           std::function<void(Diagram const&)> const& f) {
    for_each_idempotent_pair(
        m, n, [&f](std::span<Symbol const> x, std::span<Symbol const> y) {
          f(diagram_of_pair(SemiWord({x.begin(), x.end()}),
                            SemiWord({y.begin(), y.end()})));
        });
  }

  std::vector<Diagram> enumerate_idempotents(Monoid m, std::size_t n) {
    std::vector<Diagram> result;
    for_each_idempotent(m, n,
                        [&result](Diagram const& d) { result.push_back(d); });
    return result;
  }

  Count const& StatsGrid::at(Matrix const& m, long c, long p) {
    static Count const zero = 0;
    if (c < 0 || p < 0 || c >= static_cast<long>(m.size())
        || p >= static_cast<long>(m[c].size())) {
      return zero;
    }
    return m[c][p];
  }

  namespace {
    Count row_sum(StatsGrid::Matrix const& m, long p) {
      Count total = 0;
      for (long c = 0; c < static_cast<long>(m.size()); ++c) {
        total += StatsGrid::at(m, c, p);
      }
      return total;
    }
  }  // namespace

  Count StatsGrid::e_rank(long p) const {
    return row_sum(e, p);
  }

  Count StatsGrid::s1_rank(long p) const {
    return row_sum(s1, p);
  }

  Count StatsGrid::s2_rank(long p) const {
    return row_sum(s2, p);
  }

  Count StatsGrid::e_cycles(long c) const {
    Count total = 0;
    for (long p = 0; p <= static_cast<long>(n); ++p) {
      total += at(e, c, p);
    }
    return total;
  }

  StatsGrid stats_grid(std::size_t n) {
    StatsGrid grid;
    grid.n = n;
    auto const blank
        = StatsGrid::Matrix(n / 2 + 1, std::vector<Count>(n + 1, 0));
    grid.e  = blank;
    grid.s1 = blank;
    grid.s2 = blank;

    // Small per-cell tallies first; counts stay well inside 64 bits for
    // any degree this is run at.
    std::vector<std::vector<std::uint64_t>> e(
        n / 2 + 1, std::vector<std::uint64_t>(n + 1, 0));
    auto s1 = e;
    auto s2 = e;

    PairScan scan;
    for_each_idempotent_pair(
        Monoid::jones, n,
        [&](std::span<Symbol const> x, std::span<Symbol const> y) {
          HalfGraph const hx(x);
          HalfGraph const hy(y);
          scan_pair(hx, hy, scan);
          std::uint64_t sum_u = 0, sum_l = 0, sum_ul = 0;
          for (int c = 0; c < scan.cycles; ++c) {
            auto const& cycle = scan.cycle[c];
            if (!cycle.llt) {
              continue;
            }
            sum_u += cycle.u;
            sum_l += cycle.l;
            sum_ul += std::uint64_t(cycle.u) * cycle.l;
          }
          auto const c = scan.cycles;
          auto const p = hx.rank;
          e[c][p] += 1;
          s1[c][p] += sum_u + sum_l;
          s2[c][p] += sum_u * sum_l - sum_ul;
        });
    for (std::size_t c = 0; c <= n / 2; ++c) {
      for (std::size_t p = 0; p <= n; ++p) {
        grid.e[c][p]  = e[c][p];
        grid.s1[c][p] = s1[c][p];
        grid.s2[c][p] = s2[c][p];
      }
    }
    return grid;
  }

  std::vector<Count> meandric(std::size_t n_max) {
    if (n_max < 2) {
      throw ValidationError("meandric numbers start at m_2");
    }
    std::vector<Count> odd_or_even;  // m_1, m_2, ...
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const grid = stats_grid(n);
      odd_or_even.push_back(n % 2 == 0 ? grid.meandric_even()
                                       : grid.meandric_odd());
      if (n % 2 == 0 && odd_or_even[n - 1] != odd_or_even[n - 2]) {
        throw std::logic_error("m_" + std::to_string(n) + " != m_"
                               + std::to_string(n - 1));
      }
    }
    return {odd_or_even.begin() + 1, odd_or_even.end()};
  }

  namespace {
    std::string triple(long n, long c, long p) {
      return "(n=" + std::to_string(n) + ", c=" + std::to_string(c)
             + ", p=" + std::to_string(p) + ")";
    }

    std::string got(Count const& lhs, Count const& rhs) {
      return ": " + to_string(lhs) + " != " + to_string(rhs);
    }

    Count catalan(std::size_t k) {
      Count c = 1;
      for (std::size_t i = 0; i < k; ++i) {
        c = c * 2 * (2 * i + 1) / (i + 2);
      }
      return c;
    }

    Count binomial(std::size_t n, std::size_t k) {
      Count b = 1;
      for (std::size_t i = 0; i < k; ++i) {
        b = b * (n - i) / (i + 1);
      }
      return b;
    }

    // k-th backward difference at n of the function i -> f(i).
    template <typename F>
    Count backward_difference(std::size_t k, long n, F&& f) {
      Count result = 0;
      for (std::size_t i = 0; i <= k; ++i) {
        Count term = binomial(k, i) * f(n - static_cast<long>(i));
        if (i % 2 == 0) {
          result += term;
        } else {
          result -= term;
        }
      }
      return result;
    }

    class Checker {
     public:
      explicit Checker(std::string name) {
        _result.name = std::move(name);
      }

      void expect(Count const& lhs, Count const& rhs, std::string where) {
        ++_result.checked;
        if (lhs != rhs) {
          _result.failures.push_back(std::move(where) + got(lhs, rhs));
        }
      }

      IdentityResult take() {
        return std::move(_result);
      }

     private:
      IdentityResult _result;
    };
  }  // namespace

  std::vector<IdentityResult> verify_identities(std::size_t n_max) {
    if (n_max < 3) {
      throw ValidationError("identity checks need n_max >= 3");
    }
    std::vector<StatsGrid> grids;
    for (std::size_t n = 0; n <= n_max; ++n) {
      grids.push_back(stats_grid(n));
    }
    long const N = static_cast<long>(n_max);
    auto       E = [&](long n, long c, long p) -> Count const& {
      return StatsGrid::at(grids[n].e, c, p);
    };
    auto S1 = [&](long n, long c, long p) -> Count const& {
      return StatsGrid::at(grids[n].s1, c, p);
    };
    auto S2 = [&](long n, long c, long p) -> Count const& {
      return StatsGrid::at(grids[n].s2, c, p);
    };
    // Summed over c; zero for n out of range.
    auto e_rank = [&](long n, long p) {
      return n < 0 || n > N ? Count(0) : grids[n].e_rank(p);
    };
    auto s1_rank = [&](long n, long p) {
      return n < 0 || n > N ? Count(0) : grids[n].s1_rank(p);
    };
    auto s2_rank = [&](long n, long p) {
      return n < 0 || n > N ? Count(0) : grids[n].s2_rank(p);
    };

    std::vector<IdentityResult> results;

    {
      Checker check("cycle/path recurrence");
      for (long n = 1; n <= N; ++n) {
        for (long c = 0; 2 * c <= n; ++c) {
          for (long p = (n - 2 * c) % 2; 2 * c + p <= n; p += 2) {
            check.expect(E(n, c, p),
                         E(n - 1, c - 1, p + 1) + E(n - 1, c, p - 1)
                             + S1(n - 1, c + 1, p - 1)
                             + S2(n - 1, c + 2, p - 1),
                         triple(n, c, p));
          }
        }
      }
      results.push_back(check.take());
    }
    {
      Checker check("grid vanishes outside 2c + p <= n, p = n mod 2");
      for (long n = 0; n <= N; ++n) {
        for (long c = 0; 2 * c <= n; ++c) {
          for (long p = 0; p <= n; ++p) {
            if (2 * c + p <= n && (n - p) % 2 == 0) {
              continue;
            }
            check.expect(E(n, c, p), 0, "e" + triple(n, c, p));
            check.expect(S1(n, c, p), 0, "s1" + triple(n, c, p));
            check.expect(S2(n, c, p), 0, "s2" + triple(n, c, p));
          }
        }
        for (long p = 0; p <= n; ++p) {
          check.expect(S1(n, 0, p), 0, "s1" + triple(n, 0, p));
        }
        for (long c = 0; 2 * c <= n; ++c) {
          check.expect(S2(n, c, n), 0, "s2" + triple(n, c, n));
          check.expect(S2(n, c, n - 2), 0, "s2" + triple(n, c, n - 2));
        }
      }
      results.push_back(check.take());
    }
    {
      Checker check("rank 0 at 2k equals rank 1 at 2k-1 equals C_k^2");
      for (long k = 1; 2 * k <= N; ++k) {
        Count const target = catalan(k) * catalan(k);
        check.expect(e_rank(2 * k, 0), target, "n=" + std::to_string(2 * k));
        check.expect(e_rank(2 * k - 1, 1), target,
                     "n=" + std::to_string(2 * k - 1));
      }
      results.push_back(check.take());
    }
    {
      Checker check("return sums next to full rank");
      for (long n = 2; n <= N; ++n) {
        check.expect(S1(n, 1, n - 2), 2, "s1" + triple(n, 1, n - 2));
      }
      for (long n = 5; n <= N; ++n) {
        check.expect(S1(n, 1, n - 4), 4 * n - 8, "s1" + triple(n, 1, n - 4));
        check.expect(S1(n, 2, n - 4), 2 * n - 2, "s1" + triple(n, 2, n - 4));
        check.expect(S2(n, 2, n - 4), 2, "s2" + triple(n, 2, n - 4));
      }
      results.push_back(check.take());
    }
    {
      Checker check("rank n-2 count is 3n-5");
      for (long n = 2; n <= N; ++n) {
        check.expect(e_rank(n, n - 2), 3 * n - 5, "n=" + std::to_string(n));
      }
      results.push_back(check.take());
    }
    {
      Checker check("rank n-4 count is n(9n-35)/2");
      for (long n = 5; n <= N; ++n) {
        check.expect(e_rank(n, n - 4), n * (9 * n - 35) / 2,
                     "n=" + std::to_string(n));
      }
      results.push_back(check.take());
    }
    {
      // The differences reach back k steps; every value they use has to
      // lie where the depth-k row has settled (n - k >= 3k - 1).
      Checker check("k-th difference of depth k row is 3^k");
      for (long k = 1; k <= 3; ++k) {
        Count power = 1;
        for (long i = 0; i < k; ++i) {
          power *= 3;
        }
        for (long n = 4 * k - 1; n <= N; ++n) {
          check.expect(backward_difference(k, n,
                                           [&](long m) {
                                             return e_rank(m, m - 2 * k);
                                           }),
                       power,
                       "k=" + std::to_string(k) + " n=" + std::to_string(n));
        }
      }
      results.push_back(check.take());
    }
    {
      Checker check("(k-1)-th differences of depth k return sums");
      for (long k = 1; k <= 3; ++k) {
        Count power = 2;
        for (long i = 1; i < k; ++i) {
          power *= 3;
        }
        for (long n = 4 * k - 2; n <= N; ++n) {
          std::string const where
              = "k=" + std::to_string(k) + " n=" + std::to_string(n);
          check.expect(backward_difference(k - 1, n,
                                           [&](long m) {
                                             return s1_rank(m, m - 2 * k);
                                           }),
                       power, "s1 " + where);
          check.expect(backward_difference(k - 1, n,
                                           [&](long m) {
                                             return s2_rank(m, m - 2 * k);
                                           }),
                       0, "s2 " + where);
        }
      }
      results.push_back(check.take());
    }
    {
      Checker check("difference of loop-free counts");
      for (long n = 1; n <= N; ++n) {
        Count s = 0;
        for (long p = 0; p <= n; ++p) {
          s += S1(n - 1, 1, p) + S2(n - 1, 2, p);
        }
        check.expect(grids[n].e_cycles(0) - grids[n - 1].e_cycles(0), s,
                     "n=" + std::to_string(n));
      }
      results.push_back(check.take());
    }
    {
      Checker check("loop-free count equals the Kauffman count");
      for (long n = 1; n <= N; ++n) {
        check.expect(grids[n].e_cycles(0), count_kauffman(n).total,
                     "n=" + std::to_string(n));
      }
      results.push_back(check.take());
    }
    {
      Checker check("meandric numbers");
      for (long k = 1; 2 * k <= N; ++k) {
        check.expect(grids[2 * k].meandric_even(),
                     grids[2 * k - 1].meandric_odd(),
                     "m_" + std::to_string(2 * k));
      }
      for (long k = 1; 2 * k + 1 <= N; ++k) {
        check.expect(grids[2 * k + 1].meandric_odd(),
                     S1(2 * k, 1, 0) + S2(2 * k, 2, 0),
                     "m_" + std::to_string(2 * k + 1));
      }
      results.push_back(check.take());
    }
    return results;
  }

  std::vector<DStar> d_star_report(std::size_t n_max) {
    std::vector<DStar> result;
    for (std::size_t n = 1; n <= n_max; ++n) {
      auto const report = count_idempotents(Monoid::jones, n);
      DStar      row;
      row.n     = n;
      row.total = report.total;
      for (std::size_t r = 0; r <= n; ++r) {
        if (report.by_rank[r] > row.d_star) {
          row.d_star = report.by_rank[r];
          row.rank   = r;
        }
      }
      result.push_back(row);
    }
    return result;
  }

  bool DiagonalDifference::all_one() const {
    return std::ranges::all_of(differences,
                               [](Count const& c) { return c == 1; });
  }

  std::vector<DiagonalDifference> motzkin_diagonal_report(std::size_t n_max) {
    std::vector<std::vector<Count>> by_rank;
    for (std::size_t n = 0; n <= n_max; ++n) {
      by_rank.push_back(count_idempotents(Monoid::motzkin, n).by_rank);
    }
    std::vector<DiagonalDifference> result;
    for (std::size_t d = 1; 2 * d <= n_max; ++d) {
      DiagonalDifference row;
      row.d = d;
      for (long n = 2 * d; n <= static_cast<long>(n_max); ++n) {
        row.differences.push_back(
            backward_difference(d, n, [&](long m) {
              return by_rank[m][m - static_cast<long>(d)];
            }));
      }
      result.push_back(std::move(row));
    }
    return result;
  }

}  // namespace pdm
