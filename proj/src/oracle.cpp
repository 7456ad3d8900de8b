#include "pdm/oracle.hpp"

#include <chrono>
#include <string>

#include "pdm/error.hpp"
#include "pdm/interface.hpp"
#include "pdm/seeds.hpp"

namespace pdm {

  std::size_t brute_limit(Monoid m) noexcept {
    switch (m) {
      case Monoid::jones:
      case Monoid::kauffman:
        return 14;
      case Monoid::pjones:
        return 8;
      default:
        return 9;
    }
  }

  namespace {
    void guard(Monoid m, std::size_t n, OracleOptions const& options) {
      if (!options.force && n > brute_limit(m)) {
        throw ResourceLimitError(
            "brute force for " + std::string(name(m)) + " is limited to n <= "
            + std::to_string(brute_limit(m)) + " without --force");
      }
    }

    Monoid base(Monoid m) {
      switch (m) {
        case Monoid::motzkin:
        case Monoid::pjones:
          return Monoid::motzkin;
        case Monoid::jones:
        case Monoid::kauffman:
          return Monoid::jones;
        default:
          throw ValidationError("no brute force for "
                                + std::string(name(m)));
      }
    }
  }  // namespace

  void for_each_element(Monoid m, std::size_t n,
                        std::function<void(Diagram const&)> const& f) {
    auto const alphabet
        = base(m) == Monoid::jones ? Alphabet::no_flat : Alphabet::with_flat;
    for (std::size_t k = 0; k <= n; ++k) {
      auto const words = semiwords(n, k, alphabet);
      for (auto const& x : words) {
        for (auto const& y : words) {
          f(diagram_of_pair(x, y));
        }
      }
    }
  }

  std::vector<Diagram> enumerate_monoid(Monoid m, std::size_t n) {
    std::vector<Diagram> result;
    for_each_element(m, n, [&result](Diagram const& d) { result.push_back(d); });
    return result;
  }

  bool is_idempotent_by_product(Diagram const& d) {
    return multiply(d, d).diagram == d;
  }

  CountReport brute_count(Monoid m, std::size_t n, OracleOptions options) {
    guard(m, n, options);
    auto const  start = std::chrono::steady_clock::now();
    CountReport report;
    report.monoid = m;
    report.n      = n;
    report.method = Method::brute;
    report.by_rank.assign(n + 1, 0);
    std::vector<std::uint64_t> by_rank(n + 1, 0);
    std::uint64_t              elements = 0;
    for_each_element(m, n, [&](Diagram const& d) {
      ++elements;
      auto const sq = multiply(d, d);
      if (sq.diagram != d) {
        return;
      }
      if (m == Monoid::kauffman && sq.floating != 0) {
        return;
      }
      if (m == Monoid::pjones && !is_partial_jones(d)) {
        return;
      }
      ++by_rank[rank(d)];
    });
    for (std::size_t r = 0; r <= n; ++r) {
      report.by_rank[r] = by_rank[r];
      report.total += by_rank[r];
    }
    if (m == Monoid::kauffman) {
      report.kauffman_total = report.total;
    }
    report.work_items = elements;
    report.wall_time  = std::chrono::steady_clock::now() - start;
    return report;
  }

  Count brute_pj_count(std::size_t n, OracleOptions options) {
    return brute_count(Monoid::pjones, n, options).total;
  }

  std::map<Diagram, std::vector<Diagram>>
  brute_fibre_partition(Monoid m, std::size_t n, OracleOptions options) {
    guard(m, n, options);
    std::map<Diagram, std::vector<Diagram>> result;
    for_each_element(m, n, [&](Diagram const& d) {
      if (is_idempotent_by_product(d)) {
        result[hat(d)].push_back(d);
      }
    });
    return result;
  }

}  // namespace pdm
