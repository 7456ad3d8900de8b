#include "pdm/engine.hpp"

#include <algorithm>
#include <exception>
#include <string>
#include <thread>

#include "pdm/error.hpp"
#include "pdm/interface.hpp"
#include "pdm/seeds.hpp"

namespace pdm {

  WorkPartition partition_work(std::vector<std::vector<SemiWord>> const& lefts,
                               std::size_t depth, std::size_t workers) {
    if (workers == 0) {
      throw ValidationError("at least one worker is required");
    }
    WorkPartition result;
    result.workers = workers;
    for (std::size_t r = 0; r < lefts.size(); ++r) {
      auto const& words = lefts[r];
      std::size_t begin = 0;
      while (begin < words.size()) {
        auto const  prefix = words[begin].symbols().first(
            std::min(depth, words[begin].size()));
        std::size_t end = begin + 1;
        while (end < words.size()
               && std::ranges::equal(prefix, words[end].symbols().first(
                                                 prefix.size()))) {
          ++end;
        }
        result.ranges.push_back({r, begin, end});
        begin = end;
      }
    }
    return result;
  }

  namespace {
    std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
      std::uint64_t r;
      if (__builtin_mul_overflow(a, b, &r)) {
        throw ResourceLimitError("fibre size overflows 64 bits");
      }
      return r;
    }

    struct Partial {
      explicit Partial(std::size_t n)
          : by_rank(n + 1), kauffman_by_rank(n + 1) {}

      Accumulator              total;
      std::vector<Accumulator> by_rank;
      std::vector<Accumulator> kauffman_by_rank;
      std::uint64_t            seeds = 0;

      void merge(Partial const& other) {
        total.merge(other.total);
        for (std::size_t r = 0; r < by_rank.size(); ++r) {
          by_rank[r].merge(other.by_rank[r]);
          kauffman_by_rank[r].merge(other.kauffman_by_rank[r]);
        }
        seeds += other.seeds;
      }
    };

    // Seeds for one parity: every pair of halves of that rank, of which
    // the idempotent ones are seeds.
    struct Level {
      std::size_t            rank = 0;
      std::vector<HalfGraph> halves;
    };

    void process(Level const& level, std::size_t begin, std::size_t end,
                 bool jones, Partial& out) {
      PairScan                                       scan;
      std::array<std::uint64_t, max_scan_degree / 2 + 1> sigma{};
      std::size_t const                              p = level.rank;
      for (std::size_t i = begin; i < end; ++i) {
        HalfGraph const& x = level.halves[i];
        for (HalfGraph const& y : level.halves) {
          scan_pair(x, y, scan);
          if (!scan.idempotent) {
            continue;
          }
          ++out.seeds;
          sigma[0]              = 1;
          std::size_t   degree  = 0;
          std::uint64_t kauffman = 1;
          for (int c = 0; c < scan.cycles; ++c) {
            auto const&   cycle = scan.cycle[c];
            std::uint64_t x_c   = std::uint64_t(cycle.u) * cycle.l;
            kauffman = checked_mul(kauffman, x_c);
            if (x_c == 0 || !cycle.llt) {
              continue;
            }
            sigma[++degree] = 0;
            for (std::size_t k = degree; k > 0; --k) {
              sigma[k] += checked_mul(sigma[k - 1], x_c);
            }
          }
          std::uint64_t f = 0;
          for (std::size_t k = 0; k <= degree; ++k) {
            out.by_rank[2 * k + p].add(sigma[k]);
            f += sigma[k];
          }
          out.total.add(f);
          if (jones && kauffman != 0) {
            out.kauffman_by_rank[p + 2 * scan.cycles].add(kauffman);
          }
        }
      }
    }

    // Kauffman runs over the Jones seeds and reports the loop-free view.
    CountReport run(Monoid m, std::size_t n, EngineOptions const& options) {
      if (m != Monoid::motzkin && m != Monoid::jones
          && m != Monoid::kauffman) {
        throw ValidationError("the fibre method applies to motzkin and "
                              "jones, not "
                              + std::string(name(m)));
      }
      if (n > options.max_degree || n > max_scan_degree) {
        throw ResourceLimitError(
            "degree " + std::to_string(n) + " exceeds the limit of "
            + std::to_string(std::min(options.max_degree, max_scan_degree)));
      }
      if (options.threads == 0) {
        throw ValidationError("at least one thread is required");
      }
      auto const start = std::chrono::steady_clock::now();
      bool const jones = m != Monoid::motzkin;

      std::vector<std::vector<SemiWord>> lefts;
      std::vector<Level>                 levels;
      for (std::size_t r = 0; r <= std::min<std::size_t>(n, 1); ++r) {
        if (jones && r != n % 2) {
          continue;
        }
        auto words = semiwords(
            n, r, jones ? Alphabet::no_flat : Alphabet::with_flat);
        Level level;
        level.rank = r;
        level.halves.reserve(words.size());
        for (auto const& w : words) {
          level.halves.emplace_back(w);
        }
        levels.push_back(std::move(level));
        lefts.push_back(std::move(words));
      }

      auto const partition
          = partition_work(lefts, options.prefix_depth, options.threads);
      std::vector<Partial>            partials(options.threads, Partial(n));
      std::vector<std::exception_ptr> errors(options.threads);

      auto work = [&](std::size_t w) {
        try {
          for (std::size_t i = 0; i < partition.ranges.size(); ++i) {
            if (partition.worker_of(i) != w) {
              continue;
            }
            auto const& range = partition.ranges[i];
            process(levels[range.rank], range.begin, range.end, jones,
                    partials[w]);
          }
        } catch (...) {
          errors[w] = std::current_exception();
        }
      };

      if (options.threads == 1) {
        work(0);
      } else {
        std::vector<std::thread> pool;
        for (std::size_t w = 0; w < options.threads; ++w) {
          pool.emplace_back(work, w);
        }
        for (auto& t : pool) {
          t.join();
        }
      }
      for (auto const& e : errors) {
        if (e) {
          std::rethrow_exception(e);
        }
      }
      Partial sum(n);
      for (auto const& part : partials) {
        sum.merge(part);
      }

      CountReport report;
      report.monoid = m;
      report.n      = n;
      report.method = Method::fibre;
      report.total  = sum.total.value();
      for (auto const& a : sum.by_rank) {
        report.by_rank.push_back(a.value());
      }
      if (jones) {
        Count k = 0;
        for (auto const& a : sum.kauffman_by_rank) {
          k += a.value();
        }
        report.kauffman_total = k;
      }
      if (m == Monoid::kauffman) {
        report.total = *report.kauffman_total;
        for (std::size_t r = 0; r <= n; ++r) {
          report.by_rank[r] = sum.kauffman_by_rank[r].value();
        }
      }
      report.work_items = sum.seeds;
      report.wall_time  = std::chrono::steady_clock::now() - start;
      return report;
    }
  }  // namespace

  CountReport count_idempotents(Monoid m, std::size_t n,
                                EngineOptions const& options) {
    if (m == Monoid::kauffman) {
      throw ValidationError("use count_kauffman for the Kauffman monoid");
    }
    return run(m, n, options);
  }

  CountReport count_kauffman(std::size_t n, EngineOptions const& options) {
    return run(Monoid::kauffman, n, options);
  }

  Count count_kauffman_zero(std::size_t n, EngineOptions const& options) {
    return count_kauffman(n, options).total + 1;
  }

  Count pj_lower_bound(std::size_t n) {
    Count total = 0;
    for_each_seed(Monoid::motzkin, n, [&total](Diagram const& d) {
      if (is_partial_jones(d)) {
        total += profile(d).fibre_size;
      }
    });
    return total;
  }

  Count count_planar_partition(std::size_t n, EngineOptions const& options) {
    return count_idempotents(Monoid::jones, 2 * n, options).total;
  }

  CountReport partitioned_count(Monoid m, std::size_t n, std::size_t workers,
                                EngineOptions options) {
    options.threads = workers;
    return count_idempotents(m, n, options);
  }

}  // namespace pdm
