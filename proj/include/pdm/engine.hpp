#pragma once

#include <chrono>
#include <cstddef>
#include <optional>
#include <vector>

#include "count.hpp"
#include "monoid.hpp"
#include "word.hpp"

namespace pdm {

  struct EngineOptions {
    std::size_t threads      = 1;
    std::size_t prefix_depth = 4;
    std::size_t max_degree   = 32;
  };

  struct CountReport {
    Monoid             monoid = Monoid::jones;
    std::size_t        n      = 0;
    Method             method = Method::fibre;
    Count              total  = 0;
    std::vector<Count> by_rank;
    std::optional<Count>          kauffman_total;
    Count                         work_items = 0;
    std::chrono::duration<double> wall_time{};
  };

  // A contiguous run of left semi-words sharing a prefix; rank selects the
  // list the indices refer to.
  struct WorkRange {
    std::size_t rank  = 0;
    std::size_t begin = 0;
    std::size_t end   = 0;
  };

  struct WorkPartition {
    std::vector<WorkRange> ranges;
    std::size_t            workers = 1;

    std::size_t worker_of(std::size_t range) const noexcept {
      return range % workers;
    }
  };

  // Splits each list of (lexicographically sorted) left semi-words into
  // runs sharing their first depth symbols.
  WorkPartition partition_work(std::vector<std::vector<SemiWord>> const& lefts,
                               std::size_t depth, std::size_t workers);

  // Motzkin or Jones idempotents by the fibre method. For Jones the report
  // also carries the Kauffman count. Throws ResourceLimitError if n exceeds
  // options.max_degree.
  CountReport count_idempotents(Monoid m, std::size_t n,
                                EngineOptions const& options = {});

  // Jones idempotents with no floating loop when squared. by_rank is split
  // by rank; the report's monoid is kauffman.
  CountReport count_kauffman(std::size_t n, EngineOptions const& options = {});

  // Count for the Kauffman monoid at parameter zero.
  Count count_kauffman_zero(std::size_t n, EngineOptions const& options = {});

  // Sum of fibre sizes over Motzkin seeds that are partial Jones.
  Count pj_lower_bound(std::size_t n);

  Count count_planar_partition(std::size_t n, EngineOptions const& options = {});

  CountReport partitioned_count(Monoid m, std::size_t n, std::size_t workers,
                                EngineOptions options = {});

}  // namespace pdm
