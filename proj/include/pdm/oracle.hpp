#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <vector>

#include "count.hpp"
#include "diagram.hpp"
#include "engine.hpp"
#include "monoid.hpp"

namespace pdm {

  // Brute force reference counts. Nothing here uses interface graphs or
  // fibres: idempotency is always decided by multiplying.

  struct OracleOptions {
    bool force = false;  // ignore the size guards
  };

  // Every element of the Motzkin or Jones monoid, rank by rank, each rank
  // in lexicographic order of (left, right).
  void for_each_element(Monoid m, std::size_t n,
                        std::function<void(Diagram const&)> const& f);
  std::vector<Diagram> enumerate_monoid(Monoid m, std::size_t n);

  bool is_idempotent_by_product(Diagram const& d);

  // Supports motzkin, jones and kauffman (Jones idempotents with no
  // floating component in their square). Throws ResourceLimitError beyond
  // the guards unless forced.
  CountReport brute_count(Monoid m, std::size_t n, OracleOptions options = {});

  // Idempotents of the Motzkin monoid that are partial Jones diagrams.
  Count brute_pj_count(std::size_t n, OracleOptions options = {});

  // Idempotents grouped by their image under hat.
  std::map<Diagram, std::vector<Diagram>>
  brute_fibre_partition(Monoid m, std::size_t n, OracleOptions options = {});

  std::size_t brute_limit(Monoid m) noexcept;

}  // namespace pdm
