#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <vector>

#include "count.hpp"
#include "diagram.hpp"
#include "interface.hpp"
#include "monoid.hpp"
#include "word.hpp"

namespace pdm {

  // All semi-words of length n ending at height k, in lexicographic order
  // with U < F < D. Empty when no such word exists.
  std::vector<SemiWord> semiwords(std::size_t n, std::size_t k, Alphabet alphabet);

  // Calls f on each seed (idempotent of rank 0 or 1 of the right parity) in
  // lexicographic order of (left, right). Only motzkin and jones are valid.
  void for_each_seed(Monoid m, std::size_t n,
                     std::function<void(Diagram const&)> const& f);
  std::vector<Diagram> seed_stream(Monoid m, std::size_t n);

  struct SeedProfile {
    Diagram                     seed;
    std::size_t                 parity = 0;
    std::vector<GammaComponent> cycles;
    // Nonzero u * l over cycles left of the leftmost transversal.
    std::vector<std::uint64_t> fibre_vector;
    Count              fibre_size = 1;
    std::vector<Count> sigma;  // elementary symmetric functions of x
    Count              kauffman_weight = 0;
  };

  // Throws ValidationError unless seed has rank at most 1 and is
  // idempotent.
  SeedProfile profile(Diagram const& seed);

  // Number of idempotents over seed with no floating loops when squared.
  // Throws ValidationError for seeds that are not Jones diagrams.
  Count kauffman_weight(Diagram const& seed);

  // Coefficients of prod (1 + x_i t).
  std::vector<Count> elementary_symmetric(std::span<std::uint64_t const> x);

}  // namespace pdm
