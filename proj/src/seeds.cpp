#include "pdm/seeds.hpp"

#include <cstdlib>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

  namespace {
    void extend(std::vector<Symbol>& prefix, int height, std::size_t n,
                int k, Alphabet alphabet, std::vector<SemiWord>& out) {
      std::size_t const left = n - prefix.size();
      if (left == 0) {
        if (height == k) {
          out.emplace_back(prefix);
        }
        return;
      }
      for (Symbol s : {Symbol::U, Symbol::F, Symbol::D}) {
        if (s == Symbol::F && alphabet == Alphabet::no_flat) {
          continue;
        }
        int const h = height + step(s);
        if (h < 0) {
          continue;
        }
        int const gap = std::abs(h - k);
        if (static_cast<std::size_t>(gap) > left - 1) {
          continue;
        }
        if (alphabet == Alphabet::no_flat && (left - 1 - gap) % 2 != 0) {
          continue;
        }
        prefix.push_back(s);
        extend(prefix, h, n, k, alphabet, out);
        prefix.pop_back();
      }
    }

    void check_family(Monoid m) {
      if (m != Monoid::motzkin && m != Monoid::jones) {
        throw ValidationError("seeds exist only for motzkin and jones, not "
                              + std::string(name(m)));
      }
    }
  }  // namespace

  std::vector<SemiWord> semiwords(std::size_t n, std::size_t k,
                                  Alphabet alphabet) {
    std::vector<SemiWord> result;
    if (k > n) {
      return result;
    }
    std::vector<Symbol> prefix;
    prefix.reserve(n);
    extend(prefix, 0, n, static_cast<int>(k), alphabet, result);
    return result;
  }

  void for_each_seed(Monoid m, std::size_t n,
                     std::function<void(Diagram const&)> const& f) {
    check_family(m);
    if (m == Monoid::jones) {
      auto const words = semiwords(n, n % 2, Alphabet::no_flat);
      for (auto const& x : words) {
        for (auto const& y : words) {
          f(diagram_of_pair(x, y));
        }
      }
      return;
    }
    for (std::size_t k : {0, 1}) {
      auto const words = semiwords(n, k, Alphabet::with_flat);
      for (auto const& x : words) {
        for (auto const& y : words) {
          auto d = diagram_of_pair(x, y);
          if (k == 0 || is_idempotent(d)) {
            f(d);
          }
        }
      }
    }
  }

  std::vector<Diagram> seed_stream(Monoid m, std::size_t n) {
    std::vector<Diagram> result;
    for_each_seed(m, n, [&result](Diagram const& d) { result.push_back(d); });
    return result;
  }

  std::vector<Count> elementary_symmetric(std::span<std::uint64_t const> x) {
    std::vector<Count> sigma{1};
    for (std::uint64_t v : x) {
      sigma.push_back(0);
      for (std::size_t k = sigma.size() - 1; k > 0; --k) {
        sigma[k] += sigma[k - 1] * v;
      }
    }
    return sigma;
  }

  SeedProfile profile(Diagram const& seed) {
    std::size_t const r = rank(seed);
    if (r > 1) {
      throw ValidationError("seed " + seed.str() + " has rank "
                            + std::to_string(r));
    }
    if (!is_idempotent(seed)) {
      throw ValidationError("seed " + seed.str() + " is not idempotent");
    }
    SeedProfile result;
    result.seed   = seed;
    result.parity = r;
    for (auto& c : components(gamma(seed))) {
      if (c.kind == ComponentKind::cycle) {
        result.cycles.push_back(std::move(c));
      }
    }
    bool  any_rlt = false;
    Count product = 1;
    for (auto const& c : result.cycles) {
      if (c.llt) {
        if (c.u * c.l != 0) {
          result.fibre_vector.push_back(c.u * c.l);
          result.fibre_size *= 1 + c.u * c.l;
        }
        product *= c.u * c.l;
      } else {
        any_rlt = true;
      }
    }
    result.sigma           = elementary_symmetric(result.fibre_vector);
    result.kauffman_weight = any_rlt ? Count(0) : product;
    return result;
  }

  Count kauffman_weight(Diagram const& seed) {
    if (!seed.is_jones()) {
      throw ValidationError("Kauffman weights are defined for Jones seeds, "
                            "got "
                            + seed.str());
    }
    auto const p = profile(seed);
    if (p.cycles.empty()) {
      return 1;
    }
    Count product = 1;
    for (auto const& c : p.cycles) {
      if (!c.llt) {
        return 0;
      }
      product *= c.u * c.l;
    }
    return product;
  }

}  // namespace pdm
