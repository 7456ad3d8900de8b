#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pdm {

  // Step of a Motzkin path. The enumerator order U < F < D is the fixed
  // lexicographic order used for every deterministic iteration.
  enum class Symbol : std::uint8_t { U = 0, F = 1, D = 2 };

  enum class Alphabet { with_flat, no_flat };

  constexpr int step(Symbol s) noexcept {
    return s == Symbol::U ? 1 : (s == Symbol::D ? -1 : 0);
  }

  constexpr Symbol complement(Symbol s) noexcept {
    return s == Symbol::U ? Symbol::D : (s == Symbol::D ? Symbol::U : s);
  }

  char                to_char(Symbol s) noexcept;
  std::vector<Symbol> parse_symbols(std::string_view text);
  std::string         to_string(std::span<Symbol const> symbols);

  // A length-2n word with nonnegative prefix sums and total zero.
  class MotzkinWord {
   public:
    MotzkinWord() = default;
    // Throws ValidationError unless the word is a valid Motzkin word of even
    // length.
    explicit MotzkinWord(std::vector<Symbol> symbols);
    explicit MotzkinWord(std::string_view text)
        : MotzkinWord(parse_symbols(text)) {}

    std::span<Symbol const> symbols() const noexcept {
      return _symbols;
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }
    Symbol operator[](std::size_t i) const noexcept {
      return _symbols[i];
    }
    bool is_dyck() const noexcept;

    // z_0, ..., z_{2n}.
    std::vector<int> heights() const;
    // l_i = min(z_{i-1}, z_i) for i = 1..2n, stored 0-based.
    std::vector<int> levels() const;

    std::string str() const {
      return to_string(_symbols);
    }

    friend bool operator==(MotzkinWord const&, MotzkinWord const&) = default;

   private:
    std::vector<Symbol> _symbols;
  };

  // A length-n word with nonnegative prefix sums; its final height is the
  // rank.
  class SemiWord {
   public:
    SemiWord() = default;
    explicit SemiWord(std::vector<Symbol> symbols);
    explicit SemiWord(std::string_view text) : SemiWord(parse_symbols(text)) {}

    std::span<Symbol const> symbols() const noexcept {
      return _symbols;
    }
    std::size_t size() const noexcept {
      return _symbols.size();
    }
    Symbol operator[](std::size_t i) const noexcept {
      return _symbols[i];
    }
    int rank() const noexcept {
      return _rank;
    }
    bool is_dyck() const noexcept;
    std::string str() const {
      return to_string(_symbols);
    }

    friend bool operator==(SemiWord const&, SemiWord const&) = default;
    friend auto operator<=>(SemiWord const& a, SemiWord const& b) {
      return a._symbols <=> b._symbols;
    }

   private:
    std::vector<Symbol> _symbols;
    int                 _rank = 0;
  };

  // Representation (x, y) of a diagram: x reads the upper row, y the lower
  // row left to right with U and D exchanged.
  struct SemiWordPair {
    SemiWord left;
    SemiWord right;

    int rank() const noexcept {
      return left.rank();
    }
    friend bool operator==(SemiWordPair const&, SemiWordPair const&)
        = default;
  };

}  // namespace pdm
