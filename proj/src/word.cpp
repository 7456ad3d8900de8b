#include "pdm/word.hpp"

#include <algorithm>
#include <string>

#include "pdm/error.hpp"

namespace pdm {

  char to_char(Symbol s) noexcept {
    switch (s) {
      case Symbol::U:
        return 'U';
      case Symbol::F:
        return 'F';
      default:
        return 'D';
    }
  }

  std::vector<Symbol> parse_symbols(std::string_view text) {
    std::vector<Symbol> result;
    result.reserve(text.size());
    for (char c : text) {
      switch (c) {
        case 'U':
          result.push_back(Symbol::U);
          break;
        case 'F':
          result.push_back(Symbol::F);
          break;
        case 'D':
          result.push_back(Symbol::D);
          break;
        default:
          throw ValidationError(std::string("invalid symbol '") + c
                                + "', expected U, F or D");
      }
    }
    return result;
  }

  std::string to_string(std::span<Symbol const> symbols) {
    std::string result;
    result.reserve(symbols.size());
    for (Symbol s : symbols) {
      result += to_char(s);
    }
    return result;
  }

  namespace {
    // Returns the final height, or -1 if some prefix goes negative.
    int final_height(std::span<Symbol const> symbols) {
      int z = 0;
      for (Symbol s : symbols) {
        z += step(s);
        if (z < 0) {
          return -1;
        }
      }
      return z;
    }

    bool no_flats(std::span<Symbol const> symbols) {
      for (Symbol s : symbols) {
        if (s == Symbol::F) {
          return false;
        }
      }
      return true;
    }
  }  // namespace

  MotzkinWord::MotzkinWord(std::vector<Symbol> symbols)
      : _symbols(std::move(symbols)) {
    if (_symbols.size() % 2 != 0) {
      throw ValidationError("Motzkin word of odd length "
                            + std::to_string(_symbols.size()));
    }
    int z = final_height(_symbols);
    if (z < 0) {
      throw ValidationError("word " + str() + " has a negative prefix sum");
    }
    if (z != 0) {
      throw ValidationError("word " + str() + " ends at height "
                            + std::to_string(z));
    }
  }

  bool MotzkinWord::is_dyck() const noexcept {
    return no_flats(_symbols);
  }

  std::vector<int> MotzkinWord::heights() const {
    std::vector<int> z(_symbols.size() + 1, 0);
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      z[i + 1] = z[i] + step(_symbols[i]);
    }
    return z;
  }

  std::vector<int> MotzkinWord::levels() const {
    auto             z = heights();
    std::vector<int> result(_symbols.size());
    for (std::size_t i = 0; i < _symbols.size(); ++i) {
      result[i] = std::min(z[i], z[i + 1]);
    }
    return result;
  }

  SemiWord::SemiWord(std::vector<Symbol> symbols)
      : _symbols(std::move(symbols)) {
    _rank = final_height(_symbols);
    if (_rank < 0) {
      throw ValidationError("semi-word " + str()
                            + " has a negative prefix sum");
    }
  }

  bool SemiWord::is_dyck() const noexcept {
    return no_flats(_symbols);
  }

}  // namespace pdm
