#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdm {

  // Exact, unbounded counts. Idempotent numbers pass 2^64 near degree 27.
  using Count = boost::multiprecision::cpp_int;

  inline std::string to_string(Count const& c) {
    return c.str();
  }

  // Sums machine words into an exact total. The hot loops add millions of
  // small values, so the common case stays in a 64-bit register and only
  // carries spill into the arbitrary-precision part.
  class Accumulator {
   public:
    void add(std::uint64_t v) noexcept {
      if (__builtin_add_overflow(_low, v, &_low)) {
        ++_carries;
      }
    }

    void add(Count const& v) {
      _high += v;
    }

    void merge(Accumulator const& other) {
      _high += other._high;
      _carries += other._carries;
      add(other._low);
    }

    Count value() const {
      Count result = _high;
      result += Count(_carries) << 64;
      result += _low;
      return result;
    }

   private:
    std::uint64_t _low     = 0;
    std::uint64_t _carries = 0;
    Count         _high    = 0;
  };

}  // namespace pdm
