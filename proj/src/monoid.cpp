#include "pdm/monoid.hpp"

#include <array>
#include <utility>

#include "pdm/error.hpp"

namespace pdm {

  namespace {
    constexpr std::array<std::pair<Monoid, std::string_view>, 5> monoids{
        {{Monoid::motzkin, "motzkin"},
         {Monoid::jones, "jones"},
         {Monoid::kauffman, "kauffman"},
         {Monoid::pjones, "pjones"},
         {Monoid::planar_partition, "planar-partition"}}};
  }  // namespace

  std::string_view name(Monoid m) noexcept {
    for (auto [value, text] : monoids) {
      if (value == m) {
        return text;
      }
    }
    return "?";
  }

  std::string_view name(Method m) noexcept {
    return m == Method::fibre ? "fibre" : "brute";
  }

  Monoid parse_monoid(std::string_view text) {
    for (auto [value, word] : monoids) {
      if (word == text) {
        return value;
      }
    }
    throw ValidationError("unknown monoid '" + std::string(text) + "'");
  }

  Method parse_method(std::string_view text) {
    if (text == "fibre") {
      return Method::fibre;
    } else if (text == "brute") {
      return Method::brute;
    }
    throw ValidationError("unknown method '" + std::string(text) + "'");
  }

}  // namespace pdm
