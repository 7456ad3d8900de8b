#pragma once

#include <string>
#include <string_view>

namespace pdm {

  enum class Monoid { motzkin, jones, kauffman, pjones, planar_partition };

  enum class Method { fibre, brute };

  std::string_view name(Monoid m) noexcept;
  std::string_view name(Method m) noexcept;

  // Throws ValidationError on unknown names.
  Monoid parse_monoid(std::string_view text);
  Method parse_method(std::string_view text);

}  // namespace pdm
