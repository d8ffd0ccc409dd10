#include "sgbt/minilang/lang.hpp"

#include <algorithm>
#include <cctype>

#include "sgbt/error.hpp"

namespace sgbt::minilang {

std::string_view to_string(Lang lang) noexcept {
  switch (lang) {
    case Lang::J: return "j";
    case Lang::P: return "p";
    case Lang::Pivot: return "pivot";
  }
  return "?";
}

Lang lang_from_string(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  if (lower == "j") return Lang::J;
  if (lower == "p") return Lang::P;
  if (lower == "pivot") return Lang::Pivot;
  throw Error("UnknownLang", "unknown language '" + std::string(name) + "'");
}

Lang opposite(Lang lang) {
  switch (lang) {
    case Lang::J: return Lang::P;
    case Lang::P: return Lang::J;
    case Lang::Pivot: break;
  }
  throw Error("UnknownLang", "pivot has no opposite code language");
}

}  // namespace sgbt::minilang
