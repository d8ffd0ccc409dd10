#pragma once

#include <string>
#include <string_view>

namespace sgbt::minilang {

/// Surface language tag. J is the brace-style surface, P the indentation-style
/// surface, Pivot the word-level verbalization standing in for summaries.
enum class Lang { J, P, Pivot };

std::string_view to_string(Lang lang) noexcept;

/// Accepts "j", "p", "pivot" (case-insensitive). Throws sgbt::Error otherwise.
Lang lang_from_string(std::string_view name);

/// The other code language (J <-> P). Throws for Pivot.
Lang opposite(Lang lang);

inline bool is_code(Lang lang) noexcept { return lang != Lang::Pivot; }

}  // namespace sgbt::minilang
