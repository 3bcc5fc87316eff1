#pragma once

#include <optional>
#include <string_view>

namespace frosim {

enum class Language { EN, FR };

constexpr std::string_view to_string(Language lang) {
    return lang == Language::EN ? "EN" : "FR";
}

// Accepts "EN"/"en"/"FR"/"fr".
std::optional<Language> parse_language(std::string_view text);

}  // namespace frosim
