#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>

// Minimal UTF-8 helpers covering the alphabets that occur in English and
// French e-texts (ASCII, Latin-1 Supplement, Latin Extended-A). Anything
// outside that range is passed through unchanged.
namespace frosim::uni {

// Decodes the code point starting at byte offset `pos` and advances `pos`
// past it. A malformed byte decodes as its own value.
char32_t decode(std::string_view text, std::size_t& pos);

void encode(char32_t cp, std::string& out);

bool is_letter(char32_t cp);
bool is_upper(char32_t cp);
char32_t to_lower(char32_t cp);

inline bool is_digit(char32_t cp) { return cp >= U'0' && cp <= U'9'; }

std::string lower(std::string_view text);

// First letter code point in text, or 0 when text contains no letter.
char32_t first_letter(std::string_view text);

}  // namespace frosim::uni
