#include "frosim/tagset.hpp"

#include <algorithm>
#include <array>
#include <initializer_list>

#include "frosim/unicode.hpp"

namespace frosim::tags {

namespace {

bool any_of(std::string_view v, std::initializer_list<std::string_view> set) {
    return std::find(set.begin(), set.end(), v) != set.end();
}

bool starts_with(std::string_view v, std::string_view prefix) {
    return v.size() >= prefix.size() && v.substr(0, prefix.size()) == prefix;
}

bool has_letter_or_digit(std::string_view surface) {
    std::size_t pos = 0;
    while (pos < surface.size()) {
        char32_t cp = uni::decode(surface, pos);
        if (uni::is_letter(cp) || (cp >= U'0' && cp <= U'9')) return true;
    }
    return false;
}

}  // namespace

std::string normalized_surface(std::string_view surface) {
    std::string out = uni::lower(surface);
    std::size_t i;
    while ((i = out.find("\xE2\x80\x99")) != std::string::npos)  // U+2019
        out.replace(i, 3, "'");
    if (out == "qu'") out = "que";
    return out;
}

bool is_noun(const Token& t, Language lang) {
    if (lang == Language::EN)
        return starts_with(t.pos, "NN") || starts_with(t.pos, "NP");
    return t.pos == "NOM" || t.pos == "NAM";
}

bool is_common_noun(const Token& t, Language lang) {
    if (lang == Language::EN) return t.pos == "NN" || t.pos == "NNS";
    return t.pos == "NOM";
}

bool is_proper_noun(const Token& t, Language lang) {
    if (lang == Language::EN)
        return any_of(t.pos, {"NP", "NPS", "NNP", "NNPS"});
    return t.pos == "NAM";
}

bool is_adjective(const Token& t, Language lang) {
    if (lang == Language::EN) return any_of(t.pos, {"JJ", "JJR", "JJS"});
    return t.pos == "ADJ";
}

bool is_comparative(const Token& t, Language lang) {
    return lang == Language::EN && (t.pos == "JJR" || t.pos == "RBR");
}

bool is_comparative_adjective(const Token& t, Language lang) {
    return lang == Language::EN && t.pos == "JJR";
}

bool is_past_participle(const Token& t, Language lang) {
    if (lang == Language::EN) return any_of(t.pos, {"VVN", "VBN", "VHN", "VDN"});
    return t.pos == "VER:pper";
}

bool is_present_participle(const Token& t, Language lang) {
    if (lang == Language::EN) return any_of(t.pos, {"VVG", "VBG", "VHG", "VDG"});
    return t.pos == "VER:ppre";
}

bool is_ground_word(const Token& t, Language lang) {
    return is_adjective(t, lang) || is_past_participle(t, lang) ||
           is_present_participle(t, lang);
}

bool is_verb(const Token& t, Language lang) {
    if (lang == Language::EN)
        return t.pos == "MD" || starts_with(t.pos, "VV") || starts_with(t.pos, "VB") ||
               starts_with(t.pos, "VH") || starts_with(t.pos, "VD");
    return starts_with(t.pos, "VER");
}

bool is_finite_verb(const Token& t, Language lang) {
    if (lang == Language::EN)
        return t.pos == "MD" ||
               any_of(t.pos, {"VVP", "VVZ", "VVD", "VBP", "VBZ", "VBD", "VHP", "VHZ",
                              "VHD", "VDP", "VDZ", "VDD"});
    return any_of(t.pos, {"VER:pres", "VER:simp", "VER:impf", "VER:futu", "VER:cond",
                          "VER:subp", "VER:subi"});
}

bool is_personal_pronoun(const Token& t, Language lang) {
    if (lang == Language::EN) return t.pos == "PP" || t.pos == "PRP";
    return t.pos == "PRO:PER";
}

bool is_subject_pronoun(const Token& t, Language lang) {
    std::string s = normalized_surface(t.surface);
    if (!s.empty() && s.front() == '-') s.erase(0, 1);  // inverted clitic "-il"
    if (lang == Language::EN) {
        if (is_personal_pronoun(t, lang))
            return any_of(s, {"i", "you", "he", "she", "it", "we", "they", "one"});
        if (t.pos == "DT" || t.pos == "PDT")
            return any_of(s, {"this", "that", "these", "those"});
        return false;
    }
    if (t.pos == "PRO:DEM") return true;
    if (t.pos != "PRO:PER") return false;
    return any_of(s, {"je", "j'", "tu", "il", "elle", "on", "ils", "elles", "nous",
                      "vous", "ce", "c'"});
}

bool is_object_pronoun(const Token& t, Language lang) {
    if (!is_personal_pronoun(t, lang)) return false;
    std::string s = normalized_surface(t.surface);
    if (lang == Language::EN) return any_of(s, {"me", "him", "her", "us", "them"});
    // nous/vous are left to the subject rule; que was normalized from qu'.
    return any_of(s, {"me", "m'", "te", "t'", "se", "s'", "le", "la", "l'", "les",
                      "lui", "leur"});
}

bool is_relative_pronoun(const Token& t, Language lang) {
    if (lang == Language::EN) return any_of(t.pos, {"WP", "WP$", "WDT"});
    return t.pos == "PRO:REL";
}

bool is_preposition(const Token& t, Language lang) {
    if (lang == Language::EN) return t.pos == "IN" || t.pos == "TO";
    return t.pos == "PRP" || t.pos == "PRP:det";
}

bool is_coordinating_conjunction(const Token& t, Language lang) {
    if (lang == Language::EN) return t.pos == "CC";
    if (t.pos != "KON") return false;
    return any_of(normalized_surface(t.surface),
                  {"et", "ou", "mais", "ni", "car", "or", "donc"});
}

bool is_subordinating_link(const Token& t, Language lang) {
    if (lang == Language::EN) return false;  // covered by IN
    return t.pos == "KON" && !is_coordinating_conjunction(t, lang);
}

bool is_punctuation(const Token& t) {
    if (t.pos == "SENT" || t.pos == "PUN" || t.pos == "PUN:cit") return true;
    if (!t.pos.empty() && !has_letter_or_digit(t.pos) && t.pos != "$") return true;
    return !has_letter_or_digit(t.surface);
}

bool is_clause_boundary(const Token& t) {
    return t.pos == "SENT" ||
           any_of(t.surface, {".", "!", "?", "...", ";", ":"});
}

bool is_colon_or_semicolon(const Token& t) {
    return t.surface == ":" || t.surface == ";";
}

}  // namespace frosim::tags
