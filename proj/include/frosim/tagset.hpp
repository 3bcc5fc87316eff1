#pragma once

#include <string>
#include <string_view>

#include "frosim/lang.hpp"
#include "frosim/text.hpp"

// Part-of-speech predicates over the two TreeTagger tagsets this toolkit
// consumes: the Penn-style English set (NN, VVP, JJR, SENT, ...) and the
// French set (NOM, VER:pres, PRO:PER, KON, ...).
namespace frosim::tags {

// Lowercased surface with curly apostrophes straightened and the elided
// forms qu'/Qu' mapped to "que". Used for all lexical comparisons.
std::string normalized_surface(std::string_view surface);

bool is_noun(const Token& t, Language lang);
bool is_common_noun(const Token& t, Language lang);
bool is_proper_noun(const Token& t, Language lang);

bool is_adjective(const Token& t, Language lang);
bool is_comparative(const Token& t, Language lang);            // JJR or RBR
bool is_comparative_adjective(const Token& t, Language lang);  // JJR only
bool is_past_participle(const Token& t, Language lang);
bool is_present_participle(const Token& t, Language lang);
// Adjective or participle: the categories a ground may take. Callers must
// still rule out participles sitting inside a verb chunk.
bool is_ground_word(const Token& t, Language lang);

bool is_verb(const Token& t, Language lang);
bool is_finite_verb(const Token& t, Language lang);

bool is_personal_pronoun(const Token& t, Language lang);
bool is_subject_pronoun(const Token& t, Language lang);  // subjective personal or demonstrative
bool is_object_pronoun(const Token& t, Language lang);   // unambiguous objective forms
bool is_relative_pronoun(const Token& t, Language lang);

bool is_preposition(const Token& t, Language lang);
bool is_coordinating_conjunction(const Token& t, Language lang);
bool is_subordinating_link(const Token& t, Language lang);

bool is_punctuation(const Token& t);
bool is_clause_boundary(const Token& t);  // . ! ? ... ; :
bool is_colon_or_semicolon(const Token& t);

}  // namespace frosim::tags
