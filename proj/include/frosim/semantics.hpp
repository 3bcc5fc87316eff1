#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <unordered_map>

#include "frosim/lang.hpp"

namespace frosim {

// French category codes; English codes are WordNet lexicographer-file
// numbers (3 = noun.Tops, the unique-beginner file; 18 = noun.person).
inline constexpr int kFrAnimal = 0;
inline constexpr int kFrHumain = 1;
inline constexpr int kFrNonAnime = 2;
inline constexpr int kEnUniqueBeginner = 3;

enum class ReviewReason : std::uint8_t {
    MULTI_CATEGORY,   // a side carries several categories
    UNIQUE_BEGINNER,  // an English side sits in noun.Tops
    BOTH_NON_ANIME,   // both French sides are non-animé
    PRONOUN_TENOR,    // tenor is a pronoun, category unknowable here
    UNKNOWN_LEMMA,    // missing tenor or a lemma absent from the lexicon
};

struct DistanceVerdict {
    enum class Kind : std::uint8_t { DISTINCT, SAME, NEEDS_REVIEW };
    Kind kind = Kind::NEEDS_REVIEW;
    std::optional<ReviewReason> reason;  // present iff NEEDS_REVIEW

    bool operator==(const DistanceVerdict&) const = default;
};

std::string_view to_string(ReviewReason r);
std::string_view to_string(DistanceVerdict::Kind k);
std::optional<ReviewReason> parse_review_reason(std::string_view name);

// Noun lemma → semantic category set.  English entries come from the WordNet
// noun database (index.noun + data.noun), French ones from a two-column
// lemma<TAB>category table with categories animal/humain/non-anime.
class SemanticLexicon {
public:
    [[nodiscard]] static SemanticLexicon load_en(const std::string& index_path,
                                                 const std::string& data_path);
    [[nodiscard]] static SemanticLexicon load_fr(const std::string& table_path);

    Language language() const { return language_; }
    std::size_t size() const { return by_lemma_.size(); }

    // Empty set for lemmas the lexicon does not know.
    const std::set<int>& categories(const std::string& lemma) const;

    std::string category_name(int code) const;

private:
    Language language_ = Language::EN;
    std::unordered_map<std::string, std::set<int>> by_lemma_;
};

// Semantic distance between tenor and vehicle, with the manual-review
// triggers made explicit.  `tenor` is empty when the extractor resolved none.
DistanceVerdict assess_distance(const SemanticLexicon& lexicon,
                                const std::optional<std::string>& tenor,
                                bool tenor_is_pronoun,
                                const std::string& vehicle);

}  // namespace frosim
