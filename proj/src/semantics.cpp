#include "frosim/semantics.hpp"

#include <array>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "frosim/unicode.hpp"

namespace frosim {

namespace {

// Lexicographer file names from the WordNet distribution, indexed by number.
constexpr std::array<std::string_view, 45> kLexNames = {
    "adj.all",          "adj.pert",        "adv.all",          "noun.Tops",
    "noun.act",         "noun.animal",     "noun.artifact",    "noun.attribute",
    "noun.body",        "noun.cognition",  "noun.communication", "noun.event",
    "noun.feeling",     "noun.food",       "noun.group",       "noun.location",
    "noun.motive",      "noun.object",     "noun.person",      "noun.phenomenon",
    "noun.plant",       "noun.possession", "noun.process",     "noun.quantity",
    "noun.relation",    "noun.shape",      "noun.state",       "noun.substance",
    "noun.time",        "verb.body",       "verb.change",      "verb.cognition",
    "verb.communication", "verb.competition", "verb.consumption", "verb.contact",
    "verb.creation",    "verb.emotion",    "verb.motion",      "verb.perception",
    "verb.possession",  "verb.social",     "verb.stative",     "verb.weather",
    "adj.ppl",
};

[[noreturn]] void load_fail(const std::string& file, const std::string& what) {
    throw std::runtime_error("lexicon file " + file + ": " + what);
}

}  // namespace

std::string_view to_string(ReviewReason r) {
    switch (r) {
        case ReviewReason::MULTI_CATEGORY: return "MULTI_CATEGORY";
        case ReviewReason::UNIQUE_BEGINNER: return "UNIQUE_BEGINNER";
        case ReviewReason::BOTH_NON_ANIME: return "BOTH_NON_ANIME";
        case ReviewReason::PRONOUN_TENOR: return "PRONOUN_TENOR";
        case ReviewReason::UNKNOWN_LEMMA: return "UNKNOWN_LEMMA";
    }
    return "?";
}

std::string_view to_string(DistanceVerdict::Kind k) {
    switch (k) {
        case DistanceVerdict::Kind::DISTINCT: return "DISTINCT";
        case DistanceVerdict::Kind::SAME: return "SAME";
        case DistanceVerdict::Kind::NEEDS_REVIEW: return "NEEDS_REVIEW";
    }
    return "?";
}

std::optional<ReviewReason> parse_review_reason(std::string_view name) {
    for (ReviewReason r :
         {ReviewReason::MULTI_CATEGORY, ReviewReason::UNIQUE_BEGINNER,
          ReviewReason::BOTH_NON_ANIME, ReviewReason::PRONOUN_TENOR,
          ReviewReason::UNKNOWN_LEMMA})
        if (name == to_string(r)) return r;
    return std::nullopt;
}

SemanticLexicon SemanticLexicon::load_en(const std::string& index_path,
                                         const std::string& data_path) {
    std::ifstream data(data_path);
    if (!data) load_fail(data_path, "cannot open");
    // Offsets are unique per database file, so the noun data file alone maps
    // synset offset → lexicographer file number.
    std::unordered_map<std::string, int> lex_of_offset;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(data, line)) {
        ++line_no;
        // license preamble lines begin with whitespace; data lines with the
        // 8-digit synset offset
        if (line.empty() || !uni::is_digit(line.front())) continue;
        std::istringstream fields(line);
        std::string offset, lexnum;
        if (!(fields >> offset >> lexnum))
            load_fail(data_path, "truncated line " + std::to_string(line_no));
        int code = 0;
        try {
            code = std::stoi(lexnum);
        } catch (const std::exception&) {
            load_fail(data_path, "bad lexicographer number at line " +
                                     std::to_string(line_no));
        }
        if (code < 0 || code >= static_cast<int>(kLexNames.size()))
            load_fail(data_path, "lexicographer number out of range at line " +
                                     std::to_string(line_no));
        lex_of_offset.emplace(offset, code);
    }
    if (lex_of_offset.empty()) load_fail(data_path, "no synsets found");

    std::ifstream index(index_path);
    if (!index) load_fail(index_path, "cannot open");
    SemanticLexicon lex;
    lex.language_ = Language::EN;
    line_no = 0;
    while (std::getline(index, line)) {
        ++line_no;
        if (line.empty() || line.front() == ' ') continue;
        std::istringstream fields(line);
        std::vector<std::string> f;
        std::string w;
        while (fields >> w) f.push_back(std::move(w));
        if (f.size() < 7)
            load_fail(index_path, "truncated line " + std::to_string(line_no));
        int synset_cnt = 0;
        try {
            synset_cnt = std::stoi(f[2]);
        } catch (const std::exception&) {
            load_fail(index_path, "bad synset count at line " + std::to_string(line_no));
        }
        if (synset_cnt <= 0 || static_cast<std::size_t>(synset_cnt) > f.size() - 4)
            load_fail(index_path, "bad synset count at line " + std::to_string(line_no));
        std::set<int>& cats = lex.by_lemma_[f[0]];
        for (std::size_t k = f.size() - synset_cnt; k < f.size(); ++k) {
            auto it = lex_of_offset.find(f[k]);
            if (it == lex_of_offset.end())
                load_fail(index_path, "offset " + f[k] + " at line " +
                                          std::to_string(line_no) +
                                          " missing from " + data_path);
            cats.insert(it->second);
        }
        if (f[0].find('_') != std::string::npos) {
            std::string spaced = f[0];
            for (char& ch : spaced)
                if (ch == '_') ch = ' ';
            lex.by_lemma_[spaced] = cats;
        }
    }
    if (lex.by_lemma_.empty()) load_fail(index_path, "no lemmas found");
    return lex;
}

SemanticLexicon SemanticLexicon::load_fr(const std::string& table_path) {
    std::ifstream in(table_path);
    if (!in) load_fail(table_path, "cannot open");
    SemanticLexicon lex;
    lex.language_ = Language::FR;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        auto tab = line.find('\t');
        if (tab == std::string::npos)
            load_fail(table_path, "line " + std::to_string(line_no) +
                                      " is not lemma<TAB>category");
        std::string lemma = line.substr(0, tab);
        std::string category = line.substr(tab + 1);
        int code;
        if (category == "animal")
            code = kFrAnimal;
        else if (category == "humain")
            code = kFrHumain;
        else if (category == "non-anime" || category == "non-anim\xC3\xA9")
            code = kFrNonAnime;
        else
            load_fail(table_path, "unknown category '" + category + "' at line " +
                                      std::to_string(line_no));
        lex.by_lemma_[lemma].insert(code);
    }
    return lex;
}

const std::set<int>& SemanticLexicon::categories(const std::string& lemma) const {
    static const std::set<int> empty;
    auto it = by_lemma_.find(lemma);
    return it == by_lemma_.end() ? empty : it->second;
}

std::string SemanticLexicon::category_name(int code) const {
    if (language_ == Language::FR) {
        switch (code) {
            case kFrAnimal: return "animal";
            case kFrHumain: return "humain";
            case kFrNonAnime: return "non-anime";
            default: return "?";
        }
    }
    if (code >= 0 && code < static_cast<int>(kLexNames.size()))
        return std::string(kLexNames[code]);
    return "?";
}

DistanceVerdict assess_distance(const SemanticLexicon& lexicon,
                                const std::optional<std::string>& tenor,
                                bool tenor_is_pronoun,
                                const std::string& vehicle) {
    using Kind = DistanceVerdict::Kind;
    auto review = [](ReviewReason r) {
        return DistanceVerdict{Kind::NEEDS_REVIEW, r};
    };
    if (tenor_is_pronoun) return review(ReviewReason::PRONOUN_TENOR);
    if (!tenor) return review(ReviewReason::UNKNOWN_LEMMA);
    const std::set<int>& t = lexicon.categories(uni::lower(*tenor));
    const std::set<int>& v = lexicon.categories(uni::lower(vehicle));
    if (t.empty() || v.empty()) return review(ReviewReason::UNKNOWN_LEMMA);
    if (t.size() > 1 || v.size() > 1) return review(ReviewReason::MULTI_CATEGORY);
    if (lexicon.language() == Language::EN &&
        (t.count(kEnUniqueBeginner) || v.count(kEnUniqueBeginner)))
        return review(ReviewReason::UNIQUE_BEGINNER);
    if (lexicon.language() == Language::FR && t.count(kFrNonAnime) &&
        v.count(kFrNonAnime))
        return review(ReviewReason::BOTH_NON_ANIME);
    return {*t.begin() == *v.begin() ? Kind::SAME : Kind::DISTINCT, std::nullopt};
}

}  // namespace frosim
