#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frosim/text.hpp"

namespace frosim {

// Sentence shapes a marker can participate in.  V before the marker is the
// eventuality verb, V after it the vehicle; G an adjectival ground; T a tenor.
enum class StructureTemplate : std::uint8_t {
    VerbMarkerVehicle,             // cry like a baby
    TenorVerbMarkerVehicle,        // he cried like a baby
    GroundMarkerVehicle,           // white as snow
    TenorGroundMarkerVehicle,      // une peau blanche à l'image de la neige
    TenorVerbGroundMarkerVehicle,  // sa peau restait blanche à la manière de ...
};

std::string_view to_string(StructureTemplate t);
std::optional<StructureTemplate> parse_template(std::string_view name);

// One word slot of a marker part.  Either a fixed form, matched against the
// normalized surface (and optionally the lemma, for inflecting words such as
// "tel"), or a wildcard for any comparative-tagged token ("-er ... than").
struct MarkerLexeme {
    std::string form;
    bool match_lemma = false;
    bool any_comparative = false;
};

struct MarkerPolarity {
    enum Value : std::uint8_t { SIMILE, DISSIMILE };
};

struct MarkerDef {
    std::string id;
    Language language = Language::EN;
    // 1 part: contiguous run of lexemes; 2 parts: discontinuous pair.
    std::vector<std::vector<MarkerLexeme>> parts;
    MarkerPolarity::Value polarity = MarkerPolarity::SIMILE;
    std::vector<StructureTemplate> templates;

    std::size_t total_lexemes() const;
    bool discontinuous() const { return parts.size() == 2; }
};

struct MarkerMatch {
    const MarkerDef* def = nullptr;
    std::vector<Span> spans;  // inclusive, one per part, increasing

    std::size_t first_begin() const { return spans.front().first; }
    std::size_t last_begin() const { return spans.back().first; }
    std::size_t last_end() const { return spans.back().second; }
};

// Built-in inventory for one language: 7 English defs, 13 French defs.
const std::vector<MarkerDef>& builtin_markers(Language language);

// Override file, one def per line:
//   id<TAB>lang<TAB>part1;part2<TAB>polarity<TAB>templates
// where a part is space-separated lexemes, "@comparative" is the
// comparative-tag wildcard, "lemma:xxx" also matches by lemma, polarity is
// SIMILE|DISSIMILE and templates a comma-separated list of
// VMV,TVMV,GMV,TGMV,TVGMV.  Throws std::runtime_error on malformed input.
std::vector<MarkerDef> load_marker_file(const std::string& path);

// All non-overlapping marker occurrences, ordered by position.  Defs with
// more lexemes win conflicts; contiguous defs beat discontinuous ones of the
// same size; remaining ties go to inventory order.  Within one def, matching
// runs left to right, and a discontinuous first part binds the nearest
// admissible second part.
std::vector<MarkerMatch> match_markers(const Sentence& sentence,
                                       const std::vector<MarkerDef>& defs);

}  // namespace frosim
