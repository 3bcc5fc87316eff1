#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frosim/markers.hpp"
#include "frosim/text.hpp"

namespace frosim {

// How a tenor was attached to its ground or eventuality.
enum class TenorRole : std::uint8_t {
    MODIFIED_NOUN,     // noun the adjectival ground modifies
    POSTPOSED_OBJECT,  // direct object after the verb
    PREPOSED_OBJECT,   // object fronted before "que"/"that"/"which"
    OBJECT_PRONOUN,    // objective pronoun directly before the verb
    SUBJECT_PRONOUN,   // subject pronoun next to the conjugated verb
    SUBJECT_NOUN,      // subject noun phrase before the verb
};

std::string_view to_string(TenorRole role);
std::optional<TenorRole> parse_tenor_role(std::string_view name);

struct Tenor {
    std::size_t index = 0;
    std::string lemma;
    TenorRole role = TenorRole::SUBJECT_NOUN;
};

struct Ground {
    std::size_t index = 0;
    std::string lemma;
    std::optional<Tenor> tenor;
};

struct Eventuality {
    std::size_t index = 0;
    std::string lemma;
    std::optional<Tenor> tenor;
};

struct Vehicle {
    std::size_t index = 0;
    std::string lemma;
};

struct SimileCandidate {
    MarkerMatch marker;
    std::optional<Vehicle> vehicle;
    std::vector<Ground> grounds;  // sentence order
    std::optional<Eventuality> eventuality;
    bool dissimile = false;
    // True when the found constituents realize one of the marker's structure
    // templates; inadmissible candidates only appear in diagnostics output.
    bool admissible = false;
};

// Head of the first noun chunk after the marker (skipping one comma-delimited
// appositive), rejected when a finite verb attaches to it directly or when the
// head is not a common noun.
std::optional<Vehicle> find_vehicle(const Sentence& s, const MarkerMatch& m);

// Adjectives and bare participles forming one run directly left of the
// marker, in sentence order.
std::vector<Ground> find_grounds(const Sentence& s, const MarkerMatch& m);

// Head verb of the nearest verb chunk left of the marker (no colon/semicolon
// between), or, for a marker with no verb on its left, of a verb chunk right
// after the vehicle separated only by commas.  Copulas are dropped when a
// ground already carries the comparison.
std::optional<Eventuality> find_eventuality(const Sentence& s, const MarkerMatch& m,
                                            bool ground_found,
                                            const std::optional<Vehicle>& vehicle);

// Attaches tenors: grounds share the noun they modify or the subject of their
// copula; the eventuality's tenor is searched as postposed object, preposed
// object, object pronoun, then subject.
void resolve_tenors(const Sentence& s, const MarkerMatch& m,
                    std::vector<Ground>& grounds,
                    std::optional<Eventuality>& eventuality,
                    const std::optional<Vehicle>& vehicle);

bool fits_template(const SimileCandidate& c);

// One candidate per match; without `diagnostics`, only candidates that
// realize a structure template are returned.
std::vector<SimileCandidate> extract_candidates(const Sentence& s,
                                                const std::vector<MarkerMatch>& matches,
                                                bool diagnostics = false);

}  // namespace frosim
