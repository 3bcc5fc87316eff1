#include "frosim/extractor.hpp"

#include <algorithm>

#include "frosim/tagset.hpp"
#include "frosim/unicode.hpp"

namespace frosim {

std::string_view to_string(TenorRole role) {
    switch (role) {
        case TenorRole::MODIFIED_NOUN: return "MODIFIED_NOUN";
        case TenorRole::POSTPOSED_OBJECT: return "POSTPOSED_OBJECT";
        case TenorRole::PREPOSED_OBJECT: return "PREPOSED_OBJECT";
        case TenorRole::OBJECT_PRONOUN: return "OBJECT_PRONOUN";
        case TenorRole::SUBJECT_PRONOUN: return "SUBJECT_PRONOUN";
        case TenorRole::SUBJECT_NOUN: return "SUBJECT_NOUN";
    }
    return "?";
}

std::optional<TenorRole> parse_tenor_role(std::string_view name) {
    for (TenorRole r :
         {TenorRole::MODIFIED_NOUN, TenorRole::POSTPOSED_OBJECT,
          TenorRole::PREPOSED_OBJECT, TenorRole::OBJECT_PRONOUN,
          TenorRole::SUBJECT_PRONOUN, TenorRole::SUBJECT_NOUN})
        if (name == to_string(r)) return r;
    return std::nullopt;
}

namespace {

bool in_marker_span(const MarkerMatch& m, std::size_t i) {
    return std::any_of(m.spans.begin(), m.spans.end(), [i](const Span& sp) {
        return sp.first <= i && i <= sp.second;
    });
}

// Last noun token of a chunk; the tagger's NCs are head-final.
std::optional<std::size_t> head_noun(const Sentence& s, const Chunk& nc) {
    for (std::size_t i = nc.end + 1; i-- > nc.begin;)
        if (tags::is_noun(s.tokens[i], s.language())) return i;
    return std::nullopt;
}

bool inside_pc(const Sentence& s, const Chunk& nc) {
    for (const Chunk& c : s.chunks)
        if (c.kind == ChunkKind::PC && c.contains(nc)) return true;
    return false;
}

bool after_preposition(const Sentence& s, const Chunk& nc) {
    return nc.begin > 0 &&
           tags::is_preposition(s.tokens[nc.begin - 1], s.language());
}

// Adverbs and negation particles do not break direct verb attachment.
bool transparent(const Sentence& s, const Token& t) {
    if (s.language() == Language::EN) {
        if (t.pos.rfind("RB", 0) == 0) return true;
    } else if (t.pos == "ADV") {
        return true;
    }
    std::string n = tags::normalized_surface(t.surface);
    return n == "not" || n == "n't" || n == "ne" || n == "n'" || n == "pas";
}

// First token index of the clause holding `before`: one past the last strong
// punctuation mark on its left.
std::size_t clause_start(const Sentence& s, std::size_t before) {
    for (std::size_t i = before; i-- > 0;)
        if (tags::is_clause_boundary(s.tokens[i])) return i + 1;
    return 0;
}

// Innermost NC whose span ends exactly at `end`.
const Chunk* nc_ending_at(const Sentence& s, std::size_t end) {
    const Chunk* best = nullptr;
    for (const Chunk& c : s.chunks)
        if (c.kind == ChunkKind::NC && c.end == end)
            if (!best || c.begin > best->begin) best = &c;
    return best;
}

const Chunk* nearest_vc_before(const Sentence& s, std::size_t pos) {
    const Chunk* best = nullptr;
    for (const Chunk& c : s.chunks) {
        if (c.kind != ChunkKind::VC || c.end >= pos) continue;
        if (!best || c.end > best->end ||
            (c.end == best->end && c.begin > best->begin))
            best = &c;
    }
    return best;
}

std::optional<std::size_t> last_verb_in(const Sentence& s, const Chunk& vc) {
    for (std::size_t i = vc.end + 1; i-- > vc.begin;)
        if (tags::is_verb(s.tokens[i], s.language())) return i;
    return std::nullopt;
}

bool vc_conjugated(const Sentence& s, const Chunk& vc) {
    for (std::size_t i = vc.begin; i <= vc.end; ++i)
        if (tags::is_finite_verb(s.tokens[i], s.language())) return true;
    return false;
}

Tenor make_tenor(const Sentence& s, std::size_t idx, TenorRole role) {
    std::string lemma = s.tokens[idx].lemma;
    if (!lemma.empty() && lemma.front() == '-') lemma.erase(0, 1);  // "-il"
    return {idx, std::move(lemma), role};
}

// Subject of the verb chunk: a pronoun touching the conjugated verb, else the
// leftmost noun chunk of the clause before it.
std::optional<Tenor> find_subject(const Sentence& s, const Chunk& vc,
                                  const std::optional<Vehicle>& vehicle) {
    const Language lang = s.language();
    if (vc_conjugated(s, vc)) {
        if (vc.begin > 0 && tags::is_subject_pronoun(s.tokens[vc.begin - 1], lang))
            return make_tenor(s, vc.begin - 1, TenorRole::SUBJECT_PRONOUN);
        if (vc.end + 1 < s.tokens.size() &&
            tags::is_subject_pronoun(s.tokens[vc.end + 1], lang))
            return make_tenor(s, vc.end + 1, TenorRole::SUBJECT_PRONOUN);
    }
    std::size_t start = clause_start(s, vc.begin);
    for (const Chunk& c : s.chunks) {
        if (c.kind != ChunkKind::NC || c.begin < start || c.end >= vc.begin) continue;
        if (inside_pc(s, c) || after_preposition(s, c)) continue;
        if (vehicle && c.contains(vehicle->index)) continue;
        auto head = head_noun(s, c);
        if (!head) continue;
        return make_tenor(s, *head, TenorRole::SUBJECT_NOUN);
    }
    return std::nullopt;
}

std::optional<Tenor> eventuality_tenor(const Sentence& s, const MarkerMatch& m,
                                       const Chunk& vc,
                                       const std::optional<Vehicle>& vehicle) {
    const Language lang = s.language();
    const std::size_t n = s.tokens.size();

    // Postposed direct object: first common-noun NC after the verb, outside
    // prepositional phrases, before the marker (or clause end for a verb on
    // the vehicle side).
    std::size_t bound = vc.end < m.first_begin() ? m.first_begin() : n;
    for (std::size_t i = vc.end + 1; i < bound; ++i)
        if (tags::is_clause_boundary(s.tokens[i])) {
            bound = i;
            break;
        }
    for (const Chunk& c : s.chunks) {
        if (c.kind != ChunkKind::NC || c.begin <= vc.end || c.end >= bound) continue;
        if (inside_pc(s, c) || after_preposition(s, c)) continue;
        if (vehicle && c.contains(vehicle->index)) continue;
        auto head = head_noun(s, c);
        if (!head || !tags::is_common_noun(s.tokens[*head], lang)) continue;
        return make_tenor(s, *head, TenorRole::POSTPOSED_OBJECT);
    }

    // Preposed object: NC + "que"/"that"/"which" + subject + our verb.
    std::size_t start = clause_start(s, vc.begin);
    for (std::size_t r = vc.begin; r-- > start;) {
        const Token& t = s.tokens[r];
        if (tags::is_verb(t, lang) || in_marker_span(m, r)) break;
        std::string norm = tags::normalized_surface(t.surface);
        if (norm != "que" && norm != "that" && norm != "which") continue;
        bool subject_seen = false;
        bool plausible = r + 1 < vc.begin;
        for (std::size_t k = r + 1; k < vc.begin && plausible; ++k) {
            const Token& st = s.tokens[k];
            if (tags::is_subject_pronoun(st, lang) || s.inside(k, ChunkKind::NC))
                subject_seen = true;
            else if (!transparent(s, st))
                plausible = false;
        }
        if (plausible && subject_seen && r > 0) {
            const Chunk* nc = nc_ending_at(s, r - 1);
            if (nc) {
                auto head = head_noun(s, *nc);
                if (head && tags::is_common_noun(s.tokens[*head], lang))
                    return make_tenor(s, *head, TenorRole::PREPOSED_OBJECT);
            }
        }
        break;  // only the trigger nearest to the verb is considered
    }

    if (vc.begin > 0 && tags::is_object_pronoun(s.tokens[vc.begin - 1], lang))
        return make_tenor(s, vc.begin - 1, TenorRole::OBJECT_PRONOUN);

    return find_subject(s, vc, vehicle);
}

}  // namespace

std::optional<Vehicle> find_vehicle(const Sentence& s, const MarkerMatch& m) {
    const Language lang = s.language();
    const std::size_t n = s.tokens.size();
    const Chunk* nc = s.next_chunk_after(m.last_end(), ChunkKind::NC);
    if (!nc) return std::nullopt;
    bool comma_before = nc->begin > 0 && s.tokens[nc->begin - 1].surface == ",";
    bool comma_after = nc->end + 1 < n && s.tokens[nc->end + 1].surface == ",";
    if (comma_before && comma_after) {
        const Chunk* after = s.next_chunk_after(nc->end, ChunkKind::NC);
        if (after) nc = after;  // one appositive may sit between marker and vehicle
    }
    auto head = head_noun(s, *nc);
    if (!head || !tags::is_common_noun(s.tokens[*head], lang)) return std::nullopt;
    // A finite verb attached directly to the NC makes it the subject of a
    // comparative clause, not a vehicle.
    for (std::size_t i = nc->end + 1; i < n; ++i) {
        const Token& t = s.tokens[i];
        if (transparent(s, t)) continue;
        if (tags::is_finite_verb(t, lang)) return std::nullopt;
        break;
    }
    return Vehicle{*head, s.tokens[*head].lemma};
}

std::vector<Ground> find_grounds(const Sentence& s, const MarkerMatch& m) {
    const Language lang = s.language();
    std::vector<Ground> out;
    std::size_t at = m.last_begin();
    while (at-- > 0) {
        const Token& t = s.tokens[at];
        if (in_marker_span(m, at)) {
            // the comparative word of "-er ... than" is itself the ground
            if (tags::is_comparative_adjective(t, lang)) {
                out.push_back({at, t.lemma, std::nullopt});
                continue;
            }
            break;
        }
        if (tags::is_ground_word(t, lang)) {
            bool verbal = (tags::is_past_participle(t, lang) ||
                           tags::is_present_participle(t, lang)) &&
                          s.inside(at, ChunkKind::VC);
            if (verbal) break;
            if (s.inside(at, ChunkKind::NC)) break;  // belongs to that noun
            out.push_back({at, t.lemma, std::nullopt});
            continue;
        }
        bool joiner = t.surface == "," || tags::is_coordinating_conjunction(t, lang);
        if (joiner && !out.empty() && at > 0 &&
            tags::is_ground_word(s.tokens[at - 1], lang) &&
            !s.inside(at - 1, ChunkKind::NC))
            continue;
        break;
    }
    std::reverse(out.begin(), out.end());
    return out;
}

std::optional<Eventuality> find_eventuality(const Sentence& s, const MarkerMatch& m,
                                            bool ground_found,
                                            const std::optional<Vehicle>& vehicle) {
    const Language lang = s.language();
    const Chunk* vc = nearest_vc_before(s, m.first_begin());
    if (vc) {
        for (std::size_t i = vc->end + 1; i < m.first_begin(); ++i)
            if (tags::is_colon_or_semicolon(s.tokens[i])) {
                vc = nullptr;
                break;
            }
    }
    if (!vc && vehicle) {
        // "Guests, like fish, begin to smell": the verb of the clause the
        // marker interrupts sits right after the vehicle.
        const Chunk* vehicle_nc = s.chunk_at(vehicle->index, ChunkKind::NC);
        if (vehicle_nc) {
            for (const Chunk& c : s.chunks) {
                if (c.kind != ChunkKind::VC || c.begin <= vehicle_nc->end) continue;
                bool only_commas = true;
                for (std::size_t i = vehicle_nc->end + 1; i < c.begin; ++i)
                    if (s.tokens[i].surface != ",") {
                        only_commas = false;
                        break;
                    }
                if (only_commas) {
                    vc = &c;
                    break;
                }
            }
        }
    }
    if (!vc) return std::nullopt;
    auto head = last_verb_in(s, *vc);
    if (!head) return std::nullopt;
    static const std::vector<std::string> en_copulas = {
        "be", "seem", "look", "appear", "grow", "become", "turn"};
    static const std::vector<std::string> fr_copulas = {
        "\xC3\xAAtre",    "sembler", "para\xC3\xAEtre",
        "devenir", "rester",  "demeurer"};
    const auto& copulas = lang == Language::EN ? en_copulas : fr_copulas;
    std::string lemma = uni::lower(s.tokens[*head].lemma);
    if (ground_found &&
        std::find(copulas.begin(), copulas.end(), lemma) != copulas.end())
        return std::nullopt;
    return Eventuality{*head, s.tokens[*head].lemma, std::nullopt};
}

void resolve_tenors(const Sentence& s, const MarkerMatch& m,
                    std::vector<Ground>& grounds,
                    std::optional<Eventuality>& eventuality,
                    const std::optional<Vehicle>& vehicle) {
    const Language lang = s.language();
    if (!grounds.empty()) {
        std::size_t run_begin = grounds.front().index;
        const Chunk* nc = s.chunk_at(run_begin, ChunkKind::NC);
        if (!nc && run_begin > 0) {
            std::size_t j = run_begin;
            while (j > 0 && in_marker_span(m, j - 1)) --j;  // "a face as pale"
            if (j > 0 && s.tokens[j - 1].surface == ",") --j;  // "a flame , pure"
            if (j > 0) nc = nc_ending_at(s, j - 1);
        }
        std::optional<Tenor> tenor;
        if (nc) {
            auto head = head_noun(s, *nc);
            if (head && tags::is_common_noun(s.tokens[*head], lang))
                tenor = make_tenor(s, *head, TenorRole::MODIFIED_NOUN);
        } else {
            const Chunk* vc = nearest_vc_before(s, run_begin);
            bool clause_ok = vc != nullptr;
            for (std::size_t i = vc ? vc->end + 1 : 0; clause_ok && i < run_begin; ++i)
                if (tags::is_clause_boundary(s.tokens[i])) clause_ok = false;
            if (clause_ok) tenor = find_subject(s, *vc, vehicle);
        }
        for (Ground& g : grounds) g.tenor = tenor;
    }
    if (eventuality) {
        const Chunk* vc = s.chunk_at(eventuality->index, ChunkKind::VC);
        if (vc) eventuality->tenor = eventuality_tenor(s, m, *vc, vehicle);
    }
}

bool fits_template(const SimileCandidate& c) {
    if (!c.marker.def) return false;
    for (StructureTemplate t : c.marker.def->templates) {
        bool need_verb = t == StructureTemplate::VerbMarkerVehicle ||
                         t == StructureTemplate::TenorVerbMarkerVehicle ||
                         t == StructureTemplate::TenorVerbGroundMarkerVehicle;
        bool need_ground = t == StructureTemplate::GroundMarkerVehicle ||
                           t == StructureTemplate::TenorGroundMarkerVehicle ||
                           t == StructureTemplate::TenorVerbGroundMarkerVehicle;
        if (!c.vehicle) continue;
        if (need_verb && !c.eventuality) continue;
        if (need_ground && c.grounds.empty()) continue;
        return true;
    }
    return false;
}

std::vector<SimileCandidate> extract_candidates(const Sentence& s,
                                                const std::vector<MarkerMatch>& matches,
                                                bool diagnostics) {
    std::vector<SimileCandidate> out;
    for (const MarkerMatch& m : matches) {
        SimileCandidate c;
        c.marker = m;
        c.vehicle = find_vehicle(s, m);
        c.grounds = find_grounds(s, m);
        c.eventuality = find_eventuality(s, m, !c.grounds.empty(), c.vehicle);
        resolve_tenors(s, m, c.grounds, c.eventuality, c.vehicle);
        c.dissimile = m.def && m.def->polarity == MarkerPolarity::DISSIMILE;
        c.admissible = fits_template(c);
        if (c.admissible || diagnostics) out.push_back(std::move(c));
    }
    return out;
}

}  // namespace frosim
