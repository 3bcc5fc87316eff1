#include "frosim/frozen.hpp"

#include <algorithm>
#include <fstream>
#include <stdexcept>

#include "frosim/unicode.hpp"

namespace frosim {

std::string_view to_string(CoupleRole role) {
    return role == CoupleRole::ADJ ? "ADJ" : "VERB";
}

std::optional<CoupleRole> parse_couple_role(std::string_view name) {
    if (name == "ADJ") return CoupleRole::ADJ;
    if (name == "VERB") return CoupleRole::VERB;
    return std::nullopt;
}

std::string_view to_string(LiteralPolicy policy) {
    return policy == LiteralPolicy::EXCLUDE_SAME ? "exclude-same" : "keep-all";
}

std::optional<LiteralPolicy> parse_literal_policy(std::string_view name) {
    if (name == "exclude-same") return LiteralPolicy::EXCLUDE_SAME;
    if (name == "keep-all") return LiteralPolicy::KEEP_ALL;
    return std::nullopt;
}

std::string_view to_string(FrozenEvidence evidence) {
    switch (evidence) {
        case FrozenEvidence::REFERENCE_LIST: return "REFERENCE_LIST";
        case FrozenEvidence::FREQUENCY: return "FREQUENCY";
        case FrozenEvidence::BOTH: return "BOTH";
    }
    return "?";
}

std::optional<FrozenEvidence> parse_evidence(std::string_view name) {
    for (FrozenEvidence e : {FrozenEvidence::REFERENCE_LIST, FrozenEvidence::FREQUENCY,
                             FrozenEvidence::BOTH})
        if (name == to_string(e)) return e;
    return std::nullopt;
}

std::string_view to_string(Tier tier) {
    switch (tier) {
        case Tier::RARE: return "RARE";
        case Tier::MEDIUM: return "MEDIUM";
        case Tier::PROMINENT: return "PROMINENT";
    }
    return "?";
}

std::optional<Tier> parse_tier(std::string_view name) {
    for (Tier t : {Tier::RARE, Tier::MEDIUM, Tier::PROMINENT})
        if (name == to_string(t)) return t;
    return std::nullopt;
}

namespace {

bool has_flag(const CandidateRecord& r, std::string_view flag) {
    return std::find(r.flags.begin(), r.flags.end(), flag) != r.flags.end();
}

bool pronoun_role(TenorRole role) {
    return role == TenorRole::OBJECT_PRONOUN || role == TenorRole::SUBJECT_PRONOUN;
}

DistanceVerdict judge(const SemanticLexicon& lexicon,
                      const std::optional<RecordTenor>& tenor,
                      const std::string& vehicle_lemma) {
    std::optional<std::string> tenor_lemma;
    bool is_pronoun = false;
    if (tenor) {
        tenor_lemma = tenor->lemma;
        is_pronoun = pronoun_role(tenor->role);
    }
    return assess_distance(lexicon, tenor_lemma, is_pronoun, vehicle_lemma);
}

void keep_smallest(std::vector<OccurrenceRef>& examples, std::size_t cap) {
    std::sort(examples.begin(), examples.end());
    examples.erase(std::unique(examples.begin(), examples.end()), examples.end());
    if (examples.size() > cap) examples.resize(cap);
}

}  // namespace

std::vector<NormalizedOccurrence> normalize(const CandidateRecord& record,
                                            const SemanticLexicon& lexicon) {
    std::vector<NormalizedOccurrence> out;
    if (!record.vehicle || has_flag(record, "DISSIMILE")) return out;
    std::string vehicle = uni::lower(record.vehicle->lemma);
    if (vehicle.empty()) return out;
    OccurrenceRef ref{record.doc_id, record.sentence_index};
    auto emit = [&](CoupleRole role, const std::string& left,
                    const std::optional<RecordTenor>& tenor) {
        std::string lemma = uni::lower(left);
        if (lemma.empty()) return;
        out.push_back({Couple{record.language, role, std::move(lemma), vehicle},
                       judge(lexicon, tenor, vehicle), ref, record.author_id});
    };
    for (const RecordConstituent& g : record.grounds)
        emit(CoupleRole::ADJ, g.lemma, g.tenor);
    if (record.eventuality)
        emit(CoupleRole::VERB, record.eventuality->lemma, record.eventuality->tenor);
    return out;
}

CoupleStats merge_stats(CoupleStats a, const CoupleStats& b, std::size_t max_examples) {
    if (b.count == 0) {
        keep_smallest(a.examples, max_examples);
        return a;
    }
    if (a.count == 0) {
        CoupleStats out = b;
        keep_smallest(out.examples, max_examples);
        return out;
    }
    if (!(a.couple == b.couple))
        throw std::logic_error("merge_stats: couple mismatch");
    a.count += b.count;
    a.authors.insert(b.authors.begin(), b.authors.end());
    for (std::size_t i = 0; i < a.verdict_histogram.size(); ++i)
        a.verdict_histogram[i] += b.verdict_histogram[i];
    a.examples.insert(a.examples.end(), b.examples.begin(), b.examples.end());
    keep_smallest(a.examples, max_examples);
    return a;
}

void StatsAggregator::add(const NormalizedOccurrence& occurrence) {
    CoupleStats& s = stats_[occurrence.couple];
    s.couple = occurrence.couple;
    s.count += 1;
    if (!occurrence.author_id.empty()) s.authors.insert(occurrence.author_id);
    s.verdict_histogram[static_cast<std::size_t>(occurrence.verdict.kind)] += 1;
    auto at = std::lower_bound(s.examples.begin(), s.examples.end(), occurrence.ref);
    if (at == s.examples.end() || !(*at == occurrence.ref))
        s.examples.insert(at, occurrence.ref);
    if (s.examples.size() > max_examples_) s.examples.pop_back();
}

void StatsAggregator::merge(const StatsAggregator& other) {
    for (const auto& [couple, stats] : other.stats_) {
        auto it = stats_.find(couple);
        if (it == stats_.end())
            stats_.emplace(couple, merge_stats(CoupleStats{}, stats, max_examples_));
        else
            it->second = merge_stats(std::move(it->second), stats, max_examples_);
    }
}

ReferenceList ReferenceList::load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open reference list: " + path);
    ReferenceList list;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("reference list " + path + " line " +
                                 std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 5) fail("expected 5 tab-separated fields");
        auto lang = parse_language(fields[0]);
        if (!lang) fail("unknown language '" + fields[0] + "'");
        auto role = parse_couple_role(fields[1]);
        if (!role) fail("role must be ADJ or VERB");
        Couple couple{*lang, *role, uni::lower(fields[2]), uni::lower(fields[3])};
        if (couple.left_lemma.empty() || couple.vehicle_lemma.empty())
            fail("empty lemma");
        list.couples_.insert(couple);
        list.entries_.push_back({std::move(couple), fields[4]});
    }
    return list;
}

Tier assign_tier(std::uint64_t count, const DetectorConfig& config) {
    if (count < config.medium_threshold) return Tier::RARE;
    if (count < config.prominent_threshold) return Tier::MEDIUM;
    return Tier::PROMINENT;
}

std::vector<FrozenSimile> detect(const std::map<Couple, CoupleStats>& stats,
                                 const ReferenceList& reference,
                                 const DetectorConfig& config) {
    std::vector<FrozenSimile> out;
    for (const auto& [couple, s] : stats) {
        bool listed = reference.contains(couple);
        bool frequent = s.count >= config.min_count &&
                        s.authors.size() >= config.min_authors;
        if (frequent && config.literal_policy == LiteralPolicy::EXCLUDE_SAME)
            frequent = s.verdicts(DistanceVerdict::Kind::SAME) < s.count;
        if (!listed && !frequent) continue;
        FrozenSimile f;
        f.stats = s;
        f.evidence = listed && frequent ? FrozenEvidence::BOTH
                     : listed           ? FrozenEvidence::REFERENCE_LIST
                                        : FrozenEvidence::FREQUENCY;
        f.tier = assign_tier(s.count, config);
        f.review_fraction =
            s.count == 0
                ? 0.0
                : static_cast<double>(s.verdicts(DistanceVerdict::Kind::NEEDS_REVIEW)) /
                      static_cast<double>(s.count);
        out.push_back(std::move(f));
    }
    return out;
}

std::vector<VariantGroup> group_variants(const std::vector<FrozenSimile>& frozen) {
    struct Key {
        Language language;
        CoupleRole role;
        std::string vehicle;
        auto operator<=>(const Key&) const = default;
    };
    std::map<Key, std::vector<const FrozenSimile*>> buckets;
    for (const FrozenSimile& f : frozen)
        buckets[{f.stats.couple.language, f.stats.couple.role,
                 f.stats.couple.vehicle_lemma}]
            .push_back(&f);
    std::vector<VariantGroup> out;
    for (auto& [key, members] : buckets) {
        std::sort(members.begin(), members.end(),
                  [](const FrozenSimile* a, const FrozenSimile* b) {
                      if (a->stats.count != b->stats.count)
                          return a->stats.count > b->stats.count;
                      return a->stats.couple.left_lemma < b->stats.couple.left_lemma;
                  });
        VariantGroup g;
        g.head = members.front()->stats.couple;
        for (const FrozenSimile* m : members) g.members.push_back(m->stats.couple);
        out.push_back(std::move(g));
    }
    return out;
}

}  // namespace frosim
