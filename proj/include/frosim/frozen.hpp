#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "frosim/records.hpp"
#include "frosim/semantics.hpp"

namespace frosim {

enum class CoupleRole : std::uint8_t { ADJ, VERB };

std::string_view to_string(CoupleRole role);
std::optional<CoupleRole> parse_couple_role(std::string_view name);

// Normalized (ground-or-eventuality, vehicle) pair — the key frozenness
// statistics are kept under.  Lemmas are lowercase.
struct Couple {
    Language language = Language::EN;
    CoupleRole role = CoupleRole::ADJ;
    std::string left_lemma;
    std::string vehicle_lemma;

    auto operator<=>(const Couple&) const = default;
};

struct OccurrenceRef {
    std::string doc_id;
    std::size_t sentence_index = 0;

    auto operator<=>(const OccurrenceRef&) const = default;
};

// Corpus-wide tallies for one couple.  Merging two stats is commutative and
// associative: examples are kept sorted, deduplicated, and capped to the N
// smallest refs so shard order cannot change the outcome.
struct CoupleStats {
    Couple couple;
    std::uint64_t count = 0;
    std::set<std::string> authors;
    // indexed by DistanceVerdict::Kind: DISTINCT, SAME, NEEDS_REVIEW
    std::array<std::uint64_t, 3> verdict_histogram{};
    std::vector<OccurrenceRef> examples;

    std::uint64_t verdicts(DistanceVerdict::Kind k) const {
        return verdict_histogram[static_cast<std::size_t>(k)];
    }
};

struct NormalizedOccurrence {
    Couple couple;
    DistanceVerdict verdict;
    OccurrenceRef ref;
    std::string author_id;
};

// Couples of one candidate record: one ADJ couple per ground and one VERB
// couple for the eventuality, each judged against its own tenor.  Dissimiles
// and vehicle-less candidates yield nothing.
std::vector<NormalizedOccurrence> normalize(const CandidateRecord& record,
                                            const SemanticLexicon& lexicon);

CoupleStats merge_stats(CoupleStats a, const CoupleStats& b,
                        std::size_t max_examples = 5);

class StatsAggregator {
public:
    explicit StatsAggregator(std::size_t max_examples = 5)
        : max_examples_(max_examples) {}

    void add(const NormalizedOccurrence& occurrence);
    void merge(const StatsAggregator& other);

    const std::map<Couple, CoupleStats>& stats() const { return stats_; }
    std::size_t max_examples() const { return max_examples_; }

private:
    std::size_t max_examples_;
    std::map<Couple, CoupleStats> stats_;
};

struct ReferenceEntry {
    Couple couple;
    std::string source;
};

// Curated frozen-simile list: `lang<TAB>role<TAB>left<TAB>vehicle<TAB>source`
// per line, "#" comments.  Lemmas are lowercased on load.
class ReferenceList {
public:
    static ReferenceList load(const std::string& path);

    bool contains(const Couple& couple) const { return couples_.count(couple) > 0; }
    const std::vector<ReferenceEntry>& entries() const { return entries_; }
    std::size_t size() const { return couples_.size(); }

private:
    std::set<Couple> couples_;
    std::vector<ReferenceEntry> entries_;
};

enum class LiteralPolicy : std::uint8_t { EXCLUDE_SAME, KEEP_ALL };
enum class FrozenEvidence : std::uint8_t { REFERENCE_LIST, FREQUENCY, BOTH };
enum class Tier : std::uint8_t { RARE, MEDIUM, PROMINENT };

std::string_view to_string(LiteralPolicy policy);
std::optional<LiteralPolicy> parse_literal_policy(std::string_view name);
std::string_view to_string(FrozenEvidence evidence);
std::optional<FrozenEvidence> parse_evidence(std::string_view name);
std::string_view to_string(Tier tier);
std::optional<Tier> parse_tier(std::string_view name);

struct DetectorConfig {
    std::uint64_t min_count = 5;
    std::uint64_t min_authors = 2;
    std::uint64_t medium_threshold = 20;
    std::uint64_t prominent_threshold = 80;
    LiteralPolicy literal_policy = LiteralPolicy::EXCLUDE_SAME;
    std::size_t max_examples = 5;
};

struct FrozenSimile {
    CoupleStats stats;
    FrozenEvidence evidence = FrozenEvidence::FREQUENCY;
    Tier tier = Tier::RARE;
    double review_fraction = 0.0;
};

Tier assign_tier(std::uint64_t count, const DetectorConfig& config = {});

// A couple is frozen when the reference list names it, or when it occurred
// min_count times across min_authors authors — under EXCLUDE_SAME with at
// least one non-literal (non-SAME) occurrence.  Output in couple order.
std::vector<FrozenSimile> detect(const std::map<Couple, CoupleStats>& stats,
                                 const ReferenceList& reference,
                                 const DetectorConfig& config = {});

// Couples of one language and role sharing a vehicle, highest count first.
struct VariantGroup {
    Couple head;
    std::vector<Couple> members;  // head first
};

std::vector<VariantGroup> group_variants(const std::vector<FrozenSimile>& frozen);

}  // namespace frosim
