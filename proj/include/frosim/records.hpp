#pragma once

#include <optional>
#include <string>
#include <vector>

#include "frosim/extractor.hpp"
#include "frosim/text.hpp"

namespace frosim {

// One extracted candidate as written to / read from the candidate file, one
// JSON object per line.  Absent constituents and empty flag sets are omitted
// from the serialized form.
struct RecordTenor {
    std::size_t index = 0;
    std::string lemma;
    TenorRole role = TenorRole::SUBJECT_NOUN;
};

struct RecordConstituent {
    std::size_t index = 0;
    std::string lemma;
    std::optional<RecordTenor> tenor;
};

struct CandidateRecord {
    std::string doc_id;
    std::string author_id;
    std::size_t sentence_index = 0;
    Language language = Language::EN;
    std::string marker_id;
    std::vector<Span> marker_spans;
    std::optional<RecordConstituent> vehicle;
    std::vector<RecordConstituent> grounds;
    std::optional<RecordConstituent> eventuality;
    std::vector<std::string> flags;  // DISSIMILE, NO_VEHICLE
    std::string text;
};

CandidateRecord make_record(const SimileCandidate& candidate, const Sentence& sentence);

std::string to_json_line(const CandidateRecord& record);

// Throws std::runtime_error naming the offending field on schema mismatch.
CandidateRecord record_from_json(const std::string& line);

}  // namespace frosim
