#include "frosim/records.hpp"

#include <json.hpp>

namespace frosim {

namespace {

using json = nlohmann::ordered_json;

json tenor_json(const RecordTenor& t) {
    return {{"index", t.index}, {"lemma", t.lemma},
            {"role", std::string(to_string(t.role))}};
}

json constituent_json(const RecordConstituent& c) {
    json j = {{"index", c.index}, {"lemma", c.lemma}};
    if (c.tenor) j["tenor"] = tenor_json(*c.tenor);
    return j;
}

RecordTenor tenor_from(const json& j) {
    RecordTenor t;
    t.index = j.at("index").get<std::size_t>();
    t.lemma = j.at("lemma").get<std::string>();
    auto role = parse_tenor_role(j.at("role").get<std::string>());
    if (!role) throw std::runtime_error("unknown tenor role");
    t.role = *role;
    return t;
}

RecordConstituent constituent_from(const json& j) {
    RecordConstituent c;
    c.index = j.at("index").get<std::size_t>();
    c.lemma = j.at("lemma").get<std::string>();
    if (j.contains("tenor")) c.tenor = tenor_from(j.at("tenor"));
    return c;
}

std::optional<RecordTenor> from_extracted(const std::optional<Tenor>& t) {
    if (!t) return std::nullopt;
    return RecordTenor{t->index, t->lemma, t->role};
}

}  // namespace

CandidateRecord make_record(const SimileCandidate& candidate, const Sentence& sentence) {
    CandidateRecord r;
    if (sentence.meta) {
        r.doc_id = sentence.meta->doc_id;
        r.author_id = sentence.meta->author_id;
    }
    r.sentence_index = sentence.sentence_index;
    r.language = sentence.language();
    r.marker_id = candidate.marker.def ? candidate.marker.def->id : "";
    r.marker_spans = candidate.marker.spans;
    if (candidate.vehicle)
        r.vehicle = RecordConstituent{candidate.vehicle->index,
                                      candidate.vehicle->lemma, std::nullopt};
    for (const Ground& g : candidate.grounds)
        r.grounds.push_back({g.index, g.lemma, from_extracted(g.tenor)});
    if (candidate.eventuality)
        r.eventuality = RecordConstituent{candidate.eventuality->index,
                                          candidate.eventuality->lemma,
                                          from_extracted(candidate.eventuality->tenor)};
    if (candidate.dissimile) r.flags.push_back("DISSIMILE");
    if (!candidate.vehicle) r.flags.push_back("NO_VEHICLE");
    r.text = sentence.text();
    return r;
}

std::string to_json_line(const CandidateRecord& r) {
    json j;
    j["doc_id"] = r.doc_id;
    j["author_id"] = r.author_id;
    j["sentence_index"] = r.sentence_index;
    j["language"] = std::string(to_string(r.language));
    j["marker_id"] = r.marker_id;
    json spans = json::array();
    for (const Span& s : r.marker_spans) spans.push_back({s.first, s.second});
    j["marker_spans"] = std::move(spans);
    if (r.vehicle) j["vehicle"] = constituent_json(*r.vehicle);
    if (!r.grounds.empty()) {
        json grounds = json::array();
        for (const RecordConstituent& g : r.grounds)
            grounds.push_back(constituent_json(g));
        j["grounds"] = std::move(grounds);
    }
    if (r.eventuality) j["eventuality"] = constituent_json(*r.eventuality);
    if (!r.flags.empty()) j["flags"] = r.flags;
    j["text"] = r.text;
    return j.dump();
}

CandidateRecord record_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("bad candidate record: ") + e.what());
    }
    try {
        CandidateRecord r;
        r.doc_id = j.at("doc_id").get<std::string>();
        r.author_id = j.value("author_id", std::string{});
        r.sentence_index = j.at("sentence_index").get<std::size_t>();
        auto lang = parse_language(j.at("language").get<std::string>());
        if (!lang) throw std::runtime_error("unknown language");
        r.language = *lang;
        r.marker_id = j.at("marker_id").get<std::string>();
        for (const json& s : j.at("marker_spans"))
            r.marker_spans.emplace_back(s.at(0).get<std::size_t>(),
                                        s.at(1).get<std::size_t>());
        if (j.contains("vehicle")) r.vehicle = constituent_from(j.at("vehicle"));
        if (j.contains("grounds"))
            for (const json& g : j.at("grounds"))
                r.grounds.push_back(constituent_from(g));
        if (j.contains("eventuality"))
            r.eventuality = constituent_from(j.at("eventuality"));
        if (j.contains("flags"))
            r.flags = j.at("flags").get<std::vector<std::string>>();
        r.text = j.value("text", std::string{});
        return r;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad candidate record: ") + e.what());
    }
}

}  // namespace frosim
