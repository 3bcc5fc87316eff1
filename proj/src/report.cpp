#include "frosim/report.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <sstream>

#include <json.hpp>

namespace frosim {

namespace {

using json = nlohmann::ordered_json;

std::string format_fraction(double value) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2f", value);
    return buffer;
}

std::string csv_cell(const std::string& value) {
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string quoted = "\"";
    for (char c : value) {
        quoted += c;
        if (c == '"') quoted += '"';
    }
    quoted += '"';
    return quoted;
}

}  // namespace

std::string couple_display(const Couple& couple) {
    return couple.left_lemma + " + marker + " + couple.vehicle_lemma;
}

std::vector<ReportRow> report_rows(const std::vector<FrozenSimile>& frozen,
                                   std::size_t top_n) {
    std::vector<const FrozenSimile*> sorted;
    sorted.reserve(frozen.size());
    for (const FrozenSimile& f : frozen) sorted.push_back(&f);
    std::sort(sorted.begin(), sorted.end(),
              [](const FrozenSimile* a, const FrozenSimile* b) {
                  if (a->stats.count != b->stats.count)
                      return a->stats.count > b->stats.count;
                  return couple_display(a->stats.couple) <
                         couple_display(b->stats.couple);
              });
    if (sorted.size() > top_n) sorted.resize(top_n);
    std::vector<ReportRow> rows;
    rows.reserve(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const FrozenSimile& f = *sorted[i];
        rows.push_back({i + 1, couple_display(f.stats.couple), f.stats.count,
                        f.stats.authors.size(), f.tier, f.evidence,
                        f.review_fraction});
    }
    return rows;
}

std::string render_plain(const std::vector<ReportRow>& rows) {
    std::vector<std::array<std::string, 6>> cells;
    cells.push_back({"rank", "couple", "authors", "tier", "evidence", "review"});
    for (const ReportRow& r : rows)
        cells.push_back({std::to_string(r.rank),
                         r.couple + " (" + std::to_string(r.count) + ")",
                         std::to_string(r.author_count),
                         std::string(to_string(r.tier)),
                         std::string(to_string(r.evidence)),
                         format_fraction(r.review_fraction)});
    std::array<std::size_t, 6> width{};
    for (const auto& row : cells)
        for (std::size_t c = 0; c < row.size(); ++c)
            width[c] = std::max(width[c], row[c].size());
    std::ostringstream out;
    for (const auto& row : cells) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) out << "  ";
            out << row[c];
            if (c + 1 < row.size())
                out << std::string(width[c] - row[c].size(), ' ');
        }
        out << '\n';
    }
    return out.str();
}

std::string render_csv(const std::vector<ReportRow>& rows) {
    std::ostringstream out;
    out << "rank,couple,count,authors,tier,evidence,review_fraction\n";
    for (const ReportRow& r : rows)
        out << r.rank << ',' << csv_cell(r.couple) << ',' << r.count << ','
            << r.author_count << ',' << to_string(r.tier) << ','
            << to_string(r.evidence) << ',' << format_fraction(r.review_fraction)
            << '\n';
    return out.str();
}

std::string frozen_to_json_line(const FrozenSimile& f) {
    json j;
    j["language"] = std::string(to_string(f.stats.couple.language));
    j["role"] = std::string(to_string(f.stats.couple.role));
    j["left_lemma"] = f.stats.couple.left_lemma;
    j["vehicle_lemma"] = f.stats.couple.vehicle_lemma;
    j["count"] = f.stats.count;
    j["authors"] = f.stats.authors;
    j["verdicts"] = {
        {"DISTINCT", f.stats.verdicts(DistanceVerdict::Kind::DISTINCT)},
        {"SAME", f.stats.verdicts(DistanceVerdict::Kind::SAME)},
        {"NEEDS_REVIEW", f.stats.verdicts(DistanceVerdict::Kind::NEEDS_REVIEW)},
    };
    j["tier"] = std::string(to_string(f.tier));
    j["evidence"] = std::string(to_string(f.evidence));
    j["review_fraction"] = f.review_fraction;
    json examples = json::array();
    for (const OccurrenceRef& ref : f.stats.examples)
        examples.push_back(
            {{"doc_id", ref.doc_id}, {"sentence_index", ref.sentence_index}});
    j["examples"] = std::move(examples);
    return j.dump();
}

FrozenSimile frozen_from_json(const std::string& line) {
    json j;
    try {
        j = json::parse(line);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(std::string("bad frozen record: ") + e.what());
    }
    try {
        FrozenSimile f;
        auto lang = parse_language(j.at("language").get<std::string>());
        auto role = parse_couple_role(j.at("role").get<std::string>());
        if (!lang || !role) throw std::runtime_error("bad language or role");
        f.stats.couple = {*lang, *role, j.at("left_lemma").get<std::string>(),
                          j.at("vehicle_lemma").get<std::string>()};
        f.stats.count = j.at("count").get<std::uint64_t>();
        for (const json& a : j.at("authors"))
            f.stats.authors.insert(a.get<std::string>());
        if (j.contains("verdicts")) {
            const json& v = j.at("verdicts");
            f.stats.verdict_histogram = {v.value("DISTINCT", std::uint64_t{0}),
                                         v.value("SAME", std::uint64_t{0}),
                                         v.value("NEEDS_REVIEW", std::uint64_t{0})};
        }
        auto tier = parse_tier(j.at("tier").get<std::string>());
        auto evidence = parse_evidence(j.at("evidence").get<std::string>());
        if (!tier || !evidence) throw std::runtime_error("bad tier or evidence");
        f.tier = *tier;
        f.evidence = *evidence;
        f.review_fraction = j.at("review_fraction").get<double>();
        if (j.contains("examples"))
            for (const json& e : j.at("examples"))
                f.stats.examples.push_back(
                    {e.at("doc_id").get<std::string>(),
                     e.at("sentence_index").get<std::size_t>()});
        return f;
    } catch (const json::exception& e) {
        throw std::runtime_error(std::string("bad frozen record: ") + e.what());
    }
}

}  // namespace frosim
