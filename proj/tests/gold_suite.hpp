#pragma once

// Hand-checked corpus runner, shared by the unit suite and the acceptance
// binary.  Every sentence in the corpus must have an expectation row, and the
// rendered candidate line pins present and absent constituents alike, so a
// spurious ground fails just as loudly as a missing vehicle.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "frosim/extractor.hpp"
#include "frosim/markers.hpp"
#include "frosim/resegment.hpp"
#include "frosim/vertical_reader.hpp"

namespace gold {

struct Outcome {
    std::size_t sentences = 0;
    std::vector<std::string> failures;
    std::vector<std::string> texts;  // space-joined sentence texts, in order

    bool ok() const { return sentences > 0 && failures.empty(); }
};

// Candidate in one line: "id | V:lemma | G:lemma<tenor/ROLE> | E:lemma<...>".
inline std::string render(const frosim::SimileCandidate& c) {
    std::ostringstream out;
    out << c.marker.def->id;
    out << " | V:" << (c.vehicle ? c.vehicle->lemma : "-");
    out << " | G:";
    if (c.grounds.empty()) out << "-";
    for (std::size_t i = 0; i < c.grounds.size(); ++i) {
        if (i) out << ",";
        out << c.grounds[i].lemma;
        if (c.grounds[i].tenor)
            out << "<" << c.grounds[i].tenor->lemma << "/"
                << frosim::to_string(c.grounds[i].tenor->role) << ">";
    }
    out << " | E:";
    if (c.eventuality) {
        out << c.eventuality->lemma;
        if (c.eventuality->tenor)
            out << "<" << c.eventuality->tenor->lemma << "/"
                << frosim::to_string(c.eventuality->tenor->role) << ">";
    } else {
        out << "-";
    }
    if (c.dissimile) out << " | DISSIMILE";
    return out.str();
}

inline std::string render_all(const std::vector<frosim::SimileCandidate>& cs) {
    if (cs.empty()) return "-";
    std::string out;
    for (std::size_t i = 0; i < cs.size(); ++i) {
        if (i) out += " || ";
        out += render(cs[i]);
    }
    return out;
}

inline Outcome run(const std::filesystem::path& corpus_dir,
                   const std::filesystem::path& expected_path) {
    using namespace frosim;
    Outcome outcome;

    std::map<std::pair<std::string, std::size_t>, std::string> expected;
    {
        std::ifstream in(expected_path);
        if (!in) {
            outcome.failures.push_back("cannot open " + expected_path.string());
            return outcome;
        }
        std::string line;
        std::size_t line_no = 0;
        while (std::getline(in, line)) {
            ++line_no;
            if (line.empty() || line[0] == '#') continue;
            std::istringstream fields(line);
            std::string doc, index, rest;
            if (!std::getline(fields, doc, '\t') ||
                !std::getline(fields, index, '\t') ||
                !std::getline(fields, rest)) {
                outcome.failures.push_back("expectations line " +
                                           std::to_string(line_no) + ": need 3 fields");
                continue;
            }
            expected[{doc, std::stoul(index)}] = rest;
        }
    }

    std::vector<std::filesystem::path> files;
    for (const auto& entry : std::filesystem::directory_iterator(corpus_dir))
        if (entry.is_regular_file()) files.push_back(entry.path());
    std::sort(files.begin(), files.end());
    if (files.empty())
        outcome.failures.push_back("no documents in " + corpus_dir.string());

    for (const auto& path : files) {
        std::ifstream in(path, std::ios::binary);
        DocumentMeta defaults;
        defaults.doc_id = path.stem().string();
        DocumentReader reader(in, defaults);
        Resegmenter resegmenter;

        auto check = [&](const Sentence& sentence) {
            ++outcome.sentences;
            outcome.texts.push_back(sentence.text());
            const auto candidates = extract_candidates(
                sentence, match_markers(sentence, builtin_markers(sentence.language())),
                false);
            const std::string got = render_all(candidates);
            const std::pair key{defaults.doc_id, sentence.sentence_index};
            auto want = expected.find(key);
            if (want == expected.end()) {
                outcome.failures.push_back(defaults.doc_id + " #" +
                                           std::to_string(sentence.sentence_index) +
                                           ": sentence has no expectation: " + got);
                return;
            }
            if (want->second != got)
                outcome.failures.push_back(defaults.doc_id + " #" +
                                           std::to_string(sentence.sentence_index) +
                                           ": got " + got + " want " + want->second);
            expected.erase(want);
        };

        Sentence sentence;
        while (reader.next(sentence)) {
            if (auto done = resegmenter.push(std::move(sentence))) check(*done);
            sentence = Sentence{};
        }
        if (auto done = resegmenter.finish()) check(*done);
        for (const auto& issue : reader.issues())
            outcome.failures.push_back(path.filename().string() + ":" +
                                       std::to_string(issue.line) + ": " +
                                       issue.message);
    }

    for (const auto& [key, value] : expected)
        outcome.failures.push_back(key.first + " #" + std::to_string(key.second) +
                                   ": expected sentence never appeared: " + value);
    return outcome;
}

}  // namespace gold
