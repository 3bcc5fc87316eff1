#pragma once

#include <iosfwd>
#include <optional>
#include <string>

#include "frosim/frozen.hpp"
#include "frosim/lang.hpp"

namespace frosim {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;      // bad flags, config, or missing inputs
inline constexpr int kExitFatalData = 2;  // unloadable lexicon, bad record file
inline constexpr int kExitAllFailed = 3;  // every input document failed

struct ExtractOptions {
    Language language = Language::EN;
    std::string input_dir;
    std::string out_path;
    std::optional<std::string> markers_path;
    bool diagnostics = false;
    unsigned workers = 1;
};

struct ExtractSummary {
    std::size_t documents = 0;
    std::size_t failed_documents = 0;
    std::size_t sentences = 0;
    std::size_t matches = 0;
    std::size_t candidates = 0;
    std::size_t malformed_lines = 0;
};

// Walks every regular file in the input directory (filename order), extracts
// candidates sentence by sentence, and writes one JSON record per line.
// Memory stays bounded by the largest single sentence, not the corpus.
int cmd_extract(const ExtractOptions& options, std::ostream& out,
                std::ostream& err, ExtractSummary* summary = nullptr);

struct DetectOptions {
    Language language = Language::EN;
    std::string candidates_path;
    std::string out_path;
    std::string wordnet_index;  // EN
    std::string wordnet_data;   // EN
    std::string fr_lexicon;     // FR
    std::optional<std::string> reference_path;
    DetectorConfig config;
    unsigned workers = 1;
};

int cmd_detect(const DetectOptions& options, std::ostream& out, std::ostream& err);

struct ReportOptions {
    std::string frozen_path;
    std::size_t top_n = 12;
    std::optional<std::string> csv_path;  // CSV written here when given
};

int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err);

}  // namespace frosim
