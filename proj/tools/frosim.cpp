// Command-line front end: extract | detect | report.

#include <charconv>
#include <iostream>
#include <string>

#include "CLI11.hpp"

#include "frosim/lang.hpp"
#include "frosim/pipeline.hpp"

namespace {

// "MED,PROM" with MED < PROM; false on any malformation.
bool parse_tiers(const std::string& text, std::uint64_t& medium,
                 std::uint64_t& prominent) {
    const auto comma = text.find(',');
    if (comma == std::string::npos) {
        return false;
    }
    const std::string left = text.substr(0, comma);
    const std::string right = text.substr(comma + 1);
    auto number = [](const std::string& s, std::uint64_t& value) {
        const char* begin = s.data();
        const char* end = begin + s.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        return ec == std::errc{} && ptr == end && !s.empty();
    };
    if (!number(left, medium) || !number(right, prominent)) {
        return false;
    }
    return medium < prominent;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Simile mining for chunked vertical corpora"};
    app.require_subcommand(1);

    const std::vector<std::string> languages{"en", "fr", "EN", "FR"};

    frosim::ExtractOptions extract_options;
    std::string extract_lang = "en";
    std::string markers_path;
    auto* extract =
        app.add_subcommand("extract", "Mine simile candidates from a corpus directory");
    extract->add_option("--lang", extract_lang, "Corpus language: en or fr")
        ->required()
        ->check(CLI::IsMember(languages));
    extract->add_option("--input", extract_options.input_dir,
                        "Directory of vertical corpus files")
        ->required();
    extract->add_option("--out", extract_options.out_path,
                        "Candidate output file, one JSON object per line")
        ->required();
    extract->add_option("--markers", markers_path, "Marker definition override file");
    extract->add_flag("--diagnostics", extract_options.diagnostics,
                      "Also keep incomplete candidates (no vehicle / no structure)");
    extract->add_option("--workers", extract_options.workers, "Worker threads")
        ->check(CLI::Range(1u, 256u));

    frosim::DetectOptions detect_options;
    std::string detect_lang = "en";
    std::string ref_list;
    std::string tiers;
    std::string policy = "exclude-same";
    auto* detect =
        app.add_subcommand("detect", "Find frozen similes in an extracted candidate file");
    detect->add_option("--lang", detect_lang, "Candidate language: en or fr")
        ->required()
        ->check(CLI::IsMember(languages));
    detect->add_option("--input", detect_options.candidates_path,
                       "Candidate file produced by extract")
        ->required();
    detect->add_option("--out", detect_options.out_path,
                       "Frozen-couple output file, one JSON object per line")
        ->required();
    detect->add_option("--wordnet-index", detect_options.wordnet_index,
                       "WordNet index.noun (English)");
    detect->add_option("--wordnet-data", detect_options.wordnet_data,
                       "WordNet data.noun (English)");
    detect->add_option("--fr-lexicon", detect_options.fr_lexicon,
                       "French semantic category table (French)");
    detect->add_option("--ref-list", ref_list, "Curated frozen-simile list");
    detect->add_option("--min-count", detect_options.config.min_count,
                       "Frequency rule: minimum occurrences");
    detect->add_option("--min-authors", detect_options.config.min_authors,
                       "Frequency rule: minimum distinct authors");
    detect->add_option("--tiers", tiers,
                       "Tier thresholds as MEDIUM,PROMINENT (default 20,80)");
    detect->add_option("--literal-policy", policy,
                       "Literal-comparison handling: exclude-same or keep-all")
        ->check(CLI::IsMember({"exclude-same", "keep-all"}));
    detect->add_option("--workers", detect_options.workers, "Worker threads")
        ->check(CLI::Range(1u, 256u));

    frosim::ReportOptions report_options;
    std::string csv_out;
    auto* report = app.add_subcommand("report", "Render a frozen-couple file as a table");
    report->add_option("--input", report_options.frozen_path,
                       "Frozen-couple file produced by detect")
        ->required();
    report->add_option("--out", csv_out, "Also write the table as CSV to this path");
    report->add_option("--top", report_options.top_n, "Rows to show (default 12)")
        ->check(CLI::Range(std::size_t{1}, std::size_t{1000000}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return frosim::kExitUsage;
    }

    if (extract->parsed()) {
        extract_options.language = *frosim::parse_language(extract_lang);
        if (!markers_path.empty()) {
            extract_options.markers_path = markers_path;
        }
        return frosim::cmd_extract(extract_options, std::cout, std::cerr);
    }
    if (detect->parsed()) {
        detect_options.language = *frosim::parse_language(detect_lang);
        if (!ref_list.empty()) {
            detect_options.reference_path = ref_list;
        }
        detect_options.config.literal_policy = *frosim::parse_literal_policy(policy);
        if (!tiers.empty() &&
            !parse_tiers(tiers, detect_options.config.medium_threshold,
                         detect_options.config.prominent_threshold)) {
            std::cerr << "--tiers expects MEDIUM,PROMINENT with MEDIUM < PROMINENT\n";
            return frosim::kExitUsage;
        }
        return frosim::cmd_detect(detect_options, std::cout, std::cerr);
    }
    report_options.csv_path =
        csv_out.empty() ? std::nullopt : std::optional<std::string>(csv_out);
    return frosim::cmd_report(report_options, std::cout, std::cerr);
}
