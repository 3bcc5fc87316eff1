#include "frosim/pipeline.hpp"

#include <algorithm>
#include <atomic>
#include <condition_variable>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <utility>
#include <vector>

#include "frosim/extractor.hpp"
#include "frosim/markers.hpp"
#include "frosim/records.hpp"
#include "frosim/report.hpp"
#include "frosim/resegment.hpp"
#include "frosim/semantics.hpp"
#include "frosim/vertical_reader.hpp"

namespace fs = std::filesystem;

namespace frosim {

namespace {

struct DocResult {
    std::size_t sentences = 0;
    std::size_t matches = 0;
    std::size_t candidates = 0;
    std::size_t malformed = 0;
    bool ok = false;
    std::string error;  // set when !ok
};

void report_issues(const fs::path& path, const std::vector<ParseIssue>& issues,
                   std::ostream& err, std::mutex& err_mutex) {
    if (issues.empty()) {
        return;
    }
    std::lock_guard lock(err_mutex);
    for (const auto& issue : issues) {
        err << path.filename().string() << ":" << issue.line << ": "
            << (issue.severity == ParseIssue::Severity::Error ? "error" : "warning")
            << ": " << issue.message << "\n";
    }
}

// Same as process_document but also surfaces parse issues; split so the
// parallel path can buffer output without holding the error mutex.
DocResult process_and_report(const fs::path& path, const ExtractOptions& options,
                             const std::vector<MarkerDef>& defs,
                             const std::function<void(std::string&&)>& emit,
                             std::ostream& err, std::mutex& err_mutex) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        DocResult result;
        result.error = "cannot open " + path.string();
        return result;
    }
    DocumentMeta defaults;
    defaults.doc_id = path.stem().string();
    defaults.language = options.language;

    DocumentReader reader(in, defaults);
    Resegmenter resegmenter;
    DocResult result;
    result.ok = true;

    auto handle = [&](Sentence&& sentence) {
        ++result.sentences;
        const auto matches = match_markers(sentence, defs);
        result.matches += matches.size();
        auto candidates = extract_candidates(sentence, matches, options.diagnostics);
        result.candidates += candidates.size();
        for (const auto& candidate : candidates) {
            emit(to_json_line(make_record(candidate, sentence)) + "\n");
        }
    };

    Sentence sentence;
    while (reader.next(sentence)) {
        if (auto done = resegmenter.push(std::move(sentence))) {
            handle(std::move(*done));
        }
        sentence = Sentence{};
    }
    if (auto done = resegmenter.finish()) {
        handle(std::move(*done));
    }
    for (const auto& issue : reader.issues()) {
        if (issue.severity == ParseIssue::Severity::Error) {
            ++result.malformed;
        }
    }
    report_issues(path, reader.issues(), err, err_mutex);
    return result;
}

std::vector<fs::path> collect_inputs(const std::string& dir, std::string& error) {
    std::vector<fs::path> files;
    std::error_code ec;
    if (!fs::is_directory(dir, ec)) {
        error = "input is not a directory: " + dir;
        return files;
    }
    for (const auto& entry : fs::directory_iterator(dir, ec)) {
        if (entry.is_regular_file()) {
            files.push_back(entry.path());
        }
    }
    if (ec) {
        error = "cannot read directory " + dir + ": " + ec.message();
        files.clear();
        return files;
    }
    std::sort(files.begin(), files.end());
    return files;
}

void accumulate(ExtractSummary& summary, const DocResult& result) {
    ++summary.documents;
    if (!result.ok) {
        ++summary.failed_documents;
        return;
    }
    summary.sentences += result.sentences;
    summary.matches += result.matches;
    summary.candidates += result.candidates;
    summary.malformed_lines += result.malformed;
}

// Parallel path: workers pull document indices from a shared counter, buffer
// their output, and hand it to the writer in input order. The admission
// window (write_next .. write_next + window) bounds memory and cannot
// deadlock: the in-order document is always inside the window.
void run_parallel(const std::vector<fs::path>& files, const ExtractOptions& options,
                  const std::vector<MarkerDef>& defs, std::ofstream& sink,
                  std::ostream& err, ExtractSummary& summary) {
    const std::size_t window = std::max<std::size_t>(options.workers * 4, 8);
    std::atomic<std::size_t> next_doc{0};
    std::mutex mutex;
    std::mutex err_mutex;
    std::condition_variable space_cv;
    std::condition_variable ready_cv;
    std::map<std::size_t, std::pair<std::string, DocResult>> done;
    std::size_t write_next = 0;

    auto worker = [&] {
        for (;;) {
            const std::size_t index = next_doc.fetch_add(1);
            if (index >= files.size()) {
                return;
            }
            {
                std::unique_lock lock(mutex);
                space_cv.wait(lock, [&] { return index < write_next + window; });
            }
            std::string buffer;
            DocResult result =
                process_and_report(files[index], options, defs,
                                   [&buffer](std::string&& line) { buffer += line; },
                                   err, err_mutex);
            {
                std::lock_guard lock(mutex);
                done.emplace(index, std::make_pair(std::move(buffer), std::move(result)));
            }
            ready_cv.notify_all();
        }
    };

    std::vector<std::thread> threads;
    const unsigned count = std::max(1u, options.workers);
    threads.reserve(count);
    for (unsigned i = 0; i < count; ++i) {
        threads.emplace_back(worker);
    }

    while (write_next < files.size()) {
        std::pair<std::string, DocResult> item;
        {
            std::unique_lock lock(mutex);
            ready_cv.wait(lock, [&] { return done.count(write_next) != 0; });
            item = std::move(done.at(write_next));
            done.erase(write_next);
            ++write_next;
        }
        space_cv.notify_all();
        sink << item.first;
        const DocResult& result = item.second;
        if (!result.ok) {
            std::lock_guard lock(err_mutex);
            err << result.error << "\n";
        }
        accumulate(summary, result);
    }
    for (auto& thread : threads) {
        thread.join();
    }
}

}  // namespace

int cmd_extract(const ExtractOptions& options, std::ostream& out, std::ostream& err,
                ExtractSummary* summary_out) {
    std::vector<MarkerDef> defs;
    if (options.markers_path) {
        try {
            defs = load_marker_file(*options.markers_path);
        } catch (const std::exception& ex) {
            err << ex.what() << "\n";
            return kExitUsage;
        }
    } else {
        defs = builtin_markers(options.language);
    }

    std::string dir_error;
    const auto files = collect_inputs(options.input_dir, dir_error);
    if (!dir_error.empty()) {
        err << dir_error << "\n";
        return kExitUsage;
    }
    if (files.empty()) {
        err << "no input documents in " << options.input_dir << "\n";
        return kExitUsage;
    }

    std::ofstream sink(options.out_path, std::ios::binary);
    if (!sink) {
        err << "cannot write " << options.out_path << "\n";
        return kExitUsage;
    }

    ExtractSummary summary;
    if (options.workers <= 1) {
        std::mutex err_mutex;
        for (const auto& file : files) {
            DocResult result = process_and_report(
                file, options, defs,
                [&sink](std::string&& line) { sink << line; }, err, err_mutex);
            if (!result.ok) {
                err << result.error << "\n";
            }
            accumulate(summary, result);
        }
    } else {
        run_parallel(files, options, defs, sink, err, summary);
    }
    sink.flush();
    if (!sink) {
        err << "write failed: " << options.out_path << "\n";
        return kExitFatalData;
    }

    out << "documents " << summary.documents
        << "  failed " << summary.failed_documents
        << "  sentences " << summary.sentences
        << "  marker-matches " << summary.matches
        << "  candidates " << summary.candidates
        << "  malformed-lines " << summary.malformed_lines << "\n";
    if (summary_out) {
        *summary_out = summary;
    }
    return summary.failed_documents == summary.documents ? kExitAllFailed : kExitOk;
}

namespace {

// Normalizes a contiguous slice of candidate lines into a local aggregator.
// Throws std::runtime_error tagged with the absolute line number.
void reduce_slice(const std::vector<std::string>& lines, std::size_t begin,
                  std::size_t end, std::size_t first_line_no, Language language,
                  const SemanticLexicon& lexicon, StatsAggregator& local,
                  std::size_t& skipped) {
    for (std::size_t i = begin; i < end; ++i) {
        CandidateRecord record;
        try {
            record = record_from_json(lines[i]);
        } catch (const std::exception& ex) {
            throw std::runtime_error("line " + std::to_string(first_line_no + i) +
                                     ": " + ex.what());
        }
        if (record.language != language) {
            ++skipped;
            continue;
        }
        for (auto& occurrence : normalize(record, lexicon)) {
            local.add(occurrence);
        }
    }
}

}  // namespace

int cmd_detect(const DetectOptions& options, std::ostream& out, std::ostream& err) {
    SemanticLexicon lexicon;
    try {
        if (options.language == Language::EN) {
            if (options.wordnet_index.empty() || options.wordnet_data.empty()) {
                err << "EN detection needs --wordnet-index and --wordnet-data\n";
                return kExitUsage;
            }
            lexicon = SemanticLexicon::load_en(options.wordnet_index,
                                               options.wordnet_data);
        } else {
            if (options.fr_lexicon.empty()) {
                err << "FR detection needs --fr-lexicon\n";
                return kExitUsage;
            }
            lexicon = SemanticLexicon::load_fr(options.fr_lexicon);
        }
    } catch (const std::exception& ex) {
        err << ex.what() << "\n";
        return kExitFatalData;
    }

    ReferenceList reference;
    if (options.reference_path) {
        try {
            reference = ReferenceList::load(*options.reference_path);
        } catch (const std::exception& ex) {
            err << ex.what() << "\n";
            return kExitFatalData;
        }
    }

    std::ifstream in(options.candidates_path, std::ios::binary);
    if (!in) {
        err << "cannot open " << options.candidates_path << "\n";
        return kExitUsage;
    }

    StatsAggregator aggregator{options.config.max_examples};
    std::size_t skipped_language = 0;
    std::size_t line_no = 0;
    const unsigned workers = std::max(1u, options.workers);

    try {
        if (workers == 1) {
            std::string line;
            while (std::getline(in, line)) {
                ++line_no;
                if (!line.empty() && line.back() == '\r') {
                    line.pop_back();
                }
                if (line.empty()) {
                    continue;
                }
                CandidateRecord record;
                try {
                    record = record_from_json(line);
                } catch (const std::exception& ex) {
                    throw std::runtime_error("line " + std::to_string(line_no) + ": " +
                                             ex.what());
                }
                if (record.language != options.language) {
                    ++skipped_language;
                    continue;
                }
                for (auto& occurrence : normalize(record, lexicon)) {
                    aggregator.add(occurrence);
                }
            }
        } else {
            // Batched fan-out: read a block of lines, split it across worker
            // threads into private aggregators, then merge. Keeps memory
            // proportional to the batch, not the file.
            const std::size_t batch_size = static_cast<std::size_t>(workers) * 4096;
            std::vector<std::string> batch;
            batch.reserve(batch_size);
            auto flush_batch = [&](std::size_t first_line_no) {
                if (batch.empty()) {
                    return;
                }
                std::vector<StatsAggregator> locals(
                    workers, StatsAggregator{options.config.max_examples});
                std::vector<std::size_t> local_skips(workers, 0);
                std::vector<std::thread> threads;
                std::exception_ptr failure;
                std::mutex failure_mutex;
                const std::size_t per = (batch.size() + workers - 1) / workers;
                for (unsigned w = 0; w < workers; ++w) {
                    const std::size_t begin = std::min(batch.size(), per * w);
                    const std::size_t end = std::min(batch.size(), begin + per);
                    if (begin >= end) {
                        break;
                    }
                    threads.emplace_back([&, w, begin, end] {
                        try {
                            reduce_slice(batch, begin, end, first_line_no,
                                         options.language, lexicon, locals[w],
                                         local_skips[w]);
                        } catch (...) {
                            std::lock_guard lock(failure_mutex);
                            if (!failure) {
                                failure = std::current_exception();
                            }
                        }
                    });
                }
                for (auto& thread : threads) {
                    thread.join();
                }
                if (failure) {
                    std::rethrow_exception(failure);
                }
                for (unsigned w = 0; w < workers; ++w) {
                    aggregator.merge(locals[w]);
                    skipped_language += local_skips[w];
                }
                batch.clear();
            };

            std::size_t batch_start = 1;
            std::string line;
            while (std::getline(in, line)) {
                ++line_no;
                if (!line.empty() && line.back() == '\r') {
                    line.pop_back();
                }
                if (line.empty()) {
                    continue;
                }
                if (batch.empty()) {
                    batch_start = line_no;
                }
                batch.push_back(std::move(line));
                if (batch.size() >= batch_size) {
                    flush_batch(batch_start);
                }
            }
            flush_batch(batch_start);
        }
    } catch (const std::exception& ex) {
        err << options.candidates_path << ": " << ex.what() << "\n";
        return kExitFatalData;
    }

    const auto frozen = detect(aggregator.stats(), reference, options.config);

    std::ofstream sink(options.out_path, std::ios::binary);
    if (!sink) {
        err << "cannot write " << options.out_path << "\n";
        return kExitUsage;
    }
    for (const auto& item : frozen) {
        sink << frozen_to_json_line(item) << "\n";
    }
    sink.flush();
    if (!sink) {
        err << "write failed: " << options.out_path << "\n";
        return kExitFatalData;
    }

    out << "couples " << aggregator.stats().size() << "  frozen " << frozen.size();
    if (skipped_language > 0) {
        out << "  skipped-other-language " << skipped_language;
    }
    out << "\n";
    return kExitOk;
}

int cmd_report(const ReportOptions& options, std::ostream& out, std::ostream& err) {
    std::ifstream in(options.frozen_path, std::ios::binary);
    if (!in) {
        err << "cannot open " << options.frozen_path << "\n";
        return kExitUsage;
    }
    std::vector<FrozenSimile> frozen;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty()) {
            continue;
        }
        try {
            frozen.push_back(frozen_from_json(line));
        } catch (const std::exception& ex) {
            err << options.frozen_path << ": line " << line_no << ": " << ex.what()
                << "\n";
            return kExitFatalData;
        }
    }

    const auto rows = report_rows(frozen, options.top_n);
    out << render_plain(rows);
    if (options.csv_path) {
        std::ofstream csv(*options.csv_path, std::ios::binary);
        if (!csv) {
            err << "cannot write " << *options.csv_path << "\n";
            return kExitUsage;
        }
        csv << render_csv(rows);
        csv.flush();
        if (!csv) {
            err << "write failed: " << *options.csv_path << "\n";
            return kExitFatalData;
        }
    }
    return kExitOk;
}

}  // namespace frosim
