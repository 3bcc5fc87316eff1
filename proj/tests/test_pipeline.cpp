#include <fcntl.h>
#include <sys/resource.h>
#include <unistd.h>

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "frosim/pipeline.hpp"
#include "frosim/records.hpp"
#include "frosim/report.hpp"
#include "test_support.hpp"

using namespace frosim;

namespace {

std::string simile_sentence() {
    return ts::vertical_from_dsl("[NC Her|PP$ face|NN] [VC was|VBD|be] as|RB "
                                 "pale|JJ as|IN [NC death|NN]") +
           ".\tSENT\t.\n";
}

// Vertical document with one "pale as death" sentence.
std::string simile_doc(const std::string& author) {
    return "#author=" + author + "\n" + simile_sentence();
}

std::string plain_doc() {
    return ts::vertical_from_dsl("[NC The|DT sun|NN] [VC rose|VVD|rise]") +
           ".\tSENT\t.\n";
}

int run_extract(const ExtractOptions& options, std::string* out_text = nullptr,
                std::string* err_text = nullptr,
                ExtractSummary* summary = nullptr) {
    std::ostringstream out, err;
    int rc = cmd_extract(options, out, err, summary);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return rc;
}

std::vector<std::string> lines_of(const std::string& text) {
    std::vector<std::string> lines;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) lines.push_back(line);
    return lines;
}

std::string candidate_line(const std::string& doc, const std::string& author,
                           std::size_t index, const std::string& ground,
                           const std::string& vehicle, const std::string& tenor,
                           Language lang = Language::EN) {
    CandidateRecord r;
    r.doc_id = doc;
    r.author_id = author;
    r.sentence_index = index;
    r.language = lang;
    r.marker_id = lang == Language::EN ? "en.as_as" : "fr.comme";
    r.marker_spans = {{2, 2}};
    r.vehicle = RecordConstituent{5, vehicle, std::nullopt};
    r.grounds = {{3, ground, RecordTenor{1, tenor, TenorRole::SUBJECT_NOUN}}};
    r.text = ground + " " + vehicle;
    return to_json_line(r) + "\n";
}

DetectOptions en_detect(const std::filesystem::path& candidates,
                        const std::filesystem::path& out) {
    DetectOptions options;
    options.language = Language::EN;
    options.candidates_path = candidates.string();
    options.out_path = out.string();
    options.wordnet_index = (ts::fixture_dir() / "wordnet" / "index.noun").string();
    options.wordnet_data = (ts::fixture_dir() / "wordnet" / "data.noun").string();
    return options;
}

}  // namespace

TEST_CASE("extract walks a corpus directory and writes one record per line") {
    ts::TempDir dir;
    std::filesystem::create_directory(dir.path / "corpus");
    ts::write_file(dir.path / "corpus" / "doc1.vrt", simile_doc("alice"));
    ts::write_file(dir.path / "corpus" / "doc2.vrt", plain_doc());

    ExtractOptions options;
    options.input_dir = (dir.path / "corpus").string();
    options.out_path = (dir.path / "candidates.jsonl").string();

    std::string out, err;
    ExtractSummary summary;
    CHECK(run_extract(options, &out, &err, &summary) == kExitOk);
    CHECK(err.empty());
    CHECK(out ==
          "documents 2  failed 0  sentences 2  marker-matches 1  candidates 1"
          "  malformed-lines 0\n");
    CHECK(summary.documents == 2);
    CHECK(summary.candidates == 1);

    auto lines = lines_of(ts::read_file(dir.path / "candidates.jsonl"));
    REQUIRE(lines.size() == 1);
    auto record = record_from_json(lines[0]);
    CHECK(record.doc_id == "doc1");  // from the filename stem
    CHECK(record.author_id == "alice");
    CHECK(record.marker_id == "en.as_as");
    REQUIRE(record.vehicle.has_value());
    CHECK(record.vehicle->lemma == "death");
    REQUIRE(record.grounds.size() == 1);
    CHECK(record.grounds[0].lemma == "pale");
    REQUIRE(record.grounds[0].tenor.has_value());
    CHECK(record.grounds[0].tenor->lemma == "face");
    CHECK(record.text == "Her face was as pale as death .");
}

TEST_CASE("extract reports malformed lines without failing the document") {
    ts::TempDir dir;
    std::filesystem::create_directory(dir.path / "corpus");
    ts::write_file(dir.path / "corpus" / "doc1.vrt",
                   "this line has no tabs\n" + simile_doc("alice"));

    ExtractOptions options;
    options.input_dir = (dir.path / "corpus").string();
    options.out_path = (dir.path / "candidates.jsonl").string();

    std::string out, err;
    CHECK(run_extract(options, &out, &err) == kExitOk);
    CHECK(err.find("doc1.vrt:1") != std::string::npos);
    CHECK(out.find("malformed-lines 1") != std::string::npos);
    CHECK(out.find("candidates 1") != std::string::npos);
}

TEST_CASE("extract surfaces diagnostics only when asked") {
    ts::TempDir dir;
    std::filesystem::create_directory(dir.path / "corpus");
    ts::write_file(dir.path / "corpus" / "doc1.vrt",
                   ts::vertical_from_dsl("like|IN [NC a|DT dream|NN]") +
                       ".\tSENT\t.\n");

    ExtractOptions options;
    options.input_dir = (dir.path / "corpus").string();
    options.out_path = (dir.path / "candidates.jsonl").string();
    CHECK(run_extract(options) == kExitOk);
    CHECK(ts::read_file(dir.path / "candidates.jsonl").empty());

    options.diagnostics = true;
    CHECK(run_extract(options) == kExitOk);
    auto lines = lines_of(ts::read_file(dir.path / "candidates.jsonl"));
    REQUIRE(lines.size() == 1);
    CHECK(record_from_json(lines[0]).vehicle->lemma == "dream");
}

TEST_CASE("extract output does not depend on the worker count") {
    ts::TempDir dir;
    std::filesystem::create_directory(dir.path / "corpus");
    for (int i = 0; i < 9; ++i) {
        std::string body = "#author=a" + std::to_string(i) + "\n";
        for (int s = 0; s <= i % 3; ++s) body += simile_sentence();
        body += plain_doc();
        char name[16];
        std::snprintf(name, sizeof name, "doc%02d.vrt", i);
        ts::write_file(dir.path / "corpus" / name, body);
    }

    ExtractOptions options;
    options.input_dir = (dir.path / "corpus").string();
    options.out_path = (dir.path / "serial.jsonl").string();
    options.workers = 1;
    std::string out_serial, err_serial;
    ExtractSummary serial;
    REQUIRE(run_extract(options, &out_serial, &err_serial, &serial) == kExitOk);

    options.out_path = (dir.path / "parallel.jsonl").string();
    options.workers = 4;
    std::string out_parallel, err_parallel;
    ExtractSummary parallel;
    REQUIRE(run_extract(options, &out_parallel, &err_parallel, &parallel) ==
            kExitOk);

    CHECK(ts::read_file(dir.path / "serial.jsonl") ==
          ts::read_file(dir.path / "parallel.jsonl"));
    CHECK(out_serial == out_parallel);
    CHECK(err_serial.empty());
    CHECK(err_parallel.empty());
    CHECK(serial.sentences == parallel.sentences);
    CHECK(serial.candidates == parallel.candidates);
}

TEST_CASE("extract rejects unusable inputs with the usage exit code") {
    ts::TempDir dir;
    ExtractOptions options;
    options.out_path = (dir.path / "out.jsonl").string();

    SUBCASE("missing directory") {
        options.input_dir = (dir.path / "nope").string();
        std::string err;
        CHECK(run_extract(options, nullptr, &err) == kExitUsage);
        CHECK(err.find("not a directory") != std::string::npos);
    }
    SUBCASE("empty directory") {
        std::filesystem::create_directory(dir.path / "empty");
        options.input_dir = (dir.path / "empty").string();
        std::string err;
        CHECK(run_extract(options, nullptr, &err) == kExitUsage);
        CHECK(err.find("no input documents") != std::string::npos);
    }
    SUBCASE("unwritable output") {
        std::filesystem::create_directory(dir.path / "corpus");
        ts::write_file(dir.path / "corpus" / "d.vrt", plain_doc());
        options.input_dir = (dir.path / "corpus").string();
        options.out_path = (dir.path / "no" / "such" / "dir.jsonl").string();
        std::string err;
        CHECK(run_extract(options, nullptr, &err) == kExitUsage);
        CHECK(err.find("cannot write") != std::string::npos);
    }
    SUBCASE("bad marker override file") {
        std::filesystem::create_directory(dir.path / "corpus");
        ts::write_file(dir.path / "corpus" / "d.vrt", plain_doc());
        ts::write_file(dir.path / "markers.tsv", "broken\n");
        options.input_dir = (dir.path / "corpus").string();
        options.markers_path = (dir.path / "markers.tsv").string();
        std::string err;
        CHECK(run_extract(options, nullptr, &err) == kExitUsage);
        CHECK(err.find("line 1") != std::string::npos);
    }
}

TEST_CASE("extract reports total failure when no document can be opened") {
    ts::TempDir dir;
    std::filesystem::create_directory(dir.path / "corpus");
    ts::write_file(dir.path / "corpus" / "doc1.vrt", simile_doc("alice"));

    ExtractOptions options;
    options.input_dir = (dir.path / "corpus").string();
    options.out_path = (dir.path / "out.jsonl").string();

    // Starve the fd table down to one spare descriptor: directory listing and
    // the output sink still work, but every per-document open fails.
    rlimit saved{};
    REQUIRE(getrlimit(RLIMIT_NOFILE, &saved) == 0);
    rlimit tight{32, saved.rlim_max};
    REQUIRE(setrlimit(RLIMIT_NOFILE, &tight) == 0);
    std::vector<int> hogs;
    for (int fd; (fd = ::open("/dev/null", O_RDONLY)) >= 0;) hogs.push_back(fd);
    REQUIRE_FALSE(hogs.empty());
    ::close(hogs.back());
    hogs.pop_back();

    std::string out, err;
    int rc = run_extract(options, &out, &err);

    for (int fd : hogs) ::close(fd);
    setrlimit(RLIMIT_NOFILE, &saved);

    CHECK(rc == kExitAllFailed);
    CHECK(err.find("cannot open") != std::string::npos);
    CHECK(out.find("documents 1  failed 1") != std::string::npos);
}

TEST_CASE("detect aggregates candidates and writes frozen couples") {
    ts::TempDir dir;
    std::string body;
    for (int i = 0; i < 6; ++i)
        body += candidate_line("d" + std::to_string(i), "a" + std::to_string(i % 3),
                               i, "pale", "death", "face");
    // Below both thresholds: never frozen without a reference list.
    body += candidate_line("d9", "a0", 0, "cold", "stone", "child");
    ts::write_file(dir.path / "candidates.jsonl", body);

    auto options = en_detect(dir.path / "candidates.jsonl", dir.path / "frozen.jsonl");

    SUBCASE("frequency evidence") {
        std::ostringstream out, err;
        REQUIRE(cmd_detect(options, out, err) == kExitOk);
        CHECK(out.str() == "couples 2  frozen 1\n");
        auto lines = lines_of(ts::read_file(dir.path / "frozen.jsonl"));
        REQUIRE(lines.size() == 1);
        auto frozen = frozen_from_json(lines[0]);
        CHECK(frozen.stats.couple.left_lemma == "pale");
        CHECK(frozen.stats.couple.vehicle_lemma == "death");
        CHECK(frozen.stats.count == 6);
        CHECK(frozen.stats.authors.size() == 3);
        CHECK(frozen.evidence == FrozenEvidence::FREQUENCY);
        CHECK(frozen.tier == Tier::RARE);
        // face vs death resolves in the lexicon: no review needed.
        CHECK(frozen.review_fraction == doctest::Approx(0.0));
    }
    SUBCASE("the bundled reference list upgrades the evidence") {
        options.reference_path =
            (ts::data_dir() / "reference" / "frozen_similes.tsv").string();
        std::ostringstream out, err;
        REQUIRE(cmd_detect(options, out, err) == kExitOk);
        auto lines = lines_of(ts::read_file(dir.path / "frozen.jsonl"));
        REQUIRE(lines.size() == 1);
        CHECK(frozen_from_json(lines[0]).evidence == FrozenEvidence::BOTH);
    }
    SUBCASE("records in another language are skipped and counted") {
        std::ofstream append(dir.path / "candidates.jsonl", std::ios::app);
        append << candidate_line("fr1", "a0", 0, "pâle", "mort", "enfant",
                                 Language::FR);
        append.close();
        std::ostringstream out, err;
        REQUIRE(cmd_detect(options, out, err) == kExitOk);
        CHECK(out.str() == "couples 2  frozen 1  skipped-other-language 1\n");
    }
}

TEST_CASE("detect works against the French category table") {
    ts::TempDir dir;
    ts::write_file(dir.path / "candidates.jsonl",
                   candidate_line("f1", "a0", 3, "pâle", "mort", "enfant",
                                  Language::FR));
    DetectOptions options;
    options.language = Language::FR;
    options.candidates_path = (dir.path / "candidates.jsonl").string();
    options.out_path = (dir.path / "frozen.jsonl").string();
    options.fr_lexicon =
        (ts::data_dir() / "lexicons" / "fr_semantic_categories.tsv").string();
    options.reference_path =
        (ts::data_dir() / "reference" / "frozen_similes.tsv").string();

    std::ostringstream out, err;
    REQUIRE(cmd_detect(options, out, err) == kExitOk);
    auto lines = lines_of(ts::read_file(dir.path / "frozen.jsonl"));
    REQUIRE(lines.size() == 1);
    auto frozen = frozen_from_json(lines[0]);
    CHECK(frozen.stats.couple.language == Language::FR);
    CHECK(frozen.stats.couple.left_lemma == "pâle");
    CHECK(frozen.stats.count == 1);
    CHECK(frozen.evidence == FrozenEvidence::REFERENCE_LIST);
}

TEST_CASE("detect output does not depend on the worker count") {
    ts::TempDir dir;
    const std::vector<std::string> vehicles = {"death", "dog", "snow", "child",
                                              "bank"};
    const std::vector<std::string> grounds = {"pale", "cold"};
    std::string body;
    for (int i = 0; i < 200; ++i)
        body += candidate_line("d" + std::to_string(i % 17),
                               "a" + std::to_string(i % 4), i % 23,
                               grounds[i % grounds.size()],
                               vehicles[i % vehicles.size()],
                               i % 2 ? "face" : "cousin");
    ts::write_file(dir.path / "candidates.jsonl", body);

    auto options = en_detect(dir.path / "candidates.jsonl", dir.path / "serial.jsonl");
    options.workers = 1;
    std::ostringstream out1, err1;
    REQUIRE(cmd_detect(options, out1, err1) == kExitOk);

    options.out_path = (dir.path / "parallel.jsonl").string();
    options.workers = 3;
    std::ostringstream out3, err3;
    REQUIRE(cmd_detect(options, out3, err3) == kExitOk);

    CHECK(ts::read_file(dir.path / "serial.jsonl") ==
          ts::read_file(dir.path / "parallel.jsonl"));
    CHECK(out1.str() == out3.str());
}

TEST_CASE("detect distinguishes usage from data failures") {
    ts::TempDir dir;
    ts::write_file(dir.path / "candidates.jsonl",
                   candidate_line("d", "a", 0, "pale", "death", "face"));

    SUBCASE("EN without a lexicon is a usage error") {
        DetectOptions options;
        options.candidates_path = (dir.path / "candidates.jsonl").string();
        options.out_path = (dir.path / "frozen.jsonl").string();
        std::ostringstream out, err;
        CHECK(cmd_detect(options, out, err) == kExitUsage);
        CHECK(err.str().find("--wordnet-index") != std::string::npos);
    }
    SUBCASE("FR without a lexicon is a usage error") {
        DetectOptions options;
        options.language = Language::FR;
        options.candidates_path = (dir.path / "candidates.jsonl").string();
        options.out_path = (dir.path / "frozen.jsonl").string();
        std::ostringstream out, err;
        CHECK(cmd_detect(options, out, err) == kExitUsage);
        CHECK(err.str().find("--fr-lexicon") != std::string::npos);
    }
    SUBCASE("an unloadable lexicon is fatal data") {
        auto options = en_detect(dir.path / "candidates.jsonl", dir.path / "f.jsonl");
        options.wordnet_data = (dir.path / "missing.noun").string();
        std::ostringstream out, err;
        CHECK(cmd_detect(options, out, err) == kExitFatalData);
    }
    SUBCASE("a missing candidate file is a usage error") {
        auto options = en_detect(dir.path / "nope.jsonl", dir.path / "f.jsonl");
        std::ostringstream out, err;
        CHECK(cmd_detect(options, out, err) == kExitUsage);
        CHECK(err.str().find("cannot open") != std::string::npos);
    }
    SUBCASE("a malformed candidate line is fatal data, with its line number") {
        ts::write_file(dir.path / "candidates.jsonl",
                       candidate_line("d", "a", 0, "pale", "death", "face") +
                           "not json\n");
        for (unsigned workers : {1u, 3u}) {
            CAPTURE(workers);
            auto options =
                en_detect(dir.path / "candidates.jsonl", dir.path / "f.jsonl");
            options.workers = workers;
            std::ostringstream out, err;
            CHECK(cmd_detect(options, out, err) == kExitFatalData);
            CHECK(err.str().find("line 2") != std::string::npos);
            CHECK(err.str().find("bad candidate record") != std::string::npos);
        }
    }
}

TEST_CASE("report renders a frozen file as a ranked table") {
    ts::TempDir dir;
    FrozenSimile pale;
    pale.stats.couple = {Language::EN, CoupleRole::ADJ, "pale", "death"};
    pale.stats.count = 152;
    pale.stats.authors = {"a", "b", "c"};
    pale.tier = Tier::PROMINENT;
    pale.evidence = FrozenEvidence::BOTH;
    FrozenSimile cold = pale;
    cold.stats.couple.left_lemma = "cold";
    cold.stats.couple.vehicle_lemma = "ice";
    cold.stats.count = 42;
    cold.tier = Tier::MEDIUM;
    ts::write_file(dir.path / "frozen.jsonl", frozen_to_json_line(cold) + "\n" +
                                                  frozen_to_json_line(pale) + "\n");

    ReportOptions options;
    options.frozen_path = (dir.path / "frozen.jsonl").string();

    SUBCASE("plain table on stdout") {
        std::ostringstream out, err;
        REQUIRE(cmd_report(options, out, err) == kExitOk);
        auto lines = lines_of(out.str());
        REQUIRE(lines.size() == 3);
        CHECK(lines[0].find("rank") == 0);
        CHECK(lines[1].find("1     pale + marker + death (152)") == 0);
        CHECK(lines[2].find("2     cold + marker + ice (42)") == 0);
    }
    SUBCASE("top-n truncates") {
        options.top_n = 1;
        std::ostringstream out, err;
        REQUIRE(cmd_report(options, out, err) == kExitOk);
        CHECK(lines_of(out.str()).size() == 2);
    }
    SUBCASE("csv goes to a side file") {
        options.csv_path = (dir.path / "table.csv").string();
        std::ostringstream out, err;
        REQUIRE(cmd_report(options, out, err) == kExitOk);
        auto csv = ts::read_file(dir.path / "table.csv");
        CHECK(csv.find("rank,couple,count,authors,tier,evidence,review_fraction\n") == 0);
        CHECK(csv.find("1,pale + marker + death,152,3,PROMINENT,BOTH,0.00\n") !=
              std::string::npos);
    }
    SUBCASE("missing input is a usage error") {
        options.frozen_path = (dir.path / "nope.jsonl").string();
        std::ostringstream out, err;
        CHECK(cmd_report(options, out, err) == kExitUsage);
    }
    SUBCASE("a malformed line is fatal data, with its line number") {
        ts::write_file(dir.path / "frozen.jsonl", "junk\n");
        std::ostringstream out, err;
        CHECK(cmd_report(options, out, err) == kExitFatalData);
        CHECK(err.str().find("line 1") != std::string::npos);
    }
}
