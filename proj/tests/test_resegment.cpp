#include "doctest.h"
#include "frosim/resegment.hpp"
#include "test_support.hpp"

using namespace frosim;

namespace {

// Runs the whole document through one resegmenter.
std::vector<Sentence> resegment(const std::string& vertical) {
    auto in = ts::sentences_from_vertical(vertical);
    Resegmenter r;
    std::vector<Sentence> out;
    for (auto& s : in) {
        if (auto done = r.push(std::move(s))) out.push_back(std::move(*done));
    }
    if (auto done = r.finish()) out.push_back(std::move(*done));
    return out;
}

}  // namespace

TEST_CASE("ellipsis before a lowercase continuation merges the sentences") {
    auto out = resegment(
        "He\tPP\the\npaused\tVVD\tpause\n...\tSENT\t...\n"
        "and\tCC\tand\nwent\tVVD\tgo\non\tRP\ton\n.\tSENT\t.\n");
    REQUIRE(out.size() == 1);
    REQUIRE(out[0].tokens.size() == 7);
    CHECK(out[0].tokens[3].surface == "and");
    CHECK(out[0].tokens[3].index == 3);  // reindexed after the join
    CHECK(out[0].tokens.back().surface == ".");
}

TEST_CASE("capitalized continuation stays a separate sentence") {
    auto out = resegment(
        "He\tPP\the\npaused\tVVD\tpause\n...\tSENT\t...\n"
        "Then\tRB\tthen\nsilence\tNN\tsilence\n.\tSENT\t.\n");
    REQUIRE(out.size() == 2);
    CHECK(out[0].sentence_index == 0);
    CHECK(out[1].sentence_index == 1);
}

TEST_CASE("question and exclamation marks are soft ends too") {
    auto out = resegment(
        "why\tWRB\twhy\n?\tSENT\t?\n"
        "he\tPP\the\nasked\tVVD\task\n!\tSENT\t!\n"
        "softly\tRB\tsoftly\n.\tSENT\t.\n");
    REQUIRE(out.size() == 1);
    CHECK(out[0].tokens.size() == 7);
}

TEST_CASE("a full stop is a hard end even before lowercase text") {
    auto out = resegment(
        "end\tNN\tend\n.\tSENT\t.\n"
        "lowercase\tJJ\tlowercase\nstart\tNN\tstart\n.\tSENT\t.\n");
    REQUIRE(out.size() == 2);
}

TEST_CASE("follower with no letters merges regardless") {
    auto out = resegment(
        "wait\tVV\twait\n...\tSENT\t...\n"
        "--\t:\t--\n42\tCD\t42\n.\tSENT\t.\n");
    REQUIRE(out.size() == 1);
    CHECK(out[0].tokens.size() == 5);
}

TEST_CASE("chunk spans shift with the join") {
    auto out = resegment(
        "Look\tVV\tlook\n...\tSENT\t...\n"
        "<NC>\nthe\tDT\tthe\nsea\tNN\tsea\n</NC>\n.\tSENT\t.\n");
    REQUIRE(out.size() == 1);
    REQUIRE(out[0].chunks.size() == 1);
    CHECK(out[0].chunks[0].begin == 2);
    CHECK(out[0].chunks[0].end == 3);
    CHECK(out[0].tokens[2].surface == "the");
}

TEST_CASE("merging chains across several soft ends") {
    auto out = resegment(
        "one\tCD\tone\n!\tSENT\t!\n"
        "two\tCD\ttwo\n!\tSENT\t!\n"
        "three\tCD\tthree\n.\tSENT\t.\n");
    REQUIRE(out.size() == 1);
    CHECK(out[0].tokens.size() == 6);
}

TEST_CASE("trailing soft-ended sentence is flushed by finish") {
    auto out = resegment("gone\tVVN\tgo\n!\tSENT\t!\n");
    REQUIRE(out.size() == 1);
    CHECK(out[0].tokens.size() == 2);
}

TEST_CASE("emitted sentences are renumbered consecutively") {
    auto out = resegment(
        "A\tDT\ta\nword\tNN\tword\n.\tSENT\t.\n"
        "stop\tNN\tstop\n...\tSENT\t...\n"
        "more\tJJR\tmore\n.\tSENT\t.\n"
        "Done\tNN\tdone\n.\tSENT\t.\n");
    REQUIRE(out.size() == 3);
    CHECK(out[0].sentence_index == 0);
    CHECK(out[1].sentence_index == 1);  // the merged pair
    CHECK(out[2].sentence_index == 2);
}

TEST_CASE("accented lowercase counts as lowercase") {
    auto out = resegment(
        "attendez\tVER:impe\tattendre\n...\tSENT\t...\n"
        "écoutez\tVER:impe\técouter\n.\tSENT\t.\n");
    REQUIRE(out.size() == 1);

    auto two = resegment(
        "attendez\tVER:impe\tattendre\n...\tSENT\t...\n"
        "Écoutez\tVER:impe\técouter\n.\tSENT\t.\n");
    REQUIRE(two.size() == 2);  // É is uppercase
}
