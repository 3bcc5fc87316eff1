#pragma once

#include <istream>
#include <memory>
#include <string>
#include <vector>

#include "frosim/text.hpp"

namespace frosim {

// A problem met while reading; Error lines were skipped, Warning lines repaired.
struct ParseIssue {
    enum class Severity { Warning, Error };
    Severity severity;
    std::size_t line;  // 1-based line in the input stream
    std::string message;
};

// Reads one document in vertical (one token per line) format:
//   surface<TAB>pos<TAB>lemma          token line
//   <NC> ... </NC>                     chunk open/close, may nest
//   #key=value                         header line, only before the first token
// Sentences end at a token tagged SENT.  Malformed lines are skipped and
// reported through issues(); the reader never throws on bad content.
class DocumentReader {
public:
    DocumentReader(std::istream& in, DocumentMeta defaults);

    // Fills `out` with the next sentence; false at end of input.
    bool next(Sentence& out);

    const DocumentMeta& meta() const { return *meta_; }
    const std::vector<ParseIssue>& issues() const { return issues_; }

private:
    struct OpenChunk {
        ChunkKind kind;
        std::string label;
        std::size_t begin;
        std::size_t line;
    };

    void handle_header(const std::string& line);
    void handle_chunk_tag(const std::string& label, bool closing);
    bool handle_token(const std::string& line);
    void close_remaining(bool at_sentence_end);
    void finish_sentence();

    std::istream& in_;
    std::shared_ptr<DocumentMeta> meta_;
    std::vector<ParseIssue> issues_;
    std::vector<Token> tokens_;
    std::vector<Chunk> chunks_;
    std::vector<OpenChunk> open_;
    std::size_t line_no_ = 0;
    std::size_t sentence_index_ = 0;
    bool seen_token_ = false;
    bool sentence_done_ = false;
};

}  // namespace frosim
