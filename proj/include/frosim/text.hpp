#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "frosim/lang.hpp"

namespace frosim {

// Inclusive token-index range [first, second].
using Span = std::pair<std::size_t, std::size_t>;

struct Token {
    std::string surface;
    std::string pos;
    std::string lemma;  // never the "<unknown>" sentinel; the reader falls
                        // back to the lowercased surface
    std::size_t index = 0;
};

enum class ChunkKind { NC, VC, PC, ADJC, OTHER };

const char* to_string(ChunkKind kind);

// Flat phrase segment over an inclusive token-index range. Chunks of one
// sentence are disjoint or properly nested (a PC may contain an NC).
struct Chunk {
    ChunkKind kind = ChunkKind::OTHER;
    std::size_t begin = 0;
    std::size_t end = 0;
    std::string label;  // raw tag name from the input, e.g. "NC", "AP"

    bool contains(std::size_t i) const { return begin <= i && i <= end; }
    bool contains(const Chunk& other) const {
        return begin <= other.begin && other.end <= end;
    }
    std::size_t size() const { return end - begin + 1; }
};

struct DocumentMeta {
    std::string doc_id;
    std::string author_id;
    std::string title;
    Language language = Language::EN;
    std::optional<int> year;
};

struct Sentence {
    std::vector<Token> tokens;
    std::vector<Chunk> chunks;  // ordered by begin, outer before inner
    std::shared_ptr<const DocumentMeta> meta;
    std::size_t sentence_index = 0;

    Language language() const { return meta ? meta->language : Language::EN; }

    // Surfaces joined by single spaces.
    std::string text() const;

    // Innermost chunk of `kind` containing token `i`, or nullptr.
    const Chunk* chunk_at(std::size_t i, ChunkKind kind) const;
    // Any chunk of `kind` containing token `i`?
    bool inside(std::size_t i, ChunkKind kind) const;
    // First chunk of `kind` with begin > i, or nullptr.
    const Chunk* next_chunk_after(std::size_t i, ChunkKind kind) const;
    // Chunk of `kind` with the greatest end < i, or nullptr.
    const Chunk* last_chunk_before(std::size_t i, ChunkKind kind) const;
};

}  // namespace frosim
