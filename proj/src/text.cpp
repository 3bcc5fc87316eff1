#include "frosim/text.hpp"

#include "frosim/lang.hpp"

namespace frosim {

std::optional<Language> parse_language(std::string_view text) {
    if (text == "en" || text == "EN") return Language::EN;
    if (text == "fr" || text == "FR") return Language::FR;
    return std::nullopt;
}

const char* to_string(ChunkKind kind) {
    switch (kind) {
        case ChunkKind::NC: return "NC";
        case ChunkKind::VC: return "VC";
        case ChunkKind::PC: return "PC";
        case ChunkKind::ADJC: return "ADJC";
        case ChunkKind::OTHER: return "OTHER";
    }
    return "OTHER";
}

std::string Sentence::text() const {
    std::string out;
    for (const Token& t : tokens) {
        if (!out.empty()) out.push_back(' ');
        out += t.surface;
    }
    return out;
}

const Chunk* Sentence::chunk_at(std::size_t i, ChunkKind kind) const {
    const Chunk* best = nullptr;
    for (const Chunk& c : chunks) {
        if (c.kind != kind || !c.contains(i)) continue;
        if (!best || best->contains(c)) best = &c;  // prefer the innermost
    }
    return best;
}

bool Sentence::inside(std::size_t i, ChunkKind kind) const {
    return chunk_at(i, kind) != nullptr;
}

const Chunk* Sentence::next_chunk_after(std::size_t i, ChunkKind kind) const {
    const Chunk* best = nullptr;
    for (const Chunk& c : chunks) {
        if (c.kind != kind || c.begin <= i) continue;
        if (!best || c.begin < best->begin || (c.begin == best->begin && c.end < best->end))
            best = &c;
    }
    return best;
}

const Chunk* Sentence::last_chunk_before(std::size_t i, ChunkKind kind) const {
    const Chunk* best = nullptr;
    for (const Chunk& c : chunks) {
        if (c.kind != kind || c.end >= i) continue;
        if (!best || c.end > best->end || (c.end == best->end && c.begin > best->begin))
            best = &c;
    }
    return best;
}

}  // namespace frosim
