#include "frosim/resegment.hpp"

#include <utility>

#include "frosim/unicode.hpp"

namespace frosim {

bool Resegmenter::soft_end(const Sentence& s) {
    if (s.tokens.empty()) return false;
    const std::string& last = s.tokens.back().surface;
    return last == "..." || last == "?" || last == "!";
}

bool Resegmenter::continues_previous(const Sentence& s) {
    for (const Token& t : s.tokens) {
        char32_t first = uni::first_letter(t.surface);
        if (first == 0) continue;
        return !uni::is_upper(first);
    }
    return true;  // nothing letter-bearing: cannot start a new sentence
}

void Resegmenter::absorb(Sentence&& follower) {
    std::size_t offset = pending_->tokens.size();
    for (Token& t : follower.tokens) {
        t.index += offset;
        pending_->tokens.push_back(std::move(t));
    }
    for (Chunk& c : follower.chunks) {
        c.begin += offset;
        c.end += offset;
        pending_->chunks.push_back(std::move(c));
    }
}

std::optional<Sentence> Resegmenter::push(Sentence s) {
    if (pending_ && soft_end(*pending_) && continues_previous(s)) {
        absorb(std::move(s));
        return std::nullopt;
    }
    std::optional<Sentence> done = std::move(pending_);
    pending_ = std::move(s);
    pending_->sentence_index = 0;  // assigned on emit
    if (done) done->sentence_index = next_index_++;
    return done;
}

std::optional<Sentence> Resegmenter::finish() {
    std::optional<Sentence> done = std::move(pending_);
    pending_.reset();
    if (done) done->sentence_index = next_index_++;
    return done;
}

}  // namespace frosim
