#pragma once

#include <optional>

#include "frosim/text.hpp"

namespace frosim {

// Re-joins sentences that a tagger split too eagerly: a sentence ending in
// "...", "?" or "!" is merged with its successor when the successor does not
// start with a capitalized word.  Merging chains, so "He cried ... ! ... no."
// style run-ons collapse into one sentence.  Output sentence indices are
// renumbered consecutively from zero.
//
// Use one instance per document:
//   for each sentence s: if (auto done = r.push(std::move(s))) emit(*done);
//   if (auto done = r.finish()) emit(*done);
class Resegmenter {
public:
    std::optional<Sentence> push(Sentence s);
    std::optional<Sentence> finish();

private:
    static bool soft_end(const Sentence& s);
    static bool continues_previous(const Sentence& s);
    void absorb(Sentence&& follower);

    std::optional<Sentence> pending_;
    std::size_t next_index_ = 0;
};

}  // namespace frosim
