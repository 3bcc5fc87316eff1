#include "frosim/vertical_reader.hpp"

#include <algorithm>
#include <charconv>
#include <string_view>

#include "frosim/unicode.hpp"

namespace frosim {

namespace {

constexpr std::string_view kEllipsis = "\xE2\x80\xA6";  // U+2026

// TreeTagger writes a literal one-character ellipsis; downstream code keys on "...".
std::string normalize_field(std::string_view raw) {
    std::string s(raw);
    std::size_t i;
    while ((i = s.find(kEllipsis)) != std::string::npos) s.replace(i, 3, "...");
    return s;
}

ChunkKind kind_of(std::string_view label) {
    if (label == "NC") return ChunkKind::NC;
    if (label == "VC") return ChunkKind::VC;
    if (label == "PC") return ChunkKind::PC;
    if (label == "ADJC") return ChunkKind::ADJC;
    return ChunkKind::OTHER;
}

}  // namespace

DocumentReader::DocumentReader(std::istream& in, DocumentMeta defaults)
    : in_(in), meta_(std::make_shared<DocumentMeta>(std::move(defaults))) {}

void DocumentReader::handle_header(const std::string& line) {
    if (seen_token_) {
        issues_.push_back({ParseIssue::Severity::Warning, line_no_,
                           "header line after first token ignored: " + line});
        return;
    }
    std::string_view body(line);
    body.remove_prefix(1);  // '#'
    auto eq = body.find('=');
    if (eq == std::string_view::npos) {
        issues_.push_back({ParseIssue::Severity::Warning, line_no_,
                           "header line without '=' ignored: " + line});
        return;
    }
    std::string_view key = body.substr(0, eq);
    std::string value(body.substr(eq + 1));
    if (key == "doc_id") {
        meta_->doc_id = value;
    } else if (key == "author") {
        meta_->author_id = value;
    } else if (key == "title") {
        meta_->title = value;
    } else if (key == "lang") {
        if (auto lang = parse_language(value)) {
            meta_->language = *lang;
        } else {
            issues_.push_back({ParseIssue::Severity::Warning, line_no_,
                               "unrecognized language '" + value + "' ignored"});
        }
    } else if (key == "year") {
        int y = 0;
        auto [p, ec] = std::from_chars(value.data(), value.data() + value.size(), y);
        if (ec == std::errc{} && p == value.data() + value.size()) {
            meta_->year = y;
        } else {
            issues_.push_back({ParseIssue::Severity::Warning, line_no_,
                               "unparsable year '" + value + "' ignored"});
        }
    } else {
        issues_.push_back({ParseIssue::Severity::Warning, line_no_,
                           "unknown header key '" + std::string(key) + "' ignored"});
    }
}

void DocumentReader::handle_chunk_tag(const std::string& label, bool closing) {
    if (!closing) {
        open_.push_back({kind_of(label), label, tokens_.size(), line_no_});
        return;
    }
    auto match = std::find_if(open_.rbegin(), open_.rend(),
                              [&](const OpenChunk& c) { return c.label == label; });
    if (match == open_.rend()) {
        issues_.push_back({ParseIssue::Severity::Warning, line_no_,
                           "stray </" + label + "> ignored"});
        return;
    }
    // Implicitly close anything opened inside the matching chunk.
    while (true) {
        OpenChunk top = open_.back();
        open_.pop_back();
        bool is_match = top.label == label;
        if (!is_match) {
            issues_.push_back({ParseIssue::Severity::Warning, line_no_,
                               "unclosed <" + top.label + "> from line " +
                                   std::to_string(top.line) + " closed implicitly"});
        }
        if (tokens_.size() > top.begin) {
            chunks_.push_back({top.kind, top.begin, tokens_.size() - 1, top.label});
        } else {
            issues_.push_back({ParseIssue::Severity::Warning, top.line,
                               "empty <" + top.label + "> dropped"});
        }
        if (is_match) break;
    }
}

bool DocumentReader::handle_token(const std::string& line) {
    auto tab1 = line.find('\t');
    auto tab2 = tab1 == std::string::npos ? std::string::npos : line.find('\t', tab1 + 1);
    if (tab2 == std::string::npos || line.find('\t', tab2 + 1) != std::string::npos) {
        issues_.push_back({ParseIssue::Severity::Error, line_no_,
                           "malformed token line skipped: " + line});
        return false;
    }
    Token t;
    t.surface = normalize_field(std::string_view(line).substr(0, tab1));
    t.pos = std::string(std::string_view(line).substr(tab1 + 1, tab2 - tab1 - 1));
    t.lemma = normalize_field(std::string_view(line).substr(tab2 + 1));
    if (t.surface.empty() || t.pos.empty()) {
        issues_.push_back({ParseIssue::Severity::Error, line_no_,
                           "token line with empty field skipped: " + line});
        return false;
    }
    if (t.lemma.empty() || t.lemma == "<unknown>") t.lemma = uni::lower(t.surface);
    t.index = tokens_.size();
    seen_token_ = true;
    tokens_.push_back(std::move(t));
    if (tokens_.back().pos == "SENT") {
        close_remaining(true);
        sentence_done_ = true;
    }
    return true;
}

void DocumentReader::close_remaining(bool at_sentence_end) {
    // A sentence-final chunk left open ends before the SENT token so the
    // terminator is not swallowed into it (chunkers often omit the close tag).
    std::size_t last = tokens_.size();  // one past usable end
    if (at_sentence_end && last > 0) --last;
    while (!open_.empty()) {
        OpenChunk top = open_.back();
        open_.pop_back();
        issues_.push_back({ParseIssue::Severity::Warning, top.line,
                           "unclosed <" + top.label + "> closed at sentence end"});
        if (last > top.begin) {
            chunks_.push_back({top.kind, top.begin, last - 1, top.label});
        } else {
            issues_.push_back({ParseIssue::Severity::Warning, top.line,
                               "empty <" + top.label + "> dropped"});
        }
    }
}

void DocumentReader::finish_sentence() {
    std::sort(chunks_.begin(), chunks_.end(), [](const Chunk& a, const Chunk& b) {
        if (a.begin != b.begin) return a.begin < b.begin;
        if (a.end != b.end) return a.end > b.end;  // outer before inner
        return a.label < b.label;
    });
}

bool DocumentReader::next(Sentence& out) {
    std::string line;
    while (std::getline(in_, line)) {
        ++line_no_;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() ||
            line.find_first_not_of(" \t") == std::string::npos) continue;
        if (line.find('\t') == std::string::npos) {
            if (line.front() == '#') {
                handle_header(line);
                continue;
            }
            if (line.front() == '<' && line.back() == '>' && line.size() >= 3) {
                bool closing = line[1] == '/';
                std::string label = line.substr(closing ? 2 : 1,
                                                line.size() - (closing ? 3 : 2));
                if (!label.empty() &&
                    label.find_first_of("<> \t") == std::string::npos) {
                    handle_chunk_tag(label, closing);
                    continue;
                }
            }
            issues_.push_back({ParseIssue::Severity::Error, line_no_,
                               "malformed token line skipped: " + line});
            continue;
        }
        handle_token(line);
        if (sentence_done_) break;
    }
    if (!sentence_done_ && !tokens_.empty()) close_remaining(false);  // EOF tail
    if (tokens_.empty()) return false;
    finish_sentence();
    out.tokens = std::move(tokens_);
    out.chunks = std::move(chunks_);
    out.meta = meta_;
    out.sentence_index = sentence_index_++;
    tokens_.clear();
    chunks_.clear();
    open_.clear();
    sentence_done_ = false;
    return true;
}

}  // namespace frosim
