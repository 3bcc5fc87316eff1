#include "frosim/markers.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "frosim/tagset.hpp"
#include "frosim/unicode.hpp"

namespace frosim {

std::string_view to_string(StructureTemplate t) {
    switch (t) {
        case StructureTemplate::VerbMarkerVehicle: return "VMV";
        case StructureTemplate::TenorVerbMarkerVehicle: return "TVMV";
        case StructureTemplate::GroundMarkerVehicle: return "GMV";
        case StructureTemplate::TenorGroundMarkerVehicle: return "TGMV";
        case StructureTemplate::TenorVerbGroundMarkerVehicle: return "TVGMV";
    }
    return "?";
}

std::optional<StructureTemplate> parse_template(std::string_view name) {
    if (name == "VMV") return StructureTemplate::VerbMarkerVehicle;
    if (name == "TVMV") return StructureTemplate::TenorVerbMarkerVehicle;
    if (name == "GMV") return StructureTemplate::GroundMarkerVehicle;
    if (name == "TGMV") return StructureTemplate::TenorGroundMarkerVehicle;
    if (name == "TVGMV") return StructureTemplate::TenorVerbGroundMarkerVehicle;
    return std::nullopt;
}

std::size_t MarkerDef::total_lexemes() const {
    return std::accumulate(parts.begin(), parts.end(), std::size_t{0},
                           [](std::size_t n, const auto& p) { return n + p.size(); });
}

namespace {

MarkerLexeme word(std::string form) { return {std::move(form), false, false}; }
MarkerLexeme flex(std::string form) { return {std::move(form), true, false}; }
MarkerLexeme comparative() { return {"", false, true}; }

using Part = std::vector<MarkerLexeme>;

const std::vector<StructureTemplate> kAdverbial = {
    StructureTemplate::VerbMarkerVehicle,
    StructureTemplate::TenorVerbMarkerVehicle,
    StructureTemplate::GroundMarkerVehicle,
};
const std::vector<StructureTemplate> kPhrasal = {
    StructureTemplate::TenorGroundMarkerVehicle,
    StructureTemplate::TenorVerbGroundMarkerVehicle,
};

MarkerDef def(std::string id, Language lang, std::vector<Part> parts,
              const std::vector<StructureTemplate>& templates,
              MarkerPolarity::Value polarity = MarkerPolarity::SIMILE) {
    MarkerDef d;
    d.id = std::move(id);
    d.language = lang;
    d.parts = std::move(parts);
    d.polarity = polarity;
    d.templates = templates;
    return d;
}

std::vector<MarkerDef> make_english() {
    const Language EN = Language::EN;
    return {
        def("en.like", EN, {{word("like")}}, kAdverbial),
        def("en.unlike", EN, {{word("unlike")}}, kAdverbial,
            MarkerPolarity::DISSIMILE),
        def("en.as", EN, {{word("as")}}, kAdverbial),
        def("en.as_as", EN, {{word("as")}, {word("as")}}, kAdverbial),
        def("en.more_than", EN, {{word("more")}, {word("than")}}, kAdverbial),
        def("en.less_than", EN, {{word("less")}, {word("than")}}, kAdverbial),
        def("en.er_than", EN, {{comparative()}, {word("than")}}, kAdverbial),
    };
}

std::vector<MarkerDef> make_french() {
    const Language FR = Language::FR;
    return {
        def("fr.comme", FR, {{word("comme")}}, kAdverbial),
        def("fr.ainsi_que", FR, {{word("ainsi"), word("que")}}, kAdverbial),
        def("fr.de_meme_que", FR, {{word("de"), word("m\xC3\xAAme"), word("que")}},
            kAdverbial),
        def("fr.autant_que", FR, {{word("autant"), word("que")}}, kAdverbial),
        def("fr.plus_que", FR, {{word("plus")}, {word("que")}}, kAdverbial),
        def("fr.tel_que", FR, {{flex("tel"), word("que")}}, kAdverbial),
        def("fr.moins_que", FR, {{word("moins")}, {word("que")}}, kAdverbial),
        def("fr.aussi_que", FR, {{word("aussi")}, {word("que")}}, kAdverbial),
        def("fr.a_l_image_de", FR,
            {{word("\xC3\xA0"), word("l'"), word("image"), word("de")}}, kPhrasal),
        def("fr.a_l_instar_de", FR,
            {{word("\xC3\xA0"), word("l'"), word("instar"), word("de")}}, kPhrasal),
        def("fr.a_la_maniere_de", FR,
            {{word("\xC3\xA0"), word("la"), word("mani\xC3\xA8re"), word("de")}},
            kPhrasal),
        def("fr.a_l_egal_de", FR,
            {{word("\xC3\xA0"), word("l'"), word("\xC3\xA9gal"), word("de")}},
            kPhrasal),
        def("fr.a_la_facon_de", FR,
            {{word("\xC3\xA0"), word("la"), word("fa\xC3\xA7on"), word("de")}},
            kPhrasal),
    };
}

std::size_t concrete_lexemes(const MarkerDef& d) {
    std::size_t n = 0;
    for (const auto& part : d.parts)
        for (const auto& lex : part)
            if (!lex.any_comparative) ++n;
    return n;
}

bool token_matches(const Token& t, const MarkerLexeme& lex, Language lang) {
    if (lex.any_comparative) return tags::is_comparative(t, lang);
    std::string n = tags::normalized_surface(t.surface);
    if (n == lex.form) return true;
    if (n == "d'" && lex.form == "de") return true;  // elided "de"
    if (lex.match_lemma && uni::lower(t.lemma) == lex.form) return true;
    return false;
}

bool same_single_lexeme_parts(const MarkerDef& d) {
    return d.parts.size() == 2 && d.parts[0].size() == 1 && d.parts[1].size() == 1 &&
           !d.parts[0][0].any_comparative && !d.parts[1][0].any_comparative &&
           d.parts[0][0].form == d.parts[1][0].form;
}

}  // namespace

const std::vector<MarkerDef>& builtin_markers(Language language) {
    static const std::vector<MarkerDef> en = make_english();
    static const std::vector<MarkerDef> fr = make_french();
    return language == Language::EN ? en : fr;
}

std::vector<MarkerDef> load_marker_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open markers file: " + path);
    std::vector<MarkerDef> defs;
    std::string line;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) {
        throw std::runtime_error("markers file " + path + " line " +
                                 std::to_string(line_no) + ": " + what);
    };
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line.front() == '#') continue;
        std::vector<std::string> fields;
        std::size_t start = 0;
        while (true) {
            auto tab = line.find('\t', start);
            fields.push_back(line.substr(start, tab - start));
            if (tab == std::string::npos) break;
            start = tab + 1;
        }
        if (fields.size() != 5) fail("expected 5 tab-separated fields");
        MarkerDef d;
        d.id = fields[0];
        if (d.id.empty()) fail("empty id");
        auto lang = parse_language(fields[1]);
        if (!lang) fail("unknown language '" + fields[1] + "'");
        d.language = *lang;
        std::stringstream parts_in(fields[2]);
        std::string part_text;
        while (std::getline(parts_in, part_text, ';')) {
            Part part;
            std::stringstream lex_in(part_text);
            std::string w;
            while (std::getline(lex_in, w, ' ')) {
                if (w.empty()) continue;
                if (w == "@comparative")
                    part.push_back(comparative());
                else if (w.rfind("lemma:", 0) == 0)
                    part.push_back(flex(w.substr(6)));
                else
                    part.push_back(word(uni::lower(w)));
            }
            if (part.empty()) fail("empty marker part");
            d.parts.push_back(std::move(part));
        }
        if (d.parts.empty() || d.parts.size() > 2)
            fail("a marker has 1 contiguous or 2 discontinuous parts");
        if (fields[3] == "SIMILE")
            d.polarity = MarkerPolarity::SIMILE;
        else if (fields[3] == "DISSIMILE")
            d.polarity = MarkerPolarity::DISSIMILE;
        else
            fail("polarity must be SIMILE or DISSIMILE");
        std::stringstream tmpl_in(fields[4]);
        std::string name;
        while (std::getline(tmpl_in, name, ',')) {
            auto t = parse_template(name);
            if (!t) fail("unknown template '" + name + "'");
            d.templates.push_back(*t);
        }
        if (d.templates.empty()) fail("at least one template required");
        defs.push_back(std::move(d));
    }
    return defs;
}

namespace {

// Does `part` match tokens [at, at+size) with none of them consumed?
bool part_matches_at(const Sentence& s, const std::vector<bool>& consumed,
                     const Part& part, std::size_t at, Language lang) {
    if (at + part.size() > s.tokens.size()) return false;
    for (std::size_t k = 0; k < part.size(); ++k) {
        if (consumed[at + k]) return false;
        if (!token_matches(s.tokens[at + k], part[k], lang)) return false;
    }
    return true;
}

// Comparative "que"/"than" inside an NC opened before the degree word is a
// relative or complement clause, not the second half of the marker.
bool inside_earlier_nc(const Sentence& s, std::size_t pos, std::size_t degree_pos) {
    for (const Chunk& c : s.chunks)
        if (c.kind == ChunkKind::NC && c.begin < degree_pos && c.contains(pos))
            return true;
    return false;
}

}  // namespace

std::vector<MarkerMatch> match_markers(const Sentence& sentence,
                                       const std::vector<MarkerDef>& defs) {
    const Language lang = sentence.language();
    const std::size_t n = sentence.tokens.size();

    std::vector<std::size_t> order(defs.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
        const MarkerDef& da = defs[a];
        const MarkerDef& db = defs[b];
        if (da.total_lexemes() != db.total_lexemes())
            return da.total_lexemes() > db.total_lexemes();
        if (da.parts.size() != db.parts.size())
            return da.parts.size() < db.parts.size();
        return concrete_lexemes(da) > concrete_lexemes(db);
    });

    std::vector<bool> consumed(n, false);
    std::vector<MarkerMatch> out;
    for (std::size_t oi : order) {
        const MarkerDef& d = defs[oi];
        if (d.language != lang) continue;
        const Part& first = d.parts.front();
        bool que_guard = false;
        std::size_t min_gap = 1;
        if (d.discontinuous()) {
            const std::string& f2 = d.parts[1].front().form;
            que_guard = f2 == "que" || f2 == "than";
            if (same_single_lexeme_parts(d)) min_gap = 2;  // as ... as
        }
        std::size_t pos = 0;
        while (pos < n) {
            if (!part_matches_at(sentence, consumed, first, pos, lang)) {
                ++pos;
                continue;
            }
            std::size_t end1 = pos + first.size() - 1;
            if (!d.discontinuous()) {
                MarkerMatch m{&d, {{pos, end1}}};
                for (std::size_t k = pos; k <= end1; ++k) consumed[k] = true;
                out.push_back(std::move(m));
                pos = end1 + 1;
                continue;
            }
            const Part& second = d.parts[1];
            bool bound = false;
            for (std::size_t j = pos + min_gap; j < n; ++j) {
                if (j <= end1) continue;
                if (!part_matches_at(sentence, consumed, second, j, lang)) continue;
                if (que_guard && inside_earlier_nc(sentence, j, pos)) continue;
                std::size_t end2 = j + second.size() - 1;
                MarkerMatch m{&d, {{pos, end1}, {j, end2}}};
                for (std::size_t k = pos; k <= end1; ++k) consumed[k] = true;
                for (std::size_t k = j; k <= end2; ++k) consumed[k] = true;
                out.push_back(std::move(m));
                bound = true;
                break;
            }
            pos = bound ? end1 + 1 : pos + 1;
        }
    }
    std::sort(out.begin(), out.end(), [](const MarkerMatch& a, const MarkerMatch& b) {
        return a.spans.front().first < b.spans.front().first;
    });
    return out;
}

}  // namespace frosim
