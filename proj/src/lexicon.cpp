#include "gramlab/lexicon.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace gramlab {

namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

// {attr:val, attr:{...}, ...}
struct AvmParser {
    std::string_view text;
    std::size_t pos = 0;
    std::size_t line;

    [[noreturn]] void fail(const std::string& message) { throw LexiconError(message, line); }

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    void expect(char c) {
        if (peek() != c) fail(std::string("expected '") + c + "' in feature structure");
        ++pos;
    }

    std::string symbol() {
        skip_ws();
        std::size_t start = pos;
        while (pos < text.size()) {
            char c = text[pos];
            if (std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '+' || c == '-') {
                ++pos;
            } else {
                break;
            }
        }
        if (pos == start) fail("expected a symbol in feature structure");
        return std::string(text.substr(start, pos - start));
    }

    FeatureStructure structure(int depth) {
        if (depth > 2) fail("feature structures nest at most two levels");
        expect('{');
        FeatureStructure fs;
        if (peek() == '}') {
            ++pos;
            return fs;
        }
        for (;;) {
            std::string attr = symbol();
            if (fs.find(attr)) fail("duplicate attribute '" + attr + "'");
            expect(':');
            if (peek() == '{') {
                fs.set(std::move(attr), structure(depth + 1));
            } else {
                fs.set(std::move(attr), symbol());
            }
            char c = peek();
            if (c == ',') {
                ++pos;
                continue;
            }
            expect('}');
            return fs;
        }
    }
};

}  // namespace

const LexiconEntry* Lexicon::find(std::string_view word) const noexcept {
    auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

LexiconEntry& Lexicon::entry(const std::string& word) {
    auto [it, inserted] = entries_.try_emplace(word);
    if (inserted) it->second.word = word;
    return it->second;
}

void Lexicon::add_lcg(const std::string& word, Category category) {
    LexiconEntry& e = entry(word);
    if (e.is_conj) throw LexiconError("conjunction '" + word + "' cannot carry a category", 0);
    if (std::find(e.lcg_categories.begin(), e.lcg_categories.end(), category) ==
        e.lcg_categories.end()) {
        e.lcg_categories.push_back(std::move(category));
    }
}

void Lexicon::add_avm(const std::string& word, FeatureStructure features) {
    entry(word).avm = std::move(features);
}

void Lexicon::mark_conj(const std::string& word) {
    LexiconEntry& e = entry(word);
    if (!e.lcg_categories.empty()) {
        throw LexiconError("conjunction '" + word + "' cannot carry a category", 0);
    }
    e.is_conj = true;
}

AvmLexicon Lexicon::avm_view() const {
    AvmLexicon view;
    for (const auto& [word, e] : entries_) {
        if (e.is_conj) {
            view.words.emplace(word, AvmWord{{}, true});
        } else if (e.avm) {
            view.words.emplace(word, AvmWord{*e.avm, false});
        }
    }
    return view;
}

Lexicon Lexicon::parse(std::string_view text, std::size_t first_line) {
    Lexicon lexicon;
    std::size_t line_no = first_line;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw = end == std::string_view::npos ? text.substr(start)
                                                             : text.substr(start, end - start);
        if (auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
        std::string_view line = trim(raw);
        if (!line.empty()) {
            std::size_t ws = line.find_first_of(" \t");
            if (ws == std::string_view::npos) {
                throw LexiconError("missing ':=', ':a=' or ':conj'", line_no);
            }
            std::string word(line.substr(0, ws));
            std::string_view rest = trim(line.substr(ws));
            try {
                if (rest == ":conj") {
                    lexicon.mark_conj(word);
                } else if (rest.rfind(":a=", 0) == 0) {
                    AvmParser parser{trim(rest.substr(3)), 0, line_no};
                    FeatureStructure fs = parser.structure(1);
                    parser.skip_ws();
                    if (parser.pos != parser.text.size()) {
                        throw LexiconError("trailing input after feature structure", line_no);
                    }
                    lexicon.add_avm(word, std::move(fs));
                } else if (rest.rfind(":=", 0) == 0) {
                    std::string_view cats = rest.substr(2);
                    std::size_t cstart = 0;
                    while (cstart <= cats.size()) {
                        std::size_t cend = cats.find(';', cstart);
                        std::string_view one = cend == std::string_view::npos
                                                   ? cats.substr(cstart)
                                                   : cats.substr(cstart, cend - cstart);
                        lexicon.add_lcg(word, parse_category(trim(one)));
                        if (cend == std::string_view::npos) break;
                        cstart = cend + 1;
                    }
                } else {
                    throw LexiconError("expected ':=', ':a=' or ':conj'", line_no);
                }
            } catch (const ParseError& e) {
                throw LexiconError(std::string("bad category for '") + word + "': " + e.what(),
                                   line_no);
            } catch (const LexiconError& e) {
                if (e.line() == 0) throw LexiconError(e.message(), line_no);
                throw;
            }
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
        ++line_no;
    }
    return lexicon;
}

Lexicon load_lexicon(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open lexicon file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return Lexicon::parse(buffer.str());
}

}  // namespace gramlab
