#include "gramlab/corpus.hpp"

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

std::vector<std::string_view> split_tabs(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    for (;;) {
        std::size_t tab = line.find('\t', start);
        if (tab == std::string_view::npos) {
            out.push_back(line.substr(start));
            return out;
        }
        out.push_back(line.substr(start, tab - start));
        start = tab + 1;
    }
}

Verdict parse_verdict(std::string_view s, std::size_t line_no) {
    if (s == "accept") return Verdict::Accept;
    if (s == "reject") return Verdict::Reject;
    throw CorpusError("expected 'accept' or 'reject', got '" + std::string(s) + "'", line_no);
}

std::vector<std::string> tokenize(std::string_view sentence) {
    std::vector<std::string> tokens;
    std::size_t i = 0;
    while (i < sentence.size()) {
        while (i < sentence.size() && std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
        std::size_t start = i;
        while (i < sentence.size() && !std::isspace(static_cast<unsigned char>(sentence[i]))) ++i;
        if (i > start) tokens.emplace_back(sentence.substr(start, i - start));
    }
    return tokens;
}

}  // namespace

std::vector<CorpusRow> parse_corpus(std::string_view text) {
    std::vector<CorpusRow> rows;
    std::size_t line_no = 1;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t end = text.find('\n', start);
        std::string_view raw = end == std::string_view::npos ? text.substr(start)
                                                             : text.substr(start, end - start);
        std::string_view line = raw;
        if (trim(line).empty() || trim(line).front() == '#') {
            // comment or blank
        } else {
            auto cols = split_tabs(line);
            if (cols.size() < 5) {
                throw CorpusError("expected at least 5 tab-separated columns", line_no);
            }
            CorpusRow row;
            row.id = std::string(trim(cols[0]));
            row.tokens = tokenize(cols[1]);
            if (row.id.empty()) throw CorpusError("empty row id", line_no);
            if (row.tokens.empty()) throw CorpusError("empty sentence", line_no);
            row.gold = parse_verdict(trim(cols[2]), line_no);
            row.expected_lcg = parse_verdict(trim(cols[3]), line_no);
            row.expected_avm = parse_verdict(trim(cols[4]), line_no);
            if (cols.size() > 5) row.note = std::string(trim(cols[5]));
            rows.push_back(std::move(row));
        }
        if (end == std::string_view::npos) break;
        start = end + 1;
        ++line_no;
    }
    return rows;
}

std::vector<CorpusRow> load_corpus(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open corpus file: " + path.string());
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return parse_corpus(buffer.str());
}

}  // namespace gramlab
