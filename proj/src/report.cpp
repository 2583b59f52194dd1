#include "gramlab/report.hpp"

#include <algorithm>
#include <sstream>

namespace gramlab {

bool ReportRow::matches() const noexcept {
    if (errored()) return false;
    return lcg == corpus.expected_lcg && avm_sub == corpus.expected_avm &&
           avm_gen == corpus.expected_avm;
}

namespace {

ReportRow judge_row(const CorpusRow& row, const Lexicon& lexicon) {
    ReportRow out;
    out.corpus = row;
    try {
        Judgment lcg = judge(row.tokens, lexicon, Engine::Lcg);
        out.lcg = lcg.verdict;
        out.proof = std::move(lcg.proof);
        out.avm_sub = judge(row.tokens, lexicon, Engine::AvmSubsumption).verdict;
        out.avm_gen = judge(row.tokens, lexicon, Engine::AvmGeneralization).verdict;
    } catch (const std::exception& e) {
        out.error = e.what();
    }
    return out;
}

}  // namespace

JudgmentReport run_corpus(const std::vector<CorpusRow>& rows, const Lexicon& lexicon) {
    // Rows are independent and judging is pure, so they could be evaluated
    // concurrently; at corpus scale a sequential pass is faster in practice.
    // Assembly follows input order, which keeps the report deterministic.
    JudgmentReport report;
    for (const auto& row : rows) {
        ReportRow out = judge_row(row, lexicon);
        if (out.errored()) {
            ++report.errored;
        } else if (out.matches()) {
            ++report.matched;
        } else {
            ++report.mismatched;
        }
        report.rows.push_back(std::move(out));
    }
    return report;
}

JudgmentReport run_corpus(const std::filesystem::path& corpus_path,
                          const std::filesystem::path& lexicon_path) {
    Lexicon lexicon = load_lexicon(lexicon_path);
    return run_corpus(load_corpus(corpus_path), lexicon);
}

namespace {

std::string sentence_of(const CorpusRow& row) {
    std::string out;
    for (std::size_t i = 0; i < row.tokens.size(); ++i) {
        if (i) out += ' ';
        out += row.tokens[i];
    }
    return out;
}

std::string cell(const std::optional<Verdict>& actual, Verdict expected) {
    if (!actual) return "error";
    std::string s = verdict_name(*actual);
    if (*actual != expected) s += " (!= " + std::string(verdict_name(expected)) + ")";
    return s;
}

std::string status_of(const ReportRow& row) {
    if (row.errored()) return "ERROR: " + row.error;
    return row.matches() ? "ok" : "MISMATCH";
}

// display width: count UTF-8 code points
std::size_t dwidth(const std::string& s) {
    std::size_t n = 0;
    for (unsigned char c : s) {
        if ((c & 0xC0) != 0x80) ++n;
    }
    return n;
}

}  // namespace

std::string JudgmentReport::to_table() const {
    const std::vector<std::string> header = {"id",      "sentence", "gold",   "lcg",
                                             "avm-sub", "avm-gen",  "status"};
    std::vector<std::vector<std::string>> grid;
    grid.push_back(header);
    for (const auto& row : rows) {
        grid.push_back({row.corpus.id, sentence_of(row.corpus),
                        verdict_name(row.corpus.gold), cell(row.lcg, row.corpus.expected_lcg),
                        cell(row.avm_sub, row.corpus.expected_avm),
                        cell(row.avm_gen, row.corpus.expected_avm), status_of(row)});
    }
    std::vector<std::size_t> widths(header.size(), 0);
    for (const auto& r : grid) {
        for (std::size_t c = 0; c < r.size(); ++c) widths[c] = std::max(widths[c], dwidth(r[c]));
    }
    std::ostringstream out;
    for (const auto& r : grid) {
        for (std::size_t c = 0; c < r.size(); ++c) {
            out << r[c];
            if (c + 1 < r.size()) out << std::string(widths[c] - dwidth(r[c]) + 2, ' ');
        }
        out << '\n';
    }
    out << '\n'
        << rows.size() << " rows: " << matched << " ok, " << mismatched << " mismatched, "
        << errored << " errored\n";
    return out.str();
}

std::string JudgmentReport::to_tsv() const {
    std::ostringstream out;
    out << "id\tsentence\tgold\texpected_lcg\tlcg\texpected_avm\tavm_sub\tavm_gen\tstatus\tnote\n";
    for (const auto& row : rows) {
        auto actual = [](const std::optional<Verdict>& v) {
            return v ? std::string(verdict_name(*v)) : std::string("error");
        };
        out << row.corpus.id << '\t' << sentence_of(row.corpus) << '\t'
            << verdict_name(row.corpus.gold) << '\t' << verdict_name(row.corpus.expected_lcg)
            << '\t' << actual(row.lcg) << '\t' << verdict_name(row.corpus.expected_avm) << '\t'
            << actual(row.avm_sub) << '\t' << actual(row.avm_gen) << '\t' << status_of(row)
            << '\t' << row.corpus.note << '\n';
    }
    return out.str();
}

}  // namespace gramlab
