// The judgment matrix: every corpus row evaluated under all three engines and
// matched against the expected columns.

#ifndef GRAMLAB_REPORT_HPP
#define GRAMLAB_REPORT_HPP

#include <optional>

#include "gramlab/corpus.hpp"

namespace gramlab {

struct ReportRow {
    CorpusRow corpus;
    std::optional<Verdict> lcg, avm_sub, avm_gen;  // nullopt when the row errored
    std::optional<ProofTree> proof;                // checked, on LCG accepts
    std::string error;                             // message when the row errored

    bool errored() const noexcept { return !error.empty(); }
    bool matches() const noexcept;
};

struct JudgmentReport {
    std::vector<ReportRow> rows;

    std::size_t matched = 0;
    std::size_t mismatched = 0;
    std::size_t errored = 0;

    bool all_ok() const noexcept { return mismatched == 0 && errored == 0; }

    std::string to_table() const;
    std::string to_tsv() const;
};

JudgmentReport run_corpus(const std::vector<CorpusRow>& rows, const Lexicon& lexicon);
JudgmentReport run_corpus(const std::filesystem::path& corpus_path,
                          const std::filesystem::path& lexicon_path);

}  // namespace gramlab

#endif  // GRAMLAB_REPORT_HPP
