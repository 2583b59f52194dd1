// Corpus file handling.  Tab-separated columns:
//   id  sentence  gold  expected_lcg  expected_avm  note
// `#` starts a comment; the sentence is whitespace-tokenized.

#ifndef GRAMLAB_CORPUS_HPP
#define GRAMLAB_CORPUS_HPP

#include <filesystem>
#include <string>
#include <vector>

#include "gramlab/judge.hpp"

namespace gramlab {

class CorpusError : public std::runtime_error {
public:
    CorpusError(const std::string& message, std::size_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}
    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

struct CorpusRow {
    std::string id;
    std::vector<std::string> tokens;
    Verdict gold;
    Verdict expected_lcg;
    Verdict expected_avm;  // both AVM modes
    std::string note;
};

std::vector<CorpusRow> parse_corpus(std::string_view text);
std::vector<CorpusRow> load_corpus(const std::filesystem::path& path);

}  // namespace gramlab

#endif  // GRAMLAB_CORPUS_HPP
