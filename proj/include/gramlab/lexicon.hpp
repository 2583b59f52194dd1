// Lexicon file handling.  One entry per line:
//   word := category [; category]*      LCG categories (repeats merge)
//   word :a= {attr:val, ...}            attribute-value features
//   word :conj                          conjunction marker
// `#` starts a comment.

#ifndef GRAMLAB_LEXICON_HPP
#define GRAMLAB_LEXICON_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "gramlab/avm_grammar.hpp"
#include "gramlab/category.hpp"

namespace gramlab {

class LexiconError : public std::runtime_error {
public:
    LexiconError(const std::string& message, std::size_t line)
        : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
          message_(message),
          line_(line) {}
    std::size_t line() const noexcept { return line_; }
    const std::string& message() const noexcept { return message_; }

private:
    std::string message_;
    std::size_t line_;
};

struct LexiconEntry {
    std::string word;
    std::vector<Category> lcg_categories;  // lexical ambiguity allowed
    std::optional<FeatureStructure> avm;
    bool is_conj = false;
};

class Lexicon {
public:
    const LexiconEntry* find(std::string_view word) const noexcept;

    void add_lcg(const std::string& word, Category category);
    void add_avm(const std::string& word, FeatureStructure features);
    void mark_conj(const std::string& word);

    std::size_t size() const noexcept { return entries_.size(); }
    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    AvmLexicon avm_view() const;

    // Parses lexicon text; line numbers start at `first_line`.
    static Lexicon parse(std::string_view text, std::size_t first_line = 1);

private:
    LexiconEntry& entry(const std::string& word);

    std::map<std::string, LexiconEntry, std::less<>> entries_;
};

Lexicon load_lexicon(const std::filesystem::path& path);

}  // namespace gramlab

#endif  // GRAMLAB_LEXICON_HPP
