// Derivation backbone for the unification-based comparator.  Sentences have
// the shape  Subject VerbGroup [Complement]  where the verb group is a verb
// or verb-conj-verb and the complement is a phrase or phrase-conj-phrase.
// Verb entries may carry nested `comps` and `subj` specifications.

#ifndef GRAMLAB_AVM_GRAMMAR_HPP
#define GRAMLAB_AVM_GRAMMAR_HPP

#include <map>
#include <span>
#include <stdexcept>
#include <string>

#include "gramlab/avm.hpp"

namespace gramlab {

class UnknownWordError : public std::runtime_error {
public:
    explicit UnknownWordError(const std::string& word)
        : std::runtime_error("unknown word: '" + word + "'"), word_(word) {}
    const std::string& word() const noexcept { return word_; }

private:
    std::string word_;
};

class BackboneError : public std::runtime_error {
public:
    explicit BackboneError(const std::string& message)
        : std::runtime_error("sentence outside backbone shapes: " + message) {}
};

struct AvmWord {
    FeatureStructure features;
    bool is_conj = false;
};

struct AvmLexicon {
    std::map<std::string, AvmWord, std::less<>> words;

    const AvmWord& require(std::string_view word) const;
};

// True iff the backbone derivation goes through:
//   - a coordinated complement resolves against the verb group's complement
//     specification via coord_node;
//   - a coordinated verb group resolves via coord_node with its comps
//     equated to the complement's resulting features;
//   - a single verb unifies its comps with the complement features;
//   - the subject unifies with the verb group's subj specification.
// Throws UnknownWordError / BackboneError; a failed unification or
// coordination is a rejection, not an error.
bool analyze(std::span<const std::string> tokens, const AvmLexicon& lexicon, CoordMode mode);

}  // namespace gramlab

#endif  // GRAMLAB_AVM_GRAMMAR_HPP
