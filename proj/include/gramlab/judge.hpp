// Per-sentence judgment: dispatches a token sequence to the proof-search
// engine (goal s, trying every lexical-ambiguity choice) or to the
// attribute-value backbone.

#ifndef GRAMLAB_JUDGE_HPP
#define GRAMLAB_JUDGE_HPP

#include <optional>
#include <span>
#include <string>

#include "gramlab/derive.hpp"
#include "gramlab/lexicon.hpp"

namespace gramlab {

enum class Verdict { Accept, Reject };

inline const char* verdict_name(Verdict v) noexcept {
    return v == Verdict::Accept ? "accept" : "reject";
}

enum class Engine { Lcg, AvmSubsumption, AvmGeneralization };

const char* engine_name(Engine e) noexcept;
std::optional<Engine> engine_from_name(std::string_view name) noexcept;

struct Judgment {
    Verdict verdict;
    std::optional<ProofTree> proof;  // checked, present on LCG accepts
};

// Throws UnknownWordError (and BackboneError for the AVM engines when the
// sentence lies outside the backbone shapes).
Judgment judge(std::span<const std::string> tokens, const Lexicon& lexicon, Engine engine);

}  // namespace gramlab

#endif  // GRAMLAB_JUDGE_HPP
