// Plain-text proof displays.  The natural-deduction style reconstructs the
// familiar two-dimensional layout with inference bars and rule labels P, /e,
// \e, /i^n, \i^n and co; the sequent style prints the raw derivation tree.

#ifndef GRAMLAB_RENDER_HPP
#define GRAMLAB_RENDER_HPP

#include <span>
#include <string>
#include <vector>

#include "gramlab/sequent.hpp"

namespace gramlab {

enum class RenderStyle { Sequent, NaturalDeduction };

// `words`, when nonempty, must align with the conclusion's antecedent; each
// word is printed above its lexical category (conjunction items print the
// word alone).  Throws std::invalid_argument when the proof fails check_proof.
std::string render_proof(const ProofTree& proof, RenderStyle style,
                         std::span<const std::string> words = {});

// The multiset of natural-deduction rule labels the rendering would carry,
// with hypothesis indices stripped: "P", "/e", "\\e", "/i", "\\i", "co".
// Axioms whose two terms are structurally identical contribute no label.
std::vector<std::string> nd_rule_labels(const ProofTree& proof);

}  // namespace gramlab

#endif  // GRAMLAB_RENDER_HPP
