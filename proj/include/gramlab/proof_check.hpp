// Independent validator for proof trees: every node must locally satisfy its
// rule schema.  Shares no code with the proof search.

#ifndef GRAMLAB_PROOF_CHECK_HPP
#define GRAMLAB_PROOF_CHECK_HPP

#include "gramlab/sequent.hpp"

namespace gramlab {

// True iff the tree is a well-formed derivation: axioms are atomic-to-atomic
// with the entailment holding, left/right/coordination nodes decompose their
// conclusions exactly as the rule schemas demand, coordination conjunct
// premises are closed over their own span (the island condition), no
// introduction premise has an empty context, and coord_target is present on
// exactly the coordination nodes.
bool check_proof(const ProofTree& proof);

}  // namespace gramlab

#endif  // GRAMLAB_PROOF_CHECK_HPP
