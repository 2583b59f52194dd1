// Exhaustive, terminating sequent-calculus proof search for product-free
// Lambek categorial grammar with entailment axioms and a coordination schema.
//
//   (Ax)    t |- t'                         both atomic, entails(t, t')
//   (/R)    G, Y |- X        ==>  G |- X/Y      (G nonempty)
//   (\R)    Y, G |- X        ==>  G |- X\Y      (G nonempty)
//   (/L)    G |- Y   D1, X, D2 |- Z  ==>  D1, X/Y, G, D2 |- Z
//   (\L)    G |- Y   D1, X, D2 |- Z  ==>  D1, G, X\Y, D2 |- Z
//   (co)    D1 |- A   D2 |- A   G1, A, G2 |- Z
//                            ==>  G1, D1, conj, D2, G2 |- Z
//
// The coordination target A ranges over a finite candidate pool; each
// conjunct premise is a closed sequent over exactly the material inside that
// conjunct, which makes conjuncts into islands.  Absence of a proof is a
// genuine rejection relative to this calculus and the pool: the search is
// exhaustive, and running out of fuel raises instead of rejecting.

#ifndef GRAMLAB_DERIVE_HPP
#define GRAMLAB_DERIVE_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "gramlab/sequent.hpp"

namespace gramlab {

// Finite search space for coordination targets, built per sentence from the
// chosen lexical categories:
//   terms      — every feature subterm of the lexical categories, closed once
//                under pairwise & and |, deduplicated up to logical
//                equivalence (keeping a smallest representative);
//   categories — every subcategory, plus each subcategory with one atomic
//                argument replaced by a pool term, deduplicated structurally.
struct CandidatePool {
    std::vector<FeatureTerm> terms;
    std::vector<Category> categories;

    bool contains_term_equivalent(const FeatureTerm& t) const;
    bool contains_category(const Category& c) const;
};

CandidatePool build_pool(std::span<const Category> lexical_categories);

struct DeriveStats {
    std::uint64_t expansions = 0;   // sequents explored (memo misses)
    std::uint64_t memo_hits = 0;
};

struct DeriveLimits {
    std::uint64_t fuel = 20'000'000;  // max sequent expansions before bailing
};

// Raised when the fuel limit is hit.  Never converted into a rejection.
class FuelExhausted : public std::runtime_error {
public:
    FuelExhausted() : std::runtime_error("proof search fuel exhausted") {}
};

std::optional<ProofTree> derive(std::span<const SequentItem> antecedent, const Category& goal,
                                const CandidatePool& pool, DeriveStats* stats = nullptr,
                                const DeriveLimits& limits = {});

}  // namespace gramlab

#endif  // GRAMLAB_DERIVE_HPP
