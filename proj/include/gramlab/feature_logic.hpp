// Feature terms: negation-free propositional formulae over atomic features,
// with entailment decided by exhaustive valuation enumeration.  Atom sets are
// lexicon-bounded and tiny, so the truth-table procedure is both the
// production implementation and its own specification.

#ifndef GRAMLAB_FEATURE_LOGIC_HPP
#define GRAMLAB_FEATURE_LOGIC_HPP

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace gramlab {

// Parse failure carrying the byte offset of the offending character.
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& message, std::size_t position);
    std::size_t position() const noexcept { return position_; }

private:
    std::size_t position_;
};

// ── FeatureTerm ─────────────────────────────────────────────────────────────
// Immutable tree of atoms, ∧ and ∨.  Copies share structure.  Structural
// equality (operator==) is distinct from logical equivalence (`equivalent`).

class FeatureTerm {
public:
    enum class Kind { Atom, And, Or };

    static FeatureTerm atom(std::string name);
    static FeatureTerm conj(FeatureTerm left, FeatureTerm right);
    static FeatureTerm disj(FeatureTerm left, FeatureTerm right);

    Kind kind() const noexcept { return node_->kind; }
    bool is_atom() const noexcept { return node_->kind == Kind::Atom; }

    const std::string& atom_name() const;  // Kind::Atom only
    FeatureTerm left() const;              // And/Or only
    FeatureTerm right() const;

    bool operator==(const FeatureTerm& other) const noexcept;
    bool operator!=(const FeatureTerm& other) const noexcept { return !(*this == other); }

    // Surface syntax: `&` binds tighter than `|`; parentheses only where the
    // tree shape requires them, so printing round-trips structurally.
    std::string to_string() const;

    // Sorted, duplicate-free list of atom names occurring in the term.
    std::vector<std::string> atoms() const;

    std::size_t node_count() const noexcept;

private:
    struct Node {
        Kind kind;
        std::string name;  // Atom only
        std::shared_ptr<const Node> left, right;
    };

    explicit FeatureTerm(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Atom names are nonempty strings over [a-z0-9_].
bool is_valid_atom_name(std::string_view name) noexcept;

// Parses the `&`/`|`/parenthesis surface syntax.  Throws ParseError.
FeatureTerm parse_term(std::string_view text);

// ── Valuation ───────────────────────────────────────────────────────────────
// A total truth assignment over a fixed atom set.  Bit i of `bits` gives the
// value of atoms[i]; `atoms` must be sorted and duplicate-free.

class Valuation {
public:
    Valuation(std::vector<std::string> atoms, std::uint32_t bits);

    bool value(std::string_view atom) const;  // atom must belong to the set
    const std::vector<std::string>& atoms() const noexcept { return atoms_; }
    std::uint32_t bits() const noexcept { return bits_; }

private:
    std::vector<std::string> atoms_;
    std::uint32_t bits_;
};

bool satisfies(const FeatureTerm& term, const Valuation& valuation);

// The union of the two terms' atom sets, sorted.
std::vector<std::string> joint_atoms(const FeatureTerm& phi, const FeatureTerm& psi);

// True iff every valuation over the joint atom set satisfying phi satisfies
// psi.  Classical semantics; on this connective fragment the intuitionistic
// reading coincides.
bool entails(const FeatureTerm& phi, const FeatureTerm& psi);

// True iff some valuation satisfies both.  In the negation-free fragment the
// all-true valuation always does, so this is constantly true; it exists so
// the consistency notion has a logic-side mirror that can be tested as such.
bool consistent(const FeatureTerm& phi, const FeatureTerm& psi);

// True iff all valuations satisfying phi agree on `atom`.
bool fixes(const FeatureTerm& phi, std::string_view atom);

// Mutual entailment.
bool equivalent(const FeatureTerm& phi, const FeatureTerm& psi);

}  // namespace gramlab

#endif  // GRAMLAB_FEATURE_LOGIC_HPP
