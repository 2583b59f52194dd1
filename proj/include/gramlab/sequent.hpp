// Sequents over categories and conjunction markers, and rule-labelled proof
// trees.  A Conj is not a category: it can only be consumed by the
// coordination rule.

#ifndef GRAMLAB_SEQUENT_HPP
#define GRAMLAB_SEQUENT_HPP

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "gramlab/category.hpp"

namespace gramlab {

struct Conj {
    std::string marker;  // surface token, e.g. "and", "und"

    bool operator==(const Conj& other) const noexcept { return marker == other.marker; }
};

using SequentItem = std::variant<Category, Conj>;

inline bool is_conj(const SequentItem& item) noexcept {
    return std::holds_alternative<Conj>(item);
}

inline const Category& as_category(const SequentItem& item) {
    return std::get<Category>(item);
}

bool items_equal(const SequentItem& a, const SequentItem& b) noexcept;
std::string item_to_string(const SequentItem& item);

struct Sequent {
    std::vector<SequentItem> antecedent;  // never empty
    Category succedent;

    bool operator==(const Sequent& other) const noexcept;
    std::string to_string() const;  // "a, b |- c"
};

enum class Rule { Axiom, OverLeft, OverRight, UnderLeft, UnderRight, Coord };

const char* rule_name(Rule rule) noexcept;

struct ProofTree {
    Sequent conclusion;
    Rule rule;
    std::vector<ProofTree> premises;
    std::optional<Category> coord_target;  // present iff rule == Coord
};

}  // namespace gramlab

#endif  // GRAMLAB_SEQUENT_HPP
