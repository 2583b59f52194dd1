// Categories: feature terms closed under the directed implications `/` and
// `\`.  Convention fixed for the whole project: X/Y seeks Y to its RIGHT and
// yields X; X\Y seeks Y to its LEFT and yields X.

#ifndef GRAMLAB_CATEGORY_HPP
#define GRAMLAB_CATEGORY_HPP

#include <memory>
#include <optional>
#include <string>
#include <string_view>

#include "gramlab/feature_logic.hpp"

namespace gramlab {

class Category {
public:
    enum class Kind { Atomic, Over, Under };

    static Category atomic(FeatureTerm term);
    static Category over(Category result, Category argument);   // result/argument
    static Category under(Category result, Category argument);  // result\argument

    Kind kind() const noexcept { return node_->kind; }
    bool is_atomic() const noexcept { return node_->kind == Kind::Atomic; }

    const FeatureTerm& term() const;  // Atomic only
    Category result() const;          // Over/Under only
    Category argument() const;

    bool operator==(const Category& other) const noexcept;
    bool operator!=(const Category& other) const noexcept { return !(*this == other); }

    // Stable node address; equal addresses imply structural equality (the
    // converse does not hold).  Used for caching.
    const void* identity() const noexcept { return node_.get(); }

    // Number of slash connectives in the tree.
    std::size_t connective_count() const noexcept;

    // Surface syntax: feature connectives bind tighter than slashes; slash
    // operands that are themselves slashes or compound terms are
    // parenthesised, e.g. "(s\np)/(np | ap)" and "s\(np & sg & 3)".
    std::string to_string() const;

private:
    struct Node {
        Kind kind;
        std::optional<FeatureTerm> term;         // Atomic
        std::shared_ptr<const Node> result, arg;  // Over/Under
    };

    explicit Category(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

    std::shared_ptr<const Node> node_;
};

// Parses the category surface syntax.  Slashes associate to the left; a
// parenthesised group may contain either a feature term or a full category,
// but `&`/`|` may only combine feature terms.  Throws ParseError.
Category parse_category(std::string_view text);

}  // namespace gramlab

#endif  // GRAMLAB_CATEGORY_HPP
