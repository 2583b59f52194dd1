#include "gramlab/category.hpp"

#include <cctype>

namespace gramlab {

Category Category::atomic(FeatureTerm term) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atomic;
    node->term = std::move(term);
    return Category(std::move(node));
}

Category Category::over(Category result, Category argument) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Over;
    node->result = std::move(result.node_);
    node->arg = std::move(argument.node_);
    return Category(std::move(node));
}

Category Category::under(Category result, Category argument) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Under;
    node->result = std::move(result.node_);
    node->arg = std::move(argument.node_);
    return Category(std::move(node));
}

const FeatureTerm& Category::term() const {
    if (node_->kind != Kind::Atomic) throw std::logic_error("term on slash category");
    return *node_->term;
}

Category Category::result() const {
    if (node_->kind == Kind::Atomic) throw std::logic_error("result on atomic category");
    return Category(node_->result);
}

Category Category::argument() const {
    if (node_->kind == Kind::Atomic) throw std::logic_error("argument on atomic category");
    return Category(node_->arg);
}

bool Category::operator==(const Category& other) const noexcept {
    struct Cmp {
        static bool eq(const Node* a, const Node* b) {
            if (a == b) return true;
            if (a->kind != b->kind) return false;
            if (a->kind == Kind::Atomic) return *a->term == *b->term;
            return eq(a->result.get(), b->result.get()) && eq(a->arg.get(), b->arg.get());
        }
    };
    return Cmp::eq(node_.get(), other.node_.get());
}

std::size_t Category::connective_count() const noexcept {
    if (is_atomic()) return 0;
    return 1 + result().connective_count() + argument().connective_count();
}

namespace {

// A slash operand needs parentheses unless it is a bare atom.
void print_operand(const Category& c, std::string& out) {
    if (c.is_atomic() && c.term().is_atom()) {
        out += c.term().atom_name();
    } else if (c.is_atomic()) {
        out += '(';
        out += c.term().to_string();
        out += ')';
    } else {
        out += '(';
        out += c.to_string();
        out += ')';
    }
}

}  // namespace

std::string Category::to_string() const {
    if (is_atomic()) return term().to_string();
    std::string out;
    print_operand(result(), out);
    out += kind() == Kind::Over ? '/' : '\\';
    print_operand(argument(), out);
    return out;
}

// ── parser ──────────────────────────────────────────────────────────────────
// category := factor (('/' | '\') factor)*        left-associative
// factor   := orTerm
// orTerm   := andTerm ('|' andTerm)*               operands must be atomic
// andTerm  := primary ('&' primary)*               operands must be atomic
// primary  := ATOM | '(' category ')'

namespace {

struct CategoryParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    const FeatureTerm& require_term(const Category& c, std::size_t at) {
        if (!c.is_atomic()) {
            throw ParseError("feature connective applied to a slash category", at);
        }
        return c.term();
    }

    Category parse_category() {
        Category c = parse_or();
        for (;;) {
            char op = peek();
            if (op != '/' && op != '\\') break;
            ++pos;
            Category arg = parse_or();
            c = op == '/' ? Category::over(std::move(c), std::move(arg))
                          : Category::under(std::move(c), std::move(arg));
        }
        return c;
    }

    Category parse_or() {
        std::size_t at = pos;
        Category c = parse_and();
        while (peek() == '|') {
            ++pos;
            std::size_t rhs_at = pos;
            Category rhs = parse_and();
            c = Category::atomic(
                FeatureTerm::disj(require_term(c, at), require_term(rhs, rhs_at)));
        }
        return c;
    }

    Category parse_and() {
        std::size_t at = pos;
        Category c = parse_primary();
        while (peek() == '&') {
            ++pos;
            std::size_t rhs_at = pos;
            Category rhs = parse_primary();
            c = Category::atomic(
                FeatureTerm::conj(require_term(c, at), require_term(rhs, rhs_at)));
        }
        return c;
    }

    Category parse_primary() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of category", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            Category inner = parse_category();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return inner;
        }
        std::size_t start = pos;
        while (pos < text.size()) {
            char d = text[pos];
            if ((d >= 'a' && d <= 'z') || (d >= '0' && d <= '9') || d == '_') {
                ++pos;
            } else {
                break;
            }
        }
        if (pos == start) throw ParseError(std::string("unexpected character '") + c + "'", pos);
        return Category::atomic(FeatureTerm::atom(std::string(text.substr(start, pos - start))));
    }
};

}  // namespace

Category parse_category(std::string_view text) {
    CategoryParser p{text};
    Category c = p.parse_category();
    if (!p.at_end()) throw ParseError("trailing input after category", p.pos);
    return c;
}

}  // namespace gramlab
