#include "gramlab/feature_logic.hpp"

#include <algorithm>
#include <cctype>

namespace gramlab {

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error(message + " (at position " + std::to_string(position) + ")"),
      position_(position) {}

// ── construction ────────────────────────────────────────────────────────────

FeatureTerm FeatureTerm::atom(std::string name) {
    if (!is_valid_atom_name(name)) {
        throw std::invalid_argument("invalid atom name: '" + name + "'");
    }
    auto node = std::make_shared<Node>();
    node->kind = Kind::Atom;
    node->name = std::move(name);
    return FeatureTerm(std::move(node));
}

FeatureTerm FeatureTerm::conj(FeatureTerm left, FeatureTerm right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::And;
    node->left = std::move(left.node_);
    node->right = std::move(right.node_);
    return FeatureTerm(std::move(node));
}

FeatureTerm FeatureTerm::disj(FeatureTerm left, FeatureTerm right) {
    auto node = std::make_shared<Node>();
    node->kind = Kind::Or;
    node->left = std::move(left.node_);
    node->right = std::move(right.node_);
    return FeatureTerm(std::move(node));
}

const std::string& FeatureTerm::atom_name() const {
    if (node_->kind != Kind::Atom) throw std::logic_error("atom_name on non-atom");
    return node_->name;
}

FeatureTerm FeatureTerm::left() const {
    if (node_->kind == Kind::Atom) throw std::logic_error("left on atom");
    return FeatureTerm(node_->left);
}

FeatureTerm FeatureTerm::right() const {
    if (node_->kind == Kind::Atom) throw std::logic_error("right on atom");
    return FeatureTerm(node_->right);
}

bool is_valid_atom_name(std::string_view name) noexcept {
    if (name.empty()) return false;
    for (char c : name) {
        bool ok = (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_';
        if (!ok) return false;
    }
    return true;
}

// ── structural equality, printing, atom collection ─────────────────────────

bool FeatureTerm::operator==(const FeatureTerm& other) const noexcept {
    struct Cmp {
        static bool eq(const FeatureTerm::Node* a, const FeatureTerm::Node* b) {
            if (a == b) return true;
            if (a->kind != b->kind) return false;
            if (a->kind == Kind::Atom) return a->name == b->name;
            return eq(a->left.get(), b->left.get()) && eq(a->right.get(), b->right.get());
        }
    };
    return Cmp::eq(node_.get(), other.node_.get());
}

namespace {

// Precedence: Or = 1, And = 2, Atom = 3.  A child is parenthesised when its
// precedence is lower than the parent's, or equal on the right-hand side
// (operators associate to the left in the surface syntax).
int term_prec(FeatureTerm::Kind k) {
    switch (k) {
        case FeatureTerm::Kind::Or: return 1;
        case FeatureTerm::Kind::And: return 2;
        case FeatureTerm::Kind::Atom: return 3;
    }
    return 3;
}

void print_term(const FeatureTerm& t, int parent_prec, bool right_side, std::string& out) {
    int prec = term_prec(t.kind());
    bool parens = prec < parent_prec || (prec == parent_prec && right_side);
    if (parens) out += '(';
    if (t.kind() == FeatureTerm::Kind::Atom) {
        out += t.atom_name();
    } else {
        const char* op = t.kind() == FeatureTerm::Kind::And ? " & " : " | ";
        print_term(t.left(), prec, false, out);
        out += op;
        print_term(t.right(), prec, true, out);
    }
    if (parens) out += ')';
}

void collect_atoms(const FeatureTerm& t, std::vector<std::string>& out) {
    if (t.is_atom()) {
        out.push_back(t.atom_name());
    } else {
        collect_atoms(t.left(), out);
        collect_atoms(t.right(), out);
    }
}

}  // namespace

std::string FeatureTerm::to_string() const {
    std::string out;
    print_term(*this, 0, false, out);
    return out;
}

std::vector<std::string> FeatureTerm::atoms() const {
    std::vector<std::string> out;
    collect_atoms(*this, out);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::size_t FeatureTerm::node_count() const noexcept {
    if (is_atom()) return 1;
    return 1 + left().node_count() + right().node_count();
}

// ── parser ──────────────────────────────────────────────────────────────────
// term   := or
// or     := and ('|' and)*
// and    := factor ('&' factor)*
// factor := ATOM | '(' term ')'

namespace {

struct TermParser {
    std::string_view text;
    std::size_t pos = 0;

    void skip_ws() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    }

    bool at_end() {
        skip_ws();
        return pos >= text.size();
    }

    char peek() {
        skip_ws();
        return pos < text.size() ? text[pos] : '\0';
    }

    FeatureTerm parse_or() {
        FeatureTerm t = parse_and();
        while (peek() == '|') {
            ++pos;
            t = FeatureTerm::disj(std::move(t), parse_and());
        }
        return t;
    }

    FeatureTerm parse_and() {
        FeatureTerm t = parse_factor();
        while (peek() == '&') {
            ++pos;
            t = FeatureTerm::conj(std::move(t), parse_factor());
        }
        return t;
    }

    FeatureTerm parse_factor() {
        skip_ws();
        if (pos >= text.size()) throw ParseError("unexpected end of term", pos);
        char c = text[pos];
        if (c == '(') {
            ++pos;
            FeatureTerm t = parse_or();
            if (peek() != ')') throw ParseError("expected ')'", pos);
            ++pos;
            return t;
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
        return FeatureTerm::atom(std::string(text.substr(start, pos - start)));
    }
};

}  // namespace

FeatureTerm parse_term(std::string_view text) {
    TermParser p{text};
    FeatureTerm t = p.parse_or();
    if (!p.at_end()) throw ParseError("trailing input after term", p.pos);
    return t;
}

// ── semantics ───────────────────────────────────────────────────────────────

Valuation::Valuation(std::vector<std::string> atoms, std::uint32_t bits)
    : atoms_(std::move(atoms)), bits_(bits) {
    if (!std::is_sorted(atoms_.begin(), atoms_.end()) ||
        std::adjacent_find(atoms_.begin(), atoms_.end()) != atoms_.end()) {
        throw std::invalid_argument("valuation atom set must be sorted and duplicate-free");
    }
    if (atoms_.size() > 32) {
        throw std::length_error("valuation atom set exceeds 32 atoms");
    }
}

bool Valuation::value(std::string_view atom) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), atom);
    if (it == atoms_.end() || *it != atom) {
        throw std::invalid_argument("atom not in valuation: '" + std::string(atom) + "'");
    }
    return (bits_ >> (it - atoms_.begin())) & 1u;
}

namespace {

constexpr std::size_t kMaxEnumAtoms = 20;

bool eval(const FeatureTerm& t, const std::vector<std::string>& atoms, std::uint32_t bits) {
    switch (t.kind()) {
        case FeatureTerm::Kind::Atom: {
            auto it = std::lower_bound(atoms.begin(), atoms.end(), t.atom_name());
            return (bits >> (it - atoms.begin())) & 1u;
        }
        case FeatureTerm::Kind::And:
            return eval(t.left(), atoms, bits) && eval(t.right(), atoms, bits);
        case FeatureTerm::Kind::Or:
            return eval(t.left(), atoms, bits) || eval(t.right(), atoms, bits);
    }
    return false;
}

void check_enum_size(const std::vector<std::string>& atoms) {
    if (atoms.size() > kMaxEnumAtoms) {
        throw std::length_error("atom set too large for valuation enumeration (" +
                                std::to_string(atoms.size()) + " atoms)");
    }
}

}  // namespace

bool satisfies(const FeatureTerm& term, const Valuation& valuation) {
    // Every atom of `term` must belong to the valuation's set.
    for (const auto& a : term.atoms()) (void)valuation.value(a);
    return eval(term, valuation.atoms(), valuation.bits());
}

std::vector<std::string> joint_atoms(const FeatureTerm& phi, const FeatureTerm& psi) {
    std::vector<std::string> out = phi.atoms();
    std::vector<std::string> more = psi.atoms();
    out.insert(out.end(), more.begin(), more.end());
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool entails(const FeatureTerm& phi, const FeatureTerm& psi) {
    std::vector<std::string> atoms = joint_atoms(phi, psi);
    check_enum_size(atoms);
    std::uint32_t limit = static_cast<std::uint32_t>(1u << atoms.size());
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        if (eval(phi, atoms, bits) && !eval(psi, atoms, bits)) return false;
    }
    return true;
}

bool consistent(const FeatureTerm& phi, const FeatureTerm& psi) {
    std::vector<std::string> atoms = joint_atoms(phi, psi);
    check_enum_size(atoms);
    std::uint32_t limit = static_cast<std::uint32_t>(1u << atoms.size());
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        if (eval(phi, atoms, bits) && eval(psi, atoms, bits)) return true;
    }
    return false;
}

bool fixes(const FeatureTerm& phi, std::string_view atom) {
    if (!is_valid_atom_name(atom)) {
        throw std::invalid_argument("invalid atom name: '" + std::string(atom) + "'");
    }
    std::vector<std::string> atoms = phi.atoms();
    std::string chi(atom);
    if (!std::binary_search(atoms.begin(), atoms.end(), chi)) {
        atoms.push_back(chi);
        std::sort(atoms.begin(), atoms.end());
    }
    check_enum_size(atoms);
    auto it = std::lower_bound(atoms.begin(), atoms.end(), chi);
    std::uint32_t chi_mask = 1u << (it - atoms.begin());

    bool seen_true = false, seen_false = false;
    std::uint32_t limit = static_cast<std::uint32_t>(1u << atoms.size());
    for (std::uint32_t bits = 0; bits < limit; ++bits) {
        if (!eval(phi, atoms, bits)) continue;
        if (bits & chi_mask) {
            seen_true = true;
        } else {
            seen_false = true;
        }
        if (seen_true && seen_false) return false;
    }
    return true;  // negation-free terms are satisfiable, so the models agree
}

bool equivalent(const FeatureTerm& phi, const FeatureTerm& psi) {
    return entails(phi, psi) && entails(psi, phi);
}

}  // namespace gramlab
