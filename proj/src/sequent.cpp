#include "gramlab/sequent.hpp"

namespace gramlab {

bool items_equal(const SequentItem& a, const SequentItem& b) noexcept {
    if (a.index() != b.index()) return false;
    if (is_conj(a)) return std::get<Conj>(a) == std::get<Conj>(b);
    return as_category(a) == as_category(b);
}

std::string item_to_string(const SequentItem& item) {
    if (is_conj(item)) return "<" + std::get<Conj>(item).marker + ">";
    return as_category(item).to_string();
}

bool Sequent::operator==(const Sequent& other) const noexcept {
    if (antecedent.size() != other.antecedent.size()) return false;
    for (std::size_t i = 0; i < antecedent.size(); ++i) {
        if (!items_equal(antecedent[i], other.antecedent[i])) return false;
    }
    return succedent == other.succedent;
}

std::string Sequent::to_string() const {
    std::string out;
    for (std::size_t i = 0; i < antecedent.size(); ++i) {
        if (i > 0) out += ", ";
        out += item_to_string(antecedent[i]);
    }
    out += " |- ";
    out += succedent.to_string();
    return out;
}

const char* rule_name(Rule rule) noexcept {
    switch (rule) {
        case Rule::Axiom: return "Ax";
        case Rule::OverLeft: return "/L";
        case Rule::OverRight: return "/R";
        case Rule::UnderLeft: return "\\L";
        case Rule::UnderRight: return "\\R";
        case Rule::Coord: return "co";
    }
    return "?";
}

}  // namespace gramlab
