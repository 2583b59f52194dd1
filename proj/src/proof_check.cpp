#include "gramlab/proof_check.hpp"

namespace gramlab {

namespace {

bool span_equal(const std::vector<SequentItem>& items, std::size_t lo, std::size_t hi,
                const std::vector<SequentItem>& other) {
    if (hi - lo != other.size()) return false;
    for (std::size_t k = 0; k < other.size(); ++k) {
        if (!items_equal(items[lo + k], other[k])) return false;
    }
    return true;
}

bool check_axiom(const ProofTree& p) {
    if (!p.premises.empty()) return false;
    const auto& ante = p.conclusion.antecedent;
    if (ante.size() != 1 || is_conj(ante[0])) return false;
    const Category& c = as_category(ante[0]);
    const Category& goal = p.conclusion.succedent;
    return c.is_atomic() && goal.is_atomic() && entails(c.term(), goal.term());
}

bool check_over_right(const ProofTree& p) {
    if (p.premises.size() != 1) return false;
    const Sequent& premise = p.premises[0].conclusion;
    const auto& ante = p.conclusion.antecedent;
    const Category& goal = p.conclusion.succedent;
    if (goal.kind() != Category::Kind::Over) return false;
    if (ante.empty()) return false;  // introduction needs a nonempty context
    if (premise.antecedent.size() != ante.size() + 1) return false;
    if (!span_equal(premise.antecedent, 0, ante.size(), ante)) return false;
    const SequentItem& hyp = premise.antecedent.back();
    if (is_conj(hyp) || as_category(hyp) != goal.argument()) return false;
    return premise.succedent == goal.result();
}

bool check_under_right(const ProofTree& p) {
    if (p.premises.size() != 1) return false;
    const Sequent& premise = p.premises[0].conclusion;
    const auto& ante = p.conclusion.antecedent;
    const Category& goal = p.conclusion.succedent;
    if (goal.kind() != Category::Kind::Under) return false;
    if (ante.empty()) return false;
    if (premise.antecedent.size() != ante.size() + 1) return false;
    const SequentItem& hyp = premise.antecedent.front();
    if (is_conj(hyp) || as_category(hyp) != goal.argument()) return false;
    if (!span_equal(premise.antecedent, 1, premise.antecedent.size(), ante)) return false;
    return premise.succedent == goal.result();
}

// D1, X/Y, G, D2 |- Z  from  G |- Y  and  D1, X, D2 |- Z.
bool check_over_left(const ProofTree& p) {
    if (p.premises.size() != 2) return false;
    const Sequent& arg = p.premises[0].conclusion;
    const Sequent& rest = p.premises[1].conclusion;
    const auto& ante = p.conclusion.antecedent;
    if (rest.succedent != p.conclusion.succedent) return false;
    const std::size_t g = arg.antecedent.size();
    if (g == 0 || ante.size() != rest.antecedent.size() + g) return false;
    for (std::size_t k = 0; k + 1 + g <= ante.size() && k < rest.antecedent.size(); ++k) {
        if (is_conj(ante[k]) || is_conj(rest.antecedent[k])) {
            if (!items_equal(ante[k], rest.antecedent[k])) return false;  // prefix must match
            continue;
        }
        const Category& fn = as_category(ante[k]);
        const Category& body = as_category(rest.antecedent[k]);
        bool shape = fn.kind() == Category::Kind::Over && fn.result() == body &&
                     fn.argument() == arg.succedent;
        if (shape && span_equal(ante, k + 1, k + 1 + g, arg.antecedent) &&
            span_equal(ante, k + 1 + g, ante.size(),
                       std::vector<SequentItem>(rest.antecedent.begin() + k + 1,
                                                rest.antecedent.end()))) {
            return true;
        }
        if (!items_equal(ante[k], rest.antecedent[k])) return false;
    }
    return false;
}

// D1, G, X\Y, D2 |- Z  from  G |- Y  and  D1, X, D2 |- Z.
bool check_under_left(const ProofTree& p) {
    if (p.premises.size() != 2) return false;
    const Sequent& arg = p.premises[0].conclusion;
    const Sequent& rest = p.premises[1].conclusion;
    const auto& ante = p.conclusion.antecedent;
    if (rest.succedent != p.conclusion.succedent) return false;
    const std::size_t g = arg.antecedent.size();
    if (g == 0 || ante.size() != rest.antecedent.size() + g) return false;
    // k is the length of D1; the active formula sits at k + g in the conclusion.
    for (std::size_t k = 0; k < rest.antecedent.size(); ++k) {
        const std::size_t fn_at = k + g;
        if (fn_at < ante.size() && !is_conj(ante[fn_at]) && !is_conj(rest.antecedent[k])) {
            const Category& fn = as_category(ante[fn_at]);
            const Category& body = as_category(rest.antecedent[k]);
            bool shape = fn.kind() == Category::Kind::Under && fn.result() == body &&
                         fn.argument() == arg.succedent;
            if (shape && span_equal(ante, k, k + g, arg.antecedent) &&
                span_equal(ante, fn_at + 1, ante.size(),
                           std::vector<SequentItem>(rest.antecedent.begin() + k + 1,
                                                    rest.antecedent.end()))) {
                return true;
            }
        }
        if (!items_equal(ante[k], rest.antecedent[k])) return false;  // D1 must match
    }
    return false;
}

// G1, D1, conj, D2, G2 |- Z  from  D1 |- A,  D2 |- A,  G1, A, G2 |- Z.
// The conjunct premises must range over exactly their span of the conclusion:
// that is the island condition.
bool check_coord(const ProofTree& p) {
    if (p.premises.size() != 3 || !p.coord_target) return false;
    const Sequent& left = p.premises[0].conclusion;
    const Sequent& right = p.premises[1].conclusion;
    const Sequent& cont = p.premises[2].conclusion;
    const Category& target = *p.coord_target;
    if (left.succedent != target || right.succedent != target) return false;
    if (cont.succedent != p.conclusion.succedent) return false;
    const auto& ante = p.conclusion.antecedent;
    const std::size_t d1 = left.antecedent.size();
    const std::size_t d2 = right.antecedent.size();
    if (d1 == 0 || d2 == 0) return false;
    for (std::size_t ci = 0; ci < ante.size(); ++ci) {
        if (!is_conj(ante[ci])) continue;
        if (ci < d1 || ci + 1 + d2 > ante.size()) continue;
        const std::size_t g1 = ci - d1;
        if (!span_equal(ante, g1, ci, left.antecedent)) continue;
        if (!span_equal(ante, ci + 1, ci + 1 + d2, right.antecedent)) continue;
        if (cont.antecedent.size() != g1 + 1 + (ante.size() - (ci + 1 + d2)))
            continue;
        if (!span_equal(ante, 0, g1,
                        std::vector<SequentItem>(cont.antecedent.begin(),
                                                 cont.antecedent.begin() + g1)))
            continue;
        if (is_conj(cont.antecedent[g1]) || as_category(cont.antecedent[g1]) != target) continue;
        if (!span_equal(ante, ci + 1 + d2, ante.size(),
                        std::vector<SequentItem>(cont.antecedent.begin() + g1 + 1,
                                                 cont.antecedent.end())))
            continue;
        return true;
    }
    return false;
}

bool check_node(const ProofTree& p) {
    if (p.conclusion.antecedent.empty()) return false;
    if ((p.rule == Rule::Coord) != p.coord_target.has_value()) return false;
    switch (p.rule) {
        case Rule::Axiom: return check_axiom(p);
        case Rule::OverRight: return check_over_right(p);
        case Rule::UnderRight: return check_under_right(p);
        case Rule::OverLeft: return check_over_left(p);
        case Rule::UnderLeft: return check_under_left(p);
        case Rule::Coord: return check_coord(p);
    }
    return false;
}

}  // namespace

bool check_proof(const ProofTree& proof) {
    if (!check_node(proof)) return false;
    for (const auto& premise : proof.premises) {
        if (!check_proof(premise)) return false;
    }
    return true;
}

}  // namespace gramlab
