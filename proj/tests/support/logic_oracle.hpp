// Independently coded truth-table entailment, used as the oracle for the
// valuation-enumeration implementation.  Deliberately different machinery:
// postfix compilation with explicit stack evaluation, and odometer-style
// assignment enumeration over an ordered map.

#ifndef GRAMLAB_TESTS_LOGIC_ORACLE_HPP
#define GRAMLAB_TESTS_LOGIC_ORACLE_HPP

#include <map>
#include <string>
#include <vector>

#include "gramlab/feature_logic.hpp"

namespace gramlab::oracle {

enum class OpCode { PushAtom, And, Or };

struct Op {
    OpCode code;
    std::string atom;  // PushAtom only
};

inline void compile(const FeatureTerm& t, std::vector<Op>& out) {
    if (t.is_atom()) {
        out.push_back({OpCode::PushAtom, t.atom_name()});
        return;
    }
    compile(t.left(), out);
    compile(t.right(), out);
    out.push_back({t.kind() == FeatureTerm::Kind::And ? OpCode::And : OpCode::Or, {}});
}

inline bool eval(const std::vector<Op>& program, const std::map<std::string, bool>& env) {
    std::vector<bool> stack;
    for (const auto& op : program) {
        switch (op.code) {
            case OpCode::PushAtom: stack.push_back(env.at(op.atom)); break;
            case OpCode::And: {
                bool b = stack.back();
                stack.pop_back();
                stack.back() = stack.back() && b;
                break;
            }
            case OpCode::Or: {
                bool b = stack.back();
                stack.pop_back();
                stack.back() = stack.back() || b;
                break;
            }
        }
    }
    return stack.back();
}

inline void collect_atoms(const FeatureTerm& t, std::map<std::string, bool>& env) {
    if (t.is_atom()) {
        env.emplace(t.atom_name(), false);
        return;
    }
    collect_atoms(t.left(), env);
    collect_atoms(t.right(), env);
}

// advances the assignment; false once it wraps around to all-false
inline bool next_assignment(std::map<std::string, bool>& env) {
    for (auto& [atom, value] : env) {
        if (!value) {
            value = true;
            return true;
        }
        value = false;
    }
    return false;
}

inline bool entails(const FeatureTerm& phi, const FeatureTerm& psi) {
    std::vector<Op> p, q;
    compile(phi, p);
    compile(psi, q);
    std::map<std::string, bool> env;
    collect_atoms(phi, env);
    collect_atoms(psi, env);
    do {
        if (eval(p, env) && !eval(q, env)) return false;
    } while (next_assignment(env));
    return true;
}

}  // namespace gramlab::oracle

#endif  // GRAMLAB_TESTS_LOGIC_ORACLE_HPP
