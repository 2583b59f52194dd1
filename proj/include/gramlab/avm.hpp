// Flat attribute-value structures with subsumption, generalization and
// unification, and the coordination node computation shared by the
// subsumption and generalization accounts.  An absent attribute means
// "unspecified", never "negative".

#ifndef GRAMLAB_AVM_HPP
#define GRAMLAB_AVM_HPP

#include <initializer_list>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>

namespace gramlab {

class FeatureStructure {
public:
    // Atomic symbol, or one nested structure (used for a verb's complement
    // and subject specifications).
    class Value {
    public:
        static Value atomic(std::string symbol);
        static Value nested(FeatureStructure fs);

        bool is_atomic() const noexcept { return nested_ == nullptr; }
        const std::string& symbol() const;
        const FeatureStructure& structure() const;

        bool operator==(const Value& other) const noexcept;

    private:
        std::string symbol_;
        std::shared_ptr<const FeatureStructure> nested_;
    };

    FeatureStructure() = default;

    // {{"dir", "+"}, {"obj", "-"}}
    static FeatureStructure flat(
        std::initializer_list<std::pair<std::string, std::string>> entries);

    void set(std::string attribute, std::string symbol);
    void set(std::string attribute, FeatureStructure nested);

    const Value* find(std::string_view attribute) const noexcept;
    bool empty() const noexcept { return entries_.empty(); }
    std::size_t size() const noexcept { return entries_.size(); }

    auto begin() const noexcept { return entries_.begin(); }
    auto end() const noexcept { return entries_.end(); }

    bool operator==(const FeatureStructure& other) const noexcept;
    bool operator!=(const FeatureStructure& other) const noexcept { return !(*this == other); }

    std::string to_string() const;  // "{dir:+, obj:-}"

private:
    std::map<std::string, Value, std::less<>> entries_;
};

// phi subsumes psi ("phi is more general than or equal to psi"): every
// attribute of phi is present in psi with an equal atomic value, or with a
// nested value that phi's nested value subsumes.
bool subsumes(const FeatureStructure& phi, const FeatureStructure& psi);

// Most specific structure subsuming both: the attributes on which the inputs
// agree, recursively for nested values.
FeatureStructure generalize(const FeatureStructure& phi, const FeatureStructure& psi);

// Attribute-wise union; absent when an attribute carries clashing values.
// Definedness is the consistency notion of unification-based agreement.
std::optional<FeatureStructure> unify(const FeatureStructure& phi, const FeatureStructure& psi);

enum class CoordMode { Subsumption, Generalization };

// Coordination node: X0 = unify(context_spec, generalization of conjuncts),
// defined iff that unification succeeds and X0 subsumes every conjunct.  The
// generalization of the conjuncts satisfies both coordination conditions, so
// the two modes share this computation; the mode is kept for labelling.
std::optional<FeatureStructure> coord_node(std::span<const FeatureStructure> conjuncts,
                                           const FeatureStructure& context_spec, CoordMode mode);

}  // namespace gramlab

#endif  // GRAMLAB_AVM_HPP
