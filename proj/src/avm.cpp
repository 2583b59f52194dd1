#include "gramlab/avm.hpp"

#include <stdexcept>

namespace gramlab {

FeatureStructure::Value FeatureStructure::Value::atomic(std::string symbol) {
    Value v;
    v.symbol_ = std::move(symbol);
    return v;
}

FeatureStructure::Value FeatureStructure::Value::nested(FeatureStructure fs) {
    Value v;
    v.nested_ = std::make_shared<const FeatureStructure>(std::move(fs));
    return v;
}

const std::string& FeatureStructure::Value::symbol() const {
    if (nested_) throw std::logic_error("symbol on nested value");
    return symbol_;
}

const FeatureStructure& FeatureStructure::Value::structure() const {
    if (!nested_) throw std::logic_error("structure on atomic value");
    return *nested_;
}

bool FeatureStructure::Value::operator==(const Value& other) const noexcept {
    if (is_atomic() != other.is_atomic()) return false;
    if (is_atomic()) return symbol_ == other.symbol_;
    return *nested_ == *other.nested_;
}

FeatureStructure FeatureStructure::flat(
    std::initializer_list<std::pair<std::string, std::string>> entries) {
    FeatureStructure fs;
    for (const auto& [attr, sym] : entries) fs.set(attr, sym);
    return fs;
}

void FeatureStructure::set(std::string attribute, std::string symbol) {
    entries_.insert_or_assign(std::move(attribute), Value::atomic(std::move(symbol)));
}

void FeatureStructure::set(std::string attribute, FeatureStructure nested) {
    entries_.insert_or_assign(std::move(attribute), Value::nested(std::move(nested)));
}

const FeatureStructure::Value* FeatureStructure::find(std::string_view attribute) const noexcept {
    auto it = entries_.find(attribute);
    return it == entries_.end() ? nullptr : &it->second;
}

bool FeatureStructure::operator==(const FeatureStructure& other) const noexcept {
    return entries_ == other.entries_;
}

std::string FeatureStructure::to_string() const {
    std::string out = "{";
    bool first = true;
    for (const auto& [attr, value] : entries_) {
        if (!first) out += ", ";
        first = false;
        out += attr;
        out += ':';
        out += value.is_atomic() ? value.symbol() : value.structure().to_string();
    }
    out += '}';
    return out;
}

bool subsumes(const FeatureStructure& phi, const FeatureStructure& psi) {
    for (const auto& [attr, value] : phi) {
        const auto* other = psi.find(attr);
        if (!other) return false;
        if (value.is_atomic() != other->is_atomic()) return false;
        if (value.is_atomic()) {
            if (value.symbol() != other->symbol()) return false;
        } else if (!subsumes(value.structure(), other->structure())) {
            return false;
        }
    }
    return true;
}

FeatureStructure generalize(const FeatureStructure& phi, const FeatureStructure& psi) {
    FeatureStructure out;
    for (const auto& [attr, value] : phi) {
        const auto* other = psi.find(attr);
        if (!other || value.is_atomic() != other->is_atomic()) continue;
        if (value.is_atomic()) {
            if (value.symbol() == other->symbol()) out.set(attr, value.symbol());
        } else {
            out.set(attr, generalize(value.structure(), other->structure()));
        }
    }
    return out;
}

std::optional<FeatureStructure> unify(const FeatureStructure& phi, const FeatureStructure& psi) {
    FeatureStructure out;
    for (const auto& [attr, value] : phi) {
        const auto* other = psi.find(attr);
        if (!other) {
            if (value.is_atomic()) {
                out.set(attr, value.symbol());
            } else {
                out.set(attr, value.structure());
            }
            continue;
        }
        if (value.is_atomic() != other->is_atomic()) return std::nullopt;
        if (value.is_atomic()) {
            if (value.symbol() != other->symbol()) return std::nullopt;
            out.set(attr, value.symbol());
        } else {
            auto merged = unify(value.structure(), other->structure());
            if (!merged) return std::nullopt;
            out.set(attr, std::move(*merged));
        }
    }
    for (const auto& [attr, value] : psi) {
        if (phi.find(attr)) continue;
        if (value.is_atomic()) {
            out.set(attr, value.symbol());
        } else {
            out.set(attr, value.structure());
        }
    }
    return out;
}

std::optional<FeatureStructure> coord_node(std::span<const FeatureStructure> conjuncts,
                                           const FeatureStructure& context_spec, CoordMode mode) {
    (void)mode;
    if (conjuncts.empty()) throw std::invalid_argument("coord_node: no conjuncts");
    FeatureStructure common = conjuncts[0];
    for (std::size_t i = 1; i < conjuncts.size(); ++i) {
        common = generalize(common, conjuncts[i]);
    }
    auto node = unify(context_spec, common);
    if (!node) return std::nullopt;
    for (const auto& conjunct : conjuncts) {
        if (!subsumes(*node, conjunct)) return std::nullopt;
    }
    return node;
}

}  // namespace gramlab
