#include "gramlab/avm_grammar.hpp"

#include <optional>
#include <vector>

namespace gramlab {

const AvmWord& AvmLexicon::require(std::string_view word) const {
    auto it = words.find(word);
    if (it == words.end()) throw UnknownWordError(std::string(word));
    return it->second;
}

namespace {

struct Shape {
    std::string subject;
    std::vector<std::string> verbs;                       // 1 or 2
    std::vector<std::vector<std::string>> complements;    // 0, 1 or 2 spans
};

Shape parse_backbone(std::span<const std::string> tokens, const AvmLexicon& lexicon) {
    if (tokens.size() < 2) throw BackboneError("need at least a subject and a verb");
    auto conj_at = [&](std::size_t i) { return lexicon.require(tokens[i]).is_conj; };

    if (conj_at(0)) throw BackboneError("subject position holds a conjunction");
    if (conj_at(1)) throw BackboneError("verb position holds a conjunction");

    Shape shape;
    shape.subject = tokens[0];
    std::size_t rest_from;
    if (tokens.size() >= 4 && conj_at(2) && !conj_at(3)) {
        shape.verbs = {tokens[1], tokens[3]};
        rest_from = 4;
    } else {
        shape.verbs = {tokens[1]};
        rest_from = 2;
    }

    std::vector<std::string> rest(tokens.begin() + rest_from, tokens.end());
    std::size_t split = rest.size();
    for (std::size_t i = 0; i < rest.size(); ++i) {
        if (lexicon.require(rest[i]).is_conj) {
            split = i;
            break;
        }
    }
    if (split == rest.size()) {
        if (!rest.empty()) shape.complements.push_back(std::move(rest));
        return shape;
    }
    std::vector<std::string> left(rest.begin(), rest.begin() + split);
    std::vector<std::string> right(rest.begin() + split + 1, rest.end());
    if (left.empty() || right.empty()) throw BackboneError("conjunction at a phrase edge");
    for (const auto& w : right) {
        if (lexicon.require(w).is_conj) throw BackboneError("more than one complement conjunction");
    }
    shape.complements.push_back(std::move(left));
    shape.complements.push_back(std::move(right));
    return shape;
}

// A phrase's features are the unification of its words' features.
std::optional<FeatureStructure> phrase_features(const std::vector<std::string>& span,
                                                const AvmLexicon& lexicon) {
    FeatureStructure out;
    for (const auto& word : span) {
        auto merged = unify(out, lexicon.require(word).features);
        if (!merged) return std::nullopt;
        out = std::move(*merged);
    }
    return out;
}

FeatureStructure nested_or_empty(const FeatureStructure& fs, std::string_view attr) {
    const auto* v = fs.find(attr);
    if (!v || v->is_atomic()) return {};
    return v->structure();
}

bool has_comps(const FeatureStructure& fs) {
    const auto* v = fs.find("comps");
    return v && !v->is_atomic();
}

}  // namespace

bool analyze(std::span<const std::string> tokens, const AvmLexicon& lexicon, CoordMode mode) {
    Shape shape = parse_backbone(tokens, lexicon);

    std::vector<FeatureStructure> verb_features;
    for (const auto& v : shape.verbs) verb_features.push_back(lexicon.require(v).features);
    const bool verb_coordination = verb_features.size() == 2;

    std::vector<FeatureStructure> comps_specs;
    for (const auto& vf : verb_features) comps_specs.push_back(nested_or_empty(vf, "comps"));
    FeatureStructure group_comps_spec = comps_specs[0];
    if (verb_coordination) group_comps_spec = generalize(comps_specs[0], comps_specs[1]);

    std::optional<FeatureStructure> complement;
    if (shape.complements.empty()) {
        // An intransitive use: a verb that specifies a complement is unsatisfied.
        for (const auto& vf : verb_features) {
            if (has_comps(vf)) return false;
        }
    } else {
        for (const auto& vf : verb_features) {
            if (!has_comps(vf)) return false;  // verb takes no complement
        }
        std::vector<FeatureStructure> spans;
        for (const auto& span : shape.complements) {
            auto f = phrase_features(span, lexicon);
            if (!f) return false;
            spans.push_back(std::move(*f));
        }
        if (spans.size() == 2) {
            auto node = coord_node(spans, group_comps_spec, mode);
            if (!node) return false;
            complement = std::move(*node);
        } else if (!verb_coordination) {
            auto merged = unify(comps_specs[0], spans[0]);
            if (!merged) return false;
            complement = std::move(*merged);
        } else {
            // the equation with the verb group's comps happens below
            complement = std::move(spans[0]);
        }
    }

    if (verb_coordination) {
        FeatureStructure context = complement ? *complement : FeatureStructure{};
        if (!coord_node(comps_specs, context, mode)) return false;
    }

    FeatureStructure subj_spec = nested_or_empty(verb_features[0], "subj");
    if (verb_coordination) {
        subj_spec = generalize(subj_spec, nested_or_empty(verb_features[1], "subj"));
    }
    const auto& subject = lexicon.require(shape.subject);
    if (subject.is_conj) throw BackboneError("subject position holds a conjunction");
    return unify(subject.features, subj_spec).has_value();
}

}  // namespace gramlab
