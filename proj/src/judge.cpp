#include "gramlab/judge.hpp"

#include "gramlab/proof_check.hpp"

namespace gramlab {

const char* engine_name(Engine e) noexcept {
    switch (e) {
        case Engine::Lcg: return "lcg";
        case Engine::AvmSubsumption: return "avm-sub";
        case Engine::AvmGeneralization: return "avm-gen";
    }
    return "?";
}

std::optional<Engine> engine_from_name(std::string_view name) noexcept {
    if (name == "lcg") return Engine::Lcg;
    if (name == "avm-sub") return Engine::AvmSubsumption;
    if (name == "avm-gen") return Engine::AvmGeneralization;
    return std::nullopt;
}

namespace {

Judgment judge_lcg(std::span<const std::string> tokens, const Lexicon& lexicon) {
    struct Slot {
        bool conj;
        std::string marker;
        const std::vector<Category>* choices;
    };
    std::vector<Slot> slots;
    for (const auto& token : tokens) {
        const LexiconEntry* e = lexicon.find(token);
        if (!e) throw UnknownWordError(token);
        if (e->is_conj) {
            slots.push_back({true, token, nullptr});
        } else if (e->lcg_categories.empty()) {
            throw UnknownWordError(token);  // known word, but no categories for this engine
        } else {
            slots.push_back({false, token, &e->lcg_categories});
        }
    }

    const Category goal = Category::atomic(FeatureTerm::atom("s"));

    // Every combination of lexical-ambiguity choices.
    std::vector<std::size_t> choice(slots.size(), 0);
    for (;;) {
        std::vector<SequentItem> items;
        std::vector<Category> lexical;
        for (std::size_t i = 0; i < slots.size(); ++i) {
            if (slots[i].conj) {
                items.emplace_back(Conj{slots[i].marker});
            } else {
                const Category& c = (*slots[i].choices)[choice[i]];
                items.emplace_back(c);
                lexical.push_back(c);
            }
        }
        CandidatePool pool = build_pool(lexical);
        if (auto proof = derive(items, goal, pool)) {
            if (!check_proof(*proof)) {
                throw std::logic_error("derive returned a proof that fails check_proof");
            }
            return Judgment{Verdict::Accept, std::move(proof)};
        }
        // advance the odometer
        std::size_t i = 0;
        for (; i < slots.size(); ++i) {
            if (slots[i].conj) continue;
            if (++choice[i] < slots[i].choices->size()) break;
            choice[i] = 0;
        }
        if (i == slots.size()) break;
    }
    return Judgment{Verdict::Reject, std::nullopt};
}

}  // namespace

Judgment judge(std::span<const std::string> tokens, const Lexicon& lexicon, Engine engine) {
    if (tokens.empty()) throw std::invalid_argument("judge: empty sentence");
    if (engine == Engine::Lcg) return judge_lcg(tokens, lexicon);
    CoordMode mode =
        engine == Engine::AvmSubsumption ? CoordMode::Subsumption : CoordMode::Generalization;
    bool ok = analyze(tokens, lexicon.avm_view(), mode);
    return Judgment{ok ? Verdict::Accept : Verdict::Reject, std::nullopt};
}

}  // namespace gramlab
