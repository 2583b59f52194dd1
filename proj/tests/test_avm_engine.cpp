#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "gramlab/avm_grammar.hpp"
#include "gramlab/feature_logic.hpp"
#include "support/generators.hpp"

using namespace gramlab;

namespace {

using FS = FeatureStructure;

const std::vector<std::string> kAttrs = {"dir", "obj", "noun", "verb"};
const std::vector<std::string> kValues = {"+", "-", "x"};

// the noun/verb and case decompositions used by the comparator
const FS kAP = FS::flat({{"noun", "+"}, {"verb", "+"}});
const FS kNP = FS::flat({{"noun", "+"}, {"verb", "-"}});
const FS kAcc = FS::flat({{"dir", "+"}, {"obj", "+"}});
const FS kDat = FS::flat({{"dir", "-"}, {"obj", "+"}});
const FS kNom = FS::flat({{"dir", "+"}, {"obj", "-"}});

AvmLexicon demo_lexicon() {
    AvmLexicon lex;
    auto verb = [](FS comps) {
        FS v;
        v.set("comps", std::move(comps));
        return v;
    };
    lex.words["Kim"] = {kNP, false};
    lex.words["Er"] = {kNom, false};
    lex.words["became"] = {verb(FS::flat({{"noun", "+"}})), false};
    lex.words["remained"] = {verb(FS::flat({{"noun", "+"}})), false};
    lex.words["grew"] = {verb(kAP), false};
    lex.words["wealthy"] = {kAP, false};
    lex.words["a"] = {FS{}, false};
    lex.words["Republican"] = {kNP, false};
    lex.words["and"] = {FS{}, true};
    lex.words["und"] = {FS{}, true};
    lex.words["slept"] = {FS{}, false};
    FS findet = verb(kAcc);
    findet.set("subj", kNom);
    FS hilft = verb(kDat);
    hilft.set("subj", kNom);
    lex.words["findet"] = {findet, false};
    lex.words["hilft"] = {hilft, false};
    lex.words["Männer"] = {kAcc, false};
    lex.words["Kindern"] = {kDat, false};
    lex.words["Frauen"] = {FS::flat({{"obj", "+"}}), false};
    FS runs;
    runs.set("subj", kNom);
    lex.words["runs"] = {runs, false};
    lex.words["him"] = {kAcc, false};
    return lex;
}

std::vector<std::string> tokens(std::initializer_list<const char*> words) {
    return {words.begin(), words.end()};
}

}  // namespace

TEST_CASE("subsumes") {
    CHECK(subsumes(FS::flat({{"noun", "+"}}), kAP));
    CHECK_FALSE(subsumes(kAP, kNP));  // verb:+ does not subsume verb:-
    CHECK(subsumes(FS{}, kAP));
    CHECK(subsumes(kAP, kAP));
    // nested values subsume recursively
    FS outer_loose, outer_tight;
    outer_loose.set("comps", FS::flat({{"obj", "+"}}));
    outer_tight.set("comps", kAcc);
    CHECK(subsumes(outer_loose, outer_tight));
    CHECK_FALSE(subsumes(outer_tight, outer_loose));
    // atomic vs nested values never subsume each other
    FS atomic_comps;
    atomic_comps.set("comps", "x");
    CHECK_FALSE(subsumes(atomic_comps, outer_tight));
}

TEST_CASE("generalize") {
    CHECK(generalize(kAP, kNP) == FS::flat({{"noun", "+"}}));
    CHECK(generalize(kAcc, kDat) == FS::flat({{"obj", "+"}}));
    CHECK(generalize(kAP, kAP) == kAP);
    CHECK(generalize(kAP, FS{}) == FS{});
    // nested: the generalization keeps the attribute with the recursive result
    FS v1, v2;
    v1.set("comps", kAcc);
    v2.set("comps", kDat);
    FS expected;
    expected.set("comps", FS::flat({{"obj", "+"}}));
    CHECK(generalize(v1, v2) == expected);
}

TEST_CASE("unify") {
    CHECK(unify(FS::flat({{"obj", "+"}}), kAcc) == kAcc);
    CHECK_FALSE(unify(FS::flat({{"dir", "+"}}), FS::flat({{"dir", "-"}})));
    CHECK(unify(FS{}, kAP) == kAP);
    CHECK(unify(kAP, FS{}) == kAP);
    FS v1, v2;
    v1.set("comps", FS::flat({{"dir", "+"}}));
    v2.set("comps", FS::flat({{"obj", "+"}}));
    FS merged;
    merged.set("comps", kAcc);
    CHECK(unify(v1, v2) == merged);
    v2.set("comps", FS::flat({{"dir", "-"}}));
    CHECK_FALSE(unify(v1, v2));
}

TEST_CASE("coord_node") {
    std::vector<FS> ap_np = {kAP, kNP};
    // an underspecified selector accepts the unlike coordination
    auto node = coord_node(ap_np, FS::flat({{"noun", "+"}}), CoordMode::Subsumption);
    REQUIRE(node);
    CHECK(*node == FS::flat({{"noun", "+"}}));
    // a fully specified selector rejects it
    CHECK_FALSE(coord_node(ap_np, kAP, CoordMode::Subsumption));
    CHECK_FALSE(coord_node(ap_np, kAP, CoordMode::Generalization));

    // mixed-case verb coordination against a fully specified complement
    std::vector<FS> verb_comps = {kAcc, kDat};
    CHECK_FALSE(coord_node(verb_comps, kAcc, CoordMode::Subsumption));
    CHECK_FALSE(coord_node(verb_comps, kDat, CoordMode::Subsumption));
    // ... and against the underspecified one
    auto frauen = coord_node(verb_comps, FS::flat({{"obj", "+"}}), CoordMode::Subsumption);
    REQUIRE(frauen);
    CHECK(*frauen == FS::flat({{"obj", "+"}}));

    CHECK_THROWS_AS(coord_node({}, FS{}, CoordMode::Subsumption), std::invalid_argument);
}

TEST_CASE("analyze reproduces the coordination judgments") {
    AvmLexicon lex = demo_lexicon();
    for (CoordMode mode : {CoordMode::Subsumption, CoordMode::Generalization}) {
        CAPTURE(static_cast<int>(mode));
        CHECK(analyze(tokens({"Kim", "became", "wealthy"}), lex, mode));
        CHECK(analyze(tokens({"Kim", "became", "a", "Republican"}), lex, mode));
        CHECK(analyze(tokens({"Kim", "became", "wealthy", "and", "a", "Republican"}), lex, mode));
        CHECK(analyze(tokens({"Kim", "grew", "wealthy"}), lex, mode));
        CHECK_FALSE(analyze(tokens({"Kim", "grew", "a", "Republican"}), lex, mode));
        CHECK_FALSE(
            analyze(tokens({"Kim", "grew", "wealthy", "and", "a", "Republican"}), lex, mode));
        // the documented over-acceptance of conjoined predicates
        CHECK(analyze(tokens({"Kim", "grew", "and", "remained", "wealthy", "and", "a",
                              "Republican"}),
                      lex, mode));
        CHECK_FALSE(analyze(tokens({"Er", "findet", "und", "hilft", "Männer"}), lex, mode));
        CHECK_FALSE(analyze(tokens({"Er", "findet", "und", "hilft", "Kindern"}), lex, mode));
        CHECK(analyze(tokens({"Er", "findet", "und", "hilft", "Frauen"}), lex, mode));
        // the documented over-acceptance of the double coordination
        CHECK(analyze(tokens({"Er", "findet", "und", "hilft", "Männer", "und", "Kindern"}), lex,
                      mode));
        // subject case clash, intransitives
        CHECK(analyze(tokens({"Kim", "slept"}), lex, mode));
        CHECK_FALSE(analyze(tokens({"him", "runs"}), lex, mode));
        CHECK_FALSE(analyze(tokens({"Kim", "slept", "wealthy"}), lex, mode));
        CHECK_FALSE(analyze(tokens({"Kim", "grew"}), lex, mode));
    }
}

TEST_CASE("analyze errors") {
    AvmLexicon lex = demo_lexicon();
    CHECK_THROWS_AS(analyze(tokens({"Kim", "sneezed"}), lex, CoordMode::Subsumption),
                    UnknownWordError);
    CHECK_THROWS_AS(analyze(tokens({"Kim"}), lex, CoordMode::Subsumption), BackboneError);
    CHECK_THROWS_AS(analyze(tokens({"and", "became", "wealthy"}), lex, CoordMode::Subsumption),
                    BackboneError);
    CHECK_THROWS_AS(
        analyze(tokens({"Kim", "became", "wealthy", "and"}), lex, CoordMode::Subsumption),
        BackboneError);
    CHECK_THROWS_AS(analyze(tokens({"Kim", "became", "wealthy", "and", "wealthy", "and",
                                    "wealthy"}),
                            lex, CoordMode::Subsumption),
                    BackboneError);
    try {
        analyze(tokens({"Kim", "sneezed"}), lex, CoordMode::Subsumption);
    } catch (const UnknownWordError& e) {
        CHECK(e.word() == "sneezed");
    }
}

TEST_CASE("subsumption is a partial order") {
    std::mt19937 rng(808);
    for (int i = 0; i < 300; ++i) {
        FS a = testgen::random_flat(rng, kAttrs, kValues);
        FS b = testgen::random_flat(rng, kAttrs, kValues);
        FS c = testgen::random_flat(rng, kAttrs, kValues);
        CHECK(subsumes(a, a));
        if (subsumes(a, b) && subsumes(b, a)) CHECK(a == b);
        if (subsumes(a, b) && subsumes(b, c)) CHECK(subsumes(a, c));
    }
}

TEST_CASE("generalize is the least upper bound, unify the greatest lower bound") {
    std::mt19937 rng(4242);
    for (int i = 0; i < 300; ++i) {
        FS a = testgen::random_flat(rng, kAttrs, kValues);
        FS b = testgen::random_flat(rng, kAttrs, kValues);
        FS c = testgen::random_flat(rng, kAttrs, kValues);

        FS gen = generalize(a, b);
        CHECK(subsumes(gen, a));
        CHECK(subsumes(gen, b));
        if (subsumes(c, a) && subsumes(c, b)) CHECK(subsumes(c, gen));

        auto u = unify(a, b);
        if (subsumes(a, c) && subsumes(b, c)) {
            REQUIRE(u);  // a common refinement forces compatibility
            CHECK(subsumes(*u, c));
        }
        if (u) {
            CHECK(subsumes(a, *u));
            CHECK(subsumes(b, *u));
        }
    }
}

TEST_CASE("subsumption mirrors entailment under the atom encoding") {
    auto encode = [](const FS& fs) {
        FeatureTerm out = FeatureTerm::atom("top");
        for (const auto& [attr, value] : fs) {
            std::string v = value.symbol() == "+"   ? "p"
                            : value.symbol() == "-" ? "m"
                                                    : value.symbol();
            out = FeatureTerm::conj(std::move(out), FeatureTerm::atom(attr + "_" + v));
        }
        return out;
    };
    std::mt19937 rng(65537);
    for (int i = 0; i < 300; ++i) {
        FS a = testgen::random_flat(rng, kAttrs, kValues);
        FS b = testgen::random_flat(rng, kAttrs, kValues);
        CHECK(subsumes(a, b) == entails(encode(b), encode(a)));
    }
}
