#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "gramlab/proof_check.hpp"
#include "gramlab/render.hpp"
#include "gramlab/report.hpp"

using namespace gramlab;

namespace {

const char* kLexiconPath = GRAMLAB_DATA_DIR "/agreement.lex";
const char* kCorpusPath = GRAMLAB_DATA_DIR "/agreement_corpus.tsv";

std::vector<std::string> tokens(std::initializer_list<const char*> words) {
    return {words.begin(), words.end()};
}

}  // namespace

TEST_CASE("load_lexicon parses entries, ambiguity and conjunction markers") {
    Lexicon lex = Lexicon::parse(
        "Kim := np & sg & 3\n"
        "soundly := (s\\(np&sg))\\(s\\(np&sg)) ; (s\\(np&pl))\\(s\\(np&pl))\n"
        "und :conj\n"
        "Kim :a= {noun:+, verb:-}\n");
    const LexiconEntry* kim = lex.find("Kim");
    REQUIRE(kim);
    REQUIRE(kim->lcg_categories.size() == 1);
    CHECK(kim->lcg_categories[0] == parse_category("np & sg & 3"));
    REQUIRE(kim->avm);
    CHECK(*kim->avm == FeatureStructure::flat({{"noun", "+"}, {"verb", "-"}}));

    const LexiconEntry* soundly = lex.find("soundly");
    REQUIRE(soundly);
    CHECK(soundly->lcg_categories.size() == 2);
    CHECK(soundly->lcg_categories[0] == parse_category("(s\\(np & sg))\\(s\\(np & sg))"));

    const LexiconEntry* und = lex.find("und");
    REQUIRE(und);
    CHECK(und->is_conj);
    CHECK(und->lcg_categories.empty());
    CHECK_FALSE(lex.find("missing"));
}

TEST_CASE("load_lexicon merges duplicate word lines into ambiguity") {
    Lexicon lex = Lexicon::parse(
        "run := s\\np\n"
        "run := (s\\np)/np\n"
        "run := s\\np\n");  // exact repeats collapse
    REQUIRE(lex.find("run"));
    CHECK(lex.find("run")->lcg_categories.size() == 2);
}

TEST_CASE("load_lexicon reports errors with line numbers") {
    try {
        Lexicon::parse("Kim := np\n\nbad := np &\n");
        FAIL("expected LexiconError");
    } catch (const LexiconError& e) {
        CHECK(e.line() == 3);
    }
    try {
        Lexicon::parse("und :conj\nund := np\n");
        FAIL("expected LexiconError");
    } catch (const LexiconError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(Lexicon::parse("x := np\nx :conj\n"), LexiconError);
    CHECK_THROWS_AS(Lexicon::parse("word\n"), LexiconError);
    CHECK_THROWS_AS(Lexicon::parse("w :a= {a:+,}\n"), LexiconError);
    CHECK_THROWS_AS(Lexicon::parse("w :a= {a:{b:{c:+}}}\n"), LexiconError);  // too deep
    CHECK_THROWS_AS(load_lexicon(GRAMLAB_DATA_DIR "/no_such_file.lex"), std::runtime_error);
}

TEST_CASE("judge dispatches over both engines") {
    Lexicon lex = load_lexicon(kLexiconPath);

    Judgment slept = judge(tokens({"Kim", "slept"}), lex, Engine::Lcg);
    CHECK(slept.verdict == Verdict::Accept);
    REQUIRE(slept.proof);
    CHECK(check_proof(*slept.proof));

    CHECK(judge(tokens({"him", "runs"}), lex, Engine::Lcg).verdict == Verdict::Reject);
    CHECK(judge(tokens({"Er", "findet", "und", "hilft", "Frauen"}), lex, Engine::Lcg).verdict ==
          Verdict::Accept);
    CHECK(judge(tokens({"him", "runs"}), lex, Engine::AvmSubsumption).verdict == Verdict::Reject);
    CHECK(judge(tokens({"Kim", "slept"}), lex, Engine::AvmGeneralization).verdict ==
          Verdict::Accept);

    CHECK_THROWS_AS(judge(tokens({"Kim", "sneezed"}), lex, Engine::Lcg), UnknownWordError);
    CHECK_THROWS_AS(judge({}, lex, Engine::Lcg), std::invalid_argument);
}

TEST_CASE("judge uses lexical ambiguity (number-agreeing adverb)") {
    Lexicon lex = load_lexicon(kLexiconPath);
    CHECK(judge(tokens({"Kim", "slept", "soundly"}), lex, Engine::Lcg).verdict ==
          Verdict::Accept);
    CHECK(judge(tokens({"children", "slept", "soundly"}), lex, Engine::Lcg).verdict ==
          Verdict::Accept);
    CHECK(judge(tokens({"children", "sleeps", "soundly"}), lex, Engine::Lcg).verdict ==
          Verdict::Reject);
}

TEST_CASE("run_corpus reproduces the shipped expectations") {
    JudgmentReport report = run_corpus(kCorpusPath, kLexiconPath);
    CHECK(report.rows.size() == 13);
    CHECK(report.matched == 13);
    CHECK(report.mismatched == 0);
    CHECK(report.errored == 0);
    CHECK(report.all_ok());
    for (const auto& row : report.rows) {
        CAPTURE(row.corpus.id);
        CHECK(row.matches());
        // the two AVM modes agree row by row
        CHECK(row.avm_sub == row.avm_gen);
        // accepts carry checked proofs
        if (row.lcg == Verdict::Accept) {
            REQUIRE(row.proof);
            CHECK(check_proof(*row.proof));
        } else {
            CHECK_FALSE(row.proof);
        }
    }
}

TEST_CASE("every corpus accept renders in both styles") {
    for (const char* corpus : {kCorpusPath, GRAMLAB_DATA_DIR "/adverb_demo.tsv"}) {
        JudgmentReport report = run_corpus(corpus, kLexiconPath);
        for (const auto& row : report.rows) {
            if (!row.proof) continue;
            CAPTURE(row.corpus.id);
            std::string nd =
                render_proof(*row.proof, RenderStyle::NaturalDeduction, row.corpus.tokens);
            CHECK(nd.find("---") != std::string::npos);  // at least one inference bar
            for (const auto& word : row.corpus.tokens) {
                CHECK(nd.find(word) != std::string::npos);
            }
            std::string seq = render_proof(*row.proof, RenderStyle::Sequent);
            CHECK(seq.find("|- s\n") != std::string::npos);
            CHECK(seq.find("[Ax]") != std::string::npos);
        }
    }
}

TEST_CASE("engine names round-trip") {
    for (Engine e : {Engine::Lcg, Engine::AvmSubsumption, Engine::AvmGeneralization}) {
        auto back = engine_from_name(engine_name(e));
        REQUIRE(back);
        CHECK(*back == e);
    }
    CHECK_FALSE(engine_from_name("hpsg"));
}

TEST_CASE("reports are deterministic") {
    Lexicon lex = load_lexicon(kLexiconPath);
    auto rows = load_corpus(kCorpusPath);
    JudgmentReport a = run_corpus(rows, lex);
    JudgmentReport b = run_corpus(rows, lex);
    CHECK(a.to_tsv() == b.to_tsv());
    CHECK(a.to_table() == b.to_table());
}

TEST_CASE("an empty corpus yields an empty, successful report") {
    Lexicon lex = load_lexicon(kLexiconPath);
    JudgmentReport report = run_corpus(std::vector<CorpusRow>{}, lex);
    CHECK(report.rows.empty());
    CHECK(report.all_ok());
}

TEST_CASE("a row with an unknown word is errored, not judged") {
    Lexicon lex = load_lexicon(kLexiconPath);
    std::vector<CorpusRow> rows = parse_corpus(
        "x1\tKim snorkeled\taccept\taccept\taccept\tunknown verb\n"
        "s1\tKim slept\taccept\taccept\taccept\t\n");
    JudgmentReport report = run_corpus(rows, lex);
    REQUIRE(report.rows.size() == 2);
    CHECK(report.errored == 1);
    CHECK(report.matched == 1);
    CHECK_FALSE(report.all_ok());
    CHECK(report.rows[0].errored());
    CHECK(report.rows[0].error.find("snorkeled") != std::string::npos);
    CHECK(report.to_tsv().find("ERROR") != std::string::npos);
}

TEST_CASE("corpus parsing validates its columns") {
    CHECK(parse_corpus("").empty());
    CHECK(parse_corpus("# only a comment\n").empty());
    auto rows = parse_corpus("s1\tKim slept\taccept\taccept\taccept\ta note\n");
    REQUIRE(rows.size() == 1);
    CHECK(rows[0].id == "s1");
    CHECK(rows[0].tokens == tokens({"Kim", "slept"}));
    CHECK(rows[0].gold == Verdict::Accept);
    CHECK(rows[0].note == "a note");
    CHECK_THROWS_AS(parse_corpus("s1\tKim slept\taccept\n"), CorpusError);
    CHECK_THROWS_AS(parse_corpus("s1\tKim slept\tyes\taccept\taccept\t\n"), CorpusError);
    try {
        parse_corpus("# ok\ns1\tKim slept\taccept\taccept\tmaybe\t\n");
        FAIL("expected CorpusError");
    } catch (const CorpusError& e) {
        CHECK(e.line() == 2);
    }
    CHECK_THROWS_AS(load_corpus(GRAMLAB_DATA_DIR "/no_such_file.tsv"), std::runtime_error);
}

TEST_CASE("the adverb demo corpus matches its expectations") {
    JudgmentReport report = run_corpus(GRAMLAB_DATA_DIR "/adverb_demo.tsv", kLexiconPath);
    CHECK(report.rows.size() == 4);
    CHECK(report.all_ok());
}
