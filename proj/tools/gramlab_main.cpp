// gramlab — dual-engine grammaticality judgments.
//
//   gramlab parse  --lexicon PATH [--engine lcg|avm-sub|avm-gen]
//                  [--style sequent|nd] WORD...
//   gramlab corpus --corpus PATH --lexicon PATH [--format table|tsv]
//
// Exit codes: 0 full match / evaluated, 1 corpus mismatch or errored row,
// 2 usage or file errors.

#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "gramlab/render.hpp"
#include "gramlab/report.hpp"

namespace {

int run_parse(const std::string& lexicon_path, const std::string& engine_name,
              const std::string& style_name, const std::vector<std::string>& words) {
    auto engine = gramlab::engine_from_name(engine_name);
    if (!engine) {
        std::cerr << "unknown engine: " << engine_name << "\n";
        return 2;
    }
    gramlab::Lexicon lexicon = gramlab::load_lexicon(lexicon_path);
    gramlab::Judgment judgment = gramlab::judge(words, lexicon, *engine);

    std::string sentence;
    for (const auto& w : words) {
        if (!sentence.empty()) sentence += ' ';
        sentence += w;
    }
    std::cout << "sentence: " << sentence << "\n"
              << "engine:   " << gramlab::engine_name(*engine) << "\n"
              << "verdict:  " << gramlab::verdict_name(judgment.verdict) << "\n";
    if (judgment.proof) {
        gramlab::RenderStyle style = style_name == "sequent"
                                         ? gramlab::RenderStyle::Sequent
                                         : gramlab::RenderStyle::NaturalDeduction;
        std::cout << "\n" << gramlab::render_proof(*judgment.proof, style, words);
    } else if (*engine != gramlab::Engine::Lcg) {
        std::cout << "features:\n";
        for (const auto& w : words) {
            const gramlab::LexiconEntry* entry = lexicon.find(w);
            std::cout << "  " << w << ": ";
            if (entry && entry->is_conj) {
                std::cout << "<conj>\n";
            } else if (entry && entry->avm) {
                std::cout << entry->avm->to_string() << "\n";
            } else {
                std::cout << "(none)\n";
            }
        }
    }
    return 0;
}

int run_corpus_cmd(const std::string& corpus_path, const std::string& lexicon_path,
                   const std::string& format) {
    gramlab::JudgmentReport report = gramlab::run_corpus(corpus_path, lexicon_path);
    std::cout << (format == "tsv" ? report.to_tsv() : report.to_table());
    return report.all_ok() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"dual-engine grammaticality judgments"};
    app.require_subcommand(1);

    std::string lexicon_path, corpus_path;
    std::string engine = "lcg";
    std::string style = "nd";
    std::string format = "table";
    std::vector<std::string> words;

    CLI::App* parse = app.add_subcommand("parse", "judge one sentence");
    parse->add_option("--lexicon", lexicon_path, "lexicon file")->required();
    parse->add_option("--engine", engine, "lcg, avm-sub or avm-gen")
        ->check(CLI::IsMember({"lcg", "avm-sub", "avm-gen"}));
    parse->add_option("--style", style, "proof style: sequent or nd")
        ->check(CLI::IsMember({"sequent", "nd"}));
    parse->add_option("words", words, "the sentence, one token per argument")->required();

    CLI::App* corpus = app.add_subcommand("corpus", "judge a corpus and compare to expectations");
    corpus->add_option("--corpus", corpus_path, "corpus file")->required();
    corpus->add_option("--lexicon", lexicon_path, "lexicon file")->required();
    corpus->add_option("--format", format, "table or tsv")
        ->check(CLI::IsMember({"table", "tsv"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (parse->parsed()) return run_parse(lexicon_path, engine, style, words);
        return run_corpus_cmd(corpus_path, lexicon_path, format);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
}
