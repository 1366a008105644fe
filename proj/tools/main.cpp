#include <cstdint>
#include <iostream>
#include <memory>
#include <string>
#include <unordered_set>
#include <vector>

#include "CLI11.hpp"
#include "tweetinfo/corpus.hpp"
#include "tweetinfo/ensemble.hpp"
#include "tweetinfo/error.hpp"
#include "tweetinfo/eval.hpp"
#include "tweetinfo/learned.hpp"
#include "tweetinfo/lexicon.hpp"
#include "tweetinfo/rules.hpp"

namespace {

using namespace tweetinfo;

constexpr int kExitInternal = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitBadInput = 3;
constexpr int kExitLintWarnings = 4;

struct ClassifyArgs {
    std::string mode;
    std::string lexicon_path;
    std::string rules_path;
    std::string train_path;
    std::string in_path;
    std::string out_path;
    int threshold = 1;
    std::string target_label = "informative";
};

struct EvaluateArgs {
    std::string gold_path;
    std::string pred_path;
    bool sentence_stats = false;
};

struct CrossvalArgs {
    std::string mode;
    std::string data_path;
    std::string lexicon_path;
    std::string rules_path;
    int k = 5;
    std::uint64_t seed = 0;
    int threshold = 1;
    std::string target_label = "informative";
};

struct IntegrateArgs {
    std::string strategy;
    std::vector<std::string> stream_paths;
    std::string full_path;
    std::string per_sentence_path;
    std::string rules_path;
    std::string ids_path;
    std::string out_path;
};

struct LintArgs {
    std::string lexicon_path;
    std::string rules_path;
};

void require_option(const std::string& value, const std::string& name, const std::string& why) {
    if (value.empty()) {
        throw std::invalid_argument(name + " is required " + why);
    }
}

int run_classify(const ClassifyArgs& args) {
    if (args.threshold < 1) throw std::invalid_argument("--threshold must be >= 1");

    std::vector<std::pair<std::string, Label>> preds;
    const Dataset input = [&] {
        if (args.mode == "rule") {
            require_option(args.lexicon_path, "--lexicon", "in rule mode");
            require_option(args.rules_path, "--rules", "in rule mode");
        } else {
            require_option(args.train_path, "--train", "in nb modes");
        }
        return load_dataset(args.in_path, /*has_labels=*/false);
    }();

    if (args.mode == "rule") {
        const Lexicon lexicon = parse_lexicon(args.lexicon_path);
        const RuleSet ruleset = parse_rules(args.rules_path);
        const RuleClassifierConfig config{args.threshold, args.target_label};
        for (const Example& ex : input.examples) {
            preds.emplace_back(ex.id, classify_rule_based(ruleset, lexicon, ex.text, config).label);
        }
    } else {
        const NBModel model = train_nb(load_dataset(args.train_path, /*has_labels=*/true));
        for (const Example& ex : input.examples) {
            const Label label = args.mode == "nb-full"
                                    ? predict_full(model, ex.text).label
                                    : predict_per_sentence(model, ex.text).label;
            preds.emplace_back(ex.id, label);
        }
    }

    write_predictions(args.out_path, preds);
    return 0;
}

int run_evaluate(const EvaluateArgs& args) {
    const Dataset gold = load_dataset(args.gold_path, /*has_labels=*/true);
    const PredictionSet preds = load_predictions(args.pred_path, gold.ids());

    std::vector<Label> gold_labels;
    std::vector<Label> pred_labels;
    gold_labels.reserve(gold.examples.size());
    for (const Example& ex : gold.examples) {
        gold_labels.push_back(*ex.gold);
        pred_labels.push_back(preds.by_id.at(ex.id).label);
    }
    const Metrics m = metrics_positive(confusion(gold_labels, pred_labels));
    std::cout << "P=" << format_fixed4(m.precision) << " R=" << format_fixed4(m.recall)
              << " F1=" << format_fixed4(m.f1) << "\n";

    if (args.sentence_stats) {
        const SentenceStats stats = error_sentence_stats(gold, preds);
        std::cout << "mean_sentences_wrong="
                  << (stats.mean_sentences_wrong ? format_fixed4(*stats.mean_sentences_wrong)
                                                 : "absent")
                  << "\n";
        std::cout << "mean_sentences_correct="
                  << (stats.mean_sentences_correct ? format_fixed4(*stats.mean_sentences_correct)
                                                   : "absent")
                  << "\n";
    }
    return 0;
}

int run_crossval(const CrossvalArgs& args) {
    if (args.k < 2) throw std::invalid_argument("--k must be >= 2");
    if (args.threshold < 1) throw std::invalid_argument("--threshold must be >= 1");

    const Dataset data = load_dataset(args.data_path, /*has_labels=*/true);

    SystemFactory factory;
    if (args.mode == "rule") {
        require_option(args.lexicon_path, "--lexicon", "in rule mode");
        require_option(args.rules_path, "--rules", "in rule mode");
        auto lexicon = std::make_shared<Lexicon>(parse_lexicon(args.lexicon_path));
        auto ruleset = std::make_shared<RuleSet>(parse_rules(args.rules_path));
        const RuleClassifierConfig config{args.threshold, args.target_label};
        factory = [lexicon, ruleset, config](const Dataset&) -> Predictor {
            return [lexicon, ruleset, config](const Example& ex) {
                return classify_rule_based(*ruleset, *lexicon, ex.text, config).label;
            };
        };
    } else {
        const bool full = args.mode == "nb-full";
        factory = [full](const Dataset& train) -> Predictor {
            auto model = std::make_shared<NBModel>(train_nb(train));
            return [model, full](const Example& ex) {
                return full ? predict_full(*model, ex.text).label
                            : predict_per_sentence(*model, ex.text).label;
            };
        };
    }

    const CVReport report = cross_validate(data, args.k, args.seed, factory);
    std::cout << format_cv_report(report);
    return 0;
}

int run_integrate(const IntegrateArgs& args) {
    const auto strategy = parse_strategy(args.strategy);
    if (!strategy) throw std::invalid_argument("unknown strategy '" + args.strategy + "'");

    std::vector<std::string> stream_paths;
    if (*strategy == IntegrationStrategy::Precedence) {
        if (!args.stream_paths.empty()) {
            throw std::invalid_argument(
                "precedence takes --full/--per-sentence/--rules, not --stream");
        }
        require_option(args.full_path, "--full", "for precedence");
        require_option(args.per_sentence_path, "--per-sentence", "for precedence");
        require_option(args.rules_path, "--rules", "for precedence");
        stream_paths = {args.full_path, args.per_sentence_path, args.rules_path};
    } else {
        if (!args.full_path.empty() || !args.per_sentence_path.empty() ||
            !args.rules_path.empty()) {
            throw std::invalid_argument("--full/--per-sentence/--rules are precedence-only");
        }
        if (args.stream_paths.size() < 2) {
            throw std::invalid_argument("need at least 2 --stream files");
        }
        stream_paths = args.stream_paths;
    }

    const std::vector<std::string> ids = load_dataset(args.ids_path, /*has_labels=*/false).ids();
    std::vector<PredictionSet> streams;
    streams.reserve(stream_paths.size());
    for (const std::string& path : stream_paths) {
        streams.push_back(load_predictions(path, ids));
    }

    const PredictionSet integrated = integrate_dataset(*strategy, streams, ids);
    std::vector<std::pair<std::string, Label>> preds;
    preds.reserve(ids.size());
    for (const std::string& id : ids) {
        preds.emplace_back(id, integrated.by_id.at(id).label);
    }
    write_predictions(args.out_path, preds);
    return 0;
}

int run_lint(const LintArgs& args) {
    const Lexicon lexicon = parse_lexicon(args.lexicon_path);
    const RuleSet ruleset = parse_rules(args.rules_path);

    std::unordered_set<std::string> lexicon_classes;
    for (const LexiconEntry& entry : lexicon.entries()) {
        lexicon_classes.insert(entry.word_class.name);
    }

    std::cout << "entries\t" << lexicon.entries().size() << "\n";
    std::cout << "rules\t" << ruleset.rules.size() << "\n";

    std::size_t warnings = 0;
    for (std::size_t r = 0; r < ruleset.rules.size(); ++r) {
        std::vector<std::string> missing;
        for (const WordClass& c : ruleset.rules[r].elements) {
            if (!lexicon_classes.contains(c.name)) missing.push_back(c.name);
        }
        if (!missing.empty()) {
            ++warnings;
            std::cout << "warning\trule " << (r + 1) << " unreachable: no lexicon entries for";
            for (const std::string& name : missing) std::cout << " " << name;
            std::cout << "\n";
        }
    }
    std::cout << "warnings\t" << warnings << "\n";
    return warnings > 0 ? kExitLintWarnings : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lexicon- and rule-driven tweet informativeness classifier"};
    app.require_subcommand(1);

    ClassifyArgs classify_args;
    CLI::App* classify = app.add_subcommand("classify", "Classify tweets and write predictions");
    classify->add_option("--mode", classify_args.mode, "rule, nb-full, or nb-sentence")
        ->required()
        ->check(CLI::IsMember({"rule", "nb-full", "nb-sentence"}));
    classify->add_option("--lexicon", classify_args.lexicon_path, "lexicon file (rule mode)");
    classify->add_option("--rules", classify_args.rules_path, "rule file (rule mode)");
    classify->add_option("--train", classify_args.train_path, "labeled training TSV (nb modes)");
    classify->add_option("--in", classify_args.in_path, "input dataset TSV")->required();
    classify->add_option("--out", classify_args.out_path, "output prediction TSV")->required();
    classify->add_option("--threshold", classify_args.threshold,
                         "minimum informative span count (rule mode)");
    classify->add_option("--target-label", classify_args.target_label,
                         "span label counted toward the threshold");

    EvaluateArgs evaluate_args;
    CLI::App* evaluate = app.add_subcommand("evaluate", "Positive-class precision/recall/F1");
    evaluate->add_option("--gold", evaluate_args.gold_path, "labeled dataset TSV")->required();
    evaluate->add_option("--pred", evaluate_args.pred_path, "prediction TSV")->required();
    evaluate->add_flag("--sentence-stats", evaluate_args.sentence_stats,
                       "also report mean sentence counts of wrong vs correct predictions");

    CrossvalArgs crossval_args;
    CLI::App* crossval = app.add_subcommand("crossval", "Stratified k-fold cross-validation");
    crossval->add_option("--mode", crossval_args.mode, "rule, nb-full, or nb-sentence")
        ->required()
        ->check(CLI::IsMember({"rule", "nb-full", "nb-sentence"}));
    crossval->add_option("--data", crossval_args.data_path, "labeled dataset TSV")->required();
    crossval->add_option("--lexicon", crossval_args.lexicon_path, "lexicon file (rule mode)");
    crossval->add_option("--rules", crossval_args.rules_path, "rule file (rule mode)");
    crossval->add_option("--k", crossval_args.k, "fold count (default 5)");
    crossval->add_option("--seed", crossval_args.seed, "shuffle seed")->required();
    crossval->add_option("--threshold", crossval_args.threshold,
                         "minimum informative span count (rule mode)");
    crossval->add_option("--target-label", crossval_args.target_label,
                         "span label counted toward the threshold");

    IntegrateArgs integrate_args;
    CLI::App* integrate = app.add_subcommand("integrate", "Combine prediction streams");
    integrate->add_option("--strategy", integrate_args.strategy, "vote, and, or, or precedence")
        ->required();
    integrate->add_option("--stream", integrate_args.stream_paths,
                          "prediction TSV (repeat; vote/and/or)");
    integrate->add_option("--full", integrate_args.full_path,
                          "full-text model predictions (precedence)");
    integrate->add_option("--per-sentence", integrate_args.per_sentence_path,
                          "per-sentence model predictions (precedence)");
    integrate->add_option("--rules", integrate_args.rules_path,
                          "rule-based predictions (precedence)");
    integrate->add_option("--ids", integrate_args.ids_path, "dataset TSV defining ids and order")
        ->required();
    integrate->add_option("--out", integrate_args.out_path, "output prediction TSV")->required();

    LintArgs lint_args;
    CLI::App* lint = app.add_subcommand("lint", "Check lexicon and rules for dead weight");
    lint->add_option("--lexicon", lint_args.lexicon_path, "lexicon file")->required();
    lint->add_option("--rules", lint_args.rules_path, "rule file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitBadConfig;
    }

    try {
        if (classify->parsed()) return run_classify(classify_args);
        if (evaluate->parsed()) return run_evaluate(evaluate_args);
        if (crossval->parsed()) return run_crossval(crossval_args);
        if (integrate->parsed()) return run_integrate(integrate_args);
        if (lint->parsed()) return run_lint(lint_args);
        return kExitBadConfig;
    } catch (const IoError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const DataError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadInput;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitBadConfig;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return kExitInternal;
    }
}
