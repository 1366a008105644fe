#ifndef TWEETINFO_EVAL_HPP
#define TWEETINFO_EVAL_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "tweetinfo/corpus.hpp"
#include "tweetinfo/learned.hpp"

namespace tweetinfo {

/// Binary confusion counts with Informative as the positive class.
struct ConfusionCounts {
    std::size_t tp = 0;
    std::size_t fp = 0;
    std::size_t fn = 0;
    std::size_t tn = 0;
};

/// Positive-class precision/recall/F1. Zero-denominator cases are 0 by
/// convention, matching common shared-task scorers.
struct Metrics {
    double precision = 0.0;
    double recall = 0.0;
    double f1 = 0.0;
};

struct FoldSplit {
    std::vector<std::string> train_ids;
    std::vector<std::string> test_ids;
};

/// Per-fold metrics with mean and sample (n-1) standard deviation of F1.
struct CVReport {
    std::vector<Metrics> fold_metrics;
    double mean_f1 = 0.0;
    double std_f1 = 0.0;
};

/// Counts over position-aligned gold/pred lists (equal length required).
ConfusionCounts confusion(std::span<const Label> gold, std::span<const Label> pred);

Metrics metrics_positive(const ConfusionCounts& counts);

/// Stratified deterministic k-fold split: per label, example ids are
/// shuffled with a generator seeded from seed and dealt round-robin into
/// folds through a cursor shared across labels, so both per-fold sizes and
/// per-fold label counts differ by at most 1. Fold i's train set is all
/// other folds. Both id lists come back in dataset order. Requires k >= 2
/// and at least k examples of each label.
std::vector<FoldSplit> kfold_split(const Dataset& data, int k, std::uint64_t seed);

using Predictor = std::function<Label(const Example&)>;
using SystemFactory = std::function<Predictor(const Dataset& train)>;

/// Builds the system on each fold's train split, evaluates it on the test
/// split, and summarizes the per-fold positive-class metrics.
CVReport cross_validate(const Dataset& data, int k, std::uint64_t seed,
                        const SystemFactory& make_system);

/// Assembles a CVReport (mean and sample std of fold F1s) from per-fold
/// metrics. Exposed separately so summaries can be tested in isolation.
CVReport make_cv_report(std::vector<Metrics> fold_metrics);

struct SentenceStats {
    std::optional<double> mean_sentences_wrong;
    std::optional<double> mean_sentences_correct;
};

/// Mean sentence count (via split_sentences) over misclassified vs
/// correctly classified examples; a group with no members is reported
/// absent rather than 0. Requires gold labels and full prediction
/// coverage.
SentenceStats error_sentence_stats(const Dataset& data, const PredictionSet& preds);

/// Fixed-point rendering with 4 decimals, the reporting precision used
/// across the CLI.
std::string format_fixed4(double value);

/// Line-oriented key<TAB>value report: folds, fold_<i>_precision/recall/f1
/// (1-based), mean_f1, std_f1. Field names are part of the CLI contract.
std::string format_cv_report(const CVReport& report);

}  // namespace tweetinfo

#endif
