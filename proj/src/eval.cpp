#include "tweetinfo/eval.hpp"

#include <cmath>
#include <cstdio>
#include <random>
#include <stdexcept>
#include <unordered_set>

#include "tweetinfo/error.hpp"

namespace tweetinfo {

namespace {

// Fisher-Yates with explicit draws from mt19937_64 so fold assignment is
// identical across platforms (std::shuffle is implementation-defined).
void deterministic_shuffle(std::vector<std::size_t>& values, std::mt19937_64& gen) {
    for (std::size_t i = values.size(); i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(gen() % i);
        std::swap(values[i - 1], values[j]);
    }
}

}  // namespace

ConfusionCounts confusion(std::span<const Label> gold, std::span<const Label> pred) {
    if (gold.size() != pred.size()) {
        throw std::invalid_argument("gold and prediction lists differ in length");
    }
    ConfusionCounts counts;
    for (std::size_t i = 0; i < gold.size(); ++i) {
        const bool pos_gold = gold[i] == Label::Informative;
        const bool pos_pred = pred[i] == Label::Informative;
        if (pos_pred && pos_gold) ++counts.tp;
        else if (pos_pred && !pos_gold) ++counts.fp;
        else if (!pos_pred && pos_gold) ++counts.fn;
        else ++counts.tn;
    }
    return counts;
}

Metrics metrics_positive(const ConfusionCounts& counts) {
    Metrics m;
    const double tp = static_cast<double>(counts.tp);
    if (counts.tp + counts.fp > 0) m.precision = tp / static_cast<double>(counts.tp + counts.fp);
    if (counts.tp + counts.fn > 0) m.recall = tp / static_cast<double>(counts.tp + counts.fn);
    if (m.precision + m.recall > 0) {
        m.f1 = 2.0 * m.precision * m.recall / (m.precision + m.recall);
    }
    return m;
}

std::vector<FoldSplit> kfold_split(const Dataset& data, int k, std::uint64_t seed) {
    if (k < 2) throw std::invalid_argument("k must be >= 2");
    const std::size_t folds = static_cast<std::size_t>(k);
    if (folds > data.examples.size()) {
        throw std::invalid_argument("k exceeds the number of examples");
    }

    std::vector<std::size_t> by_label[2];
    for (std::size_t i = 0; i < data.examples.size(); ++i) {
        const auto& gold = data.examples[i].gold;
        if (!gold) {
            throw std::invalid_argument("unlabeled example '" + data.examples[i].id +
                                        "' in cross-validation data");
        }
        by_label[label_index(*gold)].push_back(i);
    }
    for (const auto& group : by_label) {
        if (group.empty()) {
            throw std::invalid_argument("cross-validation data must contain both labels");
        }
    }

    std::mt19937_64 gen(seed);
    std::vector<std::size_t> fold_of(data.examples.size());
    std::size_t cursor = 0;
    for (auto& group : by_label) {
        deterministic_shuffle(group, gen);
        for (const std::size_t example_idx : group) {
            fold_of[example_idx] = cursor % folds;
            ++cursor;
        }
    }

    // Emitted in dataset order; the shuffle decides membership only.
    std::vector<FoldSplit> splits(folds);
    for (std::size_t i = 0; i < data.examples.size(); ++i) {
        for (std::size_t f = 0; f < folds; ++f) {
            auto& target = fold_of[i] == f ? splits[f].test_ids : splits[f].train_ids;
            target.push_back(data.examples[i].id);
        }
    }
    return splits;
}

CVReport make_cv_report(std::vector<Metrics> fold_metrics) {
    CVReport report;
    report.fold_metrics = std::move(fold_metrics);
    const std::size_t n = report.fold_metrics.size();
    if (n == 0) return report;

    double sum = 0.0;
    for (const Metrics& m : report.fold_metrics) sum += m.f1;
    report.mean_f1 = sum / static_cast<double>(n);

    if (n > 1) {
        double sq = 0.0;
        for (const Metrics& m : report.fold_metrics) {
            const double d = m.f1 - report.mean_f1;
            sq += d * d;
        }
        report.std_f1 = std::sqrt(sq / static_cast<double>(n - 1));
    }
    return report;
}

CVReport cross_validate(const Dataset& data, int k, std::uint64_t seed,
                        const SystemFactory& make_system) {
    const std::vector<FoldSplit> splits = kfold_split(data, k, seed);

    std::unordered_map<std::string, const Example*> by_id;
    for (const Example& ex : data.examples) by_id.emplace(ex.id, &ex);

    std::vector<Metrics> fold_metrics;
    fold_metrics.reserve(splits.size());
    for (const FoldSplit& split : splits) {
        Dataset train;
        train.examples.reserve(split.train_ids.size());
        for (const std::string& id : split.train_ids) train.examples.push_back(*by_id.at(id));

        const Predictor predict = make_system(train);

        std::vector<Label> gold;
        std::vector<Label> pred;
        gold.reserve(split.test_ids.size());
        for (const std::string& id : split.test_ids) {
            const Example& ex = *by_id.at(id);
            gold.push_back(*ex.gold);
            pred.push_back(predict(ex));
        }
        fold_metrics.push_back(metrics_positive(confusion(gold, pred)));
    }
    return make_cv_report(std::move(fold_metrics));
}

SentenceStats error_sentence_stats(const Dataset& data, const PredictionSet& preds) {
    double sum_wrong = 0.0;
    double sum_correct = 0.0;
    std::size_t n_wrong = 0;
    std::size_t n_correct = 0;

    for (const Example& ex : data.examples) {
        if (!ex.gold) {
            throw std::invalid_argument("unlabeled example '" + ex.id + "' in sentence stats");
        }
        const auto it = preds.by_id.find(ex.id);
        if (it == preds.by_id.end()) {
            throw DataError("no prediction for id '" + ex.id + "'");
        }
        const double sentences = static_cast<double>(split_sentences(ex.text).size());
        if (it->second.label == *ex.gold) {
            sum_correct += sentences;
            ++n_correct;
        } else {
            sum_wrong += sentences;
            ++n_wrong;
        }
    }

    SentenceStats stats;
    if (n_wrong > 0) stats.mean_sentences_wrong = sum_wrong / static_cast<double>(n_wrong);
    if (n_correct > 0) stats.mean_sentences_correct = sum_correct / static_cast<double>(n_correct);
    return stats;
}

std::string format_fixed4(double value) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.4f", value);
    return buf;
}

std::string format_cv_report(const CVReport& report) {
    std::string out;
    out += "folds\t" + std::to_string(report.fold_metrics.size()) + "\n";
    for (std::size_t i = 0; i < report.fold_metrics.size(); ++i) {
        const std::string prefix = "fold_" + std::to_string(i + 1) + "_";
        const Metrics& m = report.fold_metrics[i];
        out += prefix + "precision\t" + format_fixed4(m.precision) + "\n";
        out += prefix + "recall\t" + format_fixed4(m.recall) + "\n";
        out += prefix + "f1\t" + format_fixed4(m.f1) + "\n";
    }
    out += "mean_f1\t" + format_fixed4(report.mean_f1) + "\n";
    out += "std_f1\t" + format_fixed4(report.std_f1) + "\n";
    return out;
}

}  // namespace tweetinfo
