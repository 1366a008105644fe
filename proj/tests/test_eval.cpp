#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "doctest.h"
#include "tweetinfo/error.hpp"
#include "tweetinfo/eval.hpp"

using namespace tweetinfo;

namespace {

constexpr Label I = Label::Informative;
constexpr Label U = Label::Uninformative;

Dataset labeled_dataset(std::size_t n_pos, std::size_t n_neg) {
    Dataset data;
    for (std::size_t i = 0; i < n_pos + n_neg; ++i) {
        Example ex;
        ex.id = "e" + std::to_string(i);
        ex.text = "text " + std::to_string(i);
        ex.gold = i < n_pos ? I : U;
        data.examples.push_back(std::move(ex));
    }
    return data;
}

}  // namespace

TEST_CASE("confusion counts positives correctly") {
    const std::vector<Label> gold = {I, I, U};
    const std::vector<Label> pred = {I, U, U};
    const ConfusionCounts c = confusion(gold, pred);
    CHECK(c.tp == 1);
    CHECK(c.fn == 1);
    CHECK(c.tn == 1);
    CHECK(c.fp == 0);

    const ConfusionCounts same = confusion(gold, gold);
    CHECK(same.fp == 0);
    CHECK(same.fn == 0);

    const ConfusionCounts empty = confusion(std::vector<Label>{}, std::vector<Label>{});
    CHECK(empty.tp + empty.fp + empty.fn + empty.tn == 0);

    CHECK_THROWS_AS(confusion(gold, std::vector<Label>{I}), std::invalid_argument);
}

TEST_CASE("metrics_positive on the documented fixture") {
    const Metrics m = metrics_positive({3, 1, 2, 0});
    CHECK(m.precision == doctest::Approx(0.75).epsilon(1e-12));
    CHECK(m.recall == doctest::Approx(0.6).epsilon(1e-12));
    CHECK(m.f1 == doctest::Approx(2.0 / 3.0).epsilon(1e-12));
    CHECK(format_fixed4(m.f1) == "0.6667");

    const Metrics perfect = metrics_positive({5, 0, 0, 5});
    CHECK(perfect.precision == 1.0);
    CHECK(perfect.recall == 1.0);
    CHECK(perfect.f1 == 1.0);

    const Metrics nothing = metrics_positive({0, 0, 5, 0});
    CHECK(nothing.precision == 0.0);
    CHECK(nothing.recall == 0.0);
    CHECK(nothing.f1 == 0.0);
}

TEST_CASE("property: f1 equals the direct confusion formula") {
    std::mt19937 gen(2024);
    for (int iter = 0; iter < 1000; ++iter) {
        const ConfusionCounts c{gen() % 50, gen() % 50, gen() % 50, gen() % 50};
        const Metrics m = metrics_positive(c);
        const double denom = static_cast<double>(2 * c.tp + c.fp + c.fn);
        const double direct = denom > 0 ? 2.0 * static_cast<double>(c.tp) / denom : 0.0;
        CHECK(m.f1 == doctest::Approx(direct).epsilon(1e-12));
        if (c.fp == c.fn && c.tp > 0) {
            CHECK(m.precision == doctest::Approx(m.recall).epsilon(1e-12));
            CHECK(m.f1 == doctest::Approx(m.precision).epsilon(1e-12));
        }
    }
}

TEST_CASE("kfold_split deals stratified round-robin folds") {
    const Dataset data = labeled_dataset(6, 4);
    const auto splits = kfold_split(data, 5, 17);
    REQUIRE(splits.size() == 5);

    std::multiset<std::size_t> positive_counts;
    for (const FoldSplit& fold : splits) {
        CHECK(fold.test_ids.size() == 2);
        CHECK(fold.train_ids.size() == 8);
        std::size_t pos = 0;
        for (const std::string& id : fold.test_ids) {
            const std::size_t idx = std::stoul(id.substr(1));
            if (idx < 6) ++pos;
        }
        positive_counts.insert(pos);
    }
    CHECK(positive_counts == std::multiset<std::size_t>{2, 1, 1, 1, 1});
}

TEST_CASE("kfold_split is deterministic in the seed") {
    const Dataset data = labeled_dataset(10, 10);
    const auto a = kfold_split(data, 5, 7);
    const auto b = kfold_split(data, 5, 7);
    REQUIRE(a.size() == b.size());
    for (std::size_t f = 0; f < a.size(); ++f) {
        CHECK(a[f].test_ids == b[f].test_ids);
        CHECK(a[f].train_ids == b[f].train_ids);
    }

    const auto c = kfold_split(data, 5, 8);
    bool any_difference = false;
    for (std::size_t f = 0; f < a.size(); ++f) {
        if (a[f].test_ids != c[f].test_ids) any_difference = true;
    }
    CHECK(any_difference);
}

TEST_CASE("kfold_split rejects invalid requests") {
    const Dataset data = labeled_dataset(6, 4);
    CHECK_THROWS_AS(kfold_split(data, 11, 0), std::invalid_argument);
    CHECK_THROWS_AS(kfold_split(data, 1, 0), std::invalid_argument);
    CHECK_THROWS_AS(kfold_split(labeled_dataset(10, 0), 5, 0), std::invalid_argument);

    Dataset unlabeled = data;
    unlabeled.examples[0].gold.reset();
    CHECK_THROWS_AS(kfold_split(unlabeled, 2, 0), std::invalid_argument);
}

TEST_CASE("property: kfold folds partition the data with balanced labels") {
    std::mt19937 gen(606);
    for (int iter = 0; iter < 100; ++iter) {
        const std::size_t n_pos = 2 + gen() % 30;
        const std::size_t n_neg = 2 + gen() % 30;
        const int k = 2 + static_cast<int>(gen() % 5);
        if (n_pos < static_cast<std::size_t>(k) || n_neg < static_cast<std::size_t>(k)) continue;

        const Dataset data = labeled_dataset(n_pos, n_neg);
        const auto splits = kfold_split(data, k, gen());

        std::set<std::string> all_test;
        for (const FoldSplit& fold : splits) {
            for (const std::string& id : fold.test_ids) {
                CHECK(all_test.insert(id).second);  // disjoint
            }
        }
        CHECK(all_test.size() == data.examples.size());  // coverage

        const double expected_pos = static_cast<double>(n_pos) / k;
        for (const FoldSplit& fold : splits) {
            std::size_t pos = 0;
            for (const std::string& id : fold.test_ids) {
                if (std::stoul(id.substr(1)) < n_pos) ++pos;
            }
            CHECK(std::abs(static_cast<double>(pos) - expected_pos) < 1.0);

            // Train is exactly the complement.
            CHECK(fold.train_ids.size() + fold.test_ids.size() == data.examples.size());
            for (const std::string& id : fold.train_ids) CHECK_FALSE(
                std::find(fold.test_ids.begin(), fold.test_ids.end(), id) !=
                fold.test_ids.end());
        }
    }
}

TEST_CASE("make_cv_report mean and sample std") {
    std::vector<Metrics> folds;
    for (const double f1 : {0.8, 0.9, 1.0, 0.9, 0.8}) folds.push_back({0, 0, f1});
    const CVReport report = make_cv_report(folds);
    CHECK(report.mean_f1 == doctest::Approx(0.88).epsilon(1e-12));
    CHECK(report.std_f1 == doctest::Approx(0.0836660026534).epsilon(1e-9));
    CHECK(format_fixed4(report.mean_f1) == "0.8800");
    CHECK(format_fixed4(report.std_f1) == "0.0837");
}

TEST_CASE("cross_validate evaluates every example exactly once") {
    const Dataset data = labeled_dataset(12, 9);
    std::multiset<std::string> tested;
    const SystemFactory factory = [&tested](const Dataset&) -> Predictor {
        return [&tested](const Example& ex) {
            tested.insert(ex.id);
            return U;
        };
    };
    const CVReport report = cross_validate(data, 3, 5, factory);
    CHECK(tested.size() == data.examples.size());
    for (const Example& ex : data.examples) CHECK(tested.count(ex.id) == 1);

    // Constant-Uninformative system scores zero everywhere.
    REQUIRE(report.fold_metrics.size() == 3);
    for (const Metrics& m : report.fold_metrics) CHECK(m.f1 == 0.0);
    CHECK(report.mean_f1 == 0.0);
    CHECK(report.std_f1 == 0.0);
}

TEST_CASE("cross_validate trains on the complement of each fold") {
    const Dataset data = labeled_dataset(6, 6);
    const SystemFactory factory = [&data](const Dataset& train) -> Predictor {
        CHECK(train.examples.size() == data.examples.size() - 4);
        std::set<std::string> train_ids;
        for (const Example& ex : train.examples) train_ids.insert(ex.id);
        return [train_ids](const Example& ex) {
            CHECK_FALSE(train_ids.contains(ex.id));  // never tested on train data
            return I;
        };
    };
    cross_validate(data, 3, 99, factory);
}

TEST_CASE("format_cv_report field layout") {
    CVReport report = make_cv_report({{1.0, 0.5, 2.0 / 3.0}, {0.5, 0.5, 0.5}});
    const std::string text = format_cv_report(report);
    CHECK(text ==
          "folds\t2\n"
          "fold_1_precision\t1.0000\n"
          "fold_1_recall\t0.5000\n"
          "fold_1_f1\t0.6667\n"
          "fold_2_precision\t0.5000\n"
          "fold_2_recall\t0.5000\n"
          "fold_2_f1\t0.5000\n"
          "mean_f1\t0.5833\n"
          "std_f1\t0.1179\n");
}

TEST_CASE("error_sentence_stats averages sentence counts per outcome") {
    Dataset data;
    data.examples.push_back({"1", "One. Two. Three.", I});   // 3 sentences
    data.examples.push_back({"2", "only one", I});           // 1 sentence
    data.examples.push_back({"3", "Fine. Thanks.", U});      // 2 sentences

    PredictionSet preds;
    preds.by_id.emplace("1", PredictionSet::Entry{U, {}});  // wrong
    preds.by_id.emplace("2", PredictionSet::Entry{U, {}});  // wrong
    preds.by_id.emplace("3", PredictionSet::Entry{U, {}});  // correct

    const SentenceStats stats = error_sentence_stats(data, preds);
    REQUIRE(stats.mean_sentences_wrong.has_value());
    CHECK(*stats.mean_sentences_wrong == doctest::Approx(2.0).epsilon(1e-12));
    REQUIRE(stats.mean_sentences_correct.has_value());
    CHECK(*stats.mean_sentences_correct == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("error_sentence_stats on single-sentence examples") {
    Dataset data;
    data.examples.push_back({"1", "no punctuation here", I});
    data.examples.push_back({"2", "same here", U});
    PredictionSet preds;
    preds.by_id.emplace("1", PredictionSet::Entry{U, {}});  // wrong
    preds.by_id.emplace("2", PredictionSet::Entry{U, {}});  // correct
    const SentenceStats stats = error_sentence_stats(data, preds);
    CHECK(*stats.mean_sentences_wrong == 1.0);
    CHECK(*stats.mean_sentences_correct == 1.0);
}

TEST_CASE("error_sentence_stats reports empty groups as absent") {
    Dataset data;
    data.examples.push_back({"1", "hello there", I});
    PredictionSet correct;
    correct.by_id.emplace("1", PredictionSet::Entry{I, {}});
    const SentenceStats stats = error_sentence_stats(data, correct);
    CHECK_FALSE(stats.mean_sentences_wrong.has_value());
    REQUIRE(stats.mean_sentences_correct.has_value());
    CHECK(*stats.mean_sentences_correct == 1.0);

    PredictionSet missing;
    CHECK_THROWS_AS(error_sentence_stats(data, missing), DataError);
}
