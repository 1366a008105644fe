#ifndef TWEETINFO_LEARNED_HPP
#define TWEETINFO_LEARNED_HPP

#include <array>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "tweetinfo/corpus.hpp"

namespace tweetinfo {

/// Multinomial naive Bayes over normalized unigram tokens with add-one
/// smoothing. Per label, the likelihoods over (vocabulary + one unseen
/// slot) sum to 1. Arrays are indexed by label_index().
struct NBModel {
    std::array<double, 2> class_log_prior{};
    std::unordered_map<std::string, std::array<double, 2>> token_log_likelihood;
    std::array<double, 2> unseen_log_likelihood{};
};

/// Trains on a fully labeled dataset. Priors are label frequencies.
/// Throws std::invalid_argument if the dataset is empty, an example lacks
/// a gold label, or either label has no examples.
NBModel train_nb(const Dataset& data);

struct Prediction {
    Label label = Label::Uninformative;
    double score = 0.0;  // posterior probability of Informative
};

/// Posterior argmax over the whole text; ties resolve to Uninformative.
Prediction predict_full(const NBModel& model, std::string_view text);

struct PerSentencePrediction {
    Label label = Label::Uninformative;  // Informative iff any sentence is
    std::vector<std::pair<SentenceSpan, Label>> sentences;
};

/// Splits the text into sentences, predicts each separately, and labels
/// the whole text Informative iff at least one sentence is.
PerSentencePrediction predict_per_sentence(const NBModel& model, std::string_view text);

/// One system's prediction per example id, with an optional score in [0,1].
struct PredictionSet {
    struct Entry {
        Label label = Label::Uninformative;
        std::optional<double> score;
    };
    std::unordered_map<std::string, Entry> by_id;
};

/// Reads a prediction TSV (id<TAB>LABEL[<TAB>score]) and requires it to
/// cover exactly expected_ids. Throws ParseError on malformed lines,
/// unknown labels, duplicate ids, out-of-range scores, and ids missing
/// from or absent in expected_ids.
PredictionSet load_predictions(const std::filesystem::path& path,
                               const std::vector<std::string>& expected_ids);

}  // namespace tweetinfo

#endif
