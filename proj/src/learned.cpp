#include "tweetinfo/learned.hpp"

#include <cmath>
#include <fstream>
#include <stdexcept>
#include <unordered_set>

#include "tweetinfo/error.hpp"
#include "tweetinfo/text.hpp"

namespace tweetinfo {

NBModel train_nb(const Dataset& data) {
    if (data.examples.empty()) throw std::invalid_argument("cannot train on an empty dataset");

    std::array<std::size_t, 2> example_counts{};
    std::array<std::size_t, 2> token_totals{};
    std::unordered_map<std::string, std::array<std::size_t, 2>> token_counts;

    for (const Example& ex : data.examples) {
        if (!ex.gold) {
            throw std::invalid_argument("unlabeled example '" + ex.id + "' in training data");
        }
        const std::size_t li = label_index(*ex.gold);
        ++example_counts[li];
        for (const Token& tok : tokenize(ex.text)) {
            ++token_counts[tok.normalized][li];
            ++token_totals[li];
        }
    }
    if (example_counts[0] == 0 || example_counts[1] == 0) {
        throw std::invalid_argument("training data must contain both labels");
    }

    NBModel model;
    const double n = static_cast<double>(data.examples.size());
    for (std::size_t li = 0; li < 2; ++li) {
        model.class_log_prior[li] = std::log(static_cast<double>(example_counts[li]) / n);
    }
    // Add-one smoothing over the vocabulary plus one shared unseen slot.
    const double vocab = static_cast<double>(token_counts.size());
    std::array<double, 2> denom{};
    for (std::size_t li = 0; li < 2; ++li) {
        denom[li] = std::log(static_cast<double>(token_totals[li]) + vocab + 1.0);
        model.unseen_log_likelihood[li] = std::log(1.0) - denom[li];
    }
    for (const auto& [token, counts] : token_counts) {
        std::array<double, 2> ll{};
        for (std::size_t li = 0; li < 2; ++li) {
            ll[li] = std::log(static_cast<double>(counts[li]) + 1.0) - denom[li];
        }
        model.token_log_likelihood.emplace(token, ll);
    }
    return model;
}

Prediction predict_full(const NBModel& model, std::string_view text) {
    std::array<double, 2> log_post = model.class_log_prior;
    for (const Token& tok : tokenize(text)) {
        const auto it = model.token_log_likelihood.find(tok.normalized);
        for (std::size_t li = 0; li < 2; ++li) {
            log_post[li] += it != model.token_log_likelihood.end()
                                ? it->second[li]
                                : model.unseen_log_likelihood[li];
        }
    }
    const double li_inf = log_post[label_index(Label::Informative)];
    const double li_uninf = log_post[label_index(Label::Uninformative)];

    Prediction pred;
    pred.label = li_inf > li_uninf ? Label::Informative : Label::Uninformative;
    pred.score = 1.0 / (1.0 + std::exp(li_uninf - li_inf));
    return pred;
}

PerSentencePrediction predict_per_sentence(const NBModel& model, std::string_view text) {
    PerSentencePrediction result;
    const CodePoints pts(text);
    for (const SentenceSpan& span : split_sentences(text)) {
        const Prediction pred = predict_full(model, pts.slice(span.start, span.end));
        if (pred.label == Label::Informative) result.label = Label::Informative;
        result.sentences.emplace_back(span, pred.label);
    }
    return result;
}

PredictionSet load_predictions(const std::filesystem::path& path,
                               const std::vector<std::string>& expected_ids) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open predictions file: " + path.string());

    std::unordered_set<std::string> expected(expected_ids.begin(), expected_ids.end());

    PredictionSet preds;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;

        const std::size_t tab1 = line.find('\t');
        if (tab1 == std::string::npos) {
            throw ParseError(path.string(), line_no, "expected id<TAB>LABEL[<TAB>score]");
        }
        const std::size_t tab2 = line.find('\t', tab1 + 1);
        const std::string id = line.substr(0, tab1);
        const std::string label_field =
            line.substr(tab1 + 1, tab2 == std::string::npos ? std::string::npos : tab2 - tab1 - 1);

        const auto label = parse_label(label_field);
        if (!label) {
            throw ParseError(path.string(), line_no, "unknown label '" + label_field + "'");
        }

        PredictionSet::Entry entry;
        entry.label = *label;
        if (tab2 != std::string::npos) {
            const std::string score_field = line.substr(tab2 + 1);
            if (score_field.find('\t') != std::string::npos) {
                throw ParseError(path.string(), line_no, "too many fields");
            }
            std::size_t consumed = 0;
            double score = 0.0;
            try {
                score = std::stod(score_field, &consumed);
            } catch (const std::exception&) {
                throw ParseError(path.string(), line_no, "bad score '" + score_field + "'");
            }
            if (consumed != score_field.size() || !(score >= 0.0 && score <= 1.0)) {
                throw ParseError(path.string(), line_no,
                                 "score outside [0,1]: '" + score_field + "'");
            }
            entry.score = score;
        }

        if (!expected.contains(id)) {
            throw ParseError(path.string(), line_no, "unexpected id '" + id + "'");
        }
        if (!preds.by_id.emplace(id, entry).second) {
            throw ParseError(path.string(), line_no, "duplicate id '" + id + "'");
        }
    }

    for (const std::string& id : expected_ids) {
        if (!preds.by_id.contains(id)) {
            throw ParseError(path.string(), line_no, "missing prediction for id '" + id + "'");
        }
    }
    return preds;
}

}  // namespace tweetinfo
