#include "tweetinfo/ensemble.hpp"

#include <stdexcept>

#include "tweetinfo/error.hpp"

namespace tweetinfo {

namespace {

void require_k(std::span<const Label> preds) {
    if (preds.size() < 2) {
        throw std::invalid_argument("integration needs at least 2 predictions");
    }
}

std::size_t count_informative(std::span<const Label> preds) {
    std::size_t n = 0;
    for (Label l : preds) {
        if (l == Label::Informative) ++n;
    }
    return n;
}

}  // namespace

std::optional<IntegrationStrategy> parse_strategy(std::string_view name) {
    if (name == "vote") return IntegrationStrategy::MajorityVote;
    if (name == "and") return IntegrationStrategy::And;
    if (name == "or") return IntegrationStrategy::Or;
    if (name == "precedence") return IntegrationStrategy::Precedence;
    return std::nullopt;
}

Label integrate_vote(std::span<const Label> preds) {
    require_k(preds);
    return 2 * count_informative(preds) > preds.size() ? Label::Informative
                                                       : Label::Uninformative;
}

Label integrate_and(std::span<const Label> preds) {
    require_k(preds);
    return count_informative(preds) == preds.size() ? Label::Informative
                                                    : Label::Uninformative;
}

Label integrate_or(std::span<const Label> preds) {
    require_k(preds);
    return count_informative(preds) > 0 ? Label::Informative : Label::Uninformative;
}

Label integrate_precedence(Label full, Label per_sentence, Label rule) {
    if (full == per_sentence) return full;
    return rule == Label::Uninformative ? Label::Uninformative : full;
}

PredictionSet integrate_dataset(IntegrationStrategy strategy,
                                const std::vector<PredictionSet>& streams,
                                const std::vector<std::string>& ids) {
    if (strategy == IntegrationStrategy::Precedence) {
        if (streams.size() != 3) {
            throw std::invalid_argument(
                "precedence integration takes exactly 3 streams (full, per-sentence, rules)");
        }
    } else if (streams.size() < 2) {
        throw std::invalid_argument("integration needs at least 2 streams");
    }

    PredictionSet out;
    std::vector<Label> labels(streams.size());
    for (const std::string& id : ids) {
        for (std::size_t s = 0; s < streams.size(); ++s) {
            const auto it = streams[s].by_id.find(id);
            if (it == streams[s].by_id.end()) {
                throw DataError("stream " + std::to_string(s + 1) + " has no prediction for id '" +
                                id + "'");
            }
            labels[s] = it->second.label;
        }
        Label result = Label::Uninformative;
        switch (strategy) {
            case IntegrationStrategy::MajorityVote:
                result = integrate_vote(labels);
                break;
            case IntegrationStrategy::And:
                result = integrate_and(labels);
                break;
            case IntegrationStrategy::Or:
                result = integrate_or(labels);
                break;
            case IntegrationStrategy::Precedence:
                result = integrate_precedence(labels[0], labels[1], labels[2]);
                break;
        }
        out.by_id.emplace(id, PredictionSet::Entry{result, std::nullopt});
    }
    return out;
}

}  // namespace tweetinfo
