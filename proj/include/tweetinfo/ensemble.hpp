#ifndef TWEETINFO_ENSEMBLE_HPP
#define TWEETINFO_ENSEMBLE_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tweetinfo/corpus.hpp"
#include "tweetinfo/learned.hpp"

namespace tweetinfo {

/// How to combine per-example predictions from multiple systems.
/// Precedence requires exactly three streams in role order (full-text
/// model, per-sentence model, rule-based); the others accept k >= 2.
enum class IntegrationStrategy { MajorityVote, And, Or, Precedence };

std::optional<IntegrationStrategy> parse_strategy(std::string_view name);

/// Informative iff strictly more than half the inputs are Informative;
/// exact ties go to Uninformative. Requires k >= 2.
Label integrate_vote(std::span<const Label> preds);

/// Informative iff all inputs are. Requires k >= 2.
Label integrate_and(std::span<const Label> preds);

/// Informative iff any input is. Requires k >= 2.
Label integrate_or(std::span<const Label> preds);

/// Conflict resolution between the two learned outputs: when they agree,
/// their shared label wins. When they conflict, a rule-based Uninformative
/// verdict wins; otherwise the full-text model decides.
Label integrate_precedence(Label full, Label per_sentence, Label rule);

/// Applies the strategy per id. Every stream must cover every id
/// (DataError otherwise); Precedence takes exactly 3 streams in role order
/// and the others at least 2 (std::invalid_argument otherwise). The output
/// covers exactly ids and carries no scores.
PredictionSet integrate_dataset(IntegrationStrategy strategy,
                                const std::vector<PredictionSet>& streams,
                                const std::vector<std::string>& ids);

}  // namespace tweetinfo

#endif
