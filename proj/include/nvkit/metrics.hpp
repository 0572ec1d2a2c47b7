#ifndef NVKIT_METRICS_HPP
#define NVKIT_METRICS_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace nvkit {

enum class Condition { VerbalOnly, CoarseNV, FineNV };
enum class Emotion { Happy, Sad, Anger, Fear };

inline constexpr int kEmotionCount = 4;

constexpr std::array<Condition, 3> all_conditions() {
  return {Condition::VerbalOnly, Condition::CoarseNV, Condition::FineNV};
}
constexpr std::array<Emotion, kEmotionCount> all_emotions() {
  return {Emotion::Happy, Emotion::Sad, Emotion::Anger, Emotion::Fear};
}

std::string_view condition_name(Condition c);  // verbal_only | coarse_nv | fine_nv
std::string_view emotion_name(Emotion e);      // happy | sad | anger | fear
std::optional<Condition> condition_from_name(std::string_view name);
std::optional<Emotion> emotion_from_name(std::string_view name);

// One listener response: five-point naturalness and expressiveness scores
// plus a four-choice emotion recognition answer.
struct RatingRecord {
  std::string rater_id;
  std::string sample_id;
  Condition condition;
  Emotion true_emotion;
  Emotion chosen_emotion;
  int nmos = 0;  // 1..5
  int emos = 0;  // 1..5
};

// One preference response: a strict ranking of the four variants offered
// for an emotion.
struct PreferenceRecord {
  std::string rater_id;
  Emotion emotion;
  std::array<std::string, 4> ranking;  // variant ids, best first
};

// CSV header: rater_id,sample_id,condition,true_emotion,chosen_emotion,nmos,emos
// Errors carry line numbers. Errors: MalformedRatings.
std::vector<RatingRecord> parse_ratings_csv(std::string_view text);

// CSV header: rater_id,emotion,rank1,rank2,rank3,rank4. A repeated variant
// in one row is rejected here, never aggregated. Errors: MalformedRatings.
std::vector<PreferenceRecord> parse_preference_csv(std::string_view text);

enum class MosField { Nmos, Emos };

struct MosStat {
  int n = 0;
  double mean = 0;
  double ci95 = 0;  // 1.96 * sd / sqrt(n); 0 when n < 2
};

using Group = std::pair<Condition, Emotion>;

// Mean opinion scores for every condition x emotion group present in the
// data. Groups absent from the data are absent from the result.
std::map<Group, MosStat> mos(std::span<const RatingRecord> records, MosField field);

// Single-group variant. Errors: EmptyGroup.
MosStat mos_group(std::span<const RatingRecord> records, MosField field, Condition c,
                  Emotion e);

struct AccuracyReport {
  std::map<Emotion, double> per_emotion;              // fractions
  std::map<Emotion, std::pair<int, int>> trial_counts;  // correct, total
  double micro = 0;  // pooled trials
  double macro = 0;  // mean of per-emotion fractions present
  int total = 0;
};

// Recognition accuracy for one condition. Errors: EmptyGroup.
AccuracyReport accuracy(std::span<const RatingRecord> records, Condition c);

// 4x4 counts, rows = true emotion, columns = chosen. Empty input gives the
// zero matrix. The row-normalized diagonal equals per-emotion accuracy.
struct ConfusionMatrix {
  std::array<std::array<std::int64_t, kEmotionCount>, kEmotionCount> counts{};

  std::array<std::array<double, kEmotionCount>, kEmotionCount> row_normalized() const;
  std::int64_t row_sum(int row) const;
};

ConfusionMatrix confusion(std::span<const RatingRecord> records, Condition c);

// Per-variant distribution over ranks 1..4. Every row (variant) and column
// (rank) sums to 1. Variants listed lexicographically. Errors: EmptyGroup,
// MalformedRatings when records disagree on the variant set.
struct PreferenceHistogram {
  std::vector<std::string> variants;
  std::vector<std::array<double, 4>> fractions;  // [variant][rank]
  int n = 0;
};

PreferenceHistogram preference(std::span<const PreferenceRecord> records, Emotion emotion);

// Tab-separated report sections.
std::string format_mos_table(const std::map<Group, MosStat>& nmos,
                             const std::map<Group, MosStat>& emos);
std::string format_accuracy_table(const std::map<Condition, AccuracyReport>& reports);
std::string format_confusion_table(Condition c, const ConfusionMatrix& m);
std::string format_confusion_pretty(Condition c, const ConfusionMatrix& m);
std::string format_preference_table(Emotion e, const PreferenceHistogram& h);

}  // namespace nvkit

#endif  // NVKIT_METRICS_HPP
