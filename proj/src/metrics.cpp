#include "nvkit/metrics.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nvkit/error.hpp"
#include "nvkit/util.hpp"

namespace nvkit {

namespace {

int parse_scale(std::string_view field, std::string_view what, int line_no) {
  std::string s(trim(field));
  if (s.size() == 1 && s[0] >= '1' && s[0] <= '5') return s[0] - '0';
  throw Error(ErrorCode::MalformedRatings, "line " + std::to_string(line_no) + ": " +
                                               std::string(what) + " must be an integer 1-5, got '" +
                                               s + "'");
}

Emotion parse_emotion_field(std::string_view field, int line_no) {
  auto e = emotion_from_name(trim(field));
  if (!e)
    throw Error(ErrorCode::MalformedRatings,
                "line " + std::to_string(line_no) + ": unknown emotion '" +
                    std::string(trim(field)) + "'");
  return *e;
}

}  // namespace

std::string_view condition_name(Condition c) {
  switch (c) {
    case Condition::VerbalOnly: return "verbal_only";
    case Condition::CoarseNV: return "coarse_nv";
    case Condition::FineNV: return "fine_nv";
  }
  return "";
}

std::string_view emotion_name(Emotion e) {
  switch (e) {
    case Emotion::Happy: return "happy";
    case Emotion::Sad: return "sad";
    case Emotion::Anger: return "anger";
    case Emotion::Fear: return "fear";
  }
  return "";
}

std::optional<Condition> condition_from_name(std::string_view name) {
  std::string lower = to_lower(trim(name));
  for (Condition c : all_conditions())
    if (lower == condition_name(c)) return c;
  return std::nullopt;
}

std::optional<Emotion> emotion_from_name(std::string_view name) {
  std::string lower = to_lower(trim(name));
  for (Emotion e : all_emotions())
    if (lower == emotion_name(e)) return e;
  return std::nullopt;
}

std::vector<RatingRecord> parse_ratings_csv(std::string_view text) {
  constexpr std::string_view kHeader =
      "rater_id,sample_id,condition,true_emotion,chosen_emotion,nmos,emos";
  std::vector<std::string> lines = split(text, '\n');
  if (lines.empty() || trim(lines[0]) != kHeader)
    throw Error(ErrorCode::MalformedRatings, "line 1: expected header '" + std::string(kHeader) + "'");
  std::vector<RatingRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const int line_no = static_cast<int>(i + 1);
    std::vector<std::string> cols = split(lines[i], ',');
    if (cols.size() != 7)
      throw Error(ErrorCode::MalformedRatings,
                  "line " + std::to_string(line_no) + ": expected 7 comma-separated fields");
    RatingRecord r;
    r.rater_id = std::string(trim(cols[0]));
    r.sample_id = std::string(trim(cols[1]));
    auto cond = condition_from_name(cols[2]);
    if (!cond)
      throw Error(ErrorCode::MalformedRatings,
                  "line " + std::to_string(line_no) + ": unknown condition '" +
                      std::string(trim(cols[2])) + "'");
    r.condition = *cond;
    r.true_emotion = parse_emotion_field(cols[3], line_no);
    r.chosen_emotion = parse_emotion_field(cols[4], line_no);
    r.nmos = parse_scale(cols[5], "nmos", line_no);
    r.emos = parse_scale(cols[6], "emos", line_no);
    out.push_back(std::move(r));
  }
  return out;
}

std::vector<PreferenceRecord> parse_preference_csv(std::string_view text) {
  constexpr std::string_view kHeader = "rater_id,emotion,rank1,rank2,rank3,rank4";
  std::vector<std::string> lines = split(text, '\n');
  if (lines.empty() || trim(lines[0]) != kHeader)
    throw Error(ErrorCode::MalformedRatings, "line 1: expected header '" + std::string(kHeader) + "'");
  std::vector<PreferenceRecord> out;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    if (trim(lines[i]).empty()) continue;
    const int line_no = static_cast<int>(i + 1);
    std::vector<std::string> cols = split(lines[i], ',');
    if (cols.size() != 6)
      throw Error(ErrorCode::MalformedRatings,
                  "line " + std::to_string(line_no) + ": expected 6 comma-separated fields");
    PreferenceRecord r;
    r.rater_id = std::string(trim(cols[0]));
    r.emotion = parse_emotion_field(cols[1], line_no);
    std::set<std::string> seen;
    for (int k = 0; k < 4; ++k) {
      r.ranking[static_cast<std::size_t>(k)] = std::string(trim(cols[static_cast<std::size_t>(k) + 2]));
      if (r.ranking[static_cast<std::size_t>(k)].empty())
        throw Error(ErrorCode::MalformedRatings,
                    "line " + std::to_string(line_no) + ": empty variant at rank " +
                        std::to_string(k + 1));
      if (!seen.insert(r.ranking[static_cast<std::size_t>(k)]).second)
        throw Error(ErrorCode::MalformedRatings,
                    "line " + std::to_string(line_no) + ": ranking is not a permutation ('" +
                        r.ranking[static_cast<std::size_t>(k)] + "' repeated)");
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::map<Group, MosStat> mos(std::span<const RatingRecord> records, MosField field) {
  std::map<Group, std::vector<int>> groups;
  for (const RatingRecord& r : records)
    groups[{r.condition, r.true_emotion}].push_back(field == MosField::Nmos ? r.nmos : r.emos);
  std::map<Group, MosStat> out;
  for (const auto& [key, values] : groups) {
    MosStat s;
    s.n = static_cast<int>(values.size());
    double sum = 0;
    for (int v : values) sum += v;
    s.mean = sum / s.n;
    if (s.n > 1) {
      double sq = 0;
      for (int v : values) sq += (v - s.mean) * (v - s.mean);
      double sd = std::sqrt(sq / (s.n - 1));
      s.ci95 = 1.96 * sd / std::sqrt(static_cast<double>(s.n));
    }
    out[key] = s;
  }
  return out;
}

MosStat mos_group(std::span<const RatingRecord> records, MosField field, Condition c,
                  Emotion e) {
  auto table = mos(records, field);
  auto it = table.find({c, e});
  if (it == table.end())
    throw Error(ErrorCode::EmptyGroup, std::string(condition_name(c)) + " x " +
                                           std::string(emotion_name(e)) + " has no ratings");
  return it->second;
}

AccuracyReport accuracy(std::span<const RatingRecord> records, Condition c) {
  AccuracyReport report;
  std::map<Emotion, std::pair<int, int>> counts;
  int correct_total = 0, total = 0;
  for (const RatingRecord& r : records) {
    if (r.condition != c) continue;
    auto& [correct, n] = counts[r.true_emotion];
    ++n;
    ++total;
    if (r.chosen_emotion == r.true_emotion) {
      ++correct;
      ++correct_total;
    }
  }
  if (total == 0)
    throw Error(ErrorCode::EmptyGroup,
                std::string(condition_name(c)) + " has no rating records");
  double macro_sum = 0;
  for (const auto& [emotion, pair] : counts) {
    double frac = static_cast<double>(pair.first) / pair.second;
    report.per_emotion[emotion] = frac;
    macro_sum += frac;
  }
  report.trial_counts = counts;
  report.micro = static_cast<double>(correct_total) / total;
  report.macro = macro_sum / static_cast<double>(counts.size());
  report.total = total;
  return report;
}

std::array<std::array<double, kEmotionCount>, kEmotionCount> ConfusionMatrix::row_normalized()
    const {
  std::array<std::array<double, kEmotionCount>, kEmotionCount> out{};
  for (int r = 0; r < kEmotionCount; ++r) {
    std::int64_t sum = row_sum(r);
    for (int c = 0; c < kEmotionCount; ++c)
      out[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] =
          sum == 0 ? 0.0
                   : static_cast<double>(
                         counts[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]) /
                         static_cast<double>(sum);
  }
  return out;
}

std::int64_t ConfusionMatrix::row_sum(int row) const {
  std::int64_t sum = 0;
  for (std::int64_t v : counts[static_cast<std::size_t>(row)]) sum += v;
  return sum;
}

ConfusionMatrix confusion(std::span<const RatingRecord> records, Condition c) {
  ConfusionMatrix m;
  for (const RatingRecord& r : records) {
    if (r.condition != c) continue;
    ++m.counts[static_cast<std::size_t>(r.true_emotion)]
               [static_cast<std::size_t>(r.chosen_emotion)];
  }
  return m;
}

PreferenceHistogram preference(std::span<const PreferenceRecord> records, Emotion emotion) {
  std::vector<const PreferenceRecord*> selected;
  for (const PreferenceRecord& r : records)
    if (r.emotion == emotion) selected.push_back(&r);
  if (selected.empty())
    throw Error(ErrorCode::EmptyGroup, "no preference records for emotion '" +
                                           std::string(emotion_name(emotion)) + "'");

  std::set<std::string> universe(selected.front()->ranking.begin(),
                                 selected.front()->ranking.end());
  for (const PreferenceRecord* r : selected) {
    std::set<std::string> this_set(r->ranking.begin(), r->ranking.end());
    if (this_set != universe)
      throw Error(ErrorCode::MalformedRatings,
                  "rater '" + r->rater_id + "' ranks a different variant set for emotion '" +
                      std::string(emotion_name(emotion)) + "'");
  }

  PreferenceHistogram hist;
  hist.variants.assign(universe.begin(), universe.end());
  hist.fractions.assign(hist.variants.size(), {0, 0, 0, 0});
  hist.n = static_cast<int>(selected.size());
  for (const PreferenceRecord* r : selected) {
    for (int rank = 0; rank < 4; ++rank) {
      auto it = std::find(hist.variants.begin(), hist.variants.end(),
                          r->ranking[static_cast<std::size_t>(rank)]);
      hist.fractions[static_cast<std::size_t>(it - hist.variants.begin())]
                    [static_cast<std::size_t>(rank)] += 1.0;
    }
  }
  for (auto& row : hist.fractions)
    for (double& v : row) v /= hist.n;
  return hist;
}

std::string format_mos_table(const std::map<Group, MosStat>& nmos,
                             const std::map<Group, MosStat>& emos) {
  std::string out = "metric\tcondition\temotion\tn\tmean\tci95\n";
  auto append = [&out](std::string_view metric, const std::map<Group, MosStat>& table) {
    for (const auto& [key, stat] : table) {
      out += metric;
      out += '\t';
      out += condition_name(key.first);
      out += '\t';
      out += emotion_name(key.second);
      out += '\t';
      out += std::to_string(stat.n);
      out += '\t';
      out += format_fixed(stat.mean, 4);
      out += '\t';
      out += format_fixed(stat.ci95, 4);
      out += '\n';
    }
  };
  append("nmos", nmos);
  append("emos", emos);
  return out;
}

std::string format_accuracy_table(const std::map<Condition, AccuracyReport>& reports) {
  std::string out = "condition\temotion\tcorrect\ttrials\taccuracy\n";
  for (const auto& [cond, report] : reports) {
    for (const auto& [emotion, frac] : report.per_emotion) {
      const auto& [correct, total] = report.trial_counts.at(emotion);
      out += condition_name(cond);
      out += '\t';
      out += emotion_name(emotion);
      out += '\t';
      out += std::to_string(correct);
      out += '\t';
      out += std::to_string(total);
      out += '\t';
      out += format_fixed(frac, 4);
      out += '\n';
    }
    out += condition_name(cond);
    out += "\tmicro\t-\t";
    out += std::to_string(report.total);
    out += '\t';
    out += format_fixed(report.micro, 4);
    out += '\n';
    out += condition_name(cond);
    out += "\tmacro\t-\t-\t";
    out += format_fixed(report.macro, 4);
    out += '\n';
  }
  return out;
}

std::string format_confusion_table(Condition c, const ConfusionMatrix& m) {
  std::string out = "confusion\t";
  out += condition_name(c);
  out += "\ttrue\\chosen";
  for (Emotion e : all_emotions()) {
    out += '\t';
    out += emotion_name(e);
  }
  out += '\n';
  for (Emotion row : all_emotions()) {
    out += "confusion\t";
    out += condition_name(c);
    out += '\t';
    out += emotion_name(row);
    for (Emotion col : all_emotions()) {
      out += '\t';
      out += std::to_string(m.counts[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)]);
    }
    out += '\n';
  }
  return out;
}

std::string format_confusion_pretty(Condition c, const ConfusionMatrix& m) {
  auto norm = m.row_normalized();
  std::string out = "confusion matrix (";
  out += condition_name(c);
  out += "), rows true / columns chosen\n";
  out += "          ";
  for (Emotion e : all_emotions()) {
    std::string name(emotion_name(e));
    name.resize(8, ' ');
    out += name;
  }
  out += '\n';
  for (Emotion row : all_emotions()) {
    std::string name(emotion_name(row));
    name.resize(10, ' ');
    out += name;
    for (Emotion col : all_emotions()) {
      out += format_fixed(
          norm[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)], 3);
      out += "   ";
    }
    out += '\n';
  }
  return out;
}

std::string format_preference_table(Emotion e, const PreferenceHistogram& h) {
  std::string out = "emotion\tvariant\trank1\trank2\trank3\trank4\n";
  for (std::size_t i = 0; i < h.variants.size(); ++i) {
    out += emotion_name(e);
    out += '\t';
    out += h.variants[i];
    for (double frac : h.fractions[i]) {
      out += '\t';
      out += format_fixed(frac, 4);
    }
    out += '\n';
  }
  return out;
}

}  // namespace nvkit
