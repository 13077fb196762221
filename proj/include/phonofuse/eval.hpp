#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "phonofuse/matcher.hpp"
#include "phonofuse/pronlex.hpp"

namespace phonofuse {

struct Category {
  std::string name;  // directory name as found on disk
  std::string keyword;
  std::vector<std::filesystem::path> samples;
};

struct Dataset {
  std::filesystem::path root;
  std::vector<Category> categories;
};

/// `<root>/<CATEGORY>/<sample>.txt`; categories and samples sorted by name.
/// Throws DataError for a missing or empty root or an empty category.
Dataset load_dataset(const std::filesystem::path& root);

/// A transcript already in memory. `text == nullopt` marks a sample that
/// could not be read.
struct SampleText {
  std::string id;
  std::optional<std::string> text;
};

struct CorpusCategory {
  std::string name;
  std::string keyword;
  std::vector<SampleText> samples;
};

// Report columns: the four channels followed by the fused decision.
enum class Metric : std::uint8_t { Baseline, Stem, VowelPlosive, VowelFricative, Fused };
inline constexpr std::size_t kMetricCount = 5;
inline constexpr std::array<Metric, kMetricCount> kAllMetrics = {
    Metric::Baseline, Metric::Stem, Metric::VowelPlosive, Metric::VowelFricative, Metric::Fused};
std::string_view to_string(Metric m);
constexpr Metric metric_of(Channel c) { return static_cast<Metric>(c); }

/// An exact fraction; rendered rounded half-up to four decimals.
struct Rate {
  std::uint64_t num = 0;
  std::uint64_t den = 1;
  double value() const { return den ? static_cast<double>(num) / static_cast<double>(den) : 0.0; }
};

std::string format_rate(Rate rate);
std::string format_rate(double value);

struct CategoryStats {
  std::string category;  // the lowercase keyword
  std::size_t n_samples = 0;
  std::array<std::size_t, kMetricCount> detected{};
  std::array<bool, 4> available{};  // per channel, fixed by the keyword
  std::size_t oov_samples = 0;
  std::size_t errored_samples = 0;

  std::size_t count(Metric m) const { return detected[static_cast<std::size_t>(m)]; }
  bool is_available(Channel c) const { return available[static_cast<std::size_t>(c)]; }
  Rate rate(Metric m) const { return {count(m), n_samples}; }

  friend bool operator==(const CategoryStats&, const CategoryStats&) = default;
};

struct ReportMeta {
  std::string tool = "phonofuse";
  std::string version;
  std::string dict;
  std::size_t dict_headwords = 0;
  std::string config_digest;
  std::string channels;
  std::optional<std::string> timestamp;
  std::size_t samples_errored = 0;

  friend bool operator==(const ReportMeta&, const ReportMeta&) = default;
};

struct EvalReport {
  ReportMeta meta;
  std::vector<CategoryStats> categories;

  /// Mean of the per-category rates.
  std::array<double, kMetricCount> macro() const;
  /// Detections pooled over every sample.
  std::array<Rate, kMetricCount> micro() const;

  friend bool operator==(const EvalReport&, const EvalReport&) = default;
};

struct EvalOptions {
  unsigned jobs = 1;
  std::string dict_label;               // recorded in the report metadata
  std::optional<std::string> timestamp; // left null unless given
};

/// Stable 64-bit FNV-1a digest (hex) of the normalization tables and channels.
std::string config_digest(const DetectConfig& config);

EvalReport evaluate_corpus(const std::vector<CorpusCategory>& corpus, const Lexicon& lexicon,
                           const DetectConfig& config, const EvalOptions& options = {});

/// Reads every sample (in parallel when options.jobs > 1) and evaluates it
/// against its category keyword. Unreadable samples are left out of the
/// rates and counted in meta.samples_errored.
EvalReport evaluate(const Dataset& dataset, const Lexicon& lexicon, const DetectConfig& config,
                    const EvalOptions& options = {});

enum class ReportFormat { Json, Csv };
ReportFormat parse_report_format(std::string_view name);

std::string render_report_json(const EvalReport& report);
std::string render_report_csv(const EvalReport& report);
void write_report(const EvalReport& report, ReportFormat format, const std::filesystem::path& out);

/// Inverse of render_report_json. Rates are recomputed from the counts;
/// throws DataError when the file disagrees with itself.
EvalReport parse_report_json(std::string_view text);

}  // namespace phonofuse
