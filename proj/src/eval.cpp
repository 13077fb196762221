#include "phonofuse/eval.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdio>
#include <exception>
#include <fstream>
#include <functional>
#include <iterator>
#include <mutex>
#include <sstream>
#include <thread>

#include "phonofuse/errors.hpp"
#include "phonofuse/version.hpp"

namespace fs = std::filesystem;

namespace phonofuse {

namespace {

constexpr std::array<std::string_view, kMetricCount> kMetricNames = {
    "baseline", "stem", "vowel_plosive", "vowel_fricative", "fused"};

// Runs task(i) for i in [0, n) on up to `jobs` threads. The first exception
// thrown by any task is rethrown after all threads have joined.
void parallel_for(std::size_t n, unsigned jobs, const std::function<void(std::size_t)>& task) {
  jobs = std::max(1u, std::min<unsigned>(jobs, static_cast<unsigned>(std::max<std::size_t>(n, 1))));
  if (jobs == 1) {
    for (std::size_t i = 0; i < n; ++i) task(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  {
    std::vector<std::jthread> workers;
    workers.reserve(jobs);
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
          try {
            task(i);
          } catch (...) {
            std::lock_guard lock(failure_mutex);
            if (!failure) failure = std::current_exception();
            next.store(n);
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

std::optional<std::string> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad()) return std::nullopt;
  return std::move(buf).str();
}

struct SampleOutcome {
  bool errored = false;
  bool oov = false;
  std::array<bool, kMetricCount> detected{};
};

std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

}  // namespace

std::string_view to_string(Metric m) { return kMetricNames.at(static_cast<std::size_t>(m)); }

std::string format_rate(Rate rate) {
  if (rate.den == 0) return "0.0000";
  // Round half-up at the fourth decimal without going through floating point.
  const std::uint64_t scaled = (rate.num * 20000 + rate.den) / (2 * rate.den);
  char buf[32];
  std::snprintf(buf, sizeof buf, "%llu.%04llu", static_cast<unsigned long long>(scaled / 10000),
                static_cast<unsigned long long>(scaled % 10000));
  return buf;
}

std::string format_rate(double value) {
  const auto scaled = static_cast<long long>(std::floor(value * 10000.0 + 0.5 + 1e-9));
  char buf[32];
  std::snprintf(buf, sizeof buf, "%lld.%04lld", scaled / 10000, scaled % 10000);
  return buf;
}

std::array<double, kMetricCount> EvalReport::macro() const {
  std::array<double, kMetricCount> out{};
  if (categories.empty()) return out;
  for (auto m : kAllMetrics) {
    double sum = 0.0;
    for (const auto& c : categories) sum += c.rate(m).value();
    out[static_cast<std::size_t>(m)] = sum / static_cast<double>(categories.size());
  }
  return out;
}

std::array<Rate, kMetricCount> EvalReport::micro() const {
  std::array<Rate, kMetricCount> out{};
  std::uint64_t total = 0;
  for (const auto& c : categories) total += c.n_samples;
  for (auto m : kAllMetrics) {
    std::uint64_t hits = 0;
    for (const auto& c : categories) hits += c.count(m);
    out[static_cast<std::size_t>(m)] = Rate{hits, total};
  }
  return out;
}

std::string config_digest(const DetectConfig& config) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, "stop:");
  for (const auto& w : config.normalize.stop_words) h = fnv1a(fnv1a(h, w), "\n");
  h = fnv1a(h, "contractions:");
  for (const auto& [k, v] : config.normalize.contractions) h = fnv1a(fnv1a(fnv1a(fnv1a(h, k), "\t"), v), "\n");
  h = fnv1a(h, "markers:");
  for (const auto& w : config.normalize.remove_marker_tokens) h = fnv1a(fnv1a(h, w), "\n");
  h = fnv1a(h, "channels:");
  h = fnv1a(h, config.channels.str());
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Dataset load_dataset(const fs::path& root) {
  std::error_code ec;
  if (!fs::exists(root, ec)) throw DataError("dataset root does not exist: " + root.string());
  if (!fs::is_directory(root, ec)) throw DataError("dataset root is not a directory: " + root.string());

  Dataset dataset{root, {}};
  for (const auto& entry : fs::directory_iterator(root)) {
    if (!entry.is_directory()) continue;
    std::string name = entry.path().filename().string();
    if (name.empty() || name.front() == '.') continue;
    std::string keyword = name;
    std::transform(keyword.begin(), keyword.end(), keyword.begin(),
                   [](char c) { return (c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c; });
    if (!Token::is_valid(keyword))
      throw DataError("category directory '" + name + "' is not a single word of letters");
    Category cat{std::move(name), std::move(keyword), {}};
    for (const auto& sample : fs::directory_iterator(entry.path())) {
      if (!sample.is_regular_file() || sample.path().extension() != ".txt") continue;
      cat.samples.push_back(sample.path());
    }
    if (cat.samples.empty())
      throw DataError("category '" + cat.name + "' has no .txt samples");
    std::sort(cat.samples.begin(), cat.samples.end(),
              [](const fs::path& a, const fs::path& b) { return a.filename().string() < b.filename().string(); });
    dataset.categories.push_back(std::move(cat));
  }
  if (dataset.categories.empty()) throw DataError("no categories under " + root.string());
  std::sort(dataset.categories.begin(), dataset.categories.end(),
            [](const Category& a, const Category& b) { return a.name < b.name; });
  return dataset;
}

EvalReport evaluate_corpus(const std::vector<CorpusCategory>& corpus, const Lexicon& lexicon,
                           const DetectConfig& config, const EvalOptions& options) {
  config.validate();

  std::vector<KeywordProfile> profiles;
  profiles.reserve(corpus.size());
  for (const auto& cat : corpus) {
    try {
      profiles.push_back(prepare_keyword(cat.keyword, lexicon, config));
    } catch (const InvalidKeyword& e) {
      throw DataError("category '" + cat.name + "': " + e.what());
    }
  }

  std::vector<std::pair<std::size_t, std::size_t>> jobs;
  for (std::size_t c = 0; c < corpus.size(); ++c)
    for (std::size_t s = 0; s < corpus[c].samples.size(); ++s) jobs.emplace_back(c, s);

  std::vector<SampleOutcome> outcomes(jobs.size());
  parallel_for(jobs.size(), options.jobs, [&](std::size_t i) {
    const auto [c, s] = jobs[i];
    const auto& sample = corpus[c].samples[s];
    auto& out = outcomes[i];
    if (!sample.text) {
      out.errored = true;
      return;
    }
    const auto transcript = normalize(*sample.text, config.normalize, sample.id);
    const auto result = detect(transcript, profiles[c], lexicon, config);
    for (auto ch : kAllChannels)
      out.detected[static_cast<std::size_t>(metric_of(ch))] = result[ch].detected;
    out.detected[static_cast<std::size_t>(Metric::Fused)] = result.fused_detected;
    out.oov = result.oov_count > 0;
  });

  EvalReport report;
  report.meta.version = kVersion;
  report.meta.dict = options.dict_label;
  report.meta.dict_headwords = lexicon.headword_count();
  report.meta.config_digest = config_digest(config);
  report.meta.channels = config.channels.str();
  report.meta.timestamp = options.timestamp;

  std::size_t i = 0;
  for (std::size_t c = 0; c < corpus.size(); ++c) {
    CategoryStats stats;
    stats.category = profiles[c].token.str();
    const auto& profile = profiles[c];
    stats.available = {config.channels.contains(Channel::Baseline),
                       config.channels.contains(Channel::Stem),
                       config.channels.contains(Channel::VowelPlosive) && profile.vowel_plosive.has_value(),
                       config.channels.contains(Channel::VowelFricative) && profile.vowel_fricative.has_value()};
    for (std::size_t s = 0; s < corpus[c].samples.size(); ++s, ++i) {
      const auto& out = outcomes[i];
      if (out.errored) {
        ++stats.errored_samples;
        continue;
      }
      ++stats.n_samples;
      if (out.oov) ++stats.oov_samples;
      for (std::size_t m = 0; m < kMetricCount; ++m)
        if (out.detected[m]) ++stats.detected[m];
    }
    if (stats.n_samples == 0)
      throw DataError("category '" + corpus[c].name + "' has no readable samples");
    report.meta.samples_errored += stats.errored_samples;
    report.categories.push_back(std::move(stats));
  }
  return report;
}

EvalReport evaluate(const Dataset& dataset, const Lexicon& lexicon, const DetectConfig& config,
                    const EvalOptions& options) {
  std::vector<CorpusCategory> corpus;
  std::vector<std::pair<std::size_t, std::size_t>> files;
  for (const auto& cat : dataset.categories) {
    CorpusCategory cc{cat.name, cat.keyword, {}};
    for (const auto& path : cat.samples) {
      files.emplace_back(corpus.size(), cc.samples.size());
      cc.samples.push_back({path.filename().string(), std::nullopt});
    }
    corpus.push_back(std::move(cc));
  }
  parallel_for(files.size(), options.jobs, [&](std::size_t i) {
    const auto [c, s] = files[i];
    corpus[c].samples[s].text = read_file(dataset.categories[c].samples[s]);
  });
  return evaluate_corpus(corpus, lexicon, config, options);
}

}  // namespace phonofuse
