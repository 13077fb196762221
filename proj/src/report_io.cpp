#include <fstream>
#include <sstream>

#include <json.hpp>

#include "phonofuse/errors.hpp"
#include "phonofuse/eval.hpp"

namespace phonofuse {

namespace {

std::string json_string(std::string_view s) { return nlohmann::json(std::string(s)).dump(); }

template <typename Fn>
std::string metric_object(Fn&& value_of) {
  std::string out = "{";
  for (std::size_t i = 0; i < kMetricCount; ++i) {
    if (i) out += ", ";
    out += json_string(to_string(kAllMetrics[i]));
    out += ": ";
    out += value_of(kAllMetrics[i]);
  }
  return out + "}";
}

std::string channel_flags(const CategoryStats& c) {
  std::string out = "{";
  for (std::size_t i = 0; i < kAllChannels.size(); ++i) {
    if (i) out += ", ";
    out += json_string(to_string(kAllChannels[i]));
    out += c.is_available(kAllChannels[i]) ? ": true" : ": false";
  }
  return out + "}";
}

const nlohmann::json& field(const nlohmann::json& obj, const char* key) {
  if (!obj.is_object() || !obj.contains(key))
    throw DataError(std::string("report is missing field '") + key + "'");
  return obj.at(key);
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::Json;
  if (name == "csv") return ReportFormat::Csv;
  throw std::invalid_argument("unknown report format '" + std::string(name) + "'");
}

std::string render_report_json(const EvalReport& report) {
  std::ostringstream out;
  const auto& m = report.meta;
  out << "{\n";
  out << "  \"meta\": {\n";
  out << "    \"tool\": " << json_string(m.tool) << ",\n";
  out << "    \"version\": " << json_string(m.version) << ",\n";
  out << "    \"dict\": " << json_string(m.dict) << ",\n";
  out << "    \"dict_headwords\": " << m.dict_headwords << ",\n";
  out << "    \"config_digest\": " << json_string(m.config_digest) << ",\n";
  out << "    \"channels\": " << json_string(m.channels) << ",\n";
  out << "    \"timestamp\": " << (m.timestamp ? json_string(*m.timestamp) : "null") << ",\n";
  out << "    \"samples_errored\": " << m.samples_errored << "\n";
  out << "  },\n";
  out << "  \"categories\": [";
  for (std::size_t i = 0; i < report.categories.size(); ++i) {
    const auto& c = report.categories[i];
    out << (i ? ",\n" : "\n");
    out << "    {\n";
    out << "      \"category\": " << json_string(c.category) << ",\n";
    out << "      \"n_samples\": " << c.n_samples << ",\n";
    out << "      \"counts\": " << metric_object([&](Metric x) { return std::to_string(c.count(x)); }) << ",\n";
    out << "      \"rates\": " << metric_object([&](Metric x) { return format_rate(c.rate(x)); }) << ",\n";
    out << "      \"available\": " << channel_flags(c) << ",\n";
    out << "      \"oov_samples\": " << c.oov_samples << ",\n";
    out << "      \"errored_samples\": " << c.errored_samples << "\n";
    out << "    }";
  }
  out << (report.categories.empty() ? "],\n" : "\n  ],\n");
  const auto macro = report.macro();
  const auto micro = report.micro();
  std::size_t total = 0;
  for (const auto& c : report.categories) total += c.n_samples;
  out << "  \"aggregate\": {\n";
  out << "    \"n_categories\": " << report.categories.size() << ",\n";
  out << "    \"n_samples\": " << total << ",\n";
  out << "    \"macro\": " << metric_object([&](Metric x) { return format_rate(macro[static_cast<std::size_t>(x)]); }) << ",\n";
  out << "    \"micro\": " << metric_object([&](Metric x) { return format_rate(micro[static_cast<std::size_t>(x)]); }) << "\n";
  out << "  }\n";
  out << "}\n";
  return out.str();
}

std::string render_report_csv(const EvalReport& report) {
  std::ostringstream out;
  out << "category,n_samples,baseline,stem,vowel_plosive,vowel_fricative,fused,oov_samples\n";
  std::size_t total = 0, oov = 0;
  for (const auto& c : report.categories) {
    out << c.category << ',' << c.n_samples;
    for (auto m : kAllMetrics) out << ',' << format_rate(c.rate(m));
    out << ',' << c.oov_samples << '\n';
    total += c.n_samples;
    oov += c.oov_samples;
  }
  const auto macro = report.macro();
  out << "__aggregate__," << total;
  for (double r : macro) out << ',' << format_rate(r);
  out << ',' << oov << '\n';
  return out.str();
}

void write_report(const EvalReport& report, ReportFormat format, const std::filesystem::path& out) {
  const std::string text =
      format == ReportFormat::Json ? render_report_json(report) : render_report_csv(report);
  std::ofstream file(out, std::ios::binary | std::ios::trunc);
  if (!file) throw IoError("cannot write report to " + out.string());
  file << text;
  file.flush();
  if (!file) throw IoError("failed writing report to " + out.string());
}

EvalReport parse_report_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw DataError(std::string("report is not valid JSON: ") + e.what());
  }

  EvalReport report;
  try {
    const auto& meta = field(doc, "meta");
    report.meta.tool = field(meta, "tool").get<std::string>();
    report.meta.version = field(meta, "version").get<std::string>();
    report.meta.dict = field(meta, "dict").get<std::string>();
    report.meta.dict_headwords = field(meta, "dict_headwords").get<std::size_t>();
    report.meta.config_digest = field(meta, "config_digest").get<std::string>();
    report.meta.channels = field(meta, "channels").get<std::string>();
    if (const auto& ts = field(meta, "timestamp"); !ts.is_null()) report.meta.timestamp = ts.get<std::string>();
    report.meta.samples_errored = field(meta, "samples_errored").get<std::size_t>();

    for (const auto& jc : field(doc, "categories")) {
      CategoryStats c;
      c.category = field(jc, "category").get<std::string>();
      c.n_samples = field(jc, "n_samples").get<std::size_t>();
      c.oov_samples = field(jc, "oov_samples").get<std::size_t>();
      c.errored_samples = field(jc, "errored_samples").get<std::size_t>();
      const auto& counts = field(jc, "counts");
      const auto& rates = field(jc, "rates");
      for (auto m : kAllMetrics) {
        const auto key = std::string(to_string(m));
        c.detected[static_cast<std::size_t>(m)] = field(counts, key.c_str()).get<std::size_t>();
        const double stored = field(rates, key.c_str()).get<double>();
        if (format_rate(stored) != format_rate(c.rate(m)))
          throw DataError("report rate for " + c.category + "/" + key + " does not match its counts");
      }
      const auto& avail = field(jc, "available");
      for (auto ch : kAllChannels) {
        const auto key = std::string(to_string(ch));
        c.available[static_cast<std::size_t>(ch)] = field(avail, key.c_str()).get<bool>();
      }
      report.categories.push_back(std::move(c));
    }
  } catch (const nlohmann::json::exception& e) {
    throw DataError(std::string("malformed report: ") + e.what());
  }
  return report;
}

}  // namespace phonofuse
