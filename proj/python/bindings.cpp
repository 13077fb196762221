#include <pybind11/pybind11.h>
#include <pybind11/stl.h>
#include <pybind11/stl/filesystem.h>

#include <memory>

#include "phonofuse/corpus_gen.hpp"
#include "phonofuse/errors.hpp"
#include "phonofuse/eval.hpp"
#include "phonofuse/matcher.hpp"
#include "phonofuse/phonology.hpp"
#include "phonofuse/pronlex.hpp"
#include "phonofuse/stemmer.hpp"
#include "phonofuse/text_normalize.hpp"
#include "phonofuse/version.hpp"

namespace py = pybind11;
namespace pf = phonofuse;

namespace {

// A dictionary handle shared with Python; the bundled one is never copied.
struct LexiconHandle {
  std::shared_ptr<const pf::Lexicon> owned;
  const pf::Lexicon* lexicon = nullptr;
  std::string label;

  static LexiconHandle bundled() { return {nullptr, &pf::bundled_lexicon(), "bundled:mini_cmudict.txt"}; }
  static LexiconHandle load(const std::filesystem::path& path) {
    auto parsed = std::make_shared<const pf::Lexicon>(pf::load_cmudict(path).lexicon);
    const auto* raw = parsed.get();
    return {std::move(parsed), raw, path.filename().string()};
  }
};

const LexiconHandle& resolve(const std::optional<LexiconHandle>& lex) {
  static const LexiconHandle fallback = LexiconHandle::bundled();
  return lex ? *lex : fallback;
}

std::vector<std::string> words_of(const pf::TokenList& tokens) {
  std::vector<std::string> out;
  out.reserve(tokens.size());
  for (const auto& t : tokens) out.push_back(t.str());
  return out;
}

pf::PrunedPattern pattern_from(const std::vector<std::string>& symbols) {
  pf::PrunedPattern out;
  for (const auto& s : symbols) {
    if (s.size() == 1 && std::string_view("AEIOU").find(s[0]) != std::string_view::npos) {
      out.symbols.push_back(pf::PatternSymbol::vowel(s[0]));
      continue;
    }
    const auto sym = pf::parse_symbol(s);
    if (!sym || pf::is_vowel_symbol(*sym))
      throw std::invalid_argument("not a pattern symbol: '" + s + "'");
    out.symbols.push_back(pf::PatternSymbol::consonant(*sym));
  }
  return out;
}

std::vector<std::string> pattern_texts(const pf::PrunedPattern& p) {
  std::vector<std::string> out;
  for (auto s : p.symbols) out.emplace_back(s.text());
  return out;
}

pf::DetectConfig detect_config(const std::optional<std::string>& channels) {
  pf::DetectConfig config;
  if (channels) config.channels = pf::ChannelSet::parse(*channels);
  config.validate();
  return config;
}

const pf::Pronunciation& require_entry(const pf::Lexicon& lex, const std::string& word) {
  const auto* p = lex.lookup(word);
  if (!p) throw py::key_error("'" + word + "' is not in the dictionary");
  return *p;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Keyword recognition in noisy transcripts by fusing stem and phoneme-pattern matching";
  m.attr("__version__") = pf::kVersion;

  auto data_error = py::register_exception<pf::DataError>(m, "DataError", PyExc_RuntimeError);
  py::register_exception<pf::IoError>(m, "IoError", data_error.ptr());
  py::register_exception<pf::ClassificationError>(m, "ClassificationError", data_error.ptr());
  py::register_exception<pf::ParseError>(m, "ParseError", PyExc_ValueError);
  py::register_exception<pf::InvalidKeyword>(m, "InvalidKeyword", PyExc_ValueError);

  py::class_<LexiconHandle>(m, "Lexicon", "A parsed CMU pronouncing dictionary")
      .def_static("bundled", &LexiconHandle::bundled, "The mini lexicon compiled into the library")
      .def_static("load", &LexiconHandle::load, py::arg("path"), "Parse a cmudict file")
      .def_property_readonly("label", [](const LexiconHandle& h) { return h.label; })
      .def_property_readonly("headword_count", [](const LexiconHandle& h) { return h.lexicon->headword_count(); })
      .def("__contains__", [](const LexiconHandle& h, const std::string& w) { return h.lexicon->contains(w); })
      .def(
          "lookup",
          [](const LexiconHandle& h, const std::string& w) -> std::optional<std::vector<std::string>> {
            const auto* p = h.lexicon->lookup(w);
            if (!p) return std::nullopt;
            std::vector<std::string> out;
            for (const auto& ph : p->phonemes) out.push_back(ph.str());
            return out;
          },
          py::arg("word"), "Variant-1 phonemes with stress digits, or None");

  m.def("stem", [](const std::string& w) { return pf::stem(w); }, py::arg("word"));
  m.def("measure", [](const std::string& w) { return pf::measure(w); }, py::arg("word"));
  m.def("number_to_words", [](const std::string& n) { return words_of(pf::number_to_words(n)); },
        py::arg("numeral"));
  m.def("tokenize", [](const std::string& text) { return words_of(pf::tokenize(text)); }, py::arg("text"));
  m.def(
      "normalize",
      [](const std::string& text) { return words_of(pf::normalize(text, pf::NormalizeConfig::defaults()).tokens); },
      py::arg("text"), "Tokens left after tokenizing and removing stop words and markers");

  m.def(
      "phonemize",
      [](const std::string& word, bool stress, const std::optional<LexiconHandle>& lex) {
        const auto& p = require_entry(*resolve(lex).lexicon, word);
        std::vector<std::string> out;
        for (const auto& ph : p.phonemes) out.push_back(stress ? ph.str() : std::string(pf::to_string(ph.base)));
        return out;
      },
      py::arg("word"), py::arg("stress") = false, py::arg("lexicon") = py::none());
  m.def(
      "prune",
      [](const std::string& word, const std::string& classes, const std::optional<LexiconHandle>& lex) {
        const auto& p = require_entry(*resolve(lex).lexicon, word);
        return pattern_texts(pf::prune(pf::strip_stress(p.phonemes), pf::ClassSet::parse(classes)));
      },
      py::arg("word"), py::arg("classes") = "vowel,plosive", py::arg("lexicon") = py::none(),
      "Pruned pattern of a dictionary word, e.g. ['A', 'G', 'I', 'A', 'T']");
  m.def(
      "pattern_count",
      [](const std::vector<std::string>& stream, const std::vector<std::string>& needle) {
        return pf::pattern_count(pattern_from(stream), pattern_from(needle));
      },
      py::arg("stream"), py::arg("needle"), "Non-overlapping left-to-right occurrences");

  m.def(
      "detect",
      [](const std::string& text, const std::string& keyword, const std::optional<std::string>& channels,
         const std::optional<LexiconHandle>& lex) {
        const auto config = detect_config(channels);
        const auto& l = *resolve(lex).lexicon;
        const auto outcome = pf::detect(pf::normalize(text, config.normalize), keyword, l, config);
        py::dict result, per_channel;
        for (const auto& r : outcome.channels) {
          py::dict d;
          d["count"] = r.count;
          d["detected"] = r.detected;
          d["available"] = r.available;
          per_channel[py::str(std::string(pf::to_string(r.channel)))] = d;
        }
        result["keyword"] = outcome.keyword;
        result["channels"] = per_channel;
        result["fused"] = outcome.fused_detected;
        result["oov_count"] = outcome.oov_count;
        return result;
      },
      py::arg("text"), py::arg("keyword"), py::arg("channels") = py::none(), py::arg("lexicon") = py::none());

  m.def(
      "evaluate",
      [](const std::filesystem::path& dataset, unsigned jobs, const std::string& format,
         const std::optional<std::string>& channels, const std::optional<LexiconHandle>& lex) {
        const auto config = detect_config(channels);
        const auto& handle = resolve(lex);
        pf::EvalOptions options;
        options.jobs = jobs;
        options.dict_label = handle.label;
        pf::EvalReport report;
        {
          py::gil_scoped_release release;
          report = pf::evaluate(pf::load_dataset(dataset), *handle.lexicon, config, options);
        }
        return pf::parse_report_format(format) == pf::ReportFormat::Json ? pf::render_report_json(report)
                                                                         : pf::render_report_csv(report);
      },
      py::arg("dataset"), py::arg("jobs") = 1, py::arg("format") = "json", py::arg("channels") = py::none(),
      py::arg("lexicon") = py::none(), "Render the recognition-rate report for a corpus directory");

  m.def(
      "write_synthetic_corpus",
      [](const std::filesystem::path& root, const std::vector<std::string>& keywords,
         const std::vector<std::string>& vocabulary, std::size_t n_categories, std::size_t samples_per_category,
         std::uint64_t seed) {
        const auto recipe = pf::random_recipe(keywords, vocabulary, n_categories, samples_per_category, seed);
        pf::write_corpus(pf::generate_corpus(recipe, seed ^ 0x5eedULL), root);
      },
      py::arg("root"), py::arg("keywords"), py::arg("vocabulary"), py::arg("n_categories"),
      py::arg("samples_per_category"), py::arg("seed"),
      "Write a seeded noisy corpus in the <root>/<KEYWORD>/<id>.txt layout");
}
