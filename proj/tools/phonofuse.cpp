// phonofuse: keyword recognition in noisy speech transcripts.
//
//   phonofuse normalize [--stopwords F] [--contractions F] [TEXT...]
//   phonofuse stem WORD...
//   phonofuse phonemize [--dict F] [--stress] WORD...
//   phonofuse prune --classes vowel,plosive [--dict F] WORD...
//   phonofuse detect --transcript F --keyword W [--dict F] [--channels LIST]
//   phonofuse evaluate --dataset DIR [--dict F] [--out F] [--format json|csv] [--jobs N]
//
// Exit codes: 0 success, 1 usage error, 2 data error.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <thread>

#include <CLI11.hpp>

#include "phonofuse/errors.hpp"
#include "phonofuse/eval.hpp"
#include "phonofuse/matcher.hpp"
#include "phonofuse/phonology.hpp"
#include "phonofuse/pronlex.hpp"
#include "phonofuse/stemmer.hpp"
#include "phonofuse/text_normalize.hpp"
#include "phonofuse/version.hpp"

namespace pf = phonofuse;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct CommonOptions {
  std::string dict_path;
  std::string stopwords_path;
  std::string contractions_path;
};

struct LoadedLexicon {
  std::optional<pf::Lexicon> owned;  // empty: the bundled lexicon
  std::string label;

  const pf::Lexicon& get() const { return owned ? *owned : pf::bundled_lexicon(); }
};

LoadedLexicon load_lexicon(const std::string& path) {
  LoadedLexicon out;
  if (path.empty()) {
    out.label = "bundled:mini_cmudict.txt";
    return out;
  }
  auto parsed = pf::load_cmudict(path);
  const auto& r = parsed.report;
  if (r.malformed || r.undecodable)
    std::cerr << "phonofuse: " << path << ": skipped " << r.malformed << " malformed and "
              << r.undecodable << " undecodable lines\n";
  out.owned = std::move(parsed.lexicon);
  out.label = std::filesystem::path(path).filename().string();
  return out;
}

pf::NormalizeConfig load_normalize_config(const CommonOptions& opts) {
  auto config = pf::NormalizeConfig::defaults();
  if (!opts.stopwords_path.empty()) config.stop_words = pf::load_stop_words(opts.stopwords_path);
  if (!opts.contractions_path.empty())
    config.contractions = pf::load_contractions(opts.contractions_path);
  return config;
}

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string checked_word(const std::string& raw) {
  std::string w;
  for (char c : raw) w.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
  if (!pf::Token::is_valid(w)) throw UsageError("not a word of letters: '" + raw + "'");
  return w;
}

void add_normalize_flags(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--stopwords", opts.stopwords_path, "Stop-word file (one word per line)");
  cmd->add_option("--contractions", opts.contractions_path,
                  "Contraction file (contracted<TAB>expansion)");
}

void add_dict_flag(CLI::App* cmd, CommonOptions& opts) {
  cmd->add_option("--dict", opts.dict_path,
                  "CMU pronouncing dictionary (default: the bundled mini lexicon)");
}

int run_normalize(const CommonOptions& opts, const std::vector<std::string>& text_args) {
  const auto config = load_normalize_config(opts);
  std::string text;
  if (text_args.empty()) {
    text = read_all(std::cin);
  } else {
    for (const auto& t : text_args) text += t + " ";
  }
  std::cout << pf::join(pf::normalize(text, config).tokens) << '\n';
  return 0;
}

int run_stem(const std::vector<std::string>& words) {
  for (const auto& raw : words) {
    const auto w = checked_word(raw);
    std::cout << w << '\t' << pf::stem(w) << '\n';
  }
  return 0;
}

int run_phonemize(const CommonOptions& opts, const std::vector<std::string>& words, bool stress) {
  const auto lex = load_lexicon(opts.dict_path);
  int status = 0;
  for (const auto& raw : words) {
    const auto w = checked_word(raw);
    const auto p = pf::lookup(lex.get(), w);
    if (!p) {
      std::cerr << "phonofuse: '" << w << "' is not in the dictionary\n";
      status = 2;
      continue;
    }
    std::cout << (stress ? pf::join_phonemes(p->phonemes) : pf::join_symbols(pf::strip_stress(p->phonemes)))
              << '\n';
  }
  return status;
}

int run_prune(const CommonOptions& opts, const std::string& classes_spec,
              const std::vector<std::string>& words) {
  pf::ClassSet classes = [&] {
    try {
      return pf::ClassSet::parse(classes_spec);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto lex = load_lexicon(opts.dict_path);
  int status = 0;
  for (const auto& raw : words) {
    const auto w = checked_word(raw);
    const auto p = pf::lookup(lex.get(), w);
    if (!p) {
      std::cerr << "phonofuse: '" << w << "' is not in the dictionary\n";
      status = 2;
      continue;
    }
    std::cout << pf::prune(pf::strip_stress(p->phonemes), classes).str() << '\n';
  }
  return status;
}

pf::DetectConfig make_detect_config(const CommonOptions& opts, const std::string& channels) {
  pf::DetectConfig config;
  config.normalize = load_normalize_config(opts);
  try {
    if (!channels.empty()) config.channels = pf::ChannelSet::parse(channels);
    config.validate();
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  return config;
}

int run_detect(const CommonOptions& opts, const std::string& transcript_path,
               const std::string& keyword, const std::string& channels) {
  const auto config = make_detect_config(opts, channels);
  std::ifstream in(transcript_path, std::ios::binary);
  if (!in) throw pf::IoError("cannot read transcript " + transcript_path);
  const auto text = read_all(in);
  const auto lex = load_lexicon(opts.dict_path);
  pf::KeywordProfile profile = [&] {
    try {
      return pf::prepare_keyword(keyword, lex.get(), config);
    } catch (const pf::InvalidKeyword& e) {
      throw UsageError(e.what());
    }
  }();
  const auto transcript = pf::normalize(text, config.normalize, transcript_path);
  const auto outcome = pf::detect(transcript, profile, lex.get(), config);
  for (const auto& r : outcome.channels)
    std::cout << pf::to_string(r.channel) << ' ' << r.count << ' ' << (r.detected ? "true" : "false")
              << ' ' << (r.available ? "true" : "false") << '\n';
  std::cout << "fused " << (outcome.fused_detected ? "true" : "false") << '\n';
  return 0;
}

struct EvaluateArgs {
  std::string dataset;
  std::string out;
  std::string format = "json";
  std::string channels;
  std::string timestamp;
  unsigned jobs = std::max(1u, std::thread::hardware_concurrency());
};

int run_evaluate(const CommonOptions& opts, const EvaluateArgs& args) {
  const auto format = [&] {
    try {
      return pf::parse_report_format(args.format);
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  }();
  const auto config = make_detect_config(opts, args.channels);
  const auto dataset = pf::load_dataset(args.dataset);
  const auto lex = load_lexicon(opts.dict_path);

  pf::EvalOptions options;
  options.jobs = args.jobs;
  options.dict_label = lex.label;
  if (!args.timestamp.empty()) options.timestamp = args.timestamp;
  const auto report = pf::evaluate(dataset, lex.get(), config, options);

  std::size_t samples = 0;
  for (const auto& c : report.categories) samples += c.n_samples;
  std::cerr << "phonofuse: evaluated " << samples << " samples in " << report.categories.size()
            << " categories\n";
  if (report.meta.samples_errored)
    std::cerr << "phonofuse: warning: " << report.meta.samples_errored
              << " samples could not be read and were excluded\n";

  if (args.out.empty()) {
    std::cout << (format == pf::ReportFormat::Json ? pf::render_report_json(report)
                                                   : pf::render_report_csv(report));
  } else {
    pf::write_report(report, format, args.out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Keyword recognition in noisy speech transcripts by fusing stem and phoneme-pattern matching",
               "phonofuse"};
  app.set_version_flag("--version", std::string(pf::kVersion));
  app.require_subcommand(1);

  CommonOptions opts;

  std::vector<std::string> text_args;
  auto* normalize_cmd = app.add_subcommand("normalize", "Print the normalized token sequence of TEXT (or stdin)");
  add_normalize_flags(normalize_cmd, opts);
  normalize_cmd->add_option("text", text_args, "Transcript text");

  std::vector<std::string> words;
  auto* stem_cmd = app.add_subcommand("stem", "Print word<TAB>stem for each word");
  stem_cmd->add_option("words", words, "Words to stem")->required();

  bool stress = false;
  auto* phonemize_cmd = app.add_subcommand("phonemize", "Print the variant-1 phonemes of each word");
  add_dict_flag(phonemize_cmd, opts);
  phonemize_cmd->add_flag("--stress", stress, "Keep stress digits");
  phonemize_cmd->add_option("words", words, "Words to look up")->required();

  std::string classes = "vowel,plosive";
  auto* prune_cmd = app.add_subcommand("prune", "Print the pruned pattern of each word");
  add_dict_flag(prune_cmd, opts);
  prune_cmd->add_option("--classes", classes, "Phoneme classes to keep")->capture_default_str();
  prune_cmd->add_option("words", words, "Words to prune")->required();

  std::string transcript_path, keyword, channels;
  auto* detect_cmd = app.add_subcommand("detect", "Run every detection channel on one transcript");
  add_dict_flag(detect_cmd, opts);
  add_normalize_flags(detect_cmd, opts);
  detect_cmd->add_option("--transcript", transcript_path, "Transcript file")->required();
  detect_cmd->add_option("--keyword", keyword, "Keyword to look for")->required();
  detect_cmd->add_option("--channels", channels, "Comma-separated channels (default: all)");

  EvaluateArgs eval_args;
  auto* evaluate_cmd = app.add_subcommand("evaluate", "Recognition rates over a <dataset>/<CATEGORY>/*.txt corpus");
  add_dict_flag(evaluate_cmd, opts);
  add_normalize_flags(evaluate_cmd, opts);
  evaluate_cmd->add_option("--dataset", eval_args.dataset, "Corpus root directory")->required();
  evaluate_cmd->add_option("--out", eval_args.out, "Report file (default: stdout)");
  evaluate_cmd->add_option("--format", eval_args.format, "json or csv")->capture_default_str();
  evaluate_cmd->add_option("--jobs", eval_args.jobs, "Worker threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  evaluate_cmd->add_option("--channels", eval_args.channels, "Comma-separated channels (default: all)");
  evaluate_cmd->add_option("--timestamp", eval_args.timestamp, "Value for the report's meta.timestamp");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*normalize_cmd) return run_normalize(opts, text_args);
    if (*stem_cmd) return run_stem(words);
    if (*phonemize_cmd) return run_phonemize(opts, words, stress);
    if (*prune_cmd) return run_prune(opts, classes, words);
    if (*detect_cmd) return run_detect(opts, transcript_path, keyword, channels);
    if (*evaluate_cmd) return run_evaluate(opts, eval_args);
  } catch (const UsageError& e) {
    std::cerr << "phonofuse: " << e.what() << '\n';
    return 1;
  } catch (const pf::DataError& e) {
    std::cerr << "phonofuse: " << e.what() << '\n';
    return 2;
  } catch (const pf::ParseError& e) {
    std::cerr << "phonofuse: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "phonofuse: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
