#include "phonofuse/pronlex.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <map>
#include <sstream>

#include "phonofuse/errors.hpp"

namespace phonofuse {

namespace {

constexpr std::array<std::string_view, kSymbolCount> kSymbolNames = {
    "AA", "AE", "AH", "AO", "AW", "AY", "B",  "CH", "D",  "DH", "EH", "ER", "EY",
    "F",  "G",  "HH", "IH", "IY", "JH", "K",  "L",  "M",  "N",  "NG", "OW", "OY",
    "P",  "R",  "S",  "SH", "T",  "TH", "UH", "UW", "V",  "W",  "Y",  "Z",  "ZH"};

bool is_space(char c) { return c == ' ' || c == '\t' || c == '\r' || c == '\n'; }

std::vector<std::string_view> split_ws(std::string_view s) {
  std::vector<std::string_view> out;
  std::size_t i = 0;
  while (i < s.size()) {
    while (i < s.size() && is_space(s[i])) ++i;
    std::size_t j = i;
    while (j < s.size() && !is_space(s[j])) ++j;
    if (j > i) out.push_back(s.substr(i, j - i));
    i = j;
  }
  return out;
}

}  // namespace

const std::array<Symbol, kSymbolCount>& all_symbols() {
  static const auto symbols = [] {
    std::array<Symbol, kSymbolCount> a{};
    for (std::size_t i = 0; i < kSymbolCount; ++i) a[i] = static_cast<Symbol>(i);
    return a;
  }();
  return symbols;
}

std::string_view to_string(Symbol s) { return kSymbolNames.at(static_cast<std::size_t>(s)); }

std::optional<Symbol> parse_symbol(std::string_view text) {
  auto it = std::lower_bound(kSymbolNames.begin(), kSymbolNames.end(), text);
  if (it == kSymbolNames.end() || *it != text) return std::nullopt;
  return static_cast<Symbol>(it - kSymbolNames.begin());
}

bool is_vowel_symbol(Symbol s) {
  switch (to_string(s).front()) {
    case 'A': case 'E': case 'I': case 'O': case 'U': return true;
    default: return false;
  }
}

std::optional<Phoneme> Phoneme::parse(std::string_view text) {
  if (text.empty()) return std::nullopt;
  std::optional<std::uint8_t> stress;
  const char last = text.back();
  if (last >= '0' && last <= '9') {
    if (last > '2') return std::nullopt;
    stress = static_cast<std::uint8_t>(last - '0');
    text.remove_suffix(1);
  }
  auto base = parse_symbol(text);
  if (!base) return std::nullopt;
  if (stress && !is_vowel_symbol(*base)) return std::nullopt;
  return Phoneme{*base, stress};
}

std::string Phoneme::str() const {
  std::string out(to_string(base));
  if (stress) out.push_back(static_cast<char>('0' + *stress));
  return out;
}

const Pronunciation* Lexicon::lookup(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end() || it->second.empty()) return nullptr;
  return &it->second.front();
}

std::span<const Pronunciation> Lexicon::variants(std::string_view word) const {
  auto it = entries_.find(word);
  if (it == entries_.end()) return {};
  return it->second;
}

std::size_t Lexicon::pronunciation_count() const noexcept {
  std::size_t n = 0;
  for (const auto& [word, prons] : entries_) n += prons.size();
  return n;
}

class LexiconBuilder {
 public:
  void add_line(std::string_view line) {
    ++report_.lines;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (std::all_of(line.begin(), line.end(), is_space)) {
      ++report_.blank;
      return;
    }
    if (line.starts_with(";;;")) {
      ++report_.comments;
      return;
    }
    if (std::any_of(line.begin(), line.end(),
                    [](char c) { return static_cast<unsigned char>(c) >= 0x80; })) {
      ++report_.undecodable;
      return;
    }
    auto fields = split_ws(line);
    // Later releases append "# note" after the phonemes.
    for (std::size_t i = 1; i < fields.size(); ++i) {
      if (fields[i].starts_with('#')) {
        fields.resize(i);
        break;
      }
    }
    if (fields.size() < 2) {
      ++report_.malformed;
      return;
    }

    std::string_view head = fields[0];
    int variant = 1;
    if (head.size() > 2 && head.back() == ')') {
      auto open = head.rfind('(');
      if (open == std::string_view::npos || open == 0) {
        ++report_.malformed;
        return;
      }
      std::string_view digits = head.substr(open + 1, head.size() - open - 2);
      auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), variant);
      if (ec != std::errc{} || ptr != digits.data() + digits.size() || variant < 2) {
        ++report_.malformed;
        return;
      }
      head = head.substr(0, open);
    }

    Pronunciation p;
    p.word.reserve(head.size());
    for (char c : head)
      p.word.push_back((c >= 'A' && c <= 'Z') ? static_cast<char>(c - 'A' + 'a') : c);
    p.variant = variant;
    p.phonemes.reserve(fields.size() - 1);
    for (std::size_t i = 1; i < fields.size(); ++i) {
      auto ph = Phoneme::parse(fields[i]);
      if (!ph) {
        ++report_.malformed;
        return;
      }
      p.phonemes.push_back(*ph);
    }

    auto& slot = pending_[p.word];
    if (slot.contains(variant)) {
      ++report_.malformed;
      return;
    }
    slot.emplace(variant, std::move(p));
  }

  ParsedLexicon finish() && {
    ParsedLexicon out;
    out.lexicon.entries_.reserve(pending_.size());
    for (auto& [word, by_variant] : pending_) {
      if (!by_variant.contains(1)) {
        report_.malformed += by_variant.size();
        continue;
      }
      auto& list = out.lexicon.entries_[word];
      list.reserve(by_variant.size());
      for (auto& [v, p] : by_variant) list.push_back(std::move(p));
      report_.entries += list.size();
    }
    out.report = report_;
    if (out.lexicon.headword_count() == 0)
      throw DataError("empty lexicon: no dictionary entries could be parsed");
    return out;
  }

 private:
  std::unordered_map<std::string, std::map<int, Pronunciation>> pending_;
  ParseReport report_;
};

ParsedLexicon parse_cmudict(std::istream& in) {
  LexiconBuilder builder;
  std::string line;
  while (std::getline(in, line)) builder.add_line(line);
  if (in.bad()) throw IoError("read error while parsing pronouncing dictionary");
  return std::move(builder).finish();
}

ParsedLexicon load_cmudict(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read pronouncing dictionary " + path.string());
  return parse_cmudict(in);
}

std::optional<Pronunciation> lookup(const Lexicon& lexicon, std::string_view word) {
  if (const auto* p = lexicon.lookup(word)) return *p;
  return std::nullopt;
}

SymbolSeq strip_stress(std::span<const Phoneme> phonemes) {
  SymbolSeq out;
  out.reserve(phonemes.size());
  for (const auto& p : phonemes) out.push_back(p.base);
  return out;
}

std::string to_cmudict_line(const Pronunciation& p) {
  std::string out;
  for (char c : p.word) out.push_back((c >= 'a' && c <= 'z') ? static_cast<char>(c - 'a' + 'A') : c);
  if (p.variant != 1) out += "(" + std::to_string(p.variant) + ")";
  out += "  ";
  out += join_phonemes(p.phonemes);
  return out;
}

std::string join_symbols(std::span<const Symbol> symbols, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < symbols.size(); ++i) {
    if (i) out.append(sep);
    out.append(to_string(symbols[i]));
  }
  return out;
}

std::string join_phonemes(std::span<const Phoneme> phonemes, std::string_view sep) {
  std::string out;
  for (std::size_t i = 0; i < phonemes.size(); ++i) {
    if (i) out.append(sep);
    out.append(phonemes[i].str());
  }
  return out;
}

const Lexicon& bundled_lexicon() {
  static const Lexicon lexicon = [] {
    std::istringstream in{std::string(bundled_lexicon_text())};
    return parse_cmudict(in).lexicon;
  }();
  return lexicon;
}

}  // namespace phonofuse
