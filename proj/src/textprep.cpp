#include "ontoseg/textprep.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "ontoseg/error.hpp"

namespace ontoseg {

void TermVector::add(std::string_view term, long count) {
  if (count == 0) return;
  auto it = counts_.find(term);
  if (it == counts_.end()) {
    counts_.emplace(std::string(term), count);
  } else if ((it->second += count) == 0) {
    counts_.erase(it);
  }
}

TermVector& TermVector::operator+=(const TermVector& other) {
  for (const auto& [term, n] : other.counts_) add(term, n);
  return *this;
}

long TermVector::count(std::string_view term) const {
  auto it = counts_.find(term);
  return it == counts_.end() ? 0 : it->second;
}

namespace {

bool is_word_byte(unsigned char ch) {
  return (ch >= '0' && ch <= '9') || (ch >= 'a' && ch <= 'z') || (ch >= 'A' && ch <= 'Z') || ch >= 0x80;
}

}  // namespace

std::vector<Token> tokenize_with_offsets(std::string_view text) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_byte(static_cast<unsigned char>(text[i]))) {
      ++i;
      continue;
    }
    Token tok;
    tok.begin = i;
    while (i < text.size() && is_word_byte(static_cast<unsigned char>(text[i]))) {
      const auto ch = static_cast<unsigned char>(text[i]);
      tok.text.push_back(ch < 0x80 ? static_cast<char>(std::tolower(ch)) : text[i]);
      ++i;
    }
    tok.end = i;
    tokens.push_back(std::move(tok));
  }
  return tokens;
}

std::vector<std::string> tokenize(std::string_view text) {
  std::vector<std::string> out;
  for (auto& tok : tokenize_with_offsets(text)) out.push_back(std::move(tok.text));
  return out;
}

const StopwordSet& default_stopwords() {
  static const StopwordSet words = {
      "a",        "about",    "above",   "after",   "again",    "against",  "ain",      "all",
      "am",       "an",       "and",     "any",     "are",      "aren",     "as",       "at",
      "be",       "because",  "been",    "before",  "being",    "below",    "between",  "both",
      "but",      "by",       "can",     "couldn",  "d",        "did",      "didn",     "do",
      "does",     "doesn",    "doing",   "don",     "down",     "during",   "each",     "few",
      "for",      "from",     "further", "had",     "hadn",     "has",      "hasn",     "have",
      "haven",    "having",   "he",      "her",     "here",     "hers",     "herself",  "him",
      "himself",  "his",      "how",     "i",       "if",       "in",       "into",     "is",
      "isn",      "it",       "its",     "itself",  "just",     "ll",       "m",        "ma",
      "me",       "mightn",   "more",    "most",    "mustn",    "my",       "myself",   "needn",
      "no",       "nor",      "not",     "now",     "o",        "of",       "off",      "on",
      "once",     "only",     "or",      "other",   "our",      "ours",     "ourselves", "out",
      "over",     "own",      "re",      "s",       "same",     "shan",     "she",      "should",
      "shouldn",  "so",       "some",    "such",    "t",        "than",     "that",     "the",
      "their",    "theirs",   "them",    "themselves", "then",  "there",    "these",    "they",
      "this",     "those",    "through", "to",      "too",      "under",    "until",    "up",
      "ve",       "very",     "was",     "wasn",    "we",       "were",     "weren",    "what",
      "when",     "where",    "which",   "while",   "who",      "whom",     "why",      "will",
      "with",     "won",      "wouldn",  "y",       "you",      "your",     "yours",    "yourself",
      "yourselves", "also",   "would",   "could",   "may",      "might",    "must",     "shall",
  };
  return words;
}

StopwordSet load_stopwords(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open stopword file " + path.string());
  StopwordSet words;
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    auto last = line.find_last_not_of(" \t\r");
    std::string word = line.substr(first, last - first + 1);
    std::transform(word.begin(), word.end(), word.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    words.insert(std::move(word));
  }
  return words;
}

TermVector build_term_vector(const std::vector<std::string>& tokens, const StopwordSet& stopwords) {
  TermVector v;
  for (const auto& token : tokens) {
    if (stopwords.contains(token)) continue;
    std::string stem = porter_stem(token);
    if (!stem.empty()) v.add(stem);
  }
  return v;
}

double cosine(const TermVector& v, const TermVector& w) {
  if (v.empty() || w.empty()) return 0.0;
  const auto& small = v.size() <= w.size() ? v.counts() : w.counts();
  const auto& large = v.size() <= w.size() ? w.counts() : v.counts();
  double dot = 0.0;
  for (const auto& [term, n] : small) {
    auto it = large.find(term);
    if (it != large.end()) dot += static_cast<double>(n) * static_cast<double>(it->second);
  }
  auto sum_sq = [](const TermVector::Map& m) {
    double s = 0.0;
    for (const auto& [term, n] : m) s += static_cast<double>(n) * static_cast<double>(n);
    return s;
  };
  const double norm = std::sqrt(sum_sq(v.counts())) * std::sqrt(sum_sq(w.counts()));
  return std::min(1.0, dot / norm);
}

}  // namespace ontoseg
