#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace ontoseg {

using StopwordSet = std::unordered_set<std::string>;

// Sparse term-frequency vector over stemmed terms. Never holds zero counts.
class TermVector {
 public:
  using Map = std::map<std::string, long, std::less<>>;

  TermVector() = default;

  void add(std::string_view term, long count = 1);
  TermVector& operator+=(const TermVector& other);

  long count(std::string_view term) const;
  bool empty() const { return counts_.empty(); }
  std::size_t size() const { return counts_.size(); }
  const Map& counts() const { return counts_; }

  friend bool operator==(const TermVector&, const TermVector&) = default;

 private:
  Map counts_;
};

struct Token {
  std::size_t begin = 0;  // byte offsets into the source text
  std::size_t end = 0;
  std::string text;       // lowercased
};

// Same rule as tokenize(), keeping each token's source offsets.
std::vector<Token> tokenize_with_offsets(std::string_view text);

// Splits on maximal runs of non-alphanumeric characters and lowercases.
// Bytes >= 0x80 count as word characters so UTF-8 words stay whole.
std::vector<std::string> tokenize(std::string_view text);

// Porter (1980) suffix stripping, as published. Expects lowercase input.
std::string porter_stem(std::string_view word);

// The bundled English stopword list.
const StopwordSet& default_stopwords();
// One lowercase word per line; '#' starts a comment.
StopwordSet load_stopwords(const std::filesystem::path& path);

TermVector build_term_vector(const std::vector<std::string>& tokens, const StopwordSet& stopwords);

// Cosine of the angle between two count vectors; 0 when either is empty.
double cosine(const TermVector& v, const TermVector& w);

}  // namespace ontoseg
