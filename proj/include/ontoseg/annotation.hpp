#pragma once

#include <chrono>
#include <filesystem>
#include <istream>
#include <map>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "ontoseg/error.hpp"
#include "ontoseg/taxonomy.hpp"

namespace ontoseg {

// A recognized mention and the taxonomy classes it maps to.
struct Entity {
  std::string surface;
  // Ordered, duplicate-free. May be empty for unmapped mentions, which the
  // similarity measures skip.
  std::vector<ClassId> classes;

  friend bool operator==(const Entity&, const Entity&) = default;
};

// Builds an entity, dropping repeated classes while keeping first-seen order.
Entity make_entity(std::string surface, const std::vector<ClassId>& classes);

struct AnnotatedSentence {
  std::string text;
  std::vector<Entity> entities;

  friend bool operator==(const AnnotatedSentence&, const AnnotatedSentence&) = default;
};

struct AnnotatedDocument {
  std::string doc_id;
  std::vector<AnnotatedSentence> sentences;

  std::size_t size() const { return sentences.size(); }
  friend bool operator==(const AnnotatedDocument&, const AnnotatedDocument&) = default;
};

// Wraps raw sentences with empty entity lists. DataError on zero sentences.
AnnotatedDocument unannotated(std::string doc_id, const std::vector<std::string>& sentences);

// Sidecar: one JSON object per line,
//   {"sentence": 0, "surface": "Barack Obama", "classes": ["Person", ...]}
// Blank lines are ignored.
AnnotatedDocument load_annotations(std::string doc_id, const std::vector<std::string>& sentences,
                                   std::istream& sidecar);
AnnotatedDocument load_annotations(std::string doc_id, const std::vector<std::string>& sentences,
                                   const std::filesystem::path& sidecar);
// Records in sentence order, then mention order.
void save_annotations(const AnnotatedDocument& doc, std::ostream& out);
void save_annotations(const AnnotatedDocument& doc, const std::filesystem::path& path);

// Case-insensitive surface dictionary matched on token boundaries.
class Gazetteer {
 public:
  Gazetteer() = default;
  // DataError if a surface string contains no word characters.
  void add(std::string_view surface, std::vector<ClassId> classes);

  std::size_t size() const { return entries_.size(); }
  std::size_t max_tokens() const { return max_tokens_; }

  // Lookup by the lowercase token sequence of a surface form.
  const std::vector<ClassId>* find(const std::vector<std::string>& tokens) const;

 private:
  std::map<std::string, std::vector<ClassId>, std::less<>> entries_;
  std::size_t max_tokens_ = 0;
};

// JSON object {"surface string": ["ClassId", ...], ...}.
Gazetteer parse_gazetteer(std::istream& in);
Gazetteer load_gazetteer(const std::filesystem::path& path);

// Scans each sentence left to right taking the longest dictionary match at
// every token; tokens covered by a match cannot start another.
AnnotatedDocument gazetteer_annotate(std::string doc_id, const std::vector<std::string>& sentences,
                                     const Gazetteer& gazetteer);

struct RemoteOptions {
  // http://host[:port][/path]. The request is POSTed to the path.
  std::string endpoint;
  double confidence = 0.5;
  int attempts = 3;
  std::chrono::milliseconds initial_backoff{200};
  std::chrono::milliseconds timeout{10000};
};

// Environment variable that overrides RemoteOptions::endpoint in the CLI.
inline constexpr const char* kEndpointEnvVar = "ONTOSEG_ANNOTATOR_URL";

// Sends the whole document as one request:
//   {"text": "...", "confidence": 0.5}
// and expects
//   {"mentions": [{"offset": 12, "surface": "...", "types": ["..."]}]}
// Sentences are joined with '\n'; offsets are byte offsets into that text.
// Types may carry a "DBpedia:" or DBpedia ontology IRI prefix, which is
// stripped; types from other namespaces ("Schema:", "Wikidata:") are dropped.
// Throws RemoteError after the retry budget or on a bad response.
AnnotatedDocument remote_annotate(std::string doc_id, const std::vector<std::string>& sentences,
                                  const RemoteOptions& options);

// Maps one service type string to a ClassId; empty when it is dropped.
std::string normalize_remote_type(std::string_view type);

}  // namespace ontoseg
