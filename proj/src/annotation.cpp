#include "ontoseg/annotation.hpp"

#include <algorithm>
#include <fstream>

#include <json.hpp>

#include "ontoseg/textprep.hpp"

namespace ontoseg {

using nlohmann::json;

Entity make_entity(std::string surface, const std::vector<ClassId>& classes) {
  Entity e{std::move(surface), {}};
  for (const auto& c : classes) {
    if (std::find(e.classes.begin(), e.classes.end(), c) == e.classes.end()) e.classes.push_back(c);
  }
  return e;
}

AnnotatedDocument unannotated(std::string doc_id, const std::vector<std::string>& sentences) {
  if (sentences.empty()) throw DataError("document '" + doc_id + "' has no sentences");
  AnnotatedDocument doc{std::move(doc_id), {}};
  doc.sentences.reserve(sentences.size());
  for (const auto& s : sentences) doc.sentences.push_back({s, {}});
  return doc;
}

AnnotatedDocument load_annotations(std::string doc_id, const std::vector<std::string>& sentences,
                                   std::istream& sidecar) {
  AnnotatedDocument doc = unannotated(std::move(doc_id), sentences);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(sidecar, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    const std::string where = "sidecar line " + std::to_string(line_no) + " of '" + doc.doc_id + "'";
    json record;
    try {
      record = json::parse(line);
    } catch (const json::exception&) {
      throw DataError(where + ": not valid JSON");
    }
    long long index = 0;
    std::string surface;
    std::vector<ClassId> classes;
    try {
      index = record.at("sentence").get<long long>();
      surface = record.at("surface").get<std::string>();
      classes = record.at("classes").get<std::vector<ClassId>>();
    } catch (const json::exception&) {
      throw DataError(where + ": expected {\"sentence\": int, \"surface\": string, \"classes\": [string]}");
    }
    if (index < 0 || static_cast<std::size_t>(index) >= doc.size()) {
      throw DataError(where + ": sentence index " + std::to_string(index) + " outside [0, " +
                      std::to_string(doc.size()) + ")");
    }
    doc.sentences[static_cast<std::size_t>(index)].entities.push_back(
        make_entity(std::move(surface), classes));
  }
  return doc;
}

AnnotatedDocument load_annotations(std::string doc_id, const std::vector<std::string>& sentences,
                                   const std::filesystem::path& sidecar) {
  std::ifstream in(sidecar);
  if (!in) throw ConfigError("cannot open annotation sidecar " + sidecar.string());
  return load_annotations(std::move(doc_id), sentences, in);
}

void save_annotations(const AnnotatedDocument& doc, std::ostream& out) {
  for (std::size_t i = 0; i < doc.sentences.size(); ++i) {
    for (const auto& e : doc.sentences[i].entities) {
      json record = {{"sentence", i}, {"surface", e.surface}, {"classes", e.classes}};
      out << record.dump() << '\n';
    }
  }
}

void save_annotations(const AnnotatedDocument& doc, const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw ConfigError("cannot write annotation sidecar " + path.string());
  save_annotations(doc, out);
}

namespace {

std::string join_tokens(const std::vector<std::string>& tokens) {
  std::string key;
  for (const auto& t : tokens) {
    if (!key.empty()) key.push_back(' ');
    key += t;
  }
  return key;
}

}  // namespace

void Gazetteer::add(std::string_view surface, std::vector<ClassId> classes) {
  auto tokens = tokenize(surface);
  if (tokens.empty()) {
    throw DataError("gazetteer surface '" + std::string(surface) + "' has no word characters");
  }
  max_tokens_ = std::max(max_tokens_, tokens.size());
  entries_[join_tokens(tokens)] = make_entity("", classes).classes;
}

const std::vector<ClassId>* Gazetteer::find(const std::vector<std::string>& tokens) const {
  auto it = entries_.find(join_tokens(tokens));
  return it == entries_.end() ? nullptr : &it->second;
}

Gazetteer parse_gazetteer(std::istream& in) {
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DataError(std::string("gazetteer: not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DataError("gazetteer: expected a JSON object of surface -> classes");
  Gazetteer g;
  for (const auto& [surface, classes] : doc.items()) {
    try {
      g.add(surface, classes.get<std::vector<ClassId>>());
    } catch (const json::exception&) {
      throw DataError("gazetteer: classes of '" + surface + "' must be a list of strings");
    }
  }
  return g;
}

Gazetteer load_gazetteer(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open gazetteer " + path.string());
  return parse_gazetteer(in);
}

AnnotatedDocument gazetteer_annotate(std::string doc_id, const std::vector<std::string>& sentences,
                                     const Gazetteer& gazetteer) {
  AnnotatedDocument doc = unannotated(std::move(doc_id), sentences);
  std::vector<std::string> window;
  for (auto& sentence : doc.sentences) {
    const auto tokens = tokenize_with_offsets(sentence.text);
    std::size_t i = 0;
    while (i < tokens.size()) {
      std::size_t matched = 0;
      const std::vector<ClassId>* classes = nullptr;
      for (std::size_t len = std::min(gazetteer.max_tokens(), tokens.size() - i); len > 0; --len) {
        window.clear();
        for (std::size_t j = i; j < i + len; ++j) window.push_back(tokens[j].text);
        if ((classes = gazetteer.find(window)) != nullptr) {
          matched = len;
          break;
        }
      }
      if (matched == 0) {
        ++i;
        continue;
      }
      const std::size_t begin = tokens[i].begin;
      const std::size_t end = tokens[i + matched - 1].end;
      sentence.entities.push_back({sentence.text.substr(begin, end - begin), *classes});
      i += matched;
    }
  }
  return doc;
}

}  // namespace ontoseg
