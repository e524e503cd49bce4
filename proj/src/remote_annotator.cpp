#include <algorithm>
#include <regex>
#include <thread>

#include <httplib.h>
#include <json.hpp>

#include "ontoseg/annotation.hpp"

namespace ontoseg {

using nlohmann::json;

namespace {

struct Endpoint {
  std::string base;  // scheme://host:port
  std::string path;
};

Endpoint parse_endpoint(const std::string& url) {
  static const std::regex pattern(R"(^http://([^/:?#]+)(:([0-9]+))?(/[^?#]*)?$)");
  std::smatch m;
  if (!std::regex_match(url, m, pattern)) {
    throw ConfigError("annotation endpoint must look like http://host[:port][/path], got '" + url + "'");
  }
  Endpoint ep;
  ep.base = "http://" + m[1].str() + (m[3].matched ? ":" + m[3].str() : "");
  ep.path = m[4].matched && !m[4].str().empty() ? m[4].str() : "/";
  return ep;
}

struct Mention {
  std::size_t offset;
  std::string surface;
  std::vector<std::string> types;
};

std::vector<Mention> parse_mentions(const std::string& body) {
  json doc;
  try {
    doc = json::parse(body);
  } catch (const json::exception&) {
    throw RemoteError("annotation service returned a body that is not JSON");
  }
  std::vector<Mention> mentions;
  try {
    for (const auto& m : doc.at("mentions")) {
      const auto offset = m.at("offset").get<long long>();
      if (offset < 0) throw RemoteError("annotation service returned a negative mention offset");
      mentions.push_back({static_cast<std::size_t>(offset), m.at("surface").get<std::string>(),
                          m.value("types", std::vector<std::string>{})});
    }
  } catch (const json::exception&) {
    throw RemoteError("annotation service response lacks a well-formed \"mentions\" list");
  }
  return mentions;
}

}  // namespace

std::string normalize_remote_type(std::string_view type) {
  static constexpr std::string_view kIri = "http://dbpedia.org/ontology/";
  static constexpr std::string_view kPrefix = "DBpedia:";
  if (type.starts_with(kIri)) return std::string(type.substr(kIri.size()));
  if (type.starts_with(kPrefix)) return std::string(type.substr(kPrefix.size()));
  if (type.find(':') != std::string_view::npos) return {};
  return std::string(type);
}

AnnotatedDocument remote_annotate(std::string doc_id, const std::vector<std::string>& sentences,
                                  const RemoteOptions& options) {
  if (!(options.confidence >= 0.0 && options.confidence <= 1.0)) {
    throw ConfigError("annotation confidence must lie in [0, 1]");
  }
  if (options.attempts < 1) throw ConfigError("annotation retry budget must be at least 1 attempt");
  const Endpoint ep = parse_endpoint(options.endpoint);
  AnnotatedDocument doc = unannotated(std::move(doc_id), sentences);

  std::string text;
  std::vector<std::size_t> starts;
  for (const auto& s : doc.sentences) {
    if (!starts.empty()) text.push_back('\n');
    starts.push_back(text.size());
    text += s.text;
  }
  const std::string request = json{{"text", text}, {"confidence", options.confidence}}.dump();

  httplib::Client client(ep.base);
  const auto secs = std::chrono::duration_cast<std::chrono::seconds>(options.timeout);
  const auto usecs = std::chrono::duration_cast<std::chrono::microseconds>(options.timeout - secs);
  client.set_connection_timeout(secs.count(), usecs.count());
  client.set_read_timeout(secs.count(), usecs.count());

  std::string body;
  std::string last_failure;
  auto backoff = options.initial_backoff;
  for (int attempt = 1;; ++attempt) {
    auto res = client.Post(ep.path, request, "application/json");
    if (res && res->status >= 200 && res->status < 300) {
      body = res->body;
      break;
    }
    if (res && res->status < 500) {
      throw RemoteError("annotation service rejected the request with HTTP " + std::to_string(res->status));
    }
    last_failure = res ? "HTTP " + std::to_string(res->status) : httplib::to_string(res.error());
    if (attempt >= options.attempts) {
      throw RemoteError("annotation service " + options.endpoint + " failed after " +
                        std::to_string(attempt) + " attempts: " + last_failure);
    }
    std::this_thread::sleep_for(backoff);
    backoff *= 2;
  }

  auto mentions = parse_mentions(body);
  std::stable_sort(mentions.begin(), mentions.end(),
                   [](const Mention& a, const Mention& b) { return a.offset < b.offset; });
  for (auto& m : mentions) {
    const std::size_t end = m.offset + m.surface.size();
    if (end > text.size() || text.compare(m.offset, m.surface.size(), m.surface) != 0) {
      throw RemoteError("mention '" + m.surface + "' at offset " + std::to_string(m.offset) +
                        " does not match the document text");
    }
    const auto it = std::upper_bound(starts.begin(), starts.end(), m.offset);
    const auto sentence = static_cast<std::size_t>(it - starts.begin()) - 1;
    if (m.offset < starts[sentence] || end > starts[sentence] + doc.sentences[sentence].text.size()) {
      throw RemoteError("mention '" + m.surface + "' at offset " + std::to_string(m.offset) +
                        " crosses a sentence boundary");
    }
    std::vector<ClassId> classes;
    for (const auto& t : m.types) {
      if (auto c = normalize_remote_type(t); !c.empty()) classes.push_back(std::move(c));
    }
    doc.sentences[sentence].entities.push_back(make_entity(std::move(m.surface), classes));
  }
  return doc;
}

}  // namespace ontoseg
