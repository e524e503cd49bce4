#include "ontoseg/segmentation.hpp"

#include <cmath>
#include <set>
#include <tuple>

#include <json.hpp>

namespace ontoseg {

Segmentation::Segmentation(std::size_t sentence_count, std::vector<std::size_t> boundaries)
    : sentence_count_(sentence_count), boundaries_(std::move(boundaries)) {
  if (sentence_count_ == 0) throw DataError("segmentation over zero sentences");
  std::size_t prev = 0;
  for (std::size_t p : boundaries_) {
    if (p <= prev || p >= sentence_count_) {
      throw DataError("segmentation boundary " + std::to_string(p) +
                      " is not strictly increasing inside (0, " + std::to_string(sentence_count_) + ")");
    }
    prev = p;
  }
}

Segmentation Segmentation::from_lengths(const std::vector<std::size_t>& lengths) {
  if (lengths.empty()) throw DataError("segmentation needs at least one segment");
  std::vector<std::size_t> boundaries;
  std::size_t total = 0;
  for (std::size_t n : lengths) {
    if (n == 0) throw DataError("segment of length zero");
    total += n;
    boundaries.push_back(total);
  }
  boundaries.pop_back();
  return Segmentation(total, std::move(boundaries));
}

std::vector<std::size_t> Segmentation::segment_lengths() const {
  std::vector<std::size_t> out;
  std::size_t prev = 0;
  for (std::size_t p : boundaries_) {
    out.push_back(p - prev);
    prev = p;
  }
  out.push_back(sentence_count_ - prev);
  return out;
}

std::vector<std::size_t> Segmentation::segment_ids() const {
  std::vector<std::size_t> ids(sentence_count_);
  std::size_t seg = 0;
  auto next = boundaries_.begin();
  for (std::size_t i = 0; i < sentence_count_; ++i) {
    if (next != boundaries_.end() && *next == i) {
      ++seg;
      ++next;
    }
    ids[i] = seg;
  }
  return ids;
}

std::vector<Block> make_blocks(const AnnotatedDocument& doc, WindowConfig cfg, const StopwordSet& stopwords) {
  const std::size_t n = doc.size();
  if (n == 0) throw DataError("document '" + doc.doc_id + "' has no sentences");
  if (cfg.window_size < 1 || cfg.window_size > n) {
    throw ConfigError("window size " + std::to_string(cfg.window_size) + " outside [1, " + std::to_string(n) +
                      "] for document '" + doc.doc_id + "'");
  }
  std::vector<Block> blocks;
  blocks.reserve((n + cfg.window_size - 1) / cfg.window_size);
  for (std::size_t begin = 0; begin < n; begin += cfg.window_size) {
    Block b;
    b.span = {begin, std::min(n, begin + cfg.window_size)};
    for (std::size_t i = b.span.begin; i < b.span.end; ++i) {
      const auto& s = doc.sentences[i];
      b.entities.insert(b.entities.end(), s.entities.begin(), s.entities.end());
      b.terms += build_term_vector(tokenize(s.text), stopwords);
    }
    blocks.push_back(std::move(b));
  }
  return blocks;
}

std::vector<Merge> Dendrogram::merges() const {
  std::vector<Merge> out;
  for (std::size_t id = leaf_count; id < nodes.size(); ++id) {
    const auto& n = nodes[id];
    out.push_back({(*n.children)[0], (*n.children)[1], id, n.similarity, n.step});
  }
  return out;
}

Dendrogram agglomerate(const std::vector<SentenceSpan>& leaves, MergeModel& model) {
  if (leaves.empty()) throw DataError("cannot cluster zero blocks");
  const std::size_t n = leaves.size();
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);

  Dendrogram d;
  d.leaf_count = n;
  d.nodes.reserve(2 * n - 1);
  for (std::size_t i = 0; i < n; ++i) {
    if (leaves[i].size() == 0 || (i > 0 && leaves[i].begin != leaves[i - 1].end)) {
      throw DataError("leaf spans must be non-empty and contiguous");
    }
    DendrogramNode leaf;
    leaf.sentences = leaves[i];
    leaf.first_block = i;
    leaf.end_block = i + 1;
    d.nodes.push_back(leaf);
  }

  // Active nodes form a linked list in text order. Each adjacent pair is
  // keyed by (-score, first block of its left node): the set's first element
  // is the best pair, leftmost among equals.
  std::vector<std::size_t> prev(2 * n - 1, kNone);
  std::vector<std::size_t> next(2 * n - 1, kNone);
  std::vector<double> score(2 * n - 1, 0.0);  // score of (node, next[node])
  using Key = std::tuple<double, std::size_t, std::size_t>;
  std::set<Key> queue;

  auto key_of = [&](std::size_t left) { return Key{-score[left], d.nodes[left].first_block, left}; };
  auto rescore = [&](std::size_t left) {
    score[left] = model.similarity(left, next[left]);
    ++d.similarity_evaluations;
    if (std::isnan(score[left])) throw DataError("merge model produced a NaN score");
    queue.insert(key_of(left));
  };

  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) prev[i] = i - 1;
    if (i + 1 < n) next[i] = i + 1;
  }
  for (std::size_t i = 0; i + 1 < n; ++i) rescore(i);

  for (std::size_t step = 0; step + 1 < n; ++step) {
    const std::size_t left = std::get<2>(*queue.begin());
    const std::size_t right = next[left];
    const double sim = score[left];
    queue.erase(queue.begin());
    const std::size_t before = prev[left];
    const std::size_t after = next[right];
    if (before != kNone) queue.erase(key_of(before));
    if (after != kNone) queue.erase(key_of(right));

    const std::size_t merged = n + step;
    DendrogramNode node;
    node.sentences = {d.nodes[left].sentences.begin, d.nodes[right].sentences.end};
    node.first_block = d.nodes[left].first_block;
    node.end_block = d.nodes[right].end_block;
    node.children = std::array<std::size_t, 2>{left, right};
    node.similarity = sim;
    node.step = step;
    d.nodes.push_back(node);
    model.merge(left, right, merged);

    prev[merged] = before;
    next[merged] = after;
    if (before != kNone) next[before] = merged;
    if (after != kNone) prev[after] = merged;
    if (before != kNone) rescore(before);
    if (after != kNone) rescore(merged);
  }
  return d;
}

namespace {

class HybridModel final : public MergeModel {
 public:
  HybridModel(const std::vector<Block>& blocks, const Taxonomy& taxonomy, SimilarityWeights weights)
      : taxonomy_(taxonomy), weights_(weights) {
    states_.reserve(2 * blocks.size());
    for (const auto& b : blocks) {
      states_.push_back({ClassProfile::from_entities(taxonomy, b.entities), b.terms});
    }
  }

  double similarity(std::size_t left, std::size_t right) override {
    const auto& l = states_[left];
    const auto& r = states_[right];
    const double alpha = weights_.alpha();
    const double osim = alpha < 1.0 ? profile_osim(taxonomy_, l.profile, r.profile) : 0.0;
    const double lsim = alpha > 0.0 ? cosine(l.terms, r.terms) : 0.0;
    return hybrid_sim(osim, lsim, weights_);
  }

  void merge(std::size_t left, std::size_t right, std::size_t merged) override {
    State s = std::move(states_[left]);
    s.profile.merge(states_[right].profile);
    s.terms += states_[right].terms;
    states_[right] = {};
    if (states_.size() <= merged) states_.resize(merged + 1);
    states_[merged] = std::move(s);
  }

 private:
  struct State {
    ClassProfile profile;
    TermVector terms;
  };

  const Taxonomy& taxonomy_;
  SimilarityWeights weights_;
  std::vector<State> states_;
};

}  // namespace

Dendrogram build_dendrogram(const std::vector<Block>& blocks, const Taxonomy& taxonomy,
                            SimilarityWeights weights) {
  std::vector<SentenceSpan> spans;
  spans.reserve(blocks.size());
  for (const auto& b : blocks) spans.push_back(b.span);
  HybridModel model(blocks, taxonomy, weights);
  return agglomerate(spans, model);
}

Segmentation flatten(const Dendrogram& d, std::size_t k) {
  if (k < 1 || k > d.leaf_count) {
    throw ConfigError("cannot cut " + std::to_string(d.leaf_count) + " blocks into " + std::to_string(k) +
                      " segments");
  }
  std::vector<std::size_t> frontier{d.root()};
  while (frontier.size() < k) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < frontier.size(); ++i) {
      if (d.nodes[frontier[i]].block_count() > d.nodes[frontier[best]].block_count()) best = i;
    }
    const auto children = *d.nodes[frontier[best]].children;
    frontier[best] = children[1];
    frontier.insert(frontier.begin() + static_cast<std::ptrdiff_t>(best), children[0]);
  }
  std::vector<std::size_t> boundaries;
  for (std::size_t i = 1; i < frontier.size(); ++i) boundaries.push_back(d.nodes[frontier[i]].sentences.begin);
  return Segmentation(d.sentence_count(), std::move(boundaries));
}

SegmentResult segment_document(const AnnotatedDocument& doc, const Taxonomy& taxonomy,
                               SimilarityWeights weights, WindowConfig cfg, std::size_t k,
                               const StopwordSet& stopwords) {
  const auto blocks = make_blocks(doc, cfg, stopwords);
  Dendrogram d = build_dendrogram(blocks, taxonomy, weights);
  Segmentation s = flatten(d, k);
  return {std::move(d), std::move(s)};
}

void write_dendrogram(const Dendrogram& d, std::ostream& out) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["sentence_count"] = d.sentence_count();
  doc["leaf_count"] = d.leaf_count;
  ordered_json nodes = ordered_json::array();
  for (std::size_t id = 0; id < d.nodes.size(); ++id) {
    const auto& n = d.nodes[id];
    ordered_json node;
    node["id"] = id;
    node["sentences"] = {n.sentences.begin, n.sentences.end};
    node["blocks"] = {n.first_block, n.end_block};
    if (n.children) {
      node["children"] = {(*n.children)[0], (*n.children)[1]};
      node["similarity"] = n.similarity;
      node["step"] = n.step;
    }
    nodes.push_back(std::move(node));
  }
  doc["nodes"] = std::move(nodes);
  out << doc.dump(1) << '\n';
}

Dendrogram read_dendrogram(std::istream& in) {
  using nlohmann::json;
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw DataError(std::string("dendrogram: not valid JSON: ") + e.what());
  }
  Dendrogram d;
  try {
    d.leaf_count = doc.at("leaf_count").get<std::size_t>();
    const auto& nodes = doc.at("nodes");
    if (d.leaf_count == 0 || nodes.size() != 2 * d.leaf_count - 1) {
      throw DataError("dendrogram: expected 2*leaf_count-1 nodes");
    }
    std::vector<bool> used(nodes.size(), false);
    for (std::size_t id = 0; id < nodes.size(); ++id) {
      const auto& j = nodes[id];
      if (j.at("id").get<std::size_t>() != id) throw DataError("dendrogram: node ids must be 0..n-1 in order");
      DendrogramNode n;
      const auto s = j.at("sentences").get<std::array<std::size_t, 2>>();
      const auto b = j.at("blocks").get<std::array<std::size_t, 2>>();
      n.sentences = {s[0], s[1]};
      n.first_block = b[0];
      n.end_block = b[1];
      if (n.sentences.begin >= n.sentences.end || n.first_block >= n.end_block) {
        throw DataError("dendrogram: empty span on node " + std::to_string(id));
      }
      if (id < d.leaf_count) {
        if (j.contains("children")) throw DataError("dendrogram: leaf " + std::to_string(id) + " has children");
        const std::size_t expected_begin = id == 0 ? 0 : d.nodes[id - 1].sentences.end;
        if (n.first_block != id || n.end_block != id + 1 || n.sentences.begin != expected_begin) {
          throw DataError("dendrogram: leaf " + std::to_string(id) + " out of order");
        }
      } else {
        const auto c = j.at("children").get<std::array<std::size_t, 2>>();
        if (c[0] >= id || c[1] >= id || used[c[0]] || used[c[1]]) {
          throw DataError("dendrogram: bad children on node " + std::to_string(id));
        }
        const auto& l = d.nodes[c[0]];
        const auto& r = d.nodes[c[1]];
        if (l.sentences.end != r.sentences.begin || l.end_block != r.first_block ||
            n.sentences != SentenceSpan{l.sentences.begin, r.sentences.end} || n.first_block != l.first_block ||
            n.end_block != r.end_block) {
          throw DataError("dendrogram: node " + std::to_string(id) + " does not join adjacent children");
        }
        used[c[0]] = used[c[1]] = true;
        n.children = c;
        n.similarity = j.at("similarity").get<double>();
        n.step = j.at("step").get<std::size_t>();
        if (n.step != id - d.leaf_count) throw DataError("dendrogram: step mismatch on node " + std::to_string(id));
      }
      d.nodes.push_back(n);
    }
    if (d.nodes.back().first_block != 0 || d.nodes.back().end_block != d.leaf_count) {
      throw DataError("dendrogram: root does not cover every block");
    }
    if (doc.contains("sentence_count") && doc["sentence_count"].get<std::size_t>() != d.sentence_count()) {
      throw DataError("dendrogram: sentence_count disagrees with root span");
    }
  } catch (const json::exception& e) {
    throw DataError(std::string("dendrogram: bad structure: ") + e.what());
  }
  return d;
}

}  // namespace ontoseg
