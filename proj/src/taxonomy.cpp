#include "ontoseg/taxonomy.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <iterator>
#include <mutex>
#include <shared_mutex>

#include <json.hpp>

namespace ontoseg {

struct Taxonomy::Memo {
  mutable std::shared_mutex mutex;
  std::unordered_map<std::uint64_t, double> values;
};

namespace {

std::uint64_t pair_key(ClassIndex a, ClassIndex b) {
  if (a > b) std::swap(a, b);
  return (static_cast<std::uint64_t>(a) << 32) | b;
}

[[noreturn]] void fail(TaxonomyError::Kind kind, const std::string& id,
                       const std::string& what) {
  throw TaxonomyError(kind, id, "taxonomy: " + what + ": '" + id + "'");
}

}  // namespace

Taxonomy::Taxonomy(const ClassId& root, const std::vector<TaxonomyNode>& nodes)
    : memo_(std::make_unique<Memo>()) {
  using Kind = TaxonomyError::Kind;

  names_.reserve(nodes.size());
  for (const auto& node : nodes) {
    if (node.id.empty()) fail(Kind::kMalformed, node.id, "empty class id");
    names_.push_back(node.id);
  }
  std::sort(names_.begin(), names_.end());
  if (auto dup = std::adjacent_find(names_.begin(), names_.end()); dup != names_.end()) {
    fail(Kind::kDuplicateNode, *dup, "duplicate node");
  }
  index_.reserve(names_.size());
  for (ClassIndex i = 0; i < names_.size(); ++i) index_.emplace(names_[i], i);

  parents_.assign(names_.size(), {});
  for (const auto& node : nodes) {
    auto& ps = parents_[index_.at(node.id)];
    for (const auto& p : node.parents) {
      auto it = index_.find(p);
      if (it == index_.end()) fail(Kind::kUndeclaredParent, p, "undeclared parent of '" + node.id + "'");
      ps.push_back(it->second);
    }
    std::sort(ps.begin(), ps.end());
    ps.erase(std::unique(ps.begin(), ps.end()), ps.end());
    edge_count_ += ps.size();
  }

  auto root_it = index_.find(root);
  if (root.empty() || root_it == index_.end()) fail(Kind::kNoRoot, root, "root is not a declared node");
  root_ = root_it->second;
  for (ClassIndex i = 0; i < names_.size(); ++i) {
    if (parents_[i].empty() && i != root_) fail(Kind::kMultipleRoots, names_[i], "second parentless node");
  }
  if (!parents_[root_].empty()) fail(Kind::kMalformed, root, "root declares parents");

  // Kahn order from the root downwards; leftovers sit on or below a cycle.
  std::vector<std::vector<ClassIndex>> children(names_.size());
  std::vector<std::size_t> pending(names_.size());
  for (ClassIndex i = 0; i < names_.size(); ++i) {
    pending[i] = parents_[i].size();
    for (ClassIndex p : parents_[i]) children[p].push_back(i);
  }
  std::vector<ClassIndex> order;
  order.reserve(names_.size());
  order.push_back(root_);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (ClassIndex c : children[order[head]]) {
      if (--pending[c] == 0) order.push_back(c);
    }
  }
  if (order.size() != names_.size()) {
    std::vector<bool> done(names_.size(), false);
    for (ClassIndex c : order) done[c] = true;
    ClassIndex cur = 0;
    while (done[cur]) ++cur;
    std::vector<bool> seen(names_.size(), false);
    while (!seen[cur]) {
      seen[cur] = true;
      for (ClassIndex p : parents_[cur]) {
        if (!done[p]) {
          cur = p;
          break;
        }
      }
    }
    fail(Kind::kCycle, names_[cur], "cycle through");
  }

  depth_.assign(names_.size(), 0);
  depth_[root_] = 1;
  std::deque<ClassIndex> queue{root_};
  while (!queue.empty()) {
    ClassIndex c = queue.front();
    queue.pop_front();
    for (ClassIndex child : children[c]) {
      if (depth_[child] == 0) {
        depth_[child] = depth_[c] + 1;
        queue.push_back(child);
      }
    }
  }

  ancestors_.assign(names_.size(), {});
  for (ClassIndex c : order) {
    std::vector<ClassIndex> acc{c};
    for (ClassIndex p : parents_[c]) {
      std::vector<ClassIndex> merged;
      merged.reserve(acc.size() + ancestors_[p].size());
      std::set_union(acc.begin(), acc.end(), ancestors_[p].begin(), ancestors_[p].end(),
                     std::back_inserter(merged));
      acc.swap(merged);
    }
    ancestors_[c] = std::move(acc);
  }
}

Taxonomy::Taxonomy(Taxonomy&&) noexcept = default;
Taxonomy& Taxonomy::operator=(Taxonomy&&) noexcept = default;
Taxonomy::~Taxonomy() = default;

bool Taxonomy::contains(std::string_view id) const { return index_.contains(id); }

ClassIndex Taxonomy::index_of(std::string_view id) const {
  auto it = index_.find(id);
  if (it == index_.end()) {
    throw TaxonomyError(TaxonomyError::Kind::kUnknownClass, std::string(id),
                        "taxonomy: unknown class '" + std::string(id) + "'");
  }
  return it->second;
}

ClassIndex Taxonomy::lca(ClassIndex a, ClassIndex b) const {
  const auto& xs = ancestors_.at(a);
  const auto& ys = ancestors_.at(b);
  ClassIndex best = root_;
  int best_depth = 0;
  // Both lists are sorted by index, which is id order: the first deepest
  // hit is the lexicographically smallest.
  auto x = xs.begin();
  auto y = ys.begin();
  while (x != xs.end() && y != ys.end()) {
    if (*x < *y) {
      ++x;
    } else if (*y < *x) {
      ++y;
    } else {
      if (depth_[*x] > best_depth) {
        best = *x;
        best_depth = depth_[*x];
      }
      ++x;
      ++y;
    }
  }
  return best;
}

ClassId Taxonomy::lca(std::string_view a, std::string_view b) const {
  return names_[lca(index_of(a), index_of(b))];
}

double Taxonomy::compute_con_sim(ClassIndex a, ClassIndex b) const {
  // A shortcut edge can leave a class shallower than one of its ancestors,
  // which would push the ratio past 1.
  return std::min(1.0, 2.0 * depth_[lca(a, b)] / static_cast<double>(depth_[a] + depth_[b]));
}

double Taxonomy::con_sim(ClassIndex a, ClassIndex b) const {
  if (a == b) return 1.0;
  const std::uint64_t key = pair_key(a, b);
  {
    std::shared_lock lock(memo_->mutex);
    auto it = memo_->values.find(key);
    if (it != memo_->values.end()) return it->second;
  }
  const double value = compute_con_sim(a, b);
  std::unique_lock lock(memo_->mutex);
  memo_->values.emplace(key, value);
  return value;
}

double Taxonomy::con_sim(std::string_view a, std::string_view b) const {
  return con_sim(index_of(a), index_of(b));
}

std::size_t Taxonomy::memo_size() const {
  std::shared_lock lock(memo_->mutex);
  return memo_->values.size();
}

Taxonomy parse_taxonomy(std::istream& in) {
  using Kind = TaxonomyError::Kind;
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw TaxonomyError(Kind::kMalformed, "", std::string("taxonomy: not valid JSON: ") + e.what());
  }
  try {
    std::vector<TaxonomyNode> nodes;
    for (const auto& n : doc.at("nodes")) {
      nodes.push_back({n.at("id").get<std::string>(),
                       n.value("parents", std::vector<std::string>{})});
    }
    return Taxonomy(doc.at("root").get<std::string>(), nodes);
  } catch (const nlohmann::json::exception& e) {
    throw TaxonomyError(Kind::kMalformed, "", std::string("taxonomy: bad structure: ") + e.what());
  }
}

Taxonomy load_taxonomy(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open taxonomy file " + path.string());
  return parse_taxonomy(in);
}

}  // namespace ontoseg
