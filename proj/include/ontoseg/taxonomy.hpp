#pragma once

#include <cstdint>
#include <filesystem>
#include <istream>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "ontoseg/error.hpp"

namespace ontoseg {

using ClassId = std::string;

// Dense handle for a class inside one Taxonomy. Handles are assigned in
// lexicographic ClassId order, so comparing handles compares ids.
using ClassIndex = std::uint32_t;

class TaxonomyError : public DataError {
 public:
  enum class Kind {
    kMalformed,
    kDuplicateNode,
    kUndeclaredParent,
    kNoRoot,
    kMultipleRoots,
    kCycle,
    kUnknownClass,
  };

  TaxonomyError(Kind kind, std::string id, const std::string& message)
      : DataError(message), kind_(kind), id_(std::move(id)) {}

  Kind kind() const { return kind_; }
  // The offending class id (empty when no single id is to blame).
  const std::string& id() const { return id_; }

 private:
  Kind kind_;
  std::string id_;
};

// One declared node of a taxonomy file.
struct TaxonomyNode {
  ClassId id;
  std::vector<ClassId> parents;
};

// Rooted is-a hierarchy (a DAG: multiple parents are allowed).
//
// Depths count nodes, so depth(root) == 1 and the Wu-Palmer ratio is always
// defined. Depth of a class with several parents is its shortest root path.
// The structure is immutable after construction; the con_sim memo is safe
// for concurrent readers.
class Taxonomy {
 public:
  // Validates and indexes the hierarchy. Throws TaxonomyError.
  Taxonomy(const ClassId& root, const std::vector<TaxonomyNode>& nodes);

  Taxonomy(Taxonomy&&) noexcept;
  Taxonomy& operator=(Taxonomy&&) noexcept;
  Taxonomy(const Taxonomy&) = delete;
  Taxonomy& operator=(const Taxonomy&) = delete;
  ~Taxonomy();

  std::size_t size() const { return names_.size(); }
  std::size_t edge_count() const { return edge_count_; }
  const ClassId& root() const { return names_[root_]; }
  ClassIndex root_index() const { return root_; }

  bool contains(std::string_view id) const;
  // Throws TaxonomyError(kUnknownClass) for ids not in the hierarchy.
  ClassIndex index_of(std::string_view id) const;
  const ClassId& name(ClassIndex c) const { return names_.at(c); }
  const std::vector<ClassIndex>& parents(ClassIndex c) const { return parents_.at(c); }

  int depth(ClassIndex c) const { return depth_.at(c); }
  int depth(std::string_view id) const { return depth_[index_of(id)]; }

  // Deepest common ancestor; every class is its own ancestor. Ties between
  // equally deep candidates go to the lexicographically smallest id.
  ClassIndex lca(ClassIndex a, ClassIndex b) const;
  ClassId lca(std::string_view a, std::string_view b) const;

  // Wu-Palmer similarity 2*depth(lca) / (depth(a) + depth(b)), capped at 1,
  // memoized per unordered pair.
  double con_sim(ClassIndex a, ClassIndex b) const;
  double con_sim(std::string_view a, std::string_view b) const;

  // Number of distinct pairs currently held by the memo.
  std::size_t memo_size() const;

 private:
  double compute_con_sim(ClassIndex a, ClassIndex b) const;

  struct Memo;

  std::vector<ClassId> names_;
  std::unordered_map<std::string_view, ClassIndex> index_;
  std::vector<std::vector<ClassIndex>> parents_;
  std::vector<int> depth_;
  // Ancestors of every node (itself included), sorted by index.
  std::vector<std::vector<ClassIndex>> ancestors_;
  ClassIndex root_ = 0;
  std::size_t edge_count_ = 0;
  std::unique_ptr<Memo> memo_;
};

// Reads the JSON taxonomy format:
//   {"root": "Thing", "nodes": [{"id": "Thing", "parents": []}, ...]}
Taxonomy parse_taxonomy(std::istream& in);
// ConfigError when the file cannot be opened; TaxonomyError on bad content.
Taxonomy load_taxonomy(const std::filesystem::path& path);

}  // namespace ontoseg
