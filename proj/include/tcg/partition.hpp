#pragma once

#include <cstddef>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "tcg/graph.hpp"

namespace tcg {

/// Ordered list of vertex classes. Whether the classes actually partition
/// a graph's vertex set is checked by validate_partition, not enforced here.
class VertexPartition {
 public:
  VertexPartition() = default;
  explicit VertexPartition(std::vector<VertexSet> classes) : classes_(std::move(classes)) {}

  /// Partition from a class label per vertex; labels must be 0..k-1, each used.
  static VertexPartition from_labels(std::span<const std::size_t> class_of);
  static VertexPartition singletons(std::size_t n);

  [[nodiscard]] std::size_t size() const noexcept { return classes_.size(); }
  [[nodiscard]] const VertexSet& operator[](std::size_t i) const { return classes_[i]; }
  [[nodiscard]] const std::vector<VertexSet>& classes() const noexcept { return classes_; }
  [[nodiscard]] auto begin() const { return classes_.begin(); }
  [[nodiscard]] auto end() const { return classes_.end(); }

  /// Class index per vertex of a valid partition of n vertices.
  [[nodiscard]] std::vector<std::size_t> labels(std::size_t n) const;

  /// Vertices renamed by perm (perm[v] = new name); class order kept.
  [[nodiscard]] VertexPartition relabeled(std::span<const Vertex> perm) const;

  friend bool operator==(const VertexPartition&, const VertexPartition&) = default;

 private:
  std::vector<VertexSet> classes_;
};

struct PartitionReport {
  std::vector<std::size_t> empty_classes;
  std::vector<Vertex> overlapping;   // vertices in more than one class
  std::vector<Vertex> out_of_range;  // members >= n
  VertexSet unassigned;

  [[nodiscard]] bool valid() const {
    return empty_classes.empty() && overlapping.empty() && out_of_range.empty() && unassigned.empty();
  }
  [[nodiscard]] std::string describe() const;
};

[[nodiscard]] PartitionReport validate_partition(const Graph& g, const VertexPartition& p);

/// Partition file: one class per line, comma-separated 0-based indices;
/// blank lines and '#' comments are ignored.
[[nodiscard]] VertexPartition parse_partition(std::istream& in);
[[nodiscard]] std::string to_partition_text(const VertexPartition& p);

}  // namespace tcg
