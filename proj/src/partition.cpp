#include "tcg/partition.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "tcg/error.hpp"

namespace tcg {

VertexPartition VertexPartition::from_labels(std::span<const std::size_t> class_of) {
  std::vector<VertexSet> classes;
  for (Vertex v = 0; v < class_of.size(); ++v) {
    if (class_of[v] >= classes.size()) classes.resize(class_of[v] + 1);
    classes[class_of[v]].set(v);
  }
  for (const auto& c : classes) {
    if (c.empty()) throw InputError("class labels must be contiguous");
  }
  return VertexPartition(std::move(classes));
}

VertexPartition VertexPartition::singletons(std::size_t n) {
  std::vector<VertexSet> classes(n);
  for (Vertex v = 0; v < n; ++v) classes[v].set(v);
  return VertexPartition(std::move(classes));
}

std::vector<std::size_t> VertexPartition::labels(std::size_t n) const {
  std::vector<std::size_t> out(n, classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (Vertex v : classes_[i]) {
      if (v < n) out[v] = i;
    }
  }
  return out;
}

VertexPartition VertexPartition::relabeled(std::span<const Vertex> perm) const {
  std::vector<VertexSet> classes(classes_.size());
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    for (Vertex v : classes_[i]) classes[i].set(perm[v]);
  }
  return VertexPartition(std::move(classes));
}

std::string PartitionReport::describe() const {
  std::ostringstream out;
  auto list = [&](const char* what, const auto& items) {
    out << what << ":";
    for (auto x : items) out << ' ' << x;
    out << "; ";
  };
  if (!empty_classes.empty()) list("empty classes", empty_classes);
  if (!overlapping.empty()) list("vertices in several classes", overlapping);
  if (!out_of_range.empty()) list("vertices out of range", out_of_range);
  if (!unassigned.empty()) list("unassigned vertices", unassigned);
  return valid() ? std::string("valid") : out.str();
}

PartitionReport validate_partition(const Graph& g, const VertexPartition& p) {
  PartitionReport report;
  const VertexSet all = g.vertices();
  VertexSet seen;
  VertexSet repeated;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i].empty()) report.empty_classes.push_back(i);
    repeated |= seen & p[i];
    seen |= p[i];
  }
  for (Vertex v : repeated) report.overlapping.push_back(v);
  for (Vertex v : seen - all) report.out_of_range.push_back(v);
  report.unassigned = all - seen;
  return report;
}

VertexPartition parse_partition(std::istream& in) {
  std::vector<VertexSet> classes;
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    VertexSet cls;
    bool any = false;
    bool expect_value = true;
    std::size_t pos = 0;
    while (pos < line.size()) {
      const char c = line[pos];
      if (c == ' ' || c == '\t' || c == '\r') {
        ++pos;
      } else if (c == ',') {
        if (expect_value) throw ParseError("partition: empty entry", pos, number);
        expect_value = true;
        ++pos;
      } else {
        if (!expect_value) throw ParseError("partition: missing comma", pos, number);
        std::size_t v = 0;
        auto [ptr, ec] = std::from_chars(line.data() + pos, line.data() + line.size(), v);
        if (ec != std::errc{}) throw ParseError("partition: expected a vertex index", pos, number);
        if (v >= kMaxVertices) throw ParseError("partition: vertex index exceeds capacity", pos, number);
        cls.set(v);
        any = true;
        expect_value = false;
        pos = static_cast<std::size_t>(ptr - line.data());
      }
    }
    if (!any) continue;
    if (expect_value) throw ParseError("partition: trailing comma", line.size(), number);
    classes.push_back(cls);
  }
  return VertexPartition(std::move(classes));
}

std::string to_partition_text(const VertexPartition& p) {
  std::ostringstream out;
  for (const auto& cls : p) {
    bool first = true;
    for (Vertex v : cls) {
      out << (first ? "" : ",") << v;
      first = false;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace tcg
