#include "cache.hpp"

#include <fstream>
#include <sstream>
#include <vector>

namespace tcg::cli {

namespace {

std::string encode_certificate(const VertexPartition& p) {
  std::string out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i > 0) out += ';';
    bool first = true;
    for (Vertex v : p[i]) {
      if (!first) out += ',';
      out += std::to_string(v);
      first = false;
    }
  }
  return out;
}

VertexPartition decode_certificate(const std::string& text) {
  std::vector<VertexSet> classes;
  std::stringstream all(text);
  std::string cls;
  while (std::getline(all, cls, ';')) {
    VertexSet s;
    std::stringstream part(cls);
    std::string item;
    while (std::getline(part, item, ',')) {
      if (!item.empty()) s.set(std::stoul(item));
    }
    classes.push_back(s);
  }
  return VertexPartition(std::move(classes));
}

}  // namespace

ResultCache::ResultCache(std::filesystem::path path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  std::size_t number = 0;
  while (std::getline(in, line)) {
    ++number;
    if (line.empty()) continue;
    std::vector<std::string> fields;
    std::stringstream ss(line);
    std::string field;
    while (std::getline(ss, field, '\t')) fields.push_back(field);
    if (fields.size() == 4) fields.emplace_back();
    if (fields.size() != 5) {
      throw Error("cache " + path_.string() + ": malformed record at line " + std::to_string(number));
    }
    CacheEntry entry;
    entry.tc = std::stoul(fields[1]);
    entry.exact = fields[2] == "1";
    entry.status = fields[3];
    entry.certificate = decode_certificate(fields[4]);
    merge(fields[0], entry);
  }
}

std::optional<CacheEntry> ResultCache::find(const std::string& form) const {
  if (auto it = entries_.find(form); it != entries_.end()) return it->second;
  return std::nullopt;
}

void ResultCache::merge(const std::string& form, const CacheEntry& entry) {
  auto it = entries_.find(form);
  if (it == entries_.end()) {
    entries_.emplace(form, entry);
    return;
  }
  if (it->second.exact) {
    if (entry.exact && entry.tc != it->second.tc) {
      throw CacheConflict("cache conflict for " + form + ": stored exact tc=" + std::to_string(it->second.tc) +
                          ", new exact tc=" + std::to_string(entry.tc));
    }
    return;  // exact values are never replaced
  }
  it->second = entry;
}

void ResultCache::store(const std::string& form, const CacheEntry& entry) {
  if (auto existing = find(form); existing && existing->exact) {
    merge(form, entry);  // throws on conflict, otherwise a no-op
    return;
  }
  merge(form, entry);
  if (!path_.parent_path().empty()) std::filesystem::create_directories(path_.parent_path());
  std::ofstream out(path_, std::ios::app);
  out << form << '\t' << entry.tc << '\t' << (entry.exact ? 1 : 0) << '\t' << entry.status << '\t'
      << encode_certificate(entry.certificate) << '\n';
}

}  // namespace tcg::cli
