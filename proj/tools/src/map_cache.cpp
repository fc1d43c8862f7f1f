#include "guekdv/cli/map_cache.hpp"

#include "guekdv/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace guekdv::cli {

using json = nlohmann::ordered_json;
using gue::IndexMultiset;
using gue::Producer;

std::string MapCache::key_string(const Key& k) { return std::to_string(k.first) + ";" + k.second.key(); }

MapCache::Key MapCache::parse_key(const std::string& s) {
  const auto semi = s.find(';');
  if (semi == std::string::npos || semi == 0) throw ParseError("cache key '" + s + "': expected g;i1,i2,...");
  int g = 0;
  try {
    std::size_t used = 0;
    g = std::stoi(s.substr(0, semi), &used);
    if (used != semi) throw ParseError("");
  } catch (const std::exception&) {
    throw ParseError("cache key '" + s + "': bad genus");
  }
  if (g < 0) throw ParseError("cache key '" + s + "': negative genus");
  const IndexMultiset i = IndexMultiset::parse(s.substr(semi + 1));
  if (i.empty()) throw ParseError("cache key '" + s + "': empty index list");
  return {g, i};
}

MapCache MapCache::parse(const std::string& text, const std::string& source) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw ParseError(source + ": " + e.what());
  }
  if (!doc.is_object()) throw ParseError(source + ": cache must be a JSON object");
  if (!doc.contains("version") || doc["version"] != kVersion) {
    throw ParseError(source + ": unsupported cache version");
  }
  if (!doc.contains("producer") || !doc["producer"].is_string()) throw ParseError(source + ": missing producer tag");
  if (!doc.contains("entries") || !doc["entries"].is_object()) throw ParseError(source + ": missing entries");
  const Producer fallback = gue::parse_producer(doc["producer"].get<std::string>());
  std::map<std::string, Producer> exceptions;
  if (doc.contains("producers")) {
    if (!doc["producers"].is_object()) throw ParseError(source + ": producers must be an object");
    for (const auto& [k, v] : doc["producers"].items()) {
      if (!v.is_string()) throw ParseError(source + ": producer of '" + k + "' must be a string");
      exceptions[k] = gue::parse_producer(v.get<std::string>());
    }
  }
  MapCache out;
  for (const auto& [k, v] : doc["entries"].items()) {
    if (!v.is_string()) throw ParseError(source + ": value of '" + k + "' must be a decimal string");
    const std::string s = v.get<std::string>();
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos) {
      throw ParseError(source + ": value of '" + k + "' is not a nonnegative decimal integer");
    }
    const Key key = parse_key(k);
    const auto e = exceptions.find(k);
    out.insert(key, BigInt(s), e == exceptions.end() ? fallback : e->second, source);
  }
  return out;
}

MapCache MapCache::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw ParseError("cannot read cache file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

MapCache MapCache::load_or_empty(const std::string& path) {
  if (!std::filesystem::exists(path)) return {};
  return load(path);
}

void MapCache::insert(const Key& k, const BigInt& value, Producer producer, const std::string& source) {
  auto [it, inserted] = entries_.try_emplace(k, Entry{value, producer, source});
  if (!inserted && it->second.value != value) {
    throw CacheConflict("cache conflict at " + key_string(k) + ": " + it->second.value.get_str() + " (" +
                        gue::producer_name(it->second.producer) + ", " + it->second.source + ") vs " +
                        value.get_str() + " (" + gue::producer_name(producer) + ", " + source + ")");
  }
}

void MapCache::merge(const MapCache& other) {
  MapCache next = *this;
  for (const auto& [k, e] : other.entries_) next.insert(k, e.value, e.producer, e.source);
  entries_ = std::move(next.entries_);
}

void MapCache::seed(gue::MapCounter& counter) const {
  for (const auto& [k, e] : entries_) counter.insert(k.first, k.second, e.value, e.producer);
}

void MapCache::absorb(const gue::MapCounter& counter, const std::string& source) {
  MapCache fresh;
  for (const auto& [k, e] : counter.entries()) fresh.insert(k, e.value, e.producer, source);
  merge(fresh);
}

std::string MapCache::dump() const {
  std::size_t resolvent = 0;
  for (const auto& [k, e] : entries_) resolvent += e.producer == Producer::Resolvent ? 1 : 0;
  const Producer main = resolvent * 2 > entries_.size() ? Producer::Resolvent : Producer::Oracle;
  json doc;
  doc["version"] = kVersion;
  doc["producer"] = gue::producer_name(main);
  json ent = json::object();
  json other = json::object();
  for (const auto& [k, e] : entries_) {
    const std::string ks = key_string(k);
    ent[ks] = e.value.get_str();
    if (e.producer != main) other[ks] = gue::producer_name(e.producer);
  }
  if (!other.empty()) doc["producers"] = other;
  doc["entries"] = ent;
  return doc.dump(2) + "\n";
}

void MapCache::save(const std::string& path) const {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream f(tmp, std::ios::trunc);
    if (!f) throw Error("cannot write cache file '" + path + "'");
    f << dump();
    if (!f) throw Error("cannot write cache file '" + path + "'");
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace guekdv::cli
