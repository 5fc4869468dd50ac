#include "beflow/cache.hpp"

#include <json.hpp>

#include <fstream>

namespace beflow {

namespace {

std::string make_key(const std::string& canonical, const std::string& command,
                     const std::string& params) {
  return canonical + "\x1f" + command + "\x1f" + params;
}

}  // namespace

ResultCache::ResultCache(std::string path) : path_(std::move(path)) {
  std::ifstream in(path_);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    auto j = nlohmann::json::parse(line, nullptr, false);
    if (j.is_discarded()) continue;
    entries_[make_key(j.value("canonical", ""), j.value("command", ""),
                      j.value("params", ""))] = {j.value("verdict", ""),
                                                 j.value("digest", "")};
  }
}

std::optional<ResultCache::Entry> ResultCache::lookup(
    const std::string& canonical, const std::string& command,
    const std::string& params) const {
  auto it = entries_.find(make_key(canonical, command, params));
  if (it == entries_.end()) return std::nullopt;
  return it->second;
}

void ResultCache::store(const std::string& canonical, const std::string& command,
                        const std::string& params, const Entry& entry) {
  entries_[make_key(canonical, command, params)] = entry;
  std::ofstream out(path_, std::ios::app);
  nlohmann::json j{{"canonical", canonical},
                   {"command", command},
                   {"params", params},
                   {"verdict", entry.verdict},
                   {"digest", entry.digest}};
  out << j.dump() << "\n";
}

std::string ResultCache::digest(const std::string& payload) {
  // FNV-1a, printed as hex.
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : payload) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace beflow
