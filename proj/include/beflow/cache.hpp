#pragma once

#include <map>
#include <optional>
#include <string>

namespace beflow {

/// Append-only result store backed by a JSON-lines file. Keyed by
/// (canonical graph form, command, parameters); holds a verdict plus a
/// digest of the emitted certificate.
class ResultCache {
 public:
  explicit ResultCache(std::string path);

  struct Entry {
    std::string verdict;
    std::string digest;
  };

  std::optional<Entry> lookup(const std::string& canonical,
                              const std::string& command,
                              const std::string& params) const;
  void store(const std::string& canonical, const std::string& command,
             const std::string& params, const Entry& entry);

  static std::string digest(const std::string& payload);

 private:
  std::string path_;
  std::map<std::string, Entry> entries_;
};

}  // namespace beflow
