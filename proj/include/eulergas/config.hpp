#pragma once

#include <filesystem>
#include <map>
#include <string>

namespace eulergas {

/// Parsed "key = value" text. Lines starting with '#' and blank lines are
/// skipped, trailing "# ..." comments are stripped, and "[name]" opens a
/// section whose keys are stored as "name.key".
class KeyValueFile {
 public:
  static KeyValueFile parse(const std::string& text, const std::string& origin = "<string>");
  static KeyValueFile load(const std::filesystem::path& path);

  const std::map<std::string, std::string>& entries() const noexcept { return entries_; }
  /// Value of key as a finite double; throws DomainError naming the origin.
  double number(const std::string& key) const;
  bool contains(const std::string& key) const { return entries_.count(key) != 0; }
  const std::string& origin() const noexcept { return origin_; }

 private:
  std::string origin_;
  std::map<std::string, std::string> entries_;
};

}  // namespace eulergas
