#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <type_traits>
#include <utility>
#include <vector>

namespace fano {

/// Ordered key/value text document, one `key: value` per line. Keys are
/// dotted identifiers; values never contain newlines.
class Report {
 public:
  void set(std::string key, std::string value);
  void set(std::string key, const char* value) { set(std::move(key), std::string(value)); }
  void set(std::string key, bool value) { set(std::move(key), std::string(value ? "true" : "false")); }
  template <class I>
    requires std::is_arithmetic_v<I>
  void set(std::string key, I value) {
    set(std::move(key), std::to_string(value));
  }

  std::optional<std::string> get(std::string_view key) const;
  const std::vector<std::pair<std::string, std::string>>& entries() const { return entries_; }

  std::string str() const;
  static Report parse(std::string_view text);

 private:
  std::vector<std::pair<std::string, std::string>> entries_;
};

/// "(a,b,c)".
std::string tuple_str(const std::vector<std::size_t>& v);
std::string tuple_str(const std::vector<int>& v);

}  // namespace fano
