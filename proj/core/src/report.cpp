#include "fano/report.hpp"

#include "fano/error.hpp"

namespace fano {

void Report::set(std::string key, std::string value) {
  if (key.empty() || key.find_first_of(": \n") != std::string::npos)
    throw InvalidArgument("report key '" + key + "' is not a dotted identifier");
  for (char& c : value)
    if (c == '\n') c = ' ';
  for (auto& [k, v] : entries_)
    if (k == key) {
      v = std::move(value);
      return;
    }
  entries_.emplace_back(std::move(key), std::move(value));
}

std::optional<std::string> Report::get(std::string_view key) const {
  for (const auto& [k, v] : entries_)
    if (k == key) return v;
  return std::nullopt;
}

std::string Report::str() const {
  std::string out;
  for (const auto& [k, v] : entries_) out += k + ": " + v + "\n";
  return out;
}

Report Report::parse(std::string_view text) {
  Report r;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    if (!line.empty()) {
      const std::size_t colon = line.find(": ");
      if (colon == std::string_view::npos) throw ParseError(pos, "report line without ': '");
      r.set(std::string(line.substr(0, colon)), std::string(line.substr(colon + 2)));
    }
    pos = end + 1;
  }
  return r;
}

namespace {
template <class T>
std::string tuple_impl(const std::vector<T>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}
}  // namespace

std::string tuple_str(const std::vector<std::size_t>& v) { return tuple_impl(v); }
std::string tuple_str(const std::vector<int>& v) { return tuple_impl(v); }

}  // namespace fano
