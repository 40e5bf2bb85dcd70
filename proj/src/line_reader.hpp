#pragma once

// Small cursor over '#'-commented, line-oriented text used by the tree and
// plane-graph file parsers. Errors carry 1-based line:column positions.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "wsub/error.hpp"

namespace wsub::detail {

struct SourceLine {
  int number = 0;         // 1-based
  std::string_view text;  // comment stripped
};

inline std::vector<SourceLine> significant_lines(std::string_view text) {
  std::vector<SourceLine> out;
  int number = 0;
  while (!text.empty()) {
    auto eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    ++number;
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.find_first_not_of(" \t") == std::string_view::npos) continue;
    out.push_back({number, line});
  }
  return out;
}

class LineCursor {
 public:
  explicit LineCursor(SourceLine line) : line_(line) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::syntax, "line " + std::to_string(line_.number) + ", column " +
                                       std::to_string(pos_ + 1) + ": " + what);
  }

  void skip_blanks() {
    while (pos_ < line_.text.size() && (line_.text[pos_] == ' ' || line_.text[pos_] == '\t')) ++pos_;
  }

  bool at_end() {
    skip_blanks();
    return pos_ >= line_.text.size();
  }

  void expect(char c) {
    skip_blanks();
    if (pos_ >= line_.text.size() || line_.text[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  void expect_word(std::string_view word) {
    skip_blanks();
    if (line_.text.substr(pos_, word.size()) != word) fail("expected '" + std::string(word) + "'");
    pos_ += word.size();
  }

  std::int64_t integer() {
    skip_blanks();
    const char* first = line_.text.data() + pos_;
    const char* last = line_.text.data() + line_.text.size();
    std::int64_t value = 0;
    auto [ptr, ec] = std::from_chars(first, last, value);
    if (ec == std::errc::result_out_of_range) fail("integer out of range");
    if (ec != std::errc{} || ptr == first) fail("expected an integer");
    if (ptr != last && *ptr != ' ' && *ptr != '\t' && *ptr != ':' && *ptr != ',') fail("unexpected character");
    pos_ += static_cast<std::size_t>(ptr - first);
    return value;
  }

  int vertex(std::int64_t n) {
    std::size_t at = pos_;
    std::int64_t v = integer();
    if (v < 0 || v >= n) {
      pos_ = at;
      skip_blanks();
      fail("vertex id " + std::to_string(v) + " out of range [0, " + std::to_string(n) + ")");
    }
    return static_cast<int>(v);
  }

  int line_number() const { return line_.number; }

 private:
  SourceLine line_;
  std::size_t pos_ = 0;
};

}  // namespace wsub::detail
