// Line tokenizer shared by the .agrp and .mpair parsers. '#' starts a
// comment, blank lines vanish, and every surviving line keeps its original
// number for error messages.

#ifndef ALMOSTHOPF_SRC_TEXT_FORMAT_HPP
#define ALMOSTHOPF_SRC_TEXT_FORMAT_HPP

#include <istream>
#include <sstream>
#include <string>
#include <vector>

#include "almosthopf/errors.hpp"

namespace almosthopf::detail {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

inline std::vector<Line> tokenize(std::istream& in) {
  std::vector<Line> lines;
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    if (auto hash = raw.find('#'); hash != std::string::npos)
      raw.erase(hash);
    std::istringstream ss(raw);
    Line line{number, {}};
    std::string tok;
    while (ss >> tok) line.tokens.push_back(tok);
    if (!line.tokens.empty()) lines.push_back(std::move(line));
  }
  return lines;
}

[[noreturn]] inline void fail_at(int line, const std::string& what) {
  throw ParseError("line " + std::to_string(line) + ": " + what);
}

}  // namespace almosthopf::detail

#endif
