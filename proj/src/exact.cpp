#include "e6kit/exact.hpp"

#include <utility>

namespace e6kit {

ParseError::ParseError(const std::string& msg, int line_, int column_)
    : InputError(line_ > 0 ? std::to_string(line_) + ":" + std::to_string(column_) + ": " + msg : msg),
      line(line_),
      column(column_) {}

GenerationError::GenerationError(const std::string& msg, std::vector<Int> divisors)
    : InputError(msg), elementary_divisors(std::move(divisors)) {}

std::string to_string(const Int& x) { return x.get_str(); }

std::string to_string(const Rat& x) {
  Rat c = x;
  c.canonicalize();
  return c.get_str();
}

Rat parse_rational(const std::string& text) {
  std::string t;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') t += ch;
  if (t.empty()) throw ParseError("empty rational");
  std::size_t start = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool slash = false;
  for (std::size_t i = start; i < t.size(); ++i) {
    if (t[i] == '/') {
      if (slash || i == start || i + 1 == t.size()) throw ParseError("malformed rational '" + text + "'");
      slash = true;
    } else if (t[i] < '0' || t[i] > '9') {
      throw ParseError("malformed rational '" + text + "'");
    }
  }
  if (t[0] == '+') t.erase(0, 1);
  Rat r;
  if (r.set_str(t, 10) != 0) throw ParseError("malformed rational '" + text + "'");
  if (r.get_den() == 0) throw ParseError("zero denominator in '" + text + "'");
  r.canonicalize();
  return r;
}

}  // namespace e6kit
