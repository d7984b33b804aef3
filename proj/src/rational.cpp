#include "quadop/rational.hpp"

#include <cctype>

#include "quadop/error.hpp"

namespace quadop {

Rat parse_rational(const std::string& text) {
  std::size_t i = 0;
  const std::size_t n = text.size();
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < n && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };

  if (i < n && (text[i] == '+' || text[i] == '-')) ++i;
  std::size_t num_end = digits(i);
  if (num_end == i) throw parse_error("expected rational number, got '" + text + "'");
  i = num_end;
  if (i < n) {
    if (text[i] != '/') throw parse_error("malformed rational '" + text + "'");
    ++i;
    std::size_t den_end = digits(i);
    if (den_end == i || den_end != n) throw parse_error("malformed rational '" + text + "'");
    if (text[i] == '0') throw parse_error("zero denominator in '" + text + "'");
  }

  // GMP rejects an explicit leading '+'.
  Rat r(text[0] == '+' ? text.substr(1) : text);
  r.canonicalize();
  return r;
}

std::string rat_str(const Rat& r) { return r.get_str(); }

bool is_nonnegative_integer(const Rat& r) {
  return r.get_den() == 1 && r.get_num() >= 0;
}

}  // namespace quadop
