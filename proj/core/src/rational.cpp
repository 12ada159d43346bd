#include "cnull/rational.hpp"

#include <cctype>

#include "cnull/error.hpp"

namespace cnull {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rat(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw Error(ErrorKind::SchemaError, "malformed rational '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  BigInt p(n, 10);
  BigInt q(std::string(den), 10);
  if (q == 0) {
    throw Error(ErrorKind::SchemaError, "zero denominator in '" + std::string(text) + "'");
  }
  Rat r(p, q);
  r.canonicalize();
  return r;
}

std::string format_rat(const Rat& value) {
  Rat canonical(value);
  canonical.canonicalize();
  return canonical.get_str(10);
}

BigInt height(const Rat& value) {
  BigInt n = abs(value.get_num());
  const BigInt& d = value.get_den();
  return n > d ? n : d;
}

}  // namespace cnull
