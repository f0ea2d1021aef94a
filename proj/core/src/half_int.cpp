#include "dsdirac/half_int.hpp"

#include <cctype>
#include <charconv>
#include <string>

#include "dsdirac/errors.hpp"

namespace dsdirac {

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool all_digits(std::string_view s) {
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

int parse_int(std::string_view s, std::string_view whole) {
  int v = 0;
  if (s.empty() || !all_digits(s)) throw DomainError("not a half-integer: '" + std::string(whole) + "'");
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw DomainError("not a half-integer: '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

HalfInt HalfInt::parse(std::string_view text) {
  const std::string_view whole = trim(text);
  std::string_view s = whole;
  int sign = 1;
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) {
    if (s.front() == '-') sign = -1;
    s.remove_prefix(1);
  }
  const auto bad = [&] { return DomainError("not a half-integer: '" + std::string(whole) + "'"); };
  if (s.empty()) throw bad();

  if (const auto slash = s.find('/'); slash != std::string_view::npos) {
    const int num = parse_int(s.substr(0, slash), whole);
    const int den = parse_int(s.substr(slash + 1), whole);
    if (den == 1) return HalfInt(sign * 2 * num);
    if (den == 2) return HalfInt(sign * num);
    throw bad();
  }

  const auto dot = s.find('.');
  const std::string_view ipart = s.substr(0, dot);
  const int whole_part = ipart.empty() ? 0 : parse_int(ipart, whole);
  int half = 0;
  if (dot != std::string_view::npos) {
    std::string_view frac = s.substr(dot + 1);
    if (frac.empty() && ipart.empty()) throw bad();
    if (!all_digits(frac)) throw bad();
    if (!frac.empty() && frac.front() == '5') {
      half = 1;
      frac.remove_prefix(1);
    }
    for (char ch : frac) {
      if (ch != '0') throw bad();
    }
  }
  return HalfInt(sign * (2 * whole_part + half));
}

std::string HalfInt::str() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace dsdirac
