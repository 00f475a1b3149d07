#include "gralg/rational.hpp"

#include "gralg/error.hpp"

namespace gralg {

std::string to_fraction_string(const Rational& value) {
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_plain_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return to_fraction_string(value);
}

Rational parse_fraction(std::string_view text) {
  auto parse_int = [&](std::string_view part) {
    std::string s(part);
    if (s.empty()) throw Error("malformed rational: '" + std::string(text) + "'");
    std::size_t start = (s[0] == '-' || s[0] == '+') ? 1 : 0;
    if (start == s.size()) throw Error("malformed rational: '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (s[i] < '0' || s[i] > '9') throw Error("malformed rational: '" + std::string(text) + "'");
    }
    if (s[0] == '+') s.erase(0, 1);
    return BigInt(s, 10);
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw Error("zero denominator in rational: '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

}  // namespace gralg
