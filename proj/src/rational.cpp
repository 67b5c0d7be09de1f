#include "opfp/rational.hpp"

namespace opfp {

Rational parse_rational(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational literal");
  const auto slash = t.find('/');
  auto check_int = [&](const std::string& part) {
    if (part.empty()) throw ParseError("bad rational literal: " + s);
    std::size_t i = (part[0] == '-' || part[0] == '+') ? 1 : 0;
    if (i == part.size()) throw ParseError("bad rational literal: " + s);
    for (; i < part.size(); ++i)
      if (!isdigit(static_cast<unsigned char>(part[i]))) throw ParseError("bad rational literal: " + s);
  };
  if (slash == std::string::npos) {
    check_int(t);
    Rational r(t);
    r.canonicalize();
    return r;
  }
  const std::string num = t.substr(0, slash), den = t.substr(slash + 1);
  check_int(num);
  check_int(den);
  Rational r(num + "/" + den);
  if (r.get_den() == 0) throw ParseError("zero denominator: " + s);
  r.canonicalize();
  return r;
}

std::string rational_str(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

} // namespace opfp
