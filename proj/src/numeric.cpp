#include "framed/numeric.hpp"

#include <cctype>

namespace framed {

Int parse_integer(const std::string& text) {
  std::size_t i = 0;
  if (i < text.size() && (text[i] == '-' || text[i] == '+')) ++i;
  if (i == text.size()) throw DomainError("expected an integer, got '" + text + "'");
  for (std::size_t k = i; k < text.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(text[k]))) throw DomainError("expected an integer, got '" + text + "'");
  }
  const Int magnitude(text.substr(i));
  return text[0] == '-' ? Int(-magnitude) : magnitude;
}

Rational parse_rational(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(parse_integer(text));
  const Int num = parse_integer(text.substr(0, slash));
  const Int den = parse_integer(text.substr(slash + 1));
  if (den == 0) throw DomainError("zero denominator in '" + text + "'");
  return Rational(num, den);
}

}  // namespace framed
