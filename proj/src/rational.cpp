#include "beflow/rational.hpp"

#include <cctype>
#include <ostream>

namespace beflow {

Rat::Rat(long num, long den) {
  if (den == 0) throw MalformedInput("rational with zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rat& Rat::operator/=(const Rat& o) {
  if (o.v_ == 0) throw MalformedInput("division by zero");
  v_ /= o.v_;
  return *this;
}

static bool valid_rational_text(const std::string& s) {
  if (s.empty()) return false;
  size_t i = 0;
  if (s[i] == '-' || s[i] == '+') ++i;
  size_t digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  if (digits == 0) return false;
  if (i == s.size()) return true;
  if (s[i] != '/') return false;
  ++i;
  digits = 0;
  while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i, ++digits;
  return digits > 0 && i == s.size();
}

Rat Rat::parse(const std::string& text) {
  if (!valid_rational_text(text))
    throw MalformedInput("not a rational: '" + text + "'");
  mpq_class q;
  if (q.set_str(text, 10) != 0)
    throw MalformedInput("not a rational: '" + text + "'");
  if (q.get_den() == 0) throw MalformedInput("zero denominator: '" + text + "'");
  q.canonicalize();
  return Rat(std::move(q));
}

std::string Rat::str() const {
  return v_.get_str();
}

std::ostream& operator<<(std::ostream& os, const Rat& r) {
  return os << r.str();
}

}  // namespace beflow
