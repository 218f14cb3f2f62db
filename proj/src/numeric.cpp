#include "walks/numeric.hpp"

#include <stdexcept>

namespace walks {

Rational parse_rational(const std::string& text) {
  Rational r;
  if (text.empty() || r.set_str(text, 10) != 0) throw std::invalid_argument("not a rational number: \"" + text + "\"");
  if (r.get_den() == 0) throw std::invalid_argument("zero denominator in \"" + text + "\"");
  r.canonicalize();
  return r;
}

}  // namespace walks
