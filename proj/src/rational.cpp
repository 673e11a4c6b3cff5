#include "kas/rational.hpp"

#include <ostream>

namespace kas {

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  return os << r.to_string();
}

}  // namespace kas
