#include "bisetfun/field.hpp"

#include "bisetfun/errors.hpp"

namespace bisetfun {

Field Field::prime(unsigned long long p) {
  if (p < 2)
    throw input_error("field characteristic must be a prime, got " +
                      std::to_string(p));
  for (unsigned long long d = 2; d * d <= p; ++d)
    if (p % d == 0)
      throw input_error("field characteristic must be a prime, got " +
                        std::to_string(p));
  return Field{p};
}

std::string Field::name() const {
  return is_rational() ? "Q" : "F" + std::to_string(characteristic);
}

Field Field::parse(const std::string &text) {
  if (text == "Q")
    return rationals();
  if (text.size() >= 2 && text[0] == 'F') {
    unsigned long long p = 0;
    for (std::size_t i = 1; i < text.size(); ++i) {
      if (text[i] < '0' || text[i] > '9')
        throw input_error("unrecognized field '" + text + "' (expected Q or F<p>)");
      p = p * 10 + static_cast<unsigned long long>(text[i] - '0');
    }
    return prime(p);
  }
  throw input_error("unrecognized field '" + text + "' (expected Q or F<p>)");
}

} // namespace bisetfun
