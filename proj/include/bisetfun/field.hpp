#ifndef BISETFUN_FIELD_HPP
#define BISETFUN_FIELD_HPP

#include <string>

namespace bisetfun {

/// The coefficient field k: the rationals (characteristic 0) or a prime
/// field F_p.
struct Field {
  unsigned long long characteristic = 0; // 0 for Q, else a prime p

  static Field rationals() { return Field{0}; }
  static Field prime(unsigned long long p); // throws input_error unless p prime

  bool is_rational() const { return characteristic == 0; }
  std::string name() const;

  /// "Q" or "F<p>", e.g. "F2".
  static Field parse(const std::string &text);

  friend bool operator==(const Field &, const Field &) = default;
};

} // namespace bisetfun

#endif
