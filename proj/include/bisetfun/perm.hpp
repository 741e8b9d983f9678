#ifndef BISETFUN_PERM_HPP
#define BISETFUN_PERM_HPP

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

namespace bisetfun {

/// A permutation of {0,...,degree-1}, stored as its image array.
///
/// All permutations living in one ambient group share a fixed degree;
/// comparison is lexicographic on the image array, which is the canonical
/// element order used by every "smallest representative" rule in this
/// library.
class Perm {
public:
  Perm() = default;
  explicit Perm(unsigned degree);                 // identity
  explicit Perm(std::vector<unsigned> images);    // validated bijection

  unsigned degree() const { return static_cast<unsigned>(images_.size()); }
  unsigned operator[](unsigned point) const { return images_[point]; }
  const std::vector<unsigned> &images() const { return images_; }

  bool is_identity() const;
  unsigned smallest_moved_point() const;          // degree() if identity
  unsigned order() const;

  Perm inverse() const;

  /// Composition: (p * q)(x) = p(q(x)).
  friend Perm operator*(const Perm &p, const Perm &q);

  friend bool operator==(const Perm &, const Perm &) = default;
  friend auto operator<=>(const Perm &a, const Perm &b) {
    return a.images_ <=> b.images_;
  }

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for the
  /// identity.
  std::string to_cycle_string() const;

  /// Parses cycle notation as produced by to_cycle_string. Whitespace
  /// insensitive; points must lie in [1, degree].
  static Perm parse_cycles(const std::string &text, unsigned degree);

private:
  std::vector<unsigned> images_;
};

/// g p g^{-1}.
Perm conjugate(const Perm &p, const Perm &g);

} // namespace bisetfun

#endif
