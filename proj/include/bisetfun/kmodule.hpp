#ifndef BISETFUN_KMODULE_HPP
#define BISETFUN_KMODULE_HPP

#include <map>
#include <string>
#include <vector>

#include "bisetfun/field.hpp"
#include "bisetfun/matrix.hpp"
#include "bisetfun/out_group.hpp"

namespace bisetfun {

/// Integer-multiplicity formal sum of Out classes. Multiplicities stay
/// integral until the sum is acted on a module, so characteristic-p
/// collapse happens inside act, not earlier.
struct FormalSum {
  std::map<unsigned, unsigned long long> terms; // Out class -> multiplicity

  void add(unsigned cls, unsigned long long mult = 1) {
    if (mult)
      terms[cls] += mult;
  }
  unsigned long long total() const {
    unsigned long long n = 0;
    for (const auto &[c, m] : terms)
      n += m;
    return n;
  }
  friend bool operator==(const FormalSum &, const FormalSum &) = default;
};

/// A matrix representation of Out(H) over k: one invertible dim x dim
/// matrix per Out class, validated as a homomorphism at construction.
/// Simplicity of the module is not checked.
class KModule {
public:
  KModule() = default;
  /// rho indexed by Out class; validated against the mult table.
  KModule(Field field, std::vector<Matrix> rho, const OutGroup &out);

  const Field &field() const { return field_; }
  std::size_t dim() const { return dim_; }
  unsigned out_order() const { return static_cast<unsigned>(rho_.size()); }
  const Matrix &rho(unsigned cls) const { return rho_[cls]; }

private:
  Field field_;
  std::size_t dim_ = 0;
  std::vector<Matrix> rho_;
};

KModule make_trivial_module(const OutGroup &out, const Field &k);
/// Requires out_order == 2 and characteristic != 2.
KModule make_sign_module(const OutGroup &out, const Field &k);

/// Sum of multiplicity * rho(class), reduced into the field.
Matrix act(const KModule &module, const FormalSum &u);

/// dim of Tr_1(V) for the given image multiset of an acting group: the
/// rank of the summed action matrix.
std::size_t trace_image_dim(const KModule &module, const FormalSum &gamma);

/// Parses the line-oriented ModuleSpec format:
///   field Q | F<p>        (optional; must agree with the requested field)
///   dim <n>
///   name trivial|sign     (or explicit blocks:)
///   rep <out class>
///   <n rows of n integers or fractions a/b>
/// Every Out class needs a rep block in explicit form.
KModule load_module(const std::string &text, const OutGroup &out, const Field &k);

} // namespace bisetfun

#endif
