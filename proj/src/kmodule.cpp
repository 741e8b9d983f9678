#include "bisetfun/kmodule.hpp"

#include <iterator>
#include <sstream>

#include "bisetfun/errors.hpp"

namespace bisetfun {

KModule::KModule(Field field, std::vector<Matrix> rho, const OutGroup &out)
    : field_(field), rho_(std::move(rho)) {
  if (rho_.size() != out.out_order())
    throw input_error("module needs one matrix per Out class: expected " +
                      std::to_string(out.out_order()) + ", got " +
                      std::to_string(rho_.size()));
  dim_ = rho_[0].rows();
  if (dim_ == 0)
    throw input_error("module dimension must be positive");
  for (auto &m : rho_) {
    if (m.rows() != dim_ || m.cols() != dim_)
      throw input_error("module matrices must all be " + std::to_string(dim_) +
                        "x" + std::to_string(dim_));
    m = reduce(m, field_);
  }
  if (!rho_[0].is_identity())
    throw input_error("module matrix for the identity Out class must be the "
                      "identity");
  for (unsigned a = 0; a < rho_.size(); ++a) {
    if (rank(rho_[a], field_) != dim_)
      throw input_error("module matrix for Out class " + std::to_string(a) +
                        " is singular");
    for (unsigned b = 0; b < rho_.size(); ++b)
      if (reduce(rho_[a] * rho_[b], field_) != rho_[out.multiply(a, b)])
        throw input_error("module matrices are not a homomorphism: rho(" +
                          std::to_string(a) + ")rho(" + std::to_string(b) +
                          ") != rho(" + std::to_string(out.multiply(a, b)) + ")");
  }
}

KModule make_trivial_module(const OutGroup &out, const Field &k) {
  std::vector<Matrix> rho(out.out_order(), Matrix::identity(1));
  return KModule(k, std::move(rho), out);
}

KModule make_sign_module(const OutGroup &out, const Field &k) {
  if (out.out_order() != 2)
    throw input_error("sign module requires Out of order 2, got order " +
                      std::to_string(out.out_order()));
  if (k.characteristic == 2)
    throw input_error("sign module degenerates to trivial in characteristic 2; "
                      "use the trivial module instead");
  std::vector<Matrix> rho(2, Matrix::identity(1));
  rho[1].at(0, 0) = -1;
  return KModule(k, std::move(rho), out);
}

Matrix act(const KModule &module, const FormalSum &u) {
  Matrix sum(module.dim(), module.dim());
  for (const auto &[cls, mult] : u.terms) {
    if (cls >= module.out_order())
      throw input_error("formal sum refers to Out class " + std::to_string(cls) +
                        " outside the module's Out group");
    sum = sum + module.rho(cls).scaled(mpq_class(static_cast<unsigned long>(mult)));
  }
  return reduce(sum, module.field());
}

std::size_t trace_image_dim(const KModule &module, const FormalSum &gamma) {
  if (gamma.terms.empty())
    return module.dim(); // empty acting group: the trace is the identity
  return rank(act(module, gamma), module.field());
}

namespace {

mpq_class parse_scalar(const std::string &tok) {
  try {
    mpq_class x(tok);
    x.canonicalize();
    return x;
  } catch (const std::invalid_argument &) {
    throw input_error("bad matrix entry '" + tok + "'");
  }
}

} // namespace

KModule load_module(const std::string &text, const OutGroup &out, const Field &k) {
  std::istringstream in(text);
  std::string line;
  std::size_t dim = 0;
  bool have_dim = false;
  std::string name;
  std::vector<Matrix> rho(out.out_order());
  std::vector<bool> have_rep(out.out_order(), false);
  bool any_rep = false;

  auto next_tokens = [&](std::vector<std::string> &toks) -> bool {
    while (std::getline(in, line)) {
      std::istringstream ls(line);
      toks.assign(std::istream_iterator<std::string>(ls),
                  std::istream_iterator<std::string>());
      if (!toks.empty() && toks[0][0] != '#')
        return true;
    }
    return false;
  };

  std::vector<std::string> toks;
  while (next_tokens(toks)) {
    if (toks[0] == "field" && toks.size() == 2) {
      if (Field::parse(toks[1]) != k)
        throw input_error("module spec declares field " + toks[1] +
                          " but the evaluation uses " + k.name());
    } else if (toks[0] == "dim" && toks.size() == 2) {
      dim = std::stoull(toks[1]);
      have_dim = true;
    } else if (toks[0] == "name" && toks.size() == 2) {
      name = toks[1];
    } else if (toks[0] == "rep" && toks.size() == 2) {
      if (!have_dim)
        throw input_error("module spec: 'dim' must precede 'rep' blocks");
      unsigned long cls = std::stoul(toks[1]);
      if (cls >= out.out_order())
        throw input_error("module spec: rep index " + std::to_string(cls) +
                          " out of range for Out of order " +
                          std::to_string(out.out_order()));
      Matrix m(dim, dim);
      for (std::size_t i = 0; i < dim; ++i) {
        std::vector<std::string> row;
        if (!next_tokens(row) || row.size() != dim)
          throw input_error("module spec: rep " + std::to_string(cls) +
                            " needs " + std::to_string(dim) + " rows of " +
                            std::to_string(dim) + " entries");
        for (std::size_t j = 0; j < dim; ++j)
          m.at(i, j) = parse_scalar(row[j]);
      }
      rho[cls] = std::move(m);
      have_rep[cls] = true;
      any_rep = true;
    } else {
      throw input_error("module spec: unrecognized line '" + line + "'");
    }
  }

  if (!name.empty()) {
    if (any_rep)
      throw input_error("module spec: 'name' and explicit 'rep' blocks are "
                        "mutually exclusive");
    if (name == "trivial")
      return make_trivial_module(out, k);
    if (name == "sign")
      return make_sign_module(out, k);
    throw input_error("module spec: unknown named module '" + name + "'");
  }
  if (!any_rep)
    throw input_error("module spec: no module given (need 'name' or 'rep' "
                      "blocks)");
  for (unsigned c = 0; c < out.out_order(); ++c)
    if (!have_rep[c])
      throw input_error("module spec: missing rep block for Out class " +
                        std::to_string(c));
  return KModule(k, std::move(rho), out);
}

} // namespace bisetfun
