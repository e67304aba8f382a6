#pragma once

#include "affsym/mpoly.hpp"
#include "affsym/nilcox.hpp"

namespace affsym {

// Pair of nilCoxeter keys with a polynomial coefficient in two copies of the
// affine weight variables (Lambda_0..Lambda_n, delta per tensor slot);
// coefficients are kept to the left within each slot and never moved across
// the tensor sign.
using TensorKey = std::pair<ElemId, ElemId>;
using Tensor = std::map<TensorKey, MPoly>;
using ScalarTensor = std::map<TensorKey, Rat>;

struct CoproductCheck {
  std::string name;
  bool pass = false;
};
struct CoproductReport {
  std::vector<CoproductCheck> checks;
  bool all_pass() const {
    for (auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

// Minimal nilHecke layer: the commutation relation, the coproduct of basis
// elements, and the evaluation phi_0^(2).
class NilHeckeEngine {
 public:
  explicit NilHeckeEngine(NilCoxEngine& nc);

  int weight_vars() const { return nvars_ / 2; }  // Lambda_0..Lambda_n, delta

  // alpha_i in the Lambda/delta coordinates of the given tensor slot
  MPoly alpha(int i, int slot) const;
  // simple reflection action on weight polynomials of one slot
  MPoly weight_action(int i, const MPoly& f, int slot) const;
  // Demazure operator (f - s_i f)/alpha_i on one slot
  MPoly demazure(int i, const MPoly& f, int slot) const;

  // A_i * f = (s_i f) A_i + (del_i f) 1, extended to words: returns the
  // left-normal form of A_u * f as a map element -> coefficient
  std::map<ElemId, MPoly> push_through(ElemId u, const MPoly& f, int slot);

  // coproduct of a basis element, memoized; recomputed from a second reduced
  // word (when one exists) to assert well-definedness
  const Tensor& coproduct_basis(ElemId w);

  Tensor coproduct(const NilCox& a);
  Tensor tensor_multiply(const Tensor& a, const Tensor& b);
  ScalarTensor phi0_2(const Tensor& t) const;

  // phi0_2(coproduct(a)), computed termwise through the memoized basis maps
  ScalarTensor phi_delta(const NilCox& a);

  // Verifies the Pieri element coproduct formulas: the binomial-type formula
  // with the 2^chi twist for every r, and in type D the special top formula
  // and the primitivity of epsilon.
  CoproductReport check_coproduct_theorems();

 private:
  NilCoxEngine& nc_;
  WeylGroup& W_;
  int nvars_;  // 2 * (n + 2)
  std::vector<MPoly> alpha_cache_[2];
  std::map<ElemId, Tensor> delta_cache_;
  std::map<ElemId, ScalarTensor> phi_delta_cache_;
};

}  // namespace affsym
