#pragma once

#include <map>
#include <optional>
#include <string>

#include "affsym/pieri.hpp"

namespace affsym {

// finite Q-linear combination of nilCoxeter basis elements A_w
struct NilCox {
  std::map<ElemId, Rat> coeffs;

  bool is_zero() const { return coeffs.empty(); }
  Rat coeff(ElemId w) const {
    auto it = coeffs.find(w);
    return it == coeffs.end() ? Rat(0) : it->second;
  }
  void add(ElemId w, const Rat& c) {
    if (c == 0) return;
    auto it = coeffs.find(w);
    if (it == coeffs.end()) {
      coeffs[w] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs.erase(it);
    }
  }
  NilCox& operator+=(const NilCox& o) {
    for (auto& [w, c] : o.coeffs) add(w, c);
    return *this;
  }
  NilCox& scale(const Rat& f) {
    if (f == 0) {
      coeffs.clear();
      return *this;
    }
    for (auto& [w, c] : coeffs) c *= f;
    return *this;
  }
  bool operator==(const NilCox& o) const { return coeffs == o.coeffs; }

  // common length of the support, or -1 if inhomogeneous / empty
  int degree(WeylGroup& W) const;
};

struct InternalInconsistency : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct MembershipResult {
  bool ok = true;
  std::optional<ElemId> witness;  // first v violating the cover coroot condition
  AffineCoroot witness_sum;       // its coroot sum
};

struct RelationCheck {
  std::string name;
  bool zero = false;
};
struct RelationReport {
  std::vector<RelationCheck> checks;
  bool all_zero() const {
    for (auto& c : checks)
      if (!c.zero) return false;
    return true;
  }
};

// nilCoxeter algebra bound to one affine Weyl group together with its Pieri
// factor ideal
class NilCoxEngine {
 public:
  explicit NilCoxEngine(WeylGroup& W);

  WeylGroup& weyl() { return W_; }
  const PieriFactorSet& pieri_set() const { return Z_; }

  // length-additive product, extended bilinearly
  NilCox multiply(const NilCox& a, const NilCox& b);
  NilCox basis(ElemId w) const {
    NilCox x;
    x.coeffs[w] = 1;
    return x;
  }
  NilCox one() const { return basis(W_.identity()); }

  // the Grassmannian elements of Z_r (one for most types and lengths; two in
  // type D at r = n-1, ordered rho^{(1)} then rho^{(2)})
  std::vector<ElemId> rho_elements(int r);
  ElemId rho(int r);               // unique Grassmannian element of Z_r
  ElemId rho_D(int variant);       // type D, length n-1: variant 1 or 2

  // Pieri element P_r = j_0(xi_{rho_r}); in type D at r = n-1 the average of
  // the two solver classes
  NilCox pieri_element(int r);

  // type D primitive element, built by sign closure from the two anchors
  NilCox epsilon();

  // affine Fomin-Stanley membership test (cover coroot sums in ZK)
  MembershipResult verify_in_B(const NilCox& a);

  // unique element of B of the form A_w + (non-Grassmannian terms), found by
  // solving the cover coroot constraints
  NilCox kschur_solver(ElemId w);

  // xi_x xi_z = sum_y j_x^y xi_{yz}; returns the map (yz) -> coefficient
  std::map<ElemId, Rat> homology_product(ElemId x, ElemId z);

  RelationReport check_relations();

  const std::vector<ElemId>& lower_covers_cached(ElemId w);
  const AffineCoroot& cover_coroot_cached(ElemId v, ElemId w);

 private:
  WeylGroup& W_;
  PieriFactorSet Z_;
  std::map<ElemId, std::vector<ElemId>> covers_cache_;
  std::map<std::pair<ElemId, ElemId>, AffineCoroot> coroot_cache_;
  std::map<ElemId, NilCox> solver_cache_;
  std::optional<NilCox> epsilon_cache_;
};

}  // namespace affsym
