#pragma once

#include "affsym/nilcox.hpp"
#include "affsym/symfun.hpp"

namespace affsym {

// Affine Stanley symmetric functions and their dual k-Schur functions for one
// (family, rank) pair.
class AssfEngine {
 public:
  AssfEngine(NilCoxEngine& nc, SymEngine& sym);

  WeylGroup& weyl() { return W_; }
  NilCoxEngine& nilcox() { return nc_; }
  SymEngine& sym() { return sym_; }

  // F~_w: m-expansion in the type's quotient, by weighted factorization
  // counts into Pieri factors
  const MMap& assf(ElemId w);

  // the same coefficients read from the noncommutative kernel: coefficient of
  // m_lambda = 2^{-p>=n(lambda)} [A_w] P_{lambda_1} P_{lambda_2} ...
  MMap assf_via_kernel(ElemId w);

  // 2^{-p>=n(lambda)} for B and D, 1 for A and C
  Rat kernel_two_power(const Partition& la) const;

  // product of Pieri elements indexed by a partition, cached by prefix
  const NilCox& pieri_product(const Partition& la);

  // per-degree dual basis data: Grassmannian representatives (color-b
  // representatives in type D), index partitions and the pairing matrix
  struct DegreeBasis {
    std::vector<ElemId> elems;
    std::vector<Partition> index_parts;
    std::vector<std::vector<Rat>> M;     // M[lambda][elem]
    std::vector<std::vector<Rat>> Minv;  // Minv[elem][lambda]
  };
  const DegreeBasis& degree_basis(int d);

  struct KSchur {
    std::map<Partition, Rat> dual_coeffs;  // q' coefficients (h for type A)
    std::map<Partition, Rat> Qschur;       // Schur Q expansion (B, D)
    MMap m_exp;                            // full m-expansion
  };
  KSchur kschur_dual(ElemId w);

  // [kS_w, F~_v]
  Rat duality_pairing(ElemId w, ElemId v);

  // R_lambda, the dual of q'_lambda, in quotient m-coordinates
  MMap R_lambda(const Partition& la);

  // Omega_{-1} truncation identity in degree d:
  // sum_lambda q'_lambda[X] R_lambda[Y] = sum_{mu_1 <= bound} q_mu[X] m_mu[Y]
  bool kernel_pairs_check(int d);

  // sum_w P_w (x) F~_w = sum_lambda P_{lambda_1}... (x) 2^{-p} m_lambda in
  // degree d, both sides expanded over (element, partition) pairs
  bool kernel_regroup_check(int d);

  // xi_{rho} xi_w compared against the symmetric-function side computed
  // through the dual basis; x must be Grassmannian
  bool homology_pieri_symcheck(ElemId x, ElemId w);

  int quotient_bound() const;

 private:
  Rat factorization_count(ElemId w, const std::vector<int>& comp);
  int stat_cached(ElemId v);

  NilCoxEngine& nc_;
  SymEngine& sym_;
  WeylGroup& W_;
  std::map<ElemId, MMap> assf_cache_;
  std::map<ElemId, int> stat_cache_;
  std::map<Partition, NilCox> product_cache_;
  std::map<int, DegreeBasis> basis_cache_;
};

}  // namespace affsym
