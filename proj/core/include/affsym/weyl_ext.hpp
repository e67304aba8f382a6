#pragma once

#include "affsym/weyl.hpp"

namespace affsym {

// permutation of the affine nodes 0..n
using NodePerm = std::vector<int>;

// all node permutations preserving the affine Cartan matrix
std::vector<NodePerm> diagram_automorphisms(const CartanData& cd);

NodePerm perm_compose(const NodePerm& a, const NodePerm& b);  // a after b
NodePerm perm_inverse(const NodePerm& a);

// body . tau with tau a diagram automorphism acting by relabeling generators;
// as affine maps the tau part acts first, matching the factorizations
// t_{nu(omega_1^vee)} = tau s_0 s_2 .. s_n .. s_2 s_0 etc. of the literature
struct ExtendedElement {
  NodePerm tau;
  ElemId body;

  bool operator==(const ExtendedElement&) const = default;
};

// conjugate an element by a node permutation: letters of a reduced word are
// relabeled through the permutation
ElemId conjugate_by_perm(WeylGroup& W, const NodePerm& p, ElemId a);

ExtendedElement ext_multiply(WeylGroup& W, const ExtendedElement& a, const ExtendedElement& b);

// Factor the translation x -> x + mu (mu in nu(P^vee)) as tau . w with
// w in the affine Weyl group, by greedy wall crossing from a generic
// interior point of the fundamental alcove.
ExtendedElement translation(WeylGroup& W, const std::vector<Rat>& mu);

// finite Weyl orbit of a rational vector
std::vector<std::vector<Rat>> finite_orbit(WeylGroup& W, const std::vector<Rat>& v);

}  // namespace affsym
