#pragma once

#include <cstdint>

#include "affsym/context.hpp"
#include "affsym/report.hpp"

namespace affsym {

// membership of the Pieri elements and epsilon in the affine Fomin-Stanley
// subalgebra plus the solver cross-check
SuiteReport membership_suite(Context& ctx);
// single-element membership test from a word
SuiteReport membership_element(Context& ctx, const Word& word);

// vanishing sums among the Pieri elements (with the epsilon correction at the
// middle degree in type D)
SuiteReport relations_suite(Context& ctx);

SuiteReport coproduct_suite(Context& ctx);

// pieri_factors vs the translation-orbit construction
SuiteReport typefree_suite(Context& ctx);

// truncated kernel identity, kernel regrouping, and the factorization/kernel
// agreement for the affine Stanley functions up to max_degree
SuiteReport kernel_suite(Context& ctx, int max_degree);

// [kS_w, F~_v] = delta for equal-length Grassmannian pairs up to max_degree
SuiteReport duality_suite(Context& ctx, int max_degree);

// cover coroot sums (2^cc graded identity) and the epsilon cover sums
SuiteReport cover_sum_suite(Context& ctx);

// Schur P / Schur Q / cross-rank / type A k-Schur positivity
SuiteReport positivity_suite(Context& ctx, int max_len);

// type D structural checks: swap equality, graded dimensions mod epsilon,
// natural inclusion of the symmetric function image
SuiteReport typeD_suite(Context& ctx, int max_len);

// supp/Supp/cc fixtures, reduced-word independence sampled with a seed
SuiteReport support_suite(Context& ctx, int max_len, std::uint64_t seed);

}  // namespace affsym
