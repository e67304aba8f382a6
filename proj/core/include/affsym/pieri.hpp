#pragma once

#include <set>

#include "affsym/partitions.hpp"
#include "affsym/weyl.hpp"

namespace affsym {

// Bruhat order ideal generated by the maximal Pieri factors, graded by length.
struct PieriFactorSet {
  Family family;
  int n = 0;
  int max_length = 0;
  std::vector<ElemId> generators;        // maximal elements, sorted
  std::vector<Word> generator_words;     // canonical words of the generators
  std::vector<std::vector<ElemId>> graded;  // graded[i] = Z_i, sorted

  bool contains(ElemId e, int len) const {
    if (len < 0 || len > max_length) return false;
    const auto& v = graded[len];
    return std::find(v.begin(), v.end(), e) != v.end();
  }
};

// maximal generator length: n (A), 2n-1 (B), 2n (C), 2n-2 (D)
int pieri_max_length(Family f, int n);

// Reduced words of the maximal Pieri factors.
//   A: the n+1 maximal cyclically decreasing words
//   B: s_0 s_2..s_n..s_2 s_0, s_1 s_2..s_n..s_2 s_1, and the rotations of
//      s_2 s_3..s_n..s_2 s_1 s_0 that keep the letters 0,1 adjacent
//   C: canonical words of the length-2n conjugates of s_1..s_n..s_1 s_0 by
//      the finite Weyl group
//   D: the two base words, the rotations keeping both end pairs adjacent,
//      and their images under the pair-preserving diagram automorphisms
std::vector<Word> pieri_generator_words(WeylGroup& W);

// ideal generated by pieri_generator_words
PieriFactorSet pieri_factors(WeylGroup& W);

// ideal generated by the bodies of the translations by the finite Weyl orbit
// of nu(omega_1^vee); must agree with pieri_factors setwise
PieriFactorSet pieri_factors_typefree(WeylGroup& W);

// Support statistics.  Supp(w) is the smallest union of intervals containing
// the letters of w, where the interval order couples {0,1} (types B, D) and
// {n-1,n} (type D); in type A runs are cyclic.
struct SupportProfile {
  std::set<int> supp;
  std::set<int> Supp;
  std::vector<std::vector<int>> components;
  std::vector<std::vector<int>> complement_components;
  int c = 0;   // components of Supp
  int cc = 0;  // components of the complement of Supp
};

SupportProfile support_profile(WeylGroup& W, ElemId w);

// the per-type factorization weight exponent base: stat = 1 (A), c (C), cc (B, D)
int stat_value(WeylGroup& W, ElemId w);

struct Segment {
  int kind = 0;   // 0-segment or 1-segment
  int len = 0;
  char color = 0;  // 'b' or 'c' for the two type D segments of length n-1
  ElemId elem = 0;
  Word word;
};

// all segments of types B and D, from the explicit word tables
std::vector<Segment> segments(WeylGroup& W);

// Billey-Mitchell factorization of a 0-Grassmannian element into segments,
// lengths weakly decreasing, kinds alternating starting with a 0-segment on
// the right
std::vector<Segment> segment_factorization(WeylGroup& W, ElemId w);

struct AffinePartition {
  Partition parts;
  char color = 0;  // 'b' or 'c' in type D, 0 otherwise

  bool operator==(const AffinePartition&) const = default;
};

bool valid_affine_partition(Family f, int n, const AffinePartition& p);
std::vector<AffinePartition> affine_partitions(Family f, int n, int d);

AffinePartition partition_of(WeylGroup& W, ElemId w);
ElemId element_of(WeylGroup& W, const AffinePartition& p);

// size-preserving bijections onto odd / odd-or-(n-1) bounded partitions
Partition bijection_B(const Partition& p);
Partition bijection_D(int n, const AffinePartition& p);

}  // namespace affsym
