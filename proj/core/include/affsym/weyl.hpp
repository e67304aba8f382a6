#pragma once

#include <cstdint>
#include <span>
#include <unordered_map>
#include <vector>

#include "affsym/cartan.hpp"

namespace affsym {

using ElemId = std::uint32_t;
using Word = std::vector<int>;

struct Reflection {
  ElemId t;
  AffineRoot root;  // the positive real root beta with s_beta = t
};

// Exact affine Weyl group engine.  Elements act on the span of the finite
// simple roots by x -> Ax + mu; both A and mu have integer entries in
// simple-root coordinates, which makes equality and hashing exact and cheap.
// Derived data (length, canonical reduced word, inverses) is cached in the
// intern pool, so a WeylGroup instance must not be shared across threads
// without external synchronization.  Distinct instances are independent.
class WeylGroup {
 public:
  explicit WeylGroup(CartanData cd);

  const CartanData& cartan() const { return cd_; }
  int rank() const { return cd_.n; }
  int num_nodes() const { return cd_.n + 1; }

  ElemId identity() const { return id_; }
  ElemId simple(int i) const;
  ElemId multiply(ElemId a, ElemId b);
  ElemId inverse(ElemId a);
  ElemId from_word(std::span<const int> w);
  ElemId from_word(const Word& w) { return from_word(std::span<const int>(w)); }

  // pure translation by mu in nu(Q^vee); rejects vectors outside the lattice
  ElemId translation_element(const std::vector<Rat>& mu);

  int length(ElemId a);
  // lexicographically smallest reduced word: strip the smallest left descent
  // at every step
  const Word& canonical_word(ElemId a);

  std::vector<int> left_descents(ElemId a);
  std::vector<int> right_descents(ElemId a);
  bool is_grassmannian(ElemId a);   // right descents contained in {0}
  bool is_one_grassmannian(ElemId a);

  AffineRoot act_on_root(ElemId a, const AffineRoot& r) const;
  bool root_negative(const AffineRoot& r) const { return !cd_.is_positive(r); }

  bool bruhat_leq(ElemId v, ElemId w);
  // all v covered by w, by single letter deletions from the canonical word
  std::vector<ElemId> lower_covers(ElemId w);
  // reflection t = v^{-1} w with its positive root; requires v covered by w
  Reflection cover_root(ElemId v, ElemId w);

  // element for the reflection through a positive real affine root
  ElemId reflection_element(const AffineRoot& beta);

  // all elements of length <= max_length, graded by length, each level sorted
  // by canonical word
  std::vector<std::vector<ElemId>> elements_up_to(int max_length);
  // 0-Grassmannian elements graded by length, each level sorted
  std::vector<std::vector<ElemId>> grassmannian_elements(int max_length);

  // all reduced words of an element (small lengths only)
  std::vector<Word> all_reduced_words(ElemId a);

  // deterministic order: by length, then canonical word lex
  bool word_less(ElemId a, ElemId b);

  const std::vector<long long>& linear_part(ElemId a) const { return pool_[a].mat; }
  const std::vector<long long>& translation_part(ElemId a) const { return pool_[a].mu; }

  size_t pool_size() const { return pool_.size(); }

  // affine action on a rational point
  std::vector<Rat> act_on_point(ElemId a, const std::vector<Rat>& p) const;

 private:
  struct Rec {
    std::vector<long long> mat;  // n*n row-major
    std::vector<long long> mu;   // n
    int len = -1;
    Word word;
    bool word_ready = false;
    ElemId inv = UINT32_MAX;
  };

  ElemId intern(std::vector<long long> mat, std::vector<long long> mu);
  void ensure_word(ElemId a);

  CartanData cd_;
  std::vector<Rec> pool_;
  std::unordered_map<std::uint64_t, std::vector<ElemId>> index_;
  std::vector<ElemId> simples_;
  ElemId id_ = 0;
};

}  // namespace affsym
