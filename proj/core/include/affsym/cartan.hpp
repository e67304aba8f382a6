#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "affsym/rational.hpp"

namespace affsym {

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D' };

Family parse_family(const std::string& s);
inline char family_char(Family f) { return static_cast<char>(f); }

// Minimum rank accepted per family.  Type B is admitted from rank 2: the
// rank-2 Cartan data is consistent (fork diagram with two double edges) and
// the rank-2 instances are exercised by the k-Schur positivity checks.
int min_rank(Family f);

struct RankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A real affine root alpha + k*delta with alpha in the finite root lattice,
// coordinates in the simple-root basis alpha_1..alpha_n.
struct AffineRoot {
  std::vector<long long> finite;
  long long delta = 0;

  bool operator==(const AffineRoot&) const = default;
};

// A coroot alpha^vee + c*K, finite part in simple-coroot coordinates.
// Entries are rational so that linear combinations stay representable;
// coroots of real roots always have integer entries.
struct AffineCoroot {
  std::vector<Rat> finite;
  Rat kcoeff = 0;

  AffineCoroot() = default;
  explicit AffineCoroot(int n) : finite(n, Rat(0)) {}

  AffineCoroot& operator+=(const AffineCoroot& o) {
    for (size_t i = 0; i < finite.size(); ++i) finite[i] += o.finite[i];
    kcoeff += o.kcoeff;
    return *this;
  }
  AffineCoroot& scale(const Rat& c) {
    for (auto& x : finite) x *= c;
    kcoeff *= c;
    return *this;
  }
  bool is_zero() const {
    for (auto& x : finite)
      if (x != 0) return false;
    return kcoeff == 0;
  }
  bool operator==(const AffineCoroot&) const = default;
  std::string str() const;
};

// Cartan data for the untwisted affine families A, B, C, D.  The finite
// lattice is n-dimensional; node 0 is handled through theta (alpha_0 is
// represented as delta - theta and never given a coordinate of its own).
struct CartanData {
  Family family = Family::A;
  int n = 0;

  std::vector<std::vector<int>> a_af;  // (n+1)x(n+1) affine Cartan matrix
  std::vector<int> marks;              // a, with A_af . a = 0
  std::vector<int> comarks;            // a^vee, with a^vee . A_af = 0
  std::vector<Rat> root_norm2;         // (alpha_i|alpha_i) for i = 1..n
  std::vector<std::vector<Rat>> gram;  // (alpha_i|alpha_j), n x n
  std::vector<long long> theta;        // highest root, simple-root coords
  std::vector<std::vector<long long>> finite_roots;   // all finite roots
  std::vector<std::vector<Rat>> nu_omega;             // nu(omega_i^vee), i=1..n

  int num_nodes() const { return n + 1; }

  // Coxeter exponent m(i,j) read from the affine Cartan matrix.
  int m(int i, int j) const;

  Rat form(const std::vector<Rat>& x, const std::vector<Rat>& y) const;
  Rat form_root(const std::vector<long long>& x, const std::vector<long long>& y) const;

  bool is_finite_root(const std::vector<long long>& v) const;
  bool is_positive_finite(const std::vector<long long>& v) const;

  // alpha_i as an affine root; alpha_0 = delta - theta.
  AffineRoot simple_root(int i) const;
  bool is_real(const AffineRoot& r) const;
  bool is_positive(const AffineRoot& r) const;

  // nu(x^vee) for the coroot with the given simple-coroot coordinates:
  // integer coordinates in the simple-root basis for all four families.
  std::vector<Rat> nu_of_coroot(const std::vector<Rat>& coroot_coords) const;
};

CartanData build_cartan(Family f, int n);

// Coroot of a real root alpha + k*delta, decomposed as alpha^vee + (2k/(alpha|alpha)) K.
// Rejects roots with vanishing finite part.
AffineCoroot coroot_of(const CartanData& cd, const AffineRoot& r);

// Integer witness m with c = m*K, if there is one.
std::optional<Int> is_multiple_of_K(const AffineCoroot& c);

}  // namespace affsym
