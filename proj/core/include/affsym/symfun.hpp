#pragma once

#include <map>
#include <string>

#include "affsym/mpoly.hpp"
#include "affsym/partitions.hpp"

namespace affsym {

enum class SymBasis : char { m = 'm', q = 'q', Qschur = 'Q', h = 'h' };

// Sparse symmetric function in a declared basis.  Expansions are computed in
// exactly deg variables and read off monomial coefficients; with deg
// variables that is faithful for everything of degree <= deg.
struct SymFunc {
  SymBasis basis = SymBasis::m;
  std::map<Partition, Rat> terms;
  int degree = 0;    // degree bound used for expansions
  int quotient = 0;  // if > 0: m-terms with lambda_1 > quotient are dropped

  bool is_zero() const { return terms.empty(); }
  Rat coeff(const Partition& p) const {
    auto it = terms.find(p);
    return it == terms.end() ? Rat(0) : it->second;
  }
  void add(const Partition& p, const Rat& c) {
    if (c == 0) return;
    auto it = terms.find(p);
    if (it == terms.end()) {
      terms[p] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms.erase(it);
    }
  }
  SymFunc& operator+=(const SymFunc& o) {
    for (auto& [p, c] : o.terms) add(p, c);
    return *this;
  }
  SymFunc& scale(const Rat& f) {
    if (f == 0) {
      terms.clear();
      return *this;
    }
    for (auto& [p, c] : terms) c *= f;
    return *this;
  }
  bool operator==(const SymFunc& o) const { return basis == o.basis && terms == o.terms; }
};

using MMap = std::map<Partition, Rat>;  // m-basis coefficient map

// Family-independent symmetric function computations with per-degree caches.
class SymEngine {
 public:
  // q_r = Q_r = sum over partitions of r of 2^{length} m
  const MMap& q_m(int r);
  // q_lambda = product of the q_{lambda_i}, expanded in weight(lambda) variables
  MMap q_lambda_m(const Partition& p);
  // Schur Q by marked shifted tableau enumeration; lambda strict
  const MMap& schurQ_m(const Partition& p);
  MMap schurP_m(const Partition& p);
  const MMap& h_m(int r);
  MMap h_lambda_m(const Partition& p);
  MMap m_product(const MMap& a, const MMap& b);

  // [f, g] for f given in the q basis (arbitrary index partitions) and g in
  // the m basis: sum of f_lambda times the m_lambda coefficient of g
  static Rat pairing_q_m(const MMap& f_q, const MMap& g_m);
  // [f, g] for f in the m basis: expand f in the odd q basis first
  Rat pairing_m_m(const MMap& f_m, const MMap& g_m);

  // expand an m-map in a spanning family given by m-maps; throws when the
  // function is not in the span or the family is dependent
  static std::map<Partition, Rat> expand_in(const MMap& f,
                                            const std::map<Partition, MMap>& basis);
  static std::vector<Rat> expand_in_list(const MMap& f, const std::vector<MMap>& basis);
  // rank of a list of m-maps, used by linear independence checks
  static int rank_of(const std::vector<MMap>& vectors);

  MMap m_to_oddq(const MMap& f_m);
  std::map<Partition, Rat> m_to_Q(const MMap& f_m);  // strict index partitions
  std::map<Partition, Rat> m_to_P(const MMap& f_m);
  std::map<Partition, Rat> m_to_h(const MMap& f_m);

  // theta(h_lambda) = q_lambda: relabel an h-map as a q-map
  static std::map<Partition, Rat> theta_h(const std::map<Partition, Rat>& f_h) { return f_h; }
  // Hall pairing <h_lambda, m_mu> = delta
  static Rat hall_pairing_h_m(const std::map<Partition, Rat>& f_h, const MMap& g_m);

  // expansion of q_r as an exponent-vector polynomial in nv variables
  MPoly q_poly(int r, int nv);
  MPoly m_poly(const Partition& p, int nv);
  static MMap poly_to_m(const MPoly& poly);

  // validity of a marked shifted tableau (letters 1,-1,2,-2,... with -k the
  // barred k), row-major cells of the shifted shape
  static bool valid_marked_shifted_tableau(const Partition& shape,
                                           const std::vector<std::vector<int>>& rows);

 private:
  std::map<int, MMap> q_cache_;
  std::map<int, MMap> h_cache_;
  std::map<Partition, MMap> schurQ_cache_;
};

std::string symfunc_term_str(const std::string& sym, const Partition& p, const Rat& c);
std::string symfunc_str(const std::string& sym, const std::map<Partition, Rat>& terms);

}  // namespace affsym
