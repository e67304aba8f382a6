#include "affsym/checks.hpp"

#include <algorithm>
#include <random>
#include <set>

namespace affsym {

namespace {

std::string word_str(WeylGroup& W, ElemId w) {
  std::string s;
  for (int l : W.canonical_word(w)) {
    if (!s.empty()) s += ' ';
    s += std::to_string(l);
  }
  return s.empty() ? "e" : s;
}

int rank_elem_vectors(const std::vector<std::map<ElemId, Rat>>& vecs) {
  std::set<ElemId> support;
  for (auto& v : vecs)
    for (auto& [e, c] : v) support.insert(e);
  std::vector<ElemId> cols(support.begin(), support.end());
  std::map<ElemId, int> ci;
  for (size_t i = 0; i < cols.size(); ++i) ci[cols[i]] = (int)i;
  std::vector<std::vector<Rat>> M;
  for (auto& v : vecs) {
    std::vector<Rat> row(cols.size(), Rat(0));
    for (auto& [e, c] : v) row[ci[e]] = c;
    M.push_back(std::move(row));
  }
  int rank = 0;
  for (size_t col = 0; col < cols.size() && rank < (int)M.size(); ++col) {
    int piv = -1;
    for (int r = rank; r < (int)M.size(); ++r)
      if (M[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) continue;
    std::swap(M[rank], M[piv]);
    for (int r = 0; r < (int)M.size(); ++r) {
      if (r == rank || M[r][col] == 0) continue;
      Rat f = M[r][col] / M[rank][col];
      for (size_t cc = col; cc < cols.size(); ++cc) M[r][cc] -= f * M[rank][cc];
    }
    ++rank;
  }
  return rank;
}

}  // namespace

SuiteReport membership_suite(Context& ctx) {
  SuiteReport rep;
  rep.suite = "membership";
  auto& nc = ctx.nilcox;
  const Family f = ctx.family();
  const int n = ctx.rank();
  const int maxr = nc.pieri_set().max_length;

  for (int r = 1; r <= maxr; ++r) {
    NilCox P = nc.pieri_element(r);
    auto res = nc.verify_in_B(P);
    std::string name = "pieri element r=" + std::to_string(r) + " in B";
    rep.add(name, res.ok,
            res.ok ? "" : "witness v=" + word_str(ctx.W, *res.witness) + " sum=" +
                              res.witness_sum.str());

    // solver oracle agreement; the solver classes are P +- eps/2 in the +-1
    // normalization of the closure element
    if (f == Family::D && r == n - 1) {
      NilCox eps = nc.epsilon();
      eps.scale(Rat(1, 2));
      NilCox plus = P;
      plus += eps;
      NilCox minus = P;
      NilCox neg = eps;
      neg.scale(Rat(-1));
      minus += neg;
      bool ok1 = nc.kschur_solver(nc.rho_D(1)) == plus;
      bool ok2 = nc.kschur_solver(nc.rho_D(2)) == minus;
      rep.add("solver(rho1) = P + eps at r=" + std::to_string(r), ok1);
      rep.add("solver(rho2) = P - eps at r=" + std::to_string(r), ok2);
    } else {
      bool ok = nc.kschur_solver(nc.rho(r)) == P;
      rep.add("solver(rho_" + std::to_string(r) + ") = pieri element", ok);
    }
  }

  if (f == Family::D) {
    auto res = nc.verify_in_B(nc.epsilon());
    rep.add("epsilon in B", res.ok,
            res.ok ? "" : "witness v=" + word_str(ctx.W, *res.witness));
  }
  return rep;
}

SuiteReport membership_element(Context& ctx, const Word& word) {
  SuiteReport rep;
  rep.suite = "membership-element";
  NilCox a = ctx.nilcox.basis(ctx.W.from_word(word));
  auto res = ctx.nilcox.verify_in_B(a);
  std::string detail;
  if (!res.ok)
    detail = "witness v=" + word_str(ctx.W, *res.witness) + " sum=" + res.witness_sum.str();
  rep.add("element in B", res.ok, detail);
  return rep;
}

SuiteReport relations_suite(Context& ctx) {
  SuiteReport rep;
  rep.suite = "relations";
  for (auto& c : ctx.nilcox.check_relations().checks) rep.add(c.name, c.zero);
  return rep;
}

SuiteReport coproduct_suite(Context& ctx) {
  SuiteReport rep;
  rep.suite = "coproduct";
  for (auto& c : ctx.nilhecke.check_coproduct_theorems().checks) rep.add(c.name, c.pass);
  return rep;
}

SuiteReport typefree_suite(Context& ctx) {
  SuiteReport rep;
  rep.suite = "typefree";
  const PieriFactorSet& a = ctx.nilcox.pieri_set();
  PieriFactorSet b = pieri_factors_typefree(ctx.W);
  bool gens_equal = a.generators == b.generators;
  rep.add("generator sets agree", gens_equal,
          "explicit " + std::to_string(a.generators.size()) + " vs orbit " +
              std::to_string(b.generators.size()));
  bool graded_equal = a.graded == b.graded;
  rep.add("graded ideals agree", graded_equal);
  return rep;
}

SuiteReport kernel_suite(Context& ctx, int max_degree) {
  SuiteReport rep;
  rep.suite = "kernel";
  for (int d = 1; d <= max_degree; ++d) {
    rep.add("kernel pairs degree " + std::to_string(d), ctx.assf.kernel_pairs_check(d));
    rep.add("kernel regrouping degree " + std::to_string(d), ctx.assf.kernel_regroup_check(d));
  }
  auto grass = ctx.W.grassmannian_elements(max_degree);
  for (int d = 1; d <= max_degree; ++d) {
    bool ok = true;
    std::string bad;
    for (ElemId w : grass[d]) {
      if (!(ctx.assf.assf(w) == ctx.assf.assf_via_kernel(w))) {
        ok = false;
        bad = word_str(ctx.W, w);
        break;
      }
    }
    rep.add("assf = assf_via_kernel degree " + std::to_string(d), ok, bad);
  }
  return rep;
}

SuiteReport duality_suite(Context& ctx, int max_degree) {
  SuiteReport rep;
  rep.suite = "duality";
  auto grass = ctx.W.grassmannian_elements(max_degree);
  for (int d = 1; d <= max_degree; ++d) {
    std::vector<ElemId> elems;
    for (ElemId w : grass[d]) {
      if (ctx.family() == Family::D && partition_of(ctx.W, w).color != 'b') continue;
      elems.push_back(w);
    }
    bool ok = true;
    std::string bad;
    for (ElemId w : elems)
      for (ElemId v : elems) {
        Rat p = ctx.assf.duality_pairing(w, v);
        if (p != (w == v ? Rat(1) : Rat(0))) {
          ok = false;
          bad = "[kS_" + word_str(ctx.W, w) + ", F_" + word_str(ctx.W, v) + "] = " + rat_str(p);
        }
      }
    rep.add("duality degree " + std::to_string(d), ok, bad);
  }
  return rep;
}

SuiteReport cover_sum_suite(Context& ctx) {
  SuiteReport rep;
  rep.suite = "cover-sums";
  auto& nc = ctx.nilcox;
  const PieriFactorSet& Z = nc.pieri_set();
  const int n = ctx.rank();

  // covers within the Pieri factor set
  std::map<ElemId, std::vector<ElemId>> pieri_covers;
  for (int l = 1; l <= Z.max_length; ++l)
    for (ElemId w : Z.graded[l])
      for (ElemId v : nc.lower_covers_cached(w))
        if (Z.contains(v, l - 1)) pieri_covers[v].push_back(w);

  bool ok = true;
  std::string bad;
  for (int l = 0; l < Z.max_length; ++l) {
    for (ElemId v : Z.graded[l]) {
      AffineCoroot sum(n);
      for (ElemId w : pieri_covers[v]) {
        AffineCoroot cr = nc.cover_coroot_cached(v, w);
        cr.scale(pow2(stat_value(ctx.W, w)));
        sum += cr;
      }
      Rat expect = pow2(stat_value(ctx.W, v));
      bool this_ok = sum.kcoeff == expect;
      for (auto& x : sum.finite)
        if (x != 0) this_ok = false;
      if (!this_ok) {
        ok = false;
        bad = "v=" + word_str(ctx.W, v) + " sum=" + sum.str();
      }
    }
  }
  rep.add("cover coroot sums equal 2^cc(v) K", ok, bad);

  if (ctx.family() == Family::D) {
    NilCox eps = nc.epsilon();
    bool eok = true;
    std::string ebad;
    for (ElemId v : Z.graded[n - 2]) {
      Rat total = 0;
      for (ElemId w : pieri_covers[v]) total += eps.coeff(w);
      if (total != 0) {
        eok = false;
        ebad = "v=" + word_str(ctx.W, v) + " sum=" + rat_str(total);
      }
    }
    rep.add("epsilon cover sums vanish at length n-2", eok, ebad);
  }
  return rep;
}

SuiteReport positivity_suite(Context& ctx, int max_len) {
  SuiteReport rep;
  rep.suite = "positivity";
  if (ctx.family() != Family::B)
    throw std::runtime_error("positivity suite runs on a type B context");
  const int n = ctx.rank();

  // (a) Schur P expansions of F~_w for l(w) < n
  {
    bool ok = true;
    std::string bad;
    int bound = std::min(max_len, n - 1);
    auto levels = ctx.W.elements_up_to(bound);
    for (int d = 1; d <= bound; ++d)
      for (ElemId w : levels[d]) {
        auto P = ctx.sym.m_to_P(ctx.assf.assf(w));
        for (auto& [la, c] : P)
          if (c < 0) {
            ok = false;
            bad = "w=" + word_str(ctx.W, w) + " coeff P[" + partition_str(la) +
                  "]=" + rat_str(c);
          }
      }
    rep.add("Schur P positivity of short affine Stanley functions", ok, bad);
  }

  // (b) Schur Q expansions of the k-Schur duals
  {
    bool ok = true;
    std::string bad;
    auto grass = ctx.W.grassmannian_elements(max_len);
    for (int d = 1; d <= max_len; ++d)
      for (ElemId w : grass[d]) {
        auto ks = ctx.assf.kschur_dual(w);
        for (auto& [la, c] : ks.Qschur)
          if (c < 0) {
            ok = false;
            bad = "w=" + word_str(ctx.W, w) + " coeff Q[" + partition_str(la) +
                  "]=" + rat_str(c);
          }
      }
    rep.add("Schur Q positivity of type B k-Schur functions", ok, bad);
  }

  // (c) rank n k-Schur functions in the rank n+1 k-Schur basis
  {
    Context up(Family::B, n + 1);
    bool ok = true;
    std::string bad;
    auto grass = ctx.W.grassmannian_elements(max_len);
    auto up_grass = up.W.grassmannian_elements(max_len);
    for (int d = 1; d <= max_len; ++d) {
      std::vector<MMap> basis;
      for (ElemId v : up_grass[d]) basis.push_back(up.assf.kschur_dual(v).m_exp);
      for (ElemId w : grass[d]) {
        auto x = SymEngine::expand_in_list(ctx.assf.kschur_dual(w).m_exp, basis);
        for (auto& c : x)
          if (c < 0) {
            ok = false;
            bad = "w=" + word_str(ctx.W, w) + " degree " + std::to_string(d);
          }
      }
    }
    rep.add("rank n to n+1 k-Schur positivity", ok, bad);
  }

  // (d) expansion in the type A dual k-Schur basis with k = 2n
  {
    Context atype(Family::A, 2 * n);
    bool ok = true;
    std::string bad;
    auto grass = ctx.W.grassmannian_elements(max_len);
    auto a_grass = atype.W.grassmannian_elements(max_len);
    for (int d = 1; d <= max_len; ++d) {
      std::vector<MMap> basis;
      for (ElemId v : a_grass[d]) basis.push_back(atype.assf.kschur_dual(v).m_exp);
      for (ElemId w : grass[d]) {
        auto x = SymEngine::expand_in_list(ctx.assf.kschur_dual(w).m_exp, basis);
        for (auto& c : x)
          if (c < 0) {
            ok = false;
            bad = "w=" + word_str(ctx.W, w) + " degree " + std::to_string(d);
          }
      }
    }
    rep.add("type A k-Schur positivity (k = 2n)", ok, bad);
  }
  return rep;
}

SuiteReport typeD_suite(Context& ctx, int max_len) {
  SuiteReport rep;
  rep.suite = "typeD";
  if (ctx.family() != Family::D)
    throw std::runtime_error("type D suite runs on a type D context");
  const int n = ctx.rank();
  auto& nc = ctx.nilcox;

  // (a) swap equality and linear independence of the representatives
  {
    bool ok = true;
    std::string bad;
    auto grass = ctx.W.grassmannian_elements(max_len);
    for (int d = 1; d <= max_len; ++d) {
      std::vector<MMap> reps;
      for (ElemId w : grass[d]) {
        AffinePartition p = partition_of(ctx.W, w);
        if (p.color == 'c') continue;
        reps.push_back(ctx.assf.assf(w));
        bool has_special = std::find(p.parts.begin(), p.parts.end(), n - 1) != p.parts.end();
        if (has_special) {
          AffinePartition q = p;
          q.color = 'c';
          ElemId w2 = element_of(ctx.W, q);
          if (!(ctx.assf.assf(w) == ctx.assf.assf(w2))) {
            ok = false;
            bad = "w=" + word_str(ctx.W, w) + " vs " + word_str(ctx.W, w2);
          }
        }
      }
      if (SymEngine::rank_of(reps) != (int)reps.size()) {
        ok = false;
        bad = "dependent representatives in degree " + std::to_string(d);
      }
    }
    rep.add("swap equality and independence of representatives", ok, bad);
  }

  // (b) graded dimension of the Pieri monomial span modulo the epsilon ideal
  {
    bool ok = true;
    std::string bad;
    NilCox eps = nc.epsilon();
    for (int d = 1; d <= max_len; ++d) {
      std::vector<std::map<ElemId, Rat>> span, ideal;
      for (auto& la : partitions_of(d, 2 * n - 2))
        span.push_back(ctx.assf.pieri_product(la).coeffs);
      if (d >= n - 1)
        for (auto& mu : partitions_of(d - (n - 1), 2 * n - 2)) {
          NilCox v = nc.multiply(eps, ctx.assf.pieri_product(mu));
          ideal.push_back(v.coeffs);
        }
      if (d >= 2 * (n - 1))
        for (auto& mu : partitions_of(d - 2 * (n - 1), 2 * n - 2)) {
          NilCox v = nc.multiply(nc.multiply(eps, eps), ctx.assf.pieri_product(mu));
          ideal.push_back(v.coeffs);
        }
      std::vector<std::map<ElemId, Rat>> all(span);
      all.insert(all.end(), ideal.begin(), ideal.end());
      int dim = rank_elem_vectors(all) - rank_elem_vectors(ideal);
      int expect = 0;
      for (auto& ap : affine_partitions(Family::D, n, d))
        if (ap.color == 'b') ++expect;
      if (dim != expect) {
        ok = false;
        bad = "degree " + std::to_string(d) + ": dim " + std::to_string(dim) + " expected " +
              std::to_string(expect);
      }
    }
    rep.add("graded dimensions modulo the epsilon ideal", ok, bad);
  }

  // (c) the symmetric function image lies in Z[h_1..h_{2n-1}]
  {
    bool ok = true;
    std::string bad;
    for (int d = 1; d <= max_len; ++d)
      for (auto& ap : affine_partitions(Family::D, n, d)) {
        if (ap.color == 'c') continue;
        MMap qp = ctx.sym.q_lambda_m(ap.parts);
        Rat tw = pow2((long)num_parts_geq(ap.parts, n));
        for (auto& [p, c] : qp) c *= tw;
        auto h = ctx.sym.m_to_h(qp);
        for (auto& [mu, c] : h) {
          if (!mu.empty() && mu[0] > 2 * n - 1) {
            ok = false;
            bad = "q'[" + partition_str(ap.parts) + "] has h part " + std::to_string(mu[0]);
          }
          if (!is_integer(c)) {
            ok = false;
            bad = "q'[" + partition_str(ap.parts) + "] has non-integer h coefficient";
          }
        }
      }
    rep.add("natural inclusion into Z[h_1..h_{2n-1}]", ok, bad);
  }

  // the two middle Grassmannian classes have the same affine Stanley function
  rep.add("assf(rho1) = assf(rho2)",
          ctx.assf.assf(nc.rho_D(1)) == ctx.assf.assf(nc.rho_D(2)));
  return rep;
}

SuiteReport support_suite(Context& ctx, int max_len, std::uint64_t seed) {
  SuiteReport rep;
  rep.suite = "support";
  std::mt19937_64 rng(seed);
  const PieriFactorSet& Z = ctx.nilcox.pieri_set();
  bool ok = true;
  std::string bad;
  for (int l = 1; l <= std::min(max_len, Z.max_length); ++l) {
    for (ElemId w : Z.graded[l]) {
      auto words = ctx.W.all_reduced_words(w);
      std::set<int> reference(ctx.W.canonical_word(w).begin(), ctx.W.canonical_word(w).end());
      for (int trial = 0; trial < 3; ++trial) {
        const Word& u = words[rng() % words.size()];
        std::set<int> letters(u.begin(), u.end());
        if (letters != reference) {
          ok = false;
          bad = "w=" + word_str(ctx.W, w);
        }
      }
    }
  }
  rep.add("supp is reduced-word independent", ok, bad);
  return rep;
}

}  // namespace affsym
