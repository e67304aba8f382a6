#include "affsym/nilhecke.hpp"

#include <algorithm>

namespace affsym {

NilHeckeEngine::NilHeckeEngine(NilCoxEngine& nc)
    : nc_(nc), W_(nc.weyl()), nvars_(2 * (nc.weyl().rank() + 2)) {
  const int n = W_.rank();
  for (int slot = 0; slot < 2; ++slot) {
    alpha_cache_[slot].reserve(n + 1);
    for (int i = 0; i <= n; ++i) {
      // alpha_j = sum_k a_af[k][j] Lambda_k + delta_{j0} delta
      MPoly p(nvars_);
      int off = slot * (n + 2);
      for (int k = 0; k <= n; ++k)
        if (W_.cartan().a_af[k][i] != 0)
          p += MPoly::variable(nvars_, off + k, Rat(W_.cartan().a_af[k][i]));
      if (i == 0) p += MPoly::variable(nvars_, off + n + 1, Rat(1));
      alpha_cache_[slot].push_back(p);
    }
  }
}

MPoly NilHeckeEngine::alpha(int i, int slot) const { return alpha_cache_[slot][i]; }

MPoly NilHeckeEngine::weight_action(int i, const MPoly& f, int slot) const {
  const int n = W_.rank();
  const int off = slot * (n + 2);
  // s_i Lambda_j = Lambda_j - delta_{ij} alpha_i; all other variables fixed
  MPoly img_i = MPoly::variable(nvars_, off + i) - alpha_cache_[slot][i];
  MPoly out(nvars_);
  for (auto& [e, c] : f.terms()) {
    MPoly term = MPoly::constant(nvars_, c);
    for (int v = 0; v < nvars_; ++v) {
      if (e[v] == 0) continue;
      if (v == off + i) {
        for (int k = 0; k < e[v]; ++k) term *= img_i;
      } else {
        MPoly::Expt pe(nvars_, 0);
        pe[v] = e[v];
        MPoly var(nvars_);
        var.add_term(pe, Rat(1));
        term *= var;
      }
    }
    out += term;
  }
  return out;
}

MPoly NilHeckeEngine::demazure(int i, const MPoly& f, int slot) const {
  const int n = W_.rank();
  const int off = slot * (n + 2);
  MPoly g = f - weight_action(i, f, slot);
  // divide exactly by alpha_i; the division variable Lambda_i has coefficient
  // a_af[i][i] = 2 in alpha_i
  const MPoly& ai = alpha_cache_[slot][i];
  const int v = off + i;
  Rat lead = 0;
  for (auto& [e, c] : ai.terms())
    if (e[v] == 1) lead = c;
  if (lead == 0) throw std::runtime_error("demazure: bad divisor");

  MPoly q(nvars_);
  while (!g.is_zero()) {
    // monomial with the highest power of v, lex-largest among those
    auto best = g.terms().end();
    int bestpow = -1;
    for (auto it = g.terms().begin(); it != g.terms().end(); ++it)
      if (it->first[v] > bestpow) {
        bestpow = it->first[v];
        best = it;
      }
    if (bestpow <= 0) throw std::runtime_error("demazure: division has a remainder");
    MPoly::Expt e = best->first;
    e[v] -= 1;
    MPoly mono(nvars_);
    mono.add_term(e, best->second / lead);
    q += mono;
    g -= mono * ai;
  }
  return q;
}

std::map<ElemId, MPoly> NilHeckeEngine::push_through(ElemId u, const MPoly& f, int slot) {
  if (u == W_.identity()) return {{u, f}};
  const Word& w = W_.canonical_word(u);
  int j = w.back();
  ElemId head = W_.multiply(u, W_.simple(j));  // u = head * s_j, shorter
  // A_u f = A_head (A_j f) = A_head (s_j f) A_j + A_head (del_j f)
  std::map<ElemId, MPoly> out;
  auto absorb = [&](ElemId key, MPoly val) {
    auto it = out.find(key);
    if (it == out.end())
      out.emplace(key, std::move(val));
    else
      it->second += val;
  };
  for (auto& [x, g] : push_through(head, weight_action(j, f, slot), slot)) {
    ElemId xj = W_.multiply(x, W_.simple(j));
    if (W_.length(xj) == W_.length(x) + 1) absorb(xj, g);
  }
  MPoly dj = demazure(j, f, slot);
  if (!dj.is_zero())
    for (auto& [x, g] : push_through(head, dj, slot)) absorb(x, g);
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

void tensor_add(Tensor& t, const TensorKey& k, const MPoly& p) {
  if (p.is_zero()) return;
  auto it = t.find(k);
  if (it == t.end()) {
    t.emplace(k, p);
  } else {
    it->second += p;
    if (it->second.is_zero()) t.erase(it);
  }
}

}  // namespace

Tensor NilHeckeEngine::tensor_multiply(const Tensor& a, const Tensor& b) {
  Tensor out;
  for (auto& [ka, pa] : a) {
    for (auto& [kb, pb] : b) {
      // (pa A_{u1} (x) A_{v1}) (pb A_{u2} (x) A_{v2}):
      // move pb left through both slots, then concatenate keys
      for (auto& [x, g1] : push_through(ka.first, pb, 0)) {
        for (auto& [y, g2] : push_through(ka.second, g1, 1)) {
          ElemId u = W_.multiply(x, kb.first);
          if (W_.length(u) != W_.length(x) + W_.length(kb.first)) continue;
          ElemId v = W_.multiply(y, kb.second);
          if (W_.length(v) != W_.length(y) + W_.length(kb.second)) continue;
          tensor_add(out, {u, v}, pa * g2);
        }
      }
    }
  }
  return out;
}

const Tensor& NilHeckeEngine::coproduct_basis(ElemId w) {
  auto cached = delta_cache_.find(w);
  if (cached != delta_cache_.end()) return cached->second;

  auto delta_of_word = [&](const Word& word) {
    Tensor t;
    t[{W_.identity(), W_.identity()}] = MPoly::constant(nvars_, Rat(1));
    for (int i : word) {
      Tensor di;
      // Delta(A_i) = A_i (x) 1 + 1 (x) A_i - A_i (x) alpha_i A_i
      ElemId si = W_.simple(i);
      di[{si, W_.identity()}] = MPoly::constant(nvars_, Rat(1));
      tensor_add(di, {W_.identity(), si}, MPoly::constant(nvars_, Rat(1)));
      MPoly neg_alpha = alpha_cache_[1][i];
      neg_alpha.scale(Rat(-1));
      tensor_add(di, {si, si}, neg_alpha);
      t = tensor_multiply(t, di);
    }
    return t;
  };

  const Word& w1 = W_.canonical_word(w);
  Tensor t = delta_of_word(w1);

  // recompute from a different reduced word when one exists
  if (W_.length(w) >= 2) {
    Word w2;
    ElemId v = w;
    while (v != W_.identity()) {
      auto ds = W_.left_descents(v);
      w2.push_back(ds.back());
      v = W_.multiply(W_.simple(ds.back()), v);
    }
    if (w2 != w1) {
      Tensor t2 = delta_of_word(w2);
      if (!(t == t2))
        throw InternalInconsistency("coproduct depends on the reduced word");
    }
  }
  return delta_cache_.emplace(w, std::move(t)).first->second;
}

Tensor NilHeckeEngine::coproduct(const NilCox& a) {
  Tensor out;
  for (auto& [w, c] : a.coeffs) {
    for (auto& [k, p] : coproduct_basis(w)) {
      MPoly q = p;
      q.scale(c);
      tensor_add(out, k, q);
    }
  }
  return out;
}

ScalarTensor NilHeckeEngine::phi0_2(const Tensor& t) const {
  ScalarTensor out;
  for (auto& [k, p] : t) {
    Rat v = p.eval_zero();
    if (v != 0) out[k] = v;
  }
  return out;
}

ScalarTensor NilHeckeEngine::phi_delta(const NilCox& a) {
  ScalarTensor out;
  for (auto& [w, c] : a.coeffs) {
    auto it = phi_delta_cache_.find(w);
    if (it == phi_delta_cache_.end())
      it = phi_delta_cache_.emplace(w, phi0_2(coproduct_basis(w))).first;
    for (auto& [k, v] : it->second) {
      out[k] += c * v;
      if (out[k] == 0) out.erase(k);
    }
  }
  return out;
}

namespace {

void scalar_add(ScalarTensor& t, const TensorKey& k, const Rat& v) {
  if (v == 0) return;
  t[k] += v;
  if (t[k] == 0) t.erase(k);
}

void add_pair_product(ScalarTensor& t, const NilCox& a, const NilCox& b, const Rat& scale) {
  for (auto& [w, cw] : a.coeffs)
    for (auto& [v, cv] : b.coeffs) scalar_add(t, {w, v}, scale * cw * cv);
}

}  // namespace

CoproductReport NilHeckeEngine::check_coproduct_theorems() {
  const Family f = W_.cartan().family;
  const int n = W_.rank();
  if (f != Family::B && f != Family::D)
    throw std::runtime_error("coproduct theorems apply to families B and D");
  CoproductReport rep;

  const int maxr = nc_.pieri_set().max_length;
  std::vector<NilCox> P(maxr + 1);
  P[0] = nc_.one();
  for (int r = 1; r <= maxr; ++r) P[r] = nc_.pieri_element(r);

  for (int r = 1; r <= maxr; ++r) {
    ScalarTensor got = phi_delta(P[r]);
    ScalarTensor want;
    if (f == Family::D && r == maxr) {
      // top formula: 1 (x) P + P (x) 1 + sum_{s != n-1} P_s (x) P_{r-s}
      //              + 2 P_{n-1} (x) P_{n-1} + (-1)^{n-1} 2 eps (x) eps,
      // with the homology-side epsilon (half of the +-1 closure element)
      add_pair_product(want, P[0], P[r], Rat(1));
      add_pair_product(want, P[r], P[0], Rat(1));
      for (int s = 1; s < r; ++s) {
        if (s == n - 1) continue;
        add_pair_product(want, P[s], P[r - s], Rat(1));
      }
      add_pair_product(want, P[n - 1], P[n - 1], Rat(2));
      NilCox eps = nc_.epsilon();
      eps.scale(Rat(1, 2));
      add_pair_product(want, eps, eps, (n - 1) % 2 ? Rat(-2) : Rat(2));
    } else {
      add_pair_product(want, P[0], P[r], Rat(1));
      add_pair_product(want, P[r], P[0], Rat(1));
      for (int s = 1; s < r; ++s) {
        long chi = (r >= n && n > r - s && n > s) ? 1 : 0;
        add_pair_product(want, P[s], P[r - s], pow2(chi));
      }
    }
    rep.checks.push_back({std::string("coproduct of Pieri element r=") + std::to_string(r),
                          got == want});
  }

  if (f == Family::D) {
    NilCox eps = nc_.epsilon();
    ScalarTensor got = phi_delta(eps);
    ScalarTensor want;
    add_pair_product(want, nc_.one(), eps, Rat(1));
    add_pair_product(want, eps, nc_.one(), Rat(1));
    rep.checks.push_back({"epsilon primitive", got == want});
  }
  return rep;
}

}  // namespace affsym
