#include "affsym/weyl_ext.hpp"

#include <algorithm>
#include <set>

namespace affsym {

std::vector<NodePerm> diagram_automorphisms(const CartanData& cd) {
  const int N = cd.n + 1;
  std::vector<NodePerm> out;
  NodePerm p(N);
  for (int i = 0; i < N; ++i) p[i] = i;
  do {
    bool ok = true;
    for (int i = 0; i < N && ok; ++i)
      for (int j = 0; j < N && ok; ++j)
        if (cd.a_af[p[i]][p[j]] != cd.a_af[i][j]) ok = false;
    if (ok) out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

NodePerm perm_compose(const NodePerm& a, const NodePerm& b) {
  NodePerm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = a[b[i]];
  return c;
}

NodePerm perm_inverse(const NodePerm& a) {
  NodePerm c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[a[i]] = (int)i;
  return c;
}

ElemId conjugate_by_perm(WeylGroup& W, const NodePerm& p, ElemId a) {
  Word w = W.canonical_word(a);
  for (int& l : w) l = p[l];
  return W.from_word(w);
}

ExtendedElement ext_multiply(WeylGroup& W, const ExtendedElement& a, const ExtendedElement& b) {
  // elements are body . tau with tau acting first:
  // (w1 tau1)(w2 tau2) = (w1 . tau1 w2 tau1^{-1}) . (tau1 tau2)
  NodePerm tau = perm_compose(a.tau, b.tau);
  ElemId w2c = conjugate_by_perm(W, a.tau, b.body);
  return ExtendedElement{tau, W.multiply(a.body, w2c)};
}

namespace {

struct AffMap {
  // x -> Bx + c over Q
  std::vector<std::vector<Rat>> B;
  std::vector<Rat> c;

  static AffMap identity(int n) {
    AffMap m;
    m.B.assign(n, std::vector<Rat>(n, Rat(0)));
    for (int i = 0; i < n; ++i) m.B[i][i] = 1;
    m.c.assign(n, Rat(0));
    return m;
  }
  std::vector<Rat> apply(const std::vector<Rat>& x) const {
    int n = (int)c.size();
    std::vector<Rat> out(n, Rat(0));
    for (int i = 0; i < n; ++i) {
      Rat s = c[i];
      for (int j = 0; j < n; ++j)
        if (B[i][j] != 0) s += B[i][j] * x[j];
      out[i] = s;
    }
    return out;
  }
};

AffMap elem_map(const WeylGroup& W, ElemId a) {
  int n = W.rank();
  AffMap m = AffMap::identity(n);
  const auto& lin = W.linear_part(a);
  const auto& mu = W.translation_part(a);
  for (int i = 0; i < n; ++i) {
    m.c[i] = Rat(mu[i]);
    for (int j = 0; j < n; ++j) m.B[i][j] = Rat(lin[i * n + j]);
  }
  return m;
}

AffMap compose(const AffMap& f, const AffMap& g) {
  // f after g
  int n = (int)f.c.size();
  AffMap h = AffMap::identity(n);
  for (int i = 0; i < n; ++i) {
    Rat s = f.c[i];
    for (int k = 0; k < n; ++k) s += f.B[i][k] * g.c[k];
    h.c[i] = s;
    for (int j = 0; j < n; ++j) {
      Rat t = 0;
      for (int k = 0; k < n; ++k) t += f.B[i][k] * g.B[k][j];
      h.B[i][j] = t;
    }
  }
  return h;
}

AffMap invert(const AffMap& f) {
  int n = (int)f.c.size();
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = f.B[i][j];
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("singular affine map");
    std::swap(m[col], m[piv]);
    Rat d = m[col][col];
    for (auto& x : m[col]) x /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat fpiv = m[r][col];
      for (int c2 = col; c2 < 2 * n; ++c2) m[r][c2] -= fpiv * m[col][c2];
    }
  }
  AffMap g = AffMap::identity(n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) g.B[i][j] = m[i][n + j];
  for (int i = 0; i < n; ++i) {
    Rat s = 0;
    for (int k = 0; k < n; ++k) s += g.B[i][k] * f.c[k];
    g.c[i] = -s;
  }
  return g;
}

}  // namespace

ExtendedElement translation(WeylGroup& W, const std::vector<Rat>& mu) {
  const CartanData& cd = W.cartan();
  const int n = cd.n;

  // mu must lie in nu(P^vee): (mu|alpha_i) integral for all i
  for (int i = 0; i < n; ++i) {
    std::vector<Rat> ai(n, Rat(0));
    ai[i] = 1;
    if (!is_integer(cd.form(mu, ai)))
      throw std::runtime_error("translation: vector outside nu(P^vee)");
  }

  // generic interior base point p0 = sum t_i nu(omega_i^vee); denominators are
  // large enough that the walk never lands on a wall (asserted below)
  std::vector<Rat> p0(n, Rat(0));
  {
    long D = 4L * (n + 3) * (n + 3) * 64L;
    for (int i = 0; i < n; ++i) {
      Rat ti(2 * i + 3, D);
      for (int j = 0; j < n; ++j) p0[j] += ti * cd.nu_omega[i][j];
    }
    std::vector<Rat> thR(n);
    for (int i = 0; i < n; ++i) thR[i] = Rat(cd.theta[i]);
    if (!(cd.form(thR, p0) < 1)) throw std::runtime_error("base point outside alcove");
  }

  std::vector<Rat> thR(n);
  for (int i = 0; i < n; ++i) thR[i] = Rat(cd.theta[i]);

  auto wall_value = [&](int lbl, const std::vector<Rat>& q) -> Rat {
    // positive inside the alcove
    if (lbl == 0) return Rat(1) - cd.form(thR, q);
    std::vector<Rat> ai(n, Rat(0));
    ai[lbl - 1] = 1;
    return cd.form(ai, q);
  };

  std::vector<Rat> q(p0);
  for (int i = 0; i < n; ++i) q[i] += mu[i];

  Word walk;
  while (true) {
    int violated = -1;
    for (int lbl = 0; lbl <= n; ++lbl) {
      Rat v = wall_value(lbl, q);
      if (v == 0) throw std::runtime_error("translation walk hit a wall; base point not generic");
      if (v < 0) {
        violated = lbl;
        break;
      }
    }
    if (violated < 0) break;
    q = W.act_on_point(W.simple(violated), q);
    walk.push_back(violated);
    if (walk.size() > 10000) throw std::runtime_error("translation walk does not terminate");
  }

  // residual map R = w_acc . t_mu fixes the fundamental alcove; read tau off
  // by matching wall functionals through R^{-1}
  AffMap T = AffMap::identity(n);
  T.c = mu;
  AffMap acc = AffMap::identity(n);
  for (int lbl : walk) acc = compose(elem_map(W, W.simple(lbl)), acc);
  AffMap R = compose(acc, T);
  AffMap Rinv = invert(R);

  auto functional = [&](int lbl) {
    // pair (linear coeffs, const) of the wall functional
    std::vector<Rat> lin(n, Rat(0));
    Rat cst = 0;
    if (lbl == 0) {
      cst = 1;
      for (int j = 0; j < n; ++j) {
        std::vector<Rat> ej(n, Rat(0));
        ej[j] = 1;
        lin[j] = -cd.form(thR, ej);
      }
    } else {
      for (int j = 0; j < n; ++j) {
        std::vector<Rat> ej(n, Rat(0));
        ej[j] = 1;
        std::vector<Rat> ai(n, Rat(0));
        ai[lbl - 1] = 1;
        lin[j] = cd.form(ai, ej);
      }
    }
    return std::make_pair(lin, cst);
  };

  NodePerm tau(n + 1, -1);
  std::vector<std::pair<std::vector<Rat>, Rat>> fs(n + 1);
  for (int lbl = 0; lbl <= n; ++lbl) fs[lbl] = functional(lbl);
  for (int lbl = 0; lbl <= n; ++lbl) {
    // g = f_lbl o R^{-1}
    std::vector<Rat> lin(n, Rat(0));
    Rat cst = fs[lbl].second;
    for (int j = 0; j < n; ++j) {
      Rat s = 0;
      for (int k = 0; k < n; ++k) s += fs[lbl].first[k] * Rinv.B[k][j];
      lin[j] = s;
    }
    for (int k = 0; k < n; ++k) cst += fs[lbl].first[k] * Rinv.c[k];
    int match = -1;
    for (int m = 0; m <= n; ++m)
      if (fs[m].first == lin && fs[m].second == cst) {
        match = m;
        break;
      }
    if (match < 0) throw std::runtime_error("translation: residual map is not label-preserving");
    tau[lbl] = match;
  }
  {
    // tau must be a diagram automorphism
    std::set<int> img(tau.begin(), tau.end());
    if ((int)img.size() != n + 1) throw std::runtime_error("translation: tau not a permutation");
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j)
        if (cd.a_af[tau[i]][tau[j]] != cd.a_af[i][j])
          throw std::runtime_error("translation: tau does not preserve the Cartan matrix");
  }

  // T = w_acc^{-1} R with R realizing tau, so the body of the factorization
  // t = body . tau (tau acting first) is w_acc^{-1} = s_{l_1} ... s_{l_k}
  ElemId body = W.from_word(walk);

  // exact verification: body composed after the tau map equals the translation
  AffMap check = compose(elem_map(W, body), R);
  if (!(check.B == T.B && check.c == T.c))
    throw std::runtime_error("translation: factorization check failed");

  return ExtendedElement{tau, body};
}

std::vector<std::vector<Rat>> finite_orbit(WeylGroup& W, const std::vector<Rat>& v) {
  const int n = W.rank();
  std::set<std::vector<Rat>> seen{v};
  std::vector<std::vector<Rat>> frontier{v};
  while (!frontier.empty()) {
    std::vector<std::vector<Rat>> next;
    for (auto& x : frontier)
      for (int i = 1; i <= n; ++i) {
        auto y = W.act_on_point(W.simple(i), x);
        if (seen.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

}  // namespace affsym
