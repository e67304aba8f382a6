#include "affsym/assf.hpp"

#include <algorithm>

namespace affsym {

AssfEngine::AssfEngine(NilCoxEngine& nc, SymEngine& sym)
    : nc_(nc), sym_(sym), W_(nc.weyl()) {}

int AssfEngine::quotient_bound() const { return nc_.pieri_set().max_length; }

int AssfEngine::stat_cached(ElemId v) {
  auto it = stat_cache_.find(v);
  if (it != stat_cache_.end()) return it->second;
  return stat_cache_.emplace(v, stat_value(W_, v)).first->second;
}

Rat AssfEngine::kernel_two_power(const Partition& la) const {
  const Family f = W_.cartan().family;
  if (f == Family::A || f == Family::C) return Rat(1);
  return pow2(-(long)num_parts_geq(la, W_.rank()));
}

Rat AssfEngine::factorization_count(ElemId w, const std::vector<int>& comp) {
  // weighted count of factorizations w = v^1 v^2 ... with l(v^i) = comp[i],
  // v^i Pieri factors, lengths additive
  const PieriFactorSet& Z = nc_.pieri_set();
  std::map<std::pair<ElemId, size_t>, Rat> memo;
  std::function<Rat(ElemId, size_t)> rec = [&](ElemId u, size_t i) -> Rat {
    if (i == comp.size()) return u == W_.identity() ? Rat(1) : Rat(0);
    auto key = std::make_pair(u, i);
    auto it = memo.find(key);
    if (it != memo.end()) return it->second;
    Rat total = 0;
    int lu = W_.length(u);
    int r = comp[i];
    if (r <= lu) {
      for (ElemId v : Z.graded[r]) {
        ElemId rest = W_.multiply(W_.inverse(v), u);
        if (W_.length(rest) != lu - r) continue;
        total += pow2(stat_cached(v) - 1) * rec(rest, i + 1);
      }
    }
    memo[key] = total;
    return total;
  };
  return rec(w, 0);
}

const MMap& AssfEngine::assf(ElemId w) {
  auto cached = assf_cache_.find(w);
  if (cached != assf_cache_.end()) return cached->second;

  const int d = W_.length(w);
  MMap out;
  for (auto& la : partitions_of(d, quotient_bound())) {
    Rat c = factorization_count(w, la);
    if (c == 0) continue;
    // the generating function is symmetric; spot-check one permuted
    // composition per partition
    if (la.size() >= 2 && la.front() != la.back()) {
      std::vector<int> rev(la.rbegin(), la.rend());
      if (factorization_count(w, rev) != c)
        throw InternalInconsistency("factorization counts are not symmetric");
    }
    out[la] = c;
  }
  return assf_cache_.emplace(w, std::move(out)).first->second;
}

const NilCox& AssfEngine::pieri_product(const Partition& la) {
  auto it = product_cache_.find(la);
  if (it != product_cache_.end()) return it->second;
  NilCox prod;
  if (la.empty()) {
    prod = nc_.one();
  } else {
    Partition head(la.begin(), la.end() - 1);
    prod = nc_.multiply(pieri_product(head), nc_.pieri_element(la.back()));
  }
  return product_cache_.emplace(la, std::move(prod)).first->second;
}

MMap AssfEngine::assf_via_kernel(ElemId w) {
  const int d = W_.length(w);
  MMap out;
  for (auto& la : partitions_of(d, quotient_bound())) {
    Rat c = pieri_product(la).coeff(w) * kernel_two_power(la);
    if (c != 0) out[la] = c;
  }
  return out;
}

const AssfEngine::DegreeBasis& AssfEngine::degree_basis(int d) {
  auto cached = basis_cache_.find(d);
  if (cached != basis_cache_.end()) return cached->second;

  const Family f = W_.cartan().family;
  const int n = W_.rank();
  DegreeBasis db;

  auto grass = W_.grassmannian_elements(d);
  if (f == Family::D) {
    for (ElemId w : grass[d])
      if (partition_of(W_, w).color == 'b') db.elems.push_back(w);
  } else {
    db.elems = grass[d];
  }

  if (f == Family::A) {
    for (auto& la : partitions_of(d, n)) db.index_parts.push_back(la);
  } else {
    for (auto& ap : affine_partitions(f, n, d))
      if (ap.color != 'c') db.index_parts.push_back(ap.parts);
  }
  if (db.elems.size() != db.index_parts.size())
    throw InternalInconsistency("dual basis size mismatch in degree " + std::to_string(d));

  const size_t k = db.elems.size();
  db.M.assign(k, std::vector<Rat>(k, Rat(0)));
  for (size_t i = 0; i < k; ++i)
    for (size_t j = 0; j < k; ++j) {
      const MMap& F = assf(db.elems[j]);
      auto it = F.find(db.index_parts[i]);
      Rat v = it == F.end() ? Rat(0) : it->second;
      // [q'_lambda, F] = 2^{p>=n(lambda)} (coefficient of m_lambda in F);
      // type A pairs <h_lambda, F> with no twist
      db.M[i][j] = v / kernel_two_power(db.index_parts[i]);
    }

  // invert
  const int kk = (int)k;
  std::vector<std::vector<Rat>> aug(kk, std::vector<Rat>(2 * kk, Rat(0)));
  for (int i = 0; i < kk; ++i) {
    for (int j = 0; j < kk; ++j) aug[i][j] = db.M[i][j];
    aug[i][kk + i] = 1;
  }
  for (int col = 0; col < kk; ++col) {
    int piv = -1;
    for (int r = col; r < kk; ++r)
      if (aug[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw InternalInconsistency("singular dual pairing matrix");
    std::swap(aug[col], aug[piv]);
    Rat dv = aug[col][col];
    for (auto& x : aug[col]) x /= dv;
    for (int r = 0; r < kk; ++r) {
      if (r == col || aug[r][col] == 0) continue;
      Rat fm = aug[r][col];
      for (int c = 0; c < 2 * kk; ++c) aug[r][c] -= fm * aug[col][c];
    }
  }
  db.Minv.assign(kk, std::vector<Rat>(kk, Rat(0)));
  for (int i = 0; i < kk; ++i)
    for (int j = 0; j < kk; ++j) db.Minv[i][j] = aug[i][kk + j];

  return basis_cache_.emplace(d, std::move(db)).first->second;
}

AssfEngine::KSchur AssfEngine::kschur_dual(ElemId w) {
  const Family f = W_.cartan().family;
  const int d = W_.length(w);
  const DegreeBasis& db = degree_basis(d);
  auto pos = std::find(db.elems.begin(), db.elems.end(), w);
  if (pos == db.elems.end()) {
    if (f == Family::D) {
      // swap-class representative carries the dual
      AffinePartition p = partition_of(W_, w);
      p.color = 'b';
      return kschur_dual(element_of(W_, p));
    }
    throw std::runtime_error("kschur_dual: not a Grassmannian element of this degree");
  }
  size_t widx = (size_t)(pos - db.elems.begin());

  KSchur out;
  for (size_t i = 0; i < db.index_parts.size(); ++i) {
    // kS_w = sum_lambda Minv[w][lambda] q'_lambda
    Rat c = db.Minv[widx][i];
    if (c == 0) continue;
    out.dual_coeffs[db.index_parts[i]] = c;
    MMap base = f == Family::A ? sym_.h_lambda_m(db.index_parts[i])
                               : sym_.q_lambda_m(db.index_parts[i]);
    Rat scale = f == Family::A ? c : c / kernel_two_power(db.index_parts[i]);
    for (auto& [p2, v] : base) {
      out.m_exp[p2] += v * scale;
      if (out.m_exp[p2] == 0) out.m_exp.erase(p2);
    }
  }
  if (f == Family::B || f == Family::D) out.Qschur = sym_.m_to_Q(out.m_exp);
  return out;
}

Rat AssfEngine::duality_pairing(ElemId w, ElemId v) {
  KSchur ks = kschur_dual(w);
  const MMap& F = assf(v);
  Rat s = 0;
  for (auto& [la, c] : ks.dual_coeffs) {
    auto it = F.find(la);
    if (it != F.end()) s += c / kernel_two_power(la) * it->second;
  }
  return s;
}

MMap AssfEngine::R_lambda(const Partition& la) {
  const int d = weight(la);
  const DegreeBasis& db = degree_basis(d);
  auto pos = std::find(db.index_parts.begin(), db.index_parts.end(), la);
  if (pos == db.index_parts.end()) throw std::runtime_error("R_lambda: bad index partition");
  size_t li = (size_t)(pos - db.index_parts.begin());
  MMap out;
  for (size_t j = 0; j < db.elems.size(); ++j) {
    Rat c = db.Minv[j][li];
    if (c == 0) continue;
    for (auto& [p, v] : assf(db.elems[j])) {
      out[p] += c * v;
      if (out[p] == 0) out.erase(p);
    }
  }
  return out;
}

bool AssfEngine::kernel_pairs_check(int d) {
  const DegreeBasis& db = degree_basis(d);
  std::map<std::pair<Partition, Partition>, Rat> lhs, rhs;
  for (size_t i = 0; i < db.index_parts.size(); ++i) {
    const Partition& la = db.index_parts[i];
    MMap qp = sym_.q_lambda_m(la);
    Rat tw = Rat(1) / kernel_two_power(la);  // 2^{p>=n}
    MMap R = R_lambda(la);
    for (auto& [px, vx] : qp)
      for (auto& [py, vy] : R) {
        auto key = std::make_pair(px, py);
        lhs[key] += vx * tw * vy;
        if (lhs[key] == 0) lhs.erase(key);
      }
  }
  for (auto& mu : partitions_of(d, quotient_bound())) {
    MMap qm = sym_.q_lambda_m(mu);
    for (auto& [px, vx] : qm) {
      auto key = std::make_pair(px, mu);
      rhs[key] += vx;
      if (rhs[key] == 0) rhs.erase(key);
    }
  }
  return lhs == rhs;
}

bool AssfEngine::kernel_regroup_check(int d) {
  // sum over Grassmannian w of j_0(xi_w) (x) F~_w against the regrouped
  // product side, as maps (element, partition) -> Q
  std::map<std::pair<ElemId, Partition>, Rat> lhs, rhs;
  auto grass = W_.grassmannian_elements(d);
  for (ElemId w : grass[d]) {
    NilCox j = nc_.kschur_solver(w);
    const MMap& F = assf(w);
    for (auto& [u, cu] : j.coeffs)
      for (auto& [p, cp] : F) {
        auto key = std::make_pair(u, p);
        lhs[key] += cu * cp;
        if (lhs[key] == 0) lhs.erase(key);
      }
  }
  for (auto& la : partitions_of(d, quotient_bound())) {
    const NilCox& prod = pieri_product(la);
    Rat tw = kernel_two_power(la);
    for (auto& [u, cu] : prod.coeffs) {
      auto key = std::make_pair(u, la);
      rhs[key] += cu * tw;
      if (rhs[key] == 0) rhs.erase(key);
    }
  }
  return lhs == rhs;
}

bool AssfEngine::homology_pieri_symcheck(ElemId x, ElemId w) {
  auto nilcox_side = nc_.homology_product(x, w);
  const Family fam = W_.cartan().family;

  if (fam == Family::D) {
    // The quotient symmetric function model rescales swap-folded classes, so
    // the honest Pieri statement here is the coefficient reading: the
    // product expands through the coefficients of j_0(xi_x), which at the
    // middle degree is P_{n-1} +- eps/2.
    NilCox jx = nc_.kschur_solver(x);
    std::map<ElemId, Rat> expect;
    int lw = W_.length(w);
    for (auto& [v, c] : jx.coeffs) {
      ElemId vw = W_.multiply(v, w);
      if (W_.length(vw) != W_.length(v) + lw || !W_.is_grassmannian(vw)) continue;
      expect[vw] += c;
    }
    for (auto it = expect.begin(); it != expect.end();)
      it = it->second == 0 ? expect.erase(it) : std::next(it);
    return nilcox_side == expect;
  }

  const int d = W_.length(x) + W_.length(w);
  MMap prod = sym_.m_product(kschur_dual(x).m_exp, kschur_dual(w).m_exp);

  auto grass = W_.grassmannian_elements(d);
  std::vector<ElemId> targets = grass[d];
  std::vector<MMap> basis;
  for (ElemId y : targets) basis.push_back(kschur_dual(y).m_exp);
  auto coeffs = SymEngine::expand_in_list(prod, basis);

  std::map<ElemId, Rat> sym_side;
  for (size_t i = 0; i < targets.size(); ++i)
    if (coeffs[i] != 0) sym_side[targets[i]] = coeffs[i];

  return nilcox_side == sym_side;
}

}  // namespace affsym
