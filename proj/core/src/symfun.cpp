#include "affsym/symfun.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace affsym {

MPoly SymEngine::q_poly(int r, int nv) {
  // prod_i (1+x_i t)/(1-x_i t): the coefficient of x^a in the t^r slice is
  // 2^{#nonzero(a)}
  MPoly out(nv);
  MPoly::Expt e(nv, 0);
  std::function<void(int, int)> rec = [&](int pos, int rem) {
    if (pos == nv) {
      if (rem == 0) {
        int nz = 0;
        for (int x : e) nz += x > 0;
        out.add_term(e, pow2(nz));
      }
      return;
    }
    for (int v = 0; v <= rem; ++v) {
      e[pos] = v;
      rec(pos + 1, rem - v);
    }
    e[pos] = 0;
  };
  rec(0, r);
  return out;
}

MPoly SymEngine::m_poly(const Partition& p, int nv) {
  MPoly out(nv);
  if ((int)p.size() > nv) return out;
  MPoly::Expt e(nv, 0);
  std::copy(p.begin(), p.end(), e.begin());
  std::sort(e.begin(), e.end());
  do {
    out.add_term(e, Rat(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return out;
}

MMap SymEngine::poly_to_m(const MPoly& poly) {
  MMap out;
  for (auto& [e, c] : poly.terms()) {
    bool sorted_desc = true;
    for (size_t i = 1; i < e.size(); ++i)
      if (e[i] > e[i - 1]) sorted_desc = false;
    if (!sorted_desc) continue;
    Partition p;
    for (int x : e)
      if (x > 0) p.push_back(x);
    out[p] = c;
  }
  return out;
}

const MMap& SymEngine::q_m(int r) {
  auto it = q_cache_.find(r);
  if (it != q_cache_.end()) return it->second;
  MMap out;
  if (r == 0) {
    out[{}] = 1;
  } else {
    for (auto& mu : partitions_of(r, r)) out[mu] = pow2((long)mu.size());
  }
  return q_cache_.emplace(r, std::move(out)).first->second;
}

const MMap& SymEngine::h_m(int r) {
  auto it = h_cache_.find(r);
  if (it != h_cache_.end()) return it->second;
  MMap out;
  if (r == 0) {
    out[{}] = 1;
  } else {
    for (auto& mu : partitions_of(r, r)) out[mu] = 1;
  }
  return h_cache_.emplace(r, std::move(out)).first->second;
}

MMap SymEngine::m_product(const MMap& a, const MMap& b) {
  int da = 0, db = 0;
  for (auto& [p, c] : a) da = std::max(da, weight(p));
  for (auto& [p, c] : b) db = std::max(db, weight(p));
  int nv = da + db;
  if (nv == 0) {
    MMap out;
    Rat v = (a.count({}) ? a.at({}) : Rat(0)) * (b.count({}) ? b.at({}) : Rat(0));
    if (v != 0) out[{}] = v;
    return out;
  }
  MPoly pa(nv), pb(nv);
  for (auto& [p, c] : a) {
    MPoly t = m_poly(p, nv);
    t.scale(c);
    pa += t;
  }
  for (auto& [p, c] : b) {
    MPoly t = m_poly(p, nv);
    t.scale(c);
    pb += t;
  }
  return poly_to_m(pa * pb);
}

MMap SymEngine::q_lambda_m(const Partition& p) {
  MMap out;
  out[{}] = 1;
  for (int part : p) out = m_product(out, q_m(part));
  return out;
}

MMap SymEngine::h_lambda_m(const Partition& p) {
  MMap out;
  out[{}] = 1;
  for (int part : p) out = m_product(out, h_m(part));
  return out;
}

bool SymEngine::valid_marked_shifted_tableau(const Partition& shape,
                                             const std::vector<std::vector<int>>& rows) {
  // letters: k unbarred -> 2k, k barred -> 2k-1; order barred k < unbarred k
  if (!is_strict(shape) || rows.size() != shape.size()) return false;
  auto code = [](int v) { return v > 0 ? 2 * v : -2 * v - 1; };
  int R = (int)shape.size();
  for (int i = 0; i < R; ++i)
    if ((int)rows[i].size() != shape[i]) return false;
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < shape[i]; ++j) {
      int abs_col = i + j;  // row i shifted by i
      int v = code(rows[i][j]);
      if (j > 0) {
        int left = code(rows[i][j - 1]);
        if (v < left) return false;
        if (v == left && v % 2 == 1) return false;  // barred repeats in a row
      }
      if (i > 0) {
        int jj = abs_col - (i - 1);  // column above in row i-1
        if (jj >= 0 && jj < shape[i - 1]) {
          int up = code(rows[i - 1][jj]);
          if (v < up) return false;
          if (v == up && v % 2 == 0) return false;  // unbarred repeats in a column
        }
      }
    }
  }
  return true;
}

const MMap& SymEngine::schurQ_m(const Partition& p) {
  auto cached = schurQ_cache_.find(p);
  if (cached != schurQ_cache_.end()) return cached->second;
  if (!is_strict(p)) throw std::runtime_error("Schur Q needs a strict partition");

  if (p.empty()) {
    MMap out;
    out[{}] = 1;
    return schurQ_cache_.emplace(p, std::move(out)).first->second;
  }
  const int d = weight(p);
  const int nv = d;
  MPoly poly(nv);

  // enumerate fillings cell by cell, letters coded 1..2*nv (odd = barred)
  const int R = (int)p.size();
  std::vector<std::vector<int>> cells(R);
  for (int i = 0; i < R; ++i) cells[i].assign(p[i], 0);
  MPoly::Expt expt(nv, 0);

  std::function<void(int, int)> rec = [&](int i, int j) {
    if (i == R) {
      poly.add_term(expt, Rat(1));
      return;
    }
    int ni = i, nj = j + 1;
    if (nj == p[i]) {
      ni = i + 1;
      nj = 0;
    }
    int lo = 1;
    if (j > 0) lo = cells[i][j - 1];
    int up_code = 0;
    if (i > 0) {
      int jj = (i + j) - (i - 1);
      if (jj >= 0 && jj < p[i - 1]) up_code = cells[i - 1][jj];
    }
    lo = std::max(lo, up_code);
    for (int v = lo; v <= 2 * nv; ++v) {
      if (j > 0 && v == cells[i][j - 1] && v % 2 == 1) continue;
      if (up_code > 0 && v == up_code && v % 2 == 0) continue;
      cells[i][j] = v;
      ++expt[(v + 1) / 2 - 1];
      rec(ni, nj);
      --expt[(v + 1) / 2 - 1];
      cells[i][j] = 0;
    }
  };
  rec(0, 0);

  MMap out = poly_to_m(poly);
  // the expansion must be symmetric: every monomial's coefficient matches the
  // sorted representative
  for (auto& [e, c] : poly.terms()) {
    Partition key;
    for (int x : e)
      if (x > 0) key.push_back(x);
    std::sort(key.begin(), key.end(), std::greater<int>());
    if (out.at(key) != c) throw std::runtime_error("Schur Q expansion not symmetric");
  }
  return schurQ_cache_.emplace(p, std::move(out)).first->second;
}

MMap SymEngine::schurP_m(const Partition& p) {
  MMap out = schurQ_m(p);
  Rat f = pow2(-(long)p.size());
  for (auto& [k, c] : out) c *= f;
  return out;
}

Rat SymEngine::pairing_q_m(const MMap& f_q, const MMap& g_m) {
  Rat s = 0;
  for (auto& [p, c] : f_q) {
    auto it = g_m.find(p);
    if (it != g_m.end()) s += c * it->second;
  }
  return s;
}

std::vector<Rat> SymEngine::expand_in_list(const MMap& f, const std::vector<MMap>& basis) {
  // solve sum_i x_i basis_i = f by Gaussian elimination over the union of
  // supports
  std::set<Partition> support;
  for (auto& bm : basis)
    for (auto& [p, c] : bm) support.insert(p);
  for (auto& [p, c] : f) support.insert(p);
  std::vector<Partition> rows(support.begin(), support.end());
  std::map<Partition, int> rowidx;
  for (size_t i = 0; i < rows.size(); ++i) rowidx[rows[i]] = (int)i;

  int nc = (int)basis.size();
  std::vector<std::vector<Rat>> M(rows.size(), std::vector<Rat>(nc + 1, Rat(0)));
  for (int c = 0; c < nc; ++c)
    for (auto& [p, v] : basis[c]) M[rowidx[p]][c] = v;
  for (auto& [p, v] : f) M[rowidx[p]][nc] = v;

  std::vector<int> pivot_of_col(nc, -1);
  int rank = 0;
  for (int c = 0; c < nc; ++c) {
    int piv = -1;
    for (int r = rank; r < (int)rows.size(); ++r)
      if (M[r][c] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("expand_in: dependent spanning family");
    std::swap(M[rank], M[piv]);
    Rat d = M[rank][c];
    for (auto& x : M[rank]) x /= d;
    for (int r = 0; r < (int)rows.size(); ++r) {
      if (r == rank || M[r][c] == 0) continue;
      Rat fmul = M[r][c];
      for (int cc = c; cc <= nc; ++cc) M[r][cc] -= fmul * M[rank][cc];
    }
    pivot_of_col[c] = rank;
    ++rank;
  }
  for (int r = rank; r < (int)rows.size(); ++r)
    if (M[r][nc] != 0) throw std::runtime_error("expand_in: function outside the span");

  std::vector<Rat> out(nc, Rat(0));
  for (int c = 0; c < nc; ++c) out[c] = M[pivot_of_col[c]][nc];
  return out;
}

std::map<Partition, Rat> SymEngine::expand_in(const MMap& f,
                                              const std::map<Partition, MMap>& basis) {
  std::vector<Partition> cols;
  std::vector<MMap> list;
  for (auto& [idx, bm] : basis) {
    cols.push_back(idx);
    list.push_back(bm);
  }
  auto x = expand_in_list(f, list);
  std::map<Partition, Rat> out;
  for (size_t c = 0; c < cols.size(); ++c)
    if (x[c] != 0) out[cols[c]] = x[c];
  return out;
}

int SymEngine::rank_of(const std::vector<MMap>& vectors) {
  std::set<Partition> support;
  for (auto& v : vectors)
    for (auto& [p, c] : v) support.insert(p);
  std::vector<Partition> rows(support.begin(), support.end());
  std::map<Partition, int> rowidx;
  for (size_t i = 0; i < rows.size(); ++i) rowidx[rows[i]] = (int)i;
  std::vector<std::vector<Rat>> M;
  for (auto& v : vectors) {
    std::vector<Rat> row(rows.size(), Rat(0));
    for (auto& [p, c] : v) row[rowidx[p]] = c;
    M.push_back(std::move(row));
  }
  int rank = 0;
  for (size_t col = 0; col < rows.size() && rank < (int)M.size(); ++col) {
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
      for (size_t cc = col; cc < rows.size(); ++cc) M[r][cc] -= f * M[rank][cc];
    }
    ++rank;
  }
  return rank;
}

MMap SymEngine::m_to_oddq(const MMap& f_m) {
  // split by degree, expand in the odd-partition q basis
  std::map<int, MMap> by_deg;
  for (auto& [p, c] : f_m) by_deg[weight(p)][p] = c;
  MMap out;
  for (auto& [d, part] : by_deg) {
    std::map<Partition, MMap> basis;
    for (auto& mu : partitions_of(d, d)) {
      bool odd = true;
      for (int x : mu)
        if (x % 2 == 0) odd = false;
      if (odd) basis[mu] = q_lambda_m(mu);
    }
    for (auto& [mu, c] : expand_in(part, basis)) out[mu] += c;
  }
  return out;
}

Rat SymEngine::pairing_m_m(const MMap& f_m, const MMap& g_m) {
  return pairing_q_m(m_to_oddq(f_m), g_m);
}

std::map<Partition, Rat> SymEngine::m_to_Q(const MMap& f_m) {
  std::map<int, MMap> by_deg;
  for (auto& [p, c] : f_m) by_deg[weight(p)][p] = c;
  std::map<Partition, Rat> out;
  for (auto& [d, part] : by_deg) {
    std::map<Partition, MMap> basis;
    for (auto& mu : strict_partitions_of(d, d)) basis[mu] = schurQ_m(mu);
    for (auto& [mu, c] : expand_in(part, basis)) out[mu] += c;
  }
  return out;
}

std::map<Partition, Rat> SymEngine::m_to_P(const MMap& f_m) {
  auto q = m_to_Q(f_m);
  for (auto& [p, c] : q) c *= pow2((long)p.size());
  return q;
}

std::map<Partition, Rat> SymEngine::m_to_h(const MMap& f_m) {
  std::map<int, MMap> by_deg;
  for (auto& [p, c] : f_m) by_deg[weight(p)][p] = c;
  std::map<Partition, Rat> out;
  for (auto& [d, part] : by_deg) {
    std::map<Partition, MMap> basis;
    for (auto& mu : partitions_of(d, d)) basis[mu] = h_lambda_m(mu);
    for (auto& [mu, c] : expand_in(part, basis)) out[mu] += c;
  }
  return out;
}

Rat SymEngine::hall_pairing_h_m(const std::map<Partition, Rat>& f_h, const MMap& g_m) {
  Rat s = 0;
  for (auto& [p, c] : f_h) {
    auto it = g_m.find(p);
    if (it != g_m.end()) s += c * it->second;
  }
  return s;
}

std::string symfunc_term_str(const std::string& sym, const Partition& p, const Rat& c) {
  std::string body = p.empty() ? std::string("1") : sym + "[" + partition_str(p) + "]";
  if (p.empty()) return rat_str(c);
  if (c == 1) return body;
  return rat_str(c) + "*" + body;
}

std::string symfunc_str(const std::string& sym, const std::map<Partition, Rat>& terms) {
  if (terms.empty()) return "0";
  // larger degree first, then lex-descending within a degree
  std::vector<std::pair<Partition, Rat>> items(terms.begin(), terms.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int wa = weight(a.first), wb = weight(b.first);
    if (wa != wb) return wa < wb;
    return lex_less(b.first, a.first);
  });
  std::string s;
  for (size_t i = 0; i < items.size(); ++i) {
    const Rat& c = items[i].second;
    if (i == 0) {
      s += (c < 0 ? "-" : "");
      Rat a = c < 0 ? Rat(-c) : c;
      s += symfunc_term_str(sym, items[i].first, a);
    } else {
      s += c < 0 ? " - " : " + ";
      Rat a = c < 0 ? Rat(-c) : c;
      s += symfunc_term_str(sym, items[i].first, a);
    }
  }
  return s;
}

}  // namespace affsym
