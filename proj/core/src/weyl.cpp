#include "affsym/weyl.hpp"

#include <algorithm>
#include <set>

namespace affsym {

namespace {

std::uint64_t fnv(const std::vector<long long>& a, const std::vector<long long>& b) {
  std::uint64_t h = 1469598103934665603ULL;
  auto mix = [&h](long long v) {
    auto u = (std::uint64_t)v;
    for (int k = 0; k < 8; ++k) {
      h ^= (u >> (8 * k)) & 0xff;
      h *= 1099511628211ULL;
    }
  };
  for (auto v : a) mix(v);
  for (auto v : b) mix(v);
  return h;
}

}  // namespace

WeylGroup::WeylGroup(CartanData cd) : cd_(std::move(cd)) {
  const int n = cd_.n;
  std::vector<long long> eye(n * n, 0);
  for (int i = 0; i < n; ++i) eye[i * n + i] = 1;
  id_ = intern(eye, std::vector<long long>(n, 0));
  pool_[id_].len = 0;
  pool_[id_].word = {};
  pool_[id_].word_ready = true;
  pool_[id_].inv = id_;

  simples_.resize(n + 1);
  for (int i = 0; i <= n; ++i) {
    std::vector<long long> m(eye);
    std::vector<long long> mu(n, 0);
    if (i >= 1) {
      // s_i(alpha_j) = alpha_j - a_af[i][j] alpha_i: row (i-1) updates
      for (int j = 0; j < n; ++j) m[(i - 1) * n + j] -= cd_.a_af[i][j + 1];
    } else {
      // s_0 = reflection through theta followed by translation by nu(theta^vee)=theta
      for (int j = 0; j < n; ++j) {
        std::vector<long long> aj(n, 0);
        aj[j] = 1;
        Rat c = cd_.form_root(aj, cd_.theta);  // (alpha_j|theta), an integer
        long long ci = (long long)int_part(c);
        for (int r = 0; r < n; ++r) m[r * n + j] -= ci * cd_.theta[r];
      }
      for (int r = 0; r < n; ++r) mu[r] = cd_.theta[r];
    }
    simples_[i] = intern(std::move(m), std::move(mu));
    pool_[simples_[i]].len = 1;
    pool_[simples_[i]].word = {i};
    pool_[simples_[i]].word_ready = true;
    pool_[simples_[i]].inv = simples_[i];
  }
}

ElemId WeylGroup::intern(std::vector<long long> mat, std::vector<long long> mu) {
  auto h = fnv(mat, mu);
  auto& bucket = index_[h];
  for (ElemId e : bucket)
    if (pool_[e].mat == mat && pool_[e].mu == mu) return e;
  Rec r;
  r.mat = std::move(mat);
  r.mu = std::move(mu);
  pool_.push_back(std::move(r));
  ElemId e = (ElemId)(pool_.size() - 1);
  bucket.push_back(e);
  return e;
}

ElemId WeylGroup::simple(int i) const {
  if (i < 0 || i > cd_.n)
    throw std::runtime_error("simple reflection index " + std::to_string(i) +
                             " out of range 0.." + std::to_string(cd_.n));
  return simples_[i];
}

ElemId WeylGroup::multiply(ElemId a, ElemId b) {
  const int n = cd_.n;
  const auto& A = pool_[a];
  const auto& B = pool_[b];
  std::vector<long long> m(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long v = A.mat[i * n + k];
      if (!v) continue;
      for (int j = 0; j < n; ++j) m[i * n + j] += v * B.mat[k * n + j];
    }
  std::vector<long long> mu(A.mu);
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int k = 0; k < n; ++k) s += A.mat[i * n + k] * B.mu[k];
    mu[i] += s;
  }
  return intern(std::move(m), std::move(mu));
}

ElemId WeylGroup::inverse(ElemId a) {
  if (pool_[a].inv != UINT32_MAX) return pool_[a].inv;
  const int n = cd_.n;
  const auto& A = pool_[a];
  // invert the integer matrix exactly (det = +-1)
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = Rat(A.mat[i * n + j]);
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int piv = -1;
    for (int r = col; r < n; ++r)
      if (m[r][col] != 0) {
        piv = r;
        break;
      }
    if (piv < 0) throw std::runtime_error("singular linear part");
    std::swap(m[col], m[piv]);
    Rat d = m[col][col];
    for (auto& x : m[col]) x /= d;
    for (int r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (int c = col; c < 2 * n; ++c) m[r][c] -= f * m[col][c];
    }
  }
  std::vector<long long> inv(n * n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!is_integer(m[i][n + j])) throw std::runtime_error("non-integer inverse");
      inv[i * n + j] = (long long)int_part(m[i][n + j]);
    }
  std::vector<long long> mu(n, 0);
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int k = 0; k < n; ++k) s += inv[i * n + k] * A.mu[k];
    mu[i] = -s;
  }
  ElemId e = intern(std::move(inv), std::move(mu));
  pool_[a].inv = e;
  pool_[e].inv = a;
  return e;
}

ElemId WeylGroup::from_word(std::span<const int> w) {
  ElemId e = id_;
  for (int i : w) e = multiply(e, simple(i));
  return e;
}

ElemId WeylGroup::translation_element(const std::vector<Rat>& mu) {
  const int n = cd_.n;
  // mu = sum c_i nu(alpha_i^vee) with nu(alpha_i^vee) = (2/(alpha_i|alpha_i)) alpha_i,
  // so c_i = mu_i (alpha_i|alpha_i)/2 must be integers
  std::vector<long long> v(n, 0);
  for (int i = 0; i < n; ++i) {
    Rat ci = mu[i] * cd_.root_norm2[i] / 2;
    if (!is_integer(ci))
      throw std::runtime_error("translation vector not in nu(Q^vee)");
    if (!is_integer(mu[i])) throw std::runtime_error("translation vector not integral");
    v[i] = (long long)int_part(mu[i]);
  }
  std::vector<long long> eye(n * n, 0);
  for (int i = 0; i < n; ++i) eye[i * n + i] = 1;
  return intern(std::move(eye), std::move(v));
}

AffineRoot WeylGroup::act_on_root(ElemId a, const AffineRoot& r) const {
  const int n = cd_.n;
  const auto& A = pool_[a];
  AffineRoot out;
  out.finite.assign(n, 0);
  for (int i = 0; i < n; ++i) {
    long long s = 0;
    for (int k = 0; k < n; ++k) s += A.mat[i * n + k] * r.finite[k];
    out.finite[i] = s;
  }
  // delta' = k - (mu | A*finite)
  Rat dot = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (A.mu[i] != 0 && out.finite[j] != 0)
        dot += Rat(A.mu[i]) * cd_.gram[i][j] * Rat(out.finite[j]);
  if (!is_integer(dot)) throw std::runtime_error("non-integer delta shift");
  out.delta = r.delta - (long long)int_part(dot);
  return out;
}

std::vector<int> WeylGroup::left_descents(ElemId a) {
  std::vector<int> out;
  ElemId ai = inverse(a);
  for (int i = 0; i <= cd_.n; ++i)
    if (root_negative(act_on_root(ai, cd_.simple_root(i)))) out.push_back(i);
  return out;
}

std::vector<int> WeylGroup::right_descents(ElemId a) {
  std::vector<int> out;
  for (int i = 0; i <= cd_.n; ++i)
    if (root_negative(act_on_root(a, cd_.simple_root(i)))) out.push_back(i);
  return out;
}

bool WeylGroup::is_grassmannian(ElemId a) {
  for (int i = 1; i <= cd_.n; ++i)
    if (root_negative(act_on_root(a, cd_.simple_root(i)))) return false;
  return true;
}

bool WeylGroup::is_one_grassmannian(ElemId a) {
  for (int i = 0; i <= cd_.n; ++i) {
    if (i == 1) continue;
    if (root_negative(act_on_root(a, cd_.simple_root(i)))) return false;
  }
  return true;
}

void WeylGroup::ensure_word(ElemId a) {
  if (pool_[a].word_ready) return;
  // strip the smallest left descent repeatedly; work on the inverse so each
  // step is a cheap right multiplication
  Word word;
  ElemId v = inverse(a);
  while (v != id_) {
    int found = -1;
    for (int i = 0; i <= cd_.n; ++i) {
      if (root_negative(act_on_root(v, cd_.simple_root(i)))) {
        found = i;
        break;
      }
    }
    if (found < 0) throw std::runtime_error("element with no descent is not identity");
    v = multiply(v, simple(found));
    word.push_back(found);
  }
  pool_[a].word = std::move(word);
  pool_[a].len = (int)pool_[a].word.size();
  pool_[a].word_ready = true;
}

int WeylGroup::length(ElemId a) {
  ensure_word(a);
  return pool_[a].len;
}

const Word& WeylGroup::canonical_word(ElemId a) {
  ensure_word(a);
  return pool_[a].word;
}

bool WeylGroup::word_less(ElemId a, ElemId b) {
  if (a == b) return false;
  int la = length(a), lb = length(b);
  if (la != lb) return la < lb;
  return canonical_word(a) < canonical_word(b);
}

bool WeylGroup::bruhat_leq(ElemId v, ElemId w) {
  // lifting property recursion on the first letter of w's canonical word
  while (true) {
    if (v == id_) return true;
    if (length(v) > length(w)) return false;
    int i = canonical_word(w)[0];
    ElemId siw = multiply(simple(i), w);
    ElemId siv = multiply(simple(i), v);
    if (length(siv) < length(v)) v = siv;
    w = siw;
  }
}

std::vector<ElemId> WeylGroup::lower_covers(ElemId w) {
  const Word& word = canonical_word(w);
  int lw = (int)word.size();
  std::set<ElemId> out;
  Word sub;
  sub.reserve(lw - 1);
  for (int skip = 0; skip < lw; ++skip) {
    sub.clear();
    for (int i = 0; i < lw; ++i)
      if (i != skip) sub.push_back(word[i]);
    ElemId v = from_word(sub);
    if (length(v) == lw - 1) out.insert(v);
  }
  std::vector<ElemId> res(out.begin(), out.end());
  std::sort(res.begin(), res.end(), [this](ElemId a, ElemId b) { return word_less(a, b); });
  return res;
}

ElemId WeylGroup::reflection_element(const AffineRoot& beta) {
  const int n = cd_.n;
  if (!cd_.is_real(beta)) throw std::runtime_error("reflection through a non-root");
  // s_{alpha+k delta}: x -> s_alpha(x) - k nu(alpha^vee)
  Rat norm2 = cd_.form_root(beta.finite, beta.finite);
  std::vector<long long> m(n * n, 0);
  for (int i = 0; i < n; ++i) m[i * n + i] = 1;
  for (int j = 0; j < n; ++j) {
    std::vector<long long> aj(n, 0);
    aj[j] = 1;
    Rat c = 2 * cd_.form_root(aj, beta.finite) / norm2;  // <alpha_j, beta^vee>
    if (!is_integer(c)) throw std::runtime_error("non-integer reflection entry");
    long long ci = (long long)int_part(c);
    for (int r = 0; r < n; ++r) m[r * n + j] -= ci * beta.finite[r];
  }
  std::vector<long long> mu(n, 0);
  for (int r = 0; r < n; ++r) {
    Rat v = -Rat(beta.delta) * 2 * Rat(beta.finite[r]) / norm2;
    if (!is_integer(v)) throw std::runtime_error("non-integer reflection translation");
    mu[r] = (long long)int_part(v);
  }
  return intern(std::move(m), std::move(mu));
}

Reflection WeylGroup::cover_root(ElemId v, ElemId w) {
  if (length(v) + 1 != length(w) || !bruhat_leq(v, w))
    throw std::runtime_error("cover_root: v is not covered by w");
  ElemId t = multiply(inverse(v), w);
  const Word& word = canonical_word(t);
  if (word.size() % 2 == 0) throw std::runtime_error("cover_root: even reflection word");
  int m = (int)word.size() / 2;
  AffineRoot beta = cd_.simple_root(word[m]);
  for (int i = m - 1; i >= 0; --i) beta = act_on_root(simple(word[i]), beta);
  if (root_negative(beta)) throw std::runtime_error("cover_root: middle root not positive");
  if (reflection_element(beta) != t)
    throw std::runtime_error("cover_root: reflection mismatch");
  return Reflection{t, beta};
}

std::vector<std::vector<ElemId>> WeylGroup::elements_up_to(int max_length) {
  std::vector<std::vector<ElemId>> levels(max_length + 1);
  levels[0] = {id_};
  std::set<ElemId> seen{id_};
  for (int l = 0; l < max_length; ++l) {
    std::set<ElemId> next;
    for (ElemId w : levels[l])
      for (int i = 0; i <= cd_.n; ++i) {
        ElemId x = multiply(simple(i), w);
        if (seen.count(x)) continue;
        if (length(x) == l + 1) next.insert(x);
      }
    levels[l + 1].assign(next.begin(), next.end());
    seen.insert(next.begin(), next.end());
    std::sort(levels[l + 1].begin(), levels[l + 1].end(),
              [this](ElemId a, ElemId b) { return word_less(a, b); });
  }
  return levels;
}

std::vector<std::vector<ElemId>> WeylGroup::grassmannian_elements(int max_length) {
  // minimal coset representatives are closed under removing left letters, so
  // each level is reached by left multiplication from the previous one
  std::vector<std::vector<ElemId>> levels(max_length + 1);
  levels[0] = {id_};
  for (int l = 0; l < max_length; ++l) {
    std::set<ElemId> next;
    for (ElemId w : levels[l])
      for (int i = 0; i <= cd_.n; ++i) {
        ElemId x = multiply(simple(i), w);
        if (length(x) == l + 1 && is_grassmannian(x)) next.insert(x);
      }
    levels[l + 1].assign(next.begin(), next.end());
    std::sort(levels[l + 1].begin(), levels[l + 1].end(),
              [this](ElemId a, ElemId b) { return word_less(a, b); });
  }
  return levels;
}

std::vector<Word> WeylGroup::all_reduced_words(ElemId a) {
  if (a == id_) return {Word{}};
  std::vector<Word> out;
  for (int i : left_descents(a)) {
    ElemId rest = multiply(simple(i), a);
    for (auto& tail : all_reduced_words(rest)) {
      Word w;
      w.reserve(tail.size() + 1);
      w.push_back(i);
      w.insert(w.end(), tail.begin(), tail.end());
      out.push_back(std::move(w));
    }
  }
  return out;
}

std::vector<Rat> WeylGroup::act_on_point(ElemId a, const std::vector<Rat>& p) const {
  const int n = cd_.n;
  const auto& A = pool_[a];
  std::vector<Rat> out(n, Rat(0));
  for (int i = 0; i < n; ++i) {
    Rat s = Rat(A.mu[i]);
    for (int k = 0; k < n; ++k)
      if (A.mat[i * n + k] != 0) s += Rat(A.mat[i * n + k]) * p[k];
    out[i] = s;
  }
  return out;
}

}  // namespace affsym
