#include "affsym/pieri.hpp"

#include <algorithm>
#include <map>

#include "affsym/weyl_ext.hpp"

namespace affsym {

int pieri_max_length(Family f, int n) {
  switch (f) {
    case Family::A: return n;
    case Family::B: return 2 * n - 1;
    case Family::C: return 2 * n;
    case Family::D: return 2 * n - 2;
  }
  return 0;
}

namespace {

std::vector<Word> rotations_keeping_pairs(const Word& cyc,
                                          const std::vector<std::pair<int, int>>& pairs) {
  // all rotations of the cyclic word such that each listed pair of letters
  // stays adjacent within the linear word
  const int L = (int)cyc.size();
  std::vector<Word> out;
  for (int s = 0; s < L; ++s) {
    Word w(L);
    for (int i = 0; i < L; ++i) w[i] = cyc[(s + i) % L];
    bool ok = true;
    for (auto [a, b] : pairs) {
      // find the positions; both letters occur exactly once in the cyclic words used here
      int pa = -1, pb = -1;
      for (int i = 0; i < L; ++i) {
        if (w[i] == a) pa = i;
        if (w[i] == b) pb = i;
      }
      if (std::abs(pa - pb) != 1) ok = false;
    }
    if (ok) out.push_back(std::move(w));
  }
  return out;
}

std::vector<ElemId> dedup_elements(WeylGroup& W, const std::vector<Word>& words, int expected_len) {
  std::set<ElemId> set;
  for (const auto& w : words) {
    ElemId e = W.from_word(w);
    if (W.length(e) != (int)w.size() || (int)w.size() != expected_len)
      throw std::runtime_error("generator word is not reduced of the expected length");
    set.insert(e);
  }
  std::vector<ElemId> out(set.begin(), set.end());
  std::sort(out.begin(), out.end(), [&W](ElemId a, ElemId b) { return W.word_less(a, b); });
  return out;
}

PieriFactorSet ideal_from_generators(WeylGroup& W, std::vector<ElemId> gens) {
  PieriFactorSet out;
  out.family = W.cartan().family;
  out.n = W.rank();
  out.max_length = pieri_max_length(out.family, out.n);
  out.generators = std::move(gens);
  for (ElemId g : out.generators) out.generator_words.push_back(W.canonical_word(g));

  // subword closure: running prefix set, extend one letter at a time
  std::set<ElemId> ideal;
  for (ElemId g : out.generators) {
    std::set<ElemId> cur{W.identity()};
    for (int letter : W.canonical_word(g)) {
      std::set<ElemId> next(cur);
      for (ElemId e : cur) next.insert(W.multiply(e, W.simple(letter)));
      cur = std::move(next);
    }
    ideal.insert(cur.begin(), cur.end());
  }

  out.graded.assign(out.max_length + 1, {});
  for (ElemId e : ideal) {
    int l = W.length(e);
    if (l > out.max_length) throw std::runtime_error("ideal element longer than the generators");
    out.graded[l].push_back(e);
  }
  for (auto& level : out.graded)
    std::sort(level.begin(), level.end(), [&W](ElemId a, ElemId b) { return W.word_less(a, b); });
  return out;
}

std::vector<ElemId> finite_weyl_elements(WeylGroup& W) {
  std::vector<ElemId> all{W.identity()};
  std::set<ElemId> seen{W.identity()};
  size_t head = 0;
  while (head < all.size()) {
    ElemId w = all[head++];
    for (int i = 1; i <= W.rank(); ++i) {
      ElemId x = W.multiply(w, W.simple(i));
      if (seen.insert(x).second) all.push_back(x);
    }
  }
  return all;
}

}  // namespace

std::vector<Word> pieri_generator_words(WeylGroup& W) {
  const Family f = W.cartan().family;
  const int n = W.rank();
  std::vector<Word> words;

  switch (f) {
    case Family::A: {
      // one maximal cyclically decreasing word per omitted node
      const int N = n + 1;
      for (int missing = 0; missing < N; ++missing) {
        Word w;
        for (int k = 1; k <= n; ++k) w.push_back(((missing - k) % N + N) % N);
        words.push_back(std::move(w));
      }
      break;
    }
    case Family::B: {
      Word w1, w2, w3;
      w1.push_back(0);
      for (int i = 2; i <= n; ++i) w1.push_back(i);
      for (int i = n - 1; i >= 2; --i) w1.push_back(i);
      w1.push_back(0);
      w2 = w1;
      for (int& x : w2)
        if (x == 0) x = 1;
      for (int i = 2; i <= n; ++i) w3.push_back(i);
      for (int i = n - 1; i >= 2; --i) w3.push_back(i);
      w3.push_back(1);
      w3.push_back(0);
      words.push_back(w1);
      words.push_back(w2);
      for (auto& r : rotations_keeping_pairs(w3, {{1, 0}})) words.push_back(r);
      break;
    }
    case Family::C: {
      // length-2n conjugates of s_1..s_{n-1} s_n s_{n-1}..s_1 s_0
      Word g0;
      for (int i = 1; i <= n; ++i) g0.push_back(i);
      for (int i = n - 1; i >= 1; --i) g0.push_back(i);
      g0.push_back(0);
      ElemId g = W.from_word(g0);
      if (W.length(g) != 2 * n) throw std::runtime_error("type C base word not reduced");
      std::set<ElemId> gens;
      for (ElemId w : finite_weyl_elements(W)) {
        ElemId c = W.multiply(W.multiply(w, g), W.inverse(w));
        if (W.length(c) == 2 * n) gens.insert(c);
      }
      for (ElemId e : gens) words.push_back(W.canonical_word(e));
      break;
    }
    case Family::D: {
      Word wa, wb;
      wa.push_back(0);
      for (int i = 2; i <= n - 2; ++i) wa.push_back(i);
      wa.push_back(n);
      wa.push_back(n - 1);
      for (int i = n - 2; i >= 2; --i) wa.push_back(i);
      wa.push_back(0);
      wb.push_back(0);
      wb.push_back(1);
      for (int i = 2; i <= n - 2; ++i) wb.push_back(i);
      wb.push_back(n);
      wb.push_back(n - 1);
      for (int i = n - 2; i >= 2; --i) wb.push_back(i);

      std::vector<Word> base{wa};
      for (auto& r : rotations_keeping_pairs(wb, {{0, 1}, {n - 1, n}})) base.push_back(r);

      // images under the diagram automorphisms that preserve the coupled
      // pairs {0,1} and {n-1,n} as a pair of pairs (for n = 4 the full
      // automorphism group is larger and would overshoot the orbit of
      // translations)
      std::vector<NodePerm> auts;
      for (auto& p : diagram_automorphisms(W.cartan())) {
        auto img = [&p](int a, int b) { return std::set<int>{p[a], p[b]}; };
        std::set<int> lo{0, 1}, hi{n - 1, n};
        auto i1 = img(0, 1), i2 = img(n - 1, n);
        if ((i1 == lo && i2 == hi) || (i1 == hi && i2 == lo)) auts.push_back(p);
      }
      for (const auto& p : auts)
        for (const auto& b : base) {
          Word w(b);
          for (int& x : w) x = p[x];
          words.push_back(std::move(w));
        }
      break;
    }
  }
  return words;
}

PieriFactorSet pieri_factors(WeylGroup& W) {
  auto words = pieri_generator_words(W);
  auto gens = dedup_elements(W, words, pieri_max_length(W.cartan().family, W.rank()));
  return ideal_from_generators(W, std::move(gens));
}

PieriFactorSet pieri_factors_typefree(WeylGroup& W) {
  const int n = W.rank();
  std::vector<Rat> nu1 = W.cartan().nu_omega[0];
  auto orbit = finite_orbit(W, nu1);
  std::set<ElemId> gens;
  for (const auto& mu : orbit) {
    ExtendedElement t = translation(W, mu);
    gens.insert(t.body);
  }
  std::vector<ElemId> g(gens.begin(), gens.end());
  int expected = pieri_max_length(W.cartan().family, n);
  for (ElemId e : g)
    if (W.length(e) != expected)
      throw std::runtime_error("translation body has unexpected length");
  std::sort(g.begin(), g.end(), [&W](ElemId a, ElemId b) { return W.word_less(a, b); });
  return ideal_from_generators(W, std::move(g));
}

namespace {

// linear "levels" of the interval order; coupled nodes share a level
std::vector<std::vector<int>> interval_levels(Family f, int n) {
  std::vector<std::vector<int>> lv;
  switch (f) {
    case Family::B:
      lv.push_back({0, 1});
      for (int i = 2; i <= n; ++i) lv.push_back({i});
      break;
    case Family::D:
      lv.push_back({0, 1});
      for (int i = 2; i <= n - 2; ++i) lv.push_back({i});
      lv.push_back({n - 1, n});
      break;
    case Family::C:
      for (int i = 0; i <= n; ++i) lv.push_back({i});
      break;
    case Family::A:
      break;  // cyclic, handled separately
  }
  return lv;
}

std::vector<std::vector<int>> runs_to_components(const std::vector<std::vector<int>>& levels,
                                                 const std::vector<char>& present) {
  std::vector<std::vector<int>> out;
  size_t i = 0;
  while (i < levels.size()) {
    if (!present[i]) {
      ++i;
      continue;
    }
    std::vector<int> comp;
    while (i < levels.size() && present[i]) {
      comp.insert(comp.end(), levels[i].begin(), levels[i].end());
      ++i;
    }
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::vector<int>> cyclic_components(int N, const std::set<int>& s) {
  std::vector<std::vector<int>> out;
  if (s.empty()) return out;
  if ((int)s.size() == N) {
    out.push_back(std::vector<int>(s.begin(), s.end()));
    return out;
  }
  int start = 0;
  while (s.count(start)) ++start;
  std::vector<int> cur;
  for (int k = 1; k <= N; ++k) {
    int i = (start + k) % N;
    if (s.count(i)) {
      cur.push_back(i);
    } else if (!cur.empty()) {
      out.push_back(cur);
      cur.clear();
    }
  }
  return out;
}

}  // namespace

SupportProfile support_profile(WeylGroup& W, ElemId w) {
  const Family f = W.cartan().family;
  const int n = W.rank();
  SupportProfile out;
  for (int letter : W.canonical_word(w)) out.supp.insert(letter);

  if (f == Family::A) {
    const int N = n + 1;
    out.Supp = out.supp;
    out.components = cyclic_components(N, out.Supp);
    std::set<int> comp;
    for (int i = 0; i < N; ++i)
      if (!out.Supp.count(i)) comp.insert(i);
    out.complement_components = cyclic_components(N, comp);
    out.c = (int)out.components.size();
    out.cc = (int)out.complement_components.size();
    return out;
  }

  auto levels = interval_levels(f, n);
  std::vector<char> present(levels.size(), 0);
  for (size_t i = 0; i < levels.size(); ++i)
    for (int node : levels[i])
      if (out.supp.count(node)) present[i] = 1;
  for (size_t i = 0; i < levels.size(); ++i)
    if (present[i])
      for (int node : levels[i]) out.Supp.insert(node);
  out.components = runs_to_components(levels, present);
  std::vector<char> absent(levels.size(), 0);
  for (size_t i = 0; i < levels.size(); ++i) absent[i] = !present[i];
  out.complement_components = runs_to_components(levels, absent);
  out.c = (int)out.components.size();
  out.cc = (int)out.complement_components.size();
  return out;
}

int stat_value(WeylGroup& W, ElemId w) {
  switch (W.cartan().family) {
    case Family::A: return 1;
    case Family::C: return support_profile(W, w).c;
    case Family::B:
    case Family::D: return support_profile(W, w).cc;
  }
  return 1;
}

std::vector<Segment> segments(WeylGroup& W) {
  const Family f = W.cartan().family;
  const int n = W.rank();
  if (f != Family::B && f != Family::D)
    throw std::runtime_error("segments are defined for families B and D only");

  std::vector<Segment> out;
  auto add = [&](int kind, int len, char color, Word w) {
    ElemId e = W.from_word(w);
    if (W.length(e) != len) throw std::runtime_error("segment word is not reduced");
    out.push_back(Segment{kind, len, color, e, std::move(w)});
  };

  if (f == Family::B) {
    for (int kind : {1, 0}) {
      const int tail = kind;  // final letter 1 or 0
      for (int j = 1; j <= 2 * n - 1; ++j) {
        Word w;
        if (j == 1) {
          w = {tail};
        } else if (j <= n) {
          for (int i = j; i >= 2; --i) w.push_back(i);
          w.push_back(tail);
        } else if (kind == 1 || j <= 2 * n - 2) {
          for (int i = 2 * n - j; i <= n; ++i) w.push_back(i);
          for (int i = n - 1; i >= 2; --i) w.push_back(i);
          w.push_back(tail);
        } else {  // kind 0, j = 2n-1
          w.push_back(0);
          for (int i = 2; i <= n; ++i) w.push_back(i);
          for (int i = n - 1; i >= 2; --i) w.push_back(i);
          w.push_back(0);
        }
        add(kind, j, 0, std::move(w));
      }
    }
  } else {
    // type D: build the 1-segments, then swap 0<->1 and (n-1)<->n for 0-segments
    for (int kind : {1, 0}) {
      auto relabel = [&](Word w) {
        if (kind == 0)
          for (int& x : w) {
            if (x == 0) x = 1;
            else if (x == 1) x = 0;
            else if (x == n - 1) x = n;
            else if (x == n) x = n - 1;
          }
        return w;
      };
      for (int j = 1; j <= 2 * n - 2; ++j) {
        if (j == n - 1) {
          Word wb, wc;
          wb.push_back(n - 1);
          wc.push_back(n);
          for (int i = n - 2; i >= 2; --i) {
            wb.push_back(i);
            wc.push_back(i);
          }
          wb.push_back(1);
          wc.push_back(1);
          add(kind, j, 'b', relabel(wb));
          add(kind, j, 'c', relabel(wc));
          continue;
        }
        Word w;
        if (j <= n - 2) {
          for (int i = j; i >= 2; --i) w.push_back(i);
          w.push_back(1);
        } else {
          for (int i = 2 * n - j - 1; i <= n - 2; ++i) w.push_back(i);
          w.push_back(n);
          w.push_back(n - 1);
          for (int i = n - 2; i >= 2; --i) w.push_back(i);
          w.push_back(1);
        }
        add(kind, j, 0, relabel(w));
      }
    }
  }
  return out;
}

namespace {

bool factorize_rec(WeylGroup& W, const std::vector<Segment>& segs, ElemId cur, int kind,
                   int prev_len, std::vector<Segment>& path) {
  if (cur == W.identity()) return true;
  int lcur = W.length(cur);
  // longest first, color b before c at equal length
  std::vector<const Segment*> candidates;
  for (const auto& s : segs)
    if (s.kind == kind && s.len <= prev_len && s.len <= lcur) candidates.push_back(&s);
  std::sort(candidates.begin(), candidates.end(), [](const Segment* a, const Segment* b) {
    if (a->len != b->len) return a->len > b->len;
    return a->color < b->color;
  });
  for (const Segment* s : candidates) {
    ElemId rest = W.multiply(cur, W.inverse(s->elem));
    if (W.length(rest) != lcur - s->len) continue;
    path.push_back(*s);
    if (factorize_rec(W, segs, rest, 1 - kind, s->len, path)) return true;
    path.pop_back();
  }
  return false;
}

}  // namespace

std::vector<Segment> segment_factorization(WeylGroup& W, ElemId w) {
  if (!W.is_grassmannian(w))
    throw std::runtime_error("segment factorization needs a 0-Grassmannian element");
  auto segs = segments(W);
  std::vector<Segment> path;
  if (!factorize_rec(W, segs, w, 0, pieri_max_length(W.cartan().family, W.rank()), path))
    throw std::runtime_error("internal inconsistency: no segment factorization found");
  for (size_t i = 1; i < path.size(); ++i)
    if (path[i].len > path[i - 1].len)
      throw std::runtime_error("internal inconsistency: factorization not length-decreasing");
  return path;
}

bool valid_affine_partition(Family f, int n, const AffinePartition& p) {
  if (!is_partition(p.parts)) return false;
  if (f == Family::B) {
    if (p.color != 0) return false;
    if (!p.parts.empty() && p.parts[0] > 2 * n - 1) return false;
    return has_distinct_small_parts(p.parts, n);
  }
  if (f == Family::D) {
    if (p.color != 'b' && p.color != 'c') return false;
    if (!p.parts.empty() && p.parts[0] > 2 * n - 2) return false;
    // parts of size exactly n-1 may repeat (they carry the color); smaller
    // parts are distinct
    if (!has_distinct_small_parts(p.parts, n - 1)) return false;
    bool has_special = std::find(p.parts.begin(), p.parts.end(), n - 1) != p.parts.end();
    if (p.color == 'c' && !has_special) return false;
    return true;
  }
  return false;
}

std::vector<AffinePartition> affine_partitions(Family f, int n, int d) {
  std::vector<AffinePartition> out;
  int maxpart = f == Family::B ? 2 * n - 1 : 2 * n - 2;
  for (auto& parts : partitions_of(d, maxpart)) {
    if (f == Family::B) {
      if (!has_distinct_small_parts(parts, n)) continue;
      out.push_back({parts, 0});
    } else {
      if (!has_distinct_small_parts(parts, n - 1)) continue;
      out.push_back({parts, 'b'});
      if (std::find(parts.begin(), parts.end(), n - 1) != parts.end())
        out.push_back({parts, 'c'});
    }
  }
  return out;
}

AffinePartition partition_of(WeylGroup& W, ElemId w) {
  auto fact = segment_factorization(W, w);
  AffinePartition p;
  if (W.cartan().family == Family::D) p.color = 'b';
  char seen = 0;
  for (const auto& s : fact) {
    p.parts.push_back(s.len);
    if (s.color != 0) {
      if (seen != 0 && seen != s.color)
        throw std::runtime_error("internal inconsistency: mixed segment colors");
      seen = s.color;
      p.color = s.color;
    }
  }
  if (!valid_affine_partition(W.cartan().family, W.rank(), p))
    throw std::runtime_error("internal inconsistency: invalid partition from factorization");
  return p;
}

ElemId element_of(WeylGroup& W, const AffinePartition& p) {
  const Family f = W.cartan().family;
  const int n = W.rank();
  if (!valid_affine_partition(f, n, p)) throw std::runtime_error("invalid affine partition");
  auto segs = segments(W);
  auto find_seg = [&](int kind, int len, char color) -> const Segment& {
    for (const auto& s : segs)
      if (s.kind == kind && s.len == len && s.color == color) return s;
    throw std::runtime_error("no such segment");
  };
  ElemId w = W.identity();
  for (int i = (int)p.parts.size() - 1; i >= 0; --i) {
    int kind = i % 2;
    char color = (f == Family::D && p.parts[i] == n - 1) ? p.color : 0;
    const Segment& s = find_seg(kind, p.parts[i], color);
    w = W.multiply(w, s.elem);
  }
  if (W.length(w) != weight(p.parts))
    throw std::runtime_error("segment product is not length-additive");
  if (!W.is_grassmannian(w))
    throw std::runtime_error("segment product is not Grassmannian");
  return w;
}

Partition bijection_B(const Partition& p) {
  std::vector<int> parts(p);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> next;
    for (int x : parts) {
      if (x % 2 == 0) {
        next.push_back(x / 2);
        next.push_back(x / 2);
        changed = true;
      } else {
        next.push_back(x);
      }
    }
    parts = std::move(next);
  }
  return sorted_partition(parts);
}

Partition bijection_D(int n, const AffinePartition& p) {
  std::vector<int> parts(p.parts);
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<int> next;
    for (int x : parts) {
      bool keep = (p.color == 'c' && x == n - 1) || x % 2 == 1;
      if (keep) {
        next.push_back(x);
      } else {
        next.push_back(x / 2);
        next.push_back(x / 2);
        changed = true;
      }
    }
    parts = std::move(next);
  }
  return sorted_partition(parts);
}

}  // namespace affsym
