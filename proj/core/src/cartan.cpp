#include "affsym/cartan.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace affsym {

Family parse_family(const std::string& s) {
  if (s == "A" || s == "a") return Family::A;
  if (s == "B" || s == "b") return Family::B;
  if (s == "C" || s == "c") return Family::C;
  if (s == "D" || s == "d") return Family::D;
  throw std::runtime_error("unknown family '" + s + "' (expected A, B, C or D)");
}

int min_rank(Family f) {
  switch (f) {
    case Family::A: return 2;
    case Family::B: return 2;
    case Family::C: return 2;
    case Family::D: return 4;
  }
  return 2;
}

std::string AffineCoroot::str() const {
  std::string s = "(";
  for (size_t i = 0; i < finite.size(); ++i) {
    if (i) s += ",";
    s += rat_str(finite[i]);
  }
  s += " | K:" + rat_str(kcoeff) + ")";
  return s;
}

int CartanData::m(int i, int j) const {
  if (i == j) return 1;
  int p = a_af[i][j] * a_af[j][i];
  switch (p) {
    case 0: return 2;
    case 1: return 3;
    case 2: return 4;
    case 3: return 6;
    default: throw std::runtime_error("m(i,j) infinite or invalid");
  }
}

Rat CartanData::form(const std::vector<Rat>& x, const std::vector<Rat>& y) const {
  Rat s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x[i] != 0 && y[j] != 0) s += x[i] * gram[i][j] * y[j];
  return s;
}

Rat CartanData::form_root(const std::vector<long long>& x, const std::vector<long long>& y) const {
  Rat s = 0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (x[i] != 0 && y[j] != 0) s += Rat(x[i]) * gram[i][j] * Rat(y[j]);
  return s;
}

bool CartanData::is_finite_root(const std::vector<long long>& v) const {
  return std::find(finite_roots.begin(), finite_roots.end(), v) != finite_roots.end();
}

bool CartanData::is_positive_finite(const std::vector<long long>& v) const {
  for (auto x : v)
    if (x > 0) return true;
  return false;  // roots have coordinates of one sign
}

AffineRoot CartanData::simple_root(int i) const {
  AffineRoot r;
  r.finite.assign(n, 0);
  if (i == 0) {
    for (int j = 0; j < n; ++j) r.finite[j] = -theta[j];
    r.delta = 1;
  } else {
    r.finite[i - 1] = 1;
  }
  return r;
}

bool CartanData::is_real(const AffineRoot& r) const {
  return is_finite_root(r.finite);
}

bool CartanData::is_positive(const AffineRoot& r) const {
  if (r.delta != 0) return r.delta > 0;
  return is_positive_finite(r.finite);
}

std::vector<Rat> CartanData::nu_of_coroot(const std::vector<Rat>& cc) const {
  // nu(alpha_i^vee) = 2 alpha_i / (alpha_i|alpha_i)
  std::vector<Rat> out(n, Rat(0));
  for (int i = 0; i < n; ++i)
    if (cc[i] != 0) out[i] = cc[i] * Rat(2) / root_norm2[i];
  return out;
}

namespace {

// finite Cartan matrix (1-based nodes stored 0-based) and squared root norms
void finite_data(Family f, int n, std::vector<std::vector<int>>& a,
                 std::vector<Rat>& norm2) {
  a.assign(n, std::vector<int>(n, 0));
  for (int i = 0; i < n; ++i) a[i][i] = 2;
  auto chain = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
  switch (f) {
    case Family::A:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      norm2.assign(n, Rat(2));
      break;
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 1][n - 2] = -2;  // alpha_n short
      norm2.assign(n, Rat(2));
      norm2[n - 1] = Rat(1);
      break;
    case Family::C:
      for (int i = 0; i + 1 < n; ++i) chain(i, i + 1);
      a[n - 2][n - 1] = -2;  // alpha_n long
      norm2.assign(n, Rat(1));
      norm2[n - 1] = Rat(2);
      break;
    case Family::D:
      for (int i = 0; i + 1 < n - 1; ++i) chain(i, i + 1);
      chain(n - 3, n - 1);
      norm2.assign(n, Rat(2));
      break;
  }
}

}  // namespace

CartanData build_cartan(Family f, int n) {
  if (n < min_rank(f))
    throw RankError(std::string("rank too small for family ") + family_char(f) +
                    ": need n >= " + std::to_string(min_rank(f)));

  CartanData cd;
  cd.family = f;
  cd.n = n;

  std::vector<std::vector<int>> a_fin;
  finite_data(f, n, a_fin, cd.root_norm2);

  cd.gram.assign(n, std::vector<Rat>(n, Rat(0)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      cd.gram[i][j] = cd.root_norm2[i] / 2 * a_fin[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cd.gram[i][j] != cd.gram[j][i]) throw std::runtime_error("gram not symmetric");

  // close the simple roots under simple reflections
  std::set<std::vector<long long>> roots;
  std::vector<std::vector<long long>> frontier;
  for (int i = 0; i < n; ++i) {
    std::vector<long long> e(n, 0);
    e[i] = 1;
    roots.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    std::vector<std::vector<long long>> next;
    for (auto& b : frontier) {
      for (int i = 0; i < n; ++i) {
        long long pairing = 0;  // <beta, alpha_i^vee> = sum b_c a_fin[i][c]
        for (int c = 0; c < n; ++c) pairing += b[c] * a_fin[i][c];
        auto img = b;
        img[i] -= pairing;
        if (roots.insert(img).second) next.push_back(img);
      }
    }
    frontier = std::move(next);
  }
  cd.finite_roots.assign(roots.begin(), roots.end());
  if ((int)cd.finite_roots.size() > 2 * n * n)
    throw std::runtime_error("finite root system larger than expected");

  // highest root: maximal height among long roots
  long long best_h = -1;
  for (auto& r : cd.finite_roots) {
    if (cd.form_root(r, r) != 2) continue;
    long long h = std::accumulate(r.begin(), r.end(), 0LL);
    if (h > best_h) {
      best_h = h;
      cd.theta = r;
    }
  }
  if (best_h < 0) throw std::runtime_error("no long root found (normalization broken)");

  // affine Cartan matrix: border the finite one through theta
  cd.a_af.assign(n + 1, std::vector<int>(n + 1, 0));
  cd.a_af[0][0] = 2;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) cd.a_af[i][j] = a_fin[i - 1][j - 1];
  for (int j = 1; j <= n; ++j) {
    std::vector<long long> aj(n, 0);
    aj[j - 1] = 1;
    Rat t_aj = cd.form_root(cd.theta, aj);
    // a_{0j} = -<theta^vee, alpha_j> = -(theta|alpha_j) since (theta|theta)=2
    Rat a0j = -t_aj;
    // a_{j0} = -<alpha_j^vee, theta> = -2(alpha_j|theta)/(alpha_j|alpha_j)
    Rat aj0 = -2 * t_aj / cd.root_norm2[j - 1];
    if (!is_integer(a0j) || !is_integer(aj0)) throw std::runtime_error("non-integer Cartan entry");
    cd.a_af[0][j] = (int)(long long)int_part(a0j);
    cd.a_af[j][0] = (int)(long long)int_part(aj0);
  }
  for (int i = 0; i <= n; ++i) {
    if (cd.a_af[i][i] != 2) throw std::runtime_error("bad diagonal");
    for (int j = 0; j <= n; ++j)
      if (i != j && cd.a_af[i][j] > 0) throw std::runtime_error("positive off-diagonal");
  }

  // marks: delta = alpha_0 + theta; comarks: a_i^vee = a_i (alpha_i|alpha_i)/2
  cd.marks.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) cd.marks[i] = (int)cd.theta[i - 1];
  cd.comarks.assign(n + 1, 1);
  for (int i = 1; i <= n; ++i) {
    Rat cv = cd.marks[i] * cd.root_norm2[i - 1] / 2;
    if (!is_integer(cv)) throw std::runtime_error("non-integer comark");
    cd.comarks[i] = (int)(long long)int_part(cv);
  }
  for (int j = 0; j <= n; ++j) {
    long long s1 = 0, s2 = 0;
    for (int i = 0; i <= n; ++i) {
      s1 += (long long)cd.a_af[j][i] * cd.marks[i];
      s2 += (long long)cd.comarks[i] * cd.a_af[i][j];
    }
    if (s1 != 0 || s2 != 0) throw std::runtime_error("marks/comarks are not null vectors");
  }
  int g = 0;
  for (int v : cd.marks) g = std::gcd(g, v);
  if (g != 1) throw std::runtime_error("marks not primitive");
  g = 0;
  for (int v : cd.comarks) g = std::gcd(g, v);
  if (g != 1) throw std::runtime_error("comarks not primitive");

  // nu(omega_i^vee): solve gram * x = e_i over Q
  cd.nu_omega.assign(n, std::vector<Rat>(n, Rat(0)));
  {
    // invert gram by Gaussian elimination on [gram | I]
    std::vector<std::vector<Rat>> m(n, std::vector<Rat>(2 * n, Rat(0)));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) m[i][j] = cd.gram[i][j];
      m[i][n + i] = 1;
    }
    for (int col = 0; col < n; ++col) {
      int piv = -1;
      for (int r = col; r < n; ++r)
        if (m[r][col] != 0) {
          piv = r;
          break;
        }
      if (piv < 0) throw std::runtime_error("gram singular");
      std::swap(m[col], m[piv]);
      Rat d = m[col][col];
      for (auto& x : m[col]) x /= d;
      for (int r = 0; r < n; ++r) {
        if (r == col || m[r][col] == 0) continue;
        Rat factor = m[r][col];
        for (int c = 0; c < 2 * n; ++c) m[r][c] -= factor * m[col][c];
      }
    }
    // column i of the inverse solves gram*x = e_i
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) cd.nu_omega[i][j] = m[j][n + i];
  }

  return cd;
}

AffineCoroot coroot_of(const CartanData& cd, const AffineRoot& r) {
  bool fin_zero = true;
  for (auto x : r.finite)
    if (x != 0) fin_zero = false;
  if (fin_zero) throw std::runtime_error("coroot_of: imaginary root (finite part is zero)");
  if (!cd.is_real(r)) throw std::runtime_error("coroot_of: finite part is not a root");

  Rat norm2 = cd.form_root(r.finite, r.finite);
  AffineCoroot out(cd.n);
  // alpha^vee = sum c_i (alpha_i|alpha_i)/(alpha|alpha) alpha_i^vee
  for (int i = 0; i < cd.n; ++i)
    if (r.finite[i] != 0) out.finite[i] = Rat(r.finite[i]) * cd.root_norm2[i] / norm2;
  out.kcoeff = Rat(2 * r.delta) / norm2;
  return out;
}

std::optional<Int> is_multiple_of_K(const AffineCoroot& c) {
  for (auto& x : c.finite)
    if (x != 0) return std::nullopt;
  if (!is_integer(c.kcoeff)) return std::nullopt;
  return int_part(c.kcoeff);
}

}  // namespace affsym
