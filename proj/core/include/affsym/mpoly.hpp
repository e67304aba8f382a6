#pragma once

#include <map>
#include <vector>

#include "affsym/rational.hpp"

namespace affsym {

// Sparse multivariate polynomial over Q with a fixed number of variables.
// Exponent vectors are kept at full length; map ordering makes iteration
// deterministic.
class MPoly {
 public:
  using Expt = std::vector<int>;

  MPoly() : nvars_(0) {}
  explicit MPoly(int nvars) : nvars_(nvars) {}

  static MPoly constant(int nvars, const Rat& c) {
    MPoly p(nvars);
    if (c != 0) p.terms_[Expt(nvars, 0)] = c;
    return p;
  }
  static MPoly variable(int nvars, int i, const Rat& c = Rat(1)) {
    MPoly p(nvars);
    if (c != 0) {
      Expt e(nvars, 0);
      e[i] = 1;
      p.terms_[e] = c;
    }
    return p;
  }

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Expt, Rat>& terms() const { return terms_; }

  void add_term(const Expt& e, const Rat& c) {
    if (c == 0) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) terms_.erase(it);
    }
  }

  MPoly& operator+=(const MPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& o) {
    for (auto& [e, c] : o.terms_) add_term(e, -c);
    return *this;
  }
  friend MPoly operator+(MPoly a, const MPoly& b) { return a += b; }
  friend MPoly operator-(MPoly a, const MPoly& b) { return a -= b; }

  friend MPoly operator*(const MPoly& a, const MPoly& b) {
    MPoly out(a.nvars_);
    for (auto& [ea, ca] : a.terms_) {
      for (auto& [eb, cb] : b.terms_) {
        Expt e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        out.add_term(e, ca * cb);
      }
    }
    return out;
  }
  MPoly& operator*=(const MPoly& o) { return *this = *this * o; }

  MPoly& scale(const Rat& c) {
    if (c == 0) {
      terms_.clear();
      return *this;
    }
    for (auto& [e, v] : terms_) v *= c;
    return *this;
  }

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }

  // evaluation at the origin: the constant coefficient
  Rat eval_zero() const {
    auto it = terms_.find(Expt(nvars_, 0));
    return it == terms_.end() ? Rat(0) : it->second;
  }

  Rat coeff(const Expt& e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? Rat(0) : it->second;
  }

  int total_degree() const {
    int d = 0;
    for (auto& [e, c] : terms_) {
      int s = 0;
      for (int x : e) s += x;
      d = std::max(d, s);
    }
    return d;
  }

 private:
  int nvars_;
  std::map<Expt, Rat> terms_;
};

}  // namespace affsym
