#pragma once

#include <memory>

#include "affsym/assf.hpp"
#include "affsym/nilhecke.hpp"

namespace affsym {

// Everything bound to a single (family, rank) pair.  Contexts are independent
// of each other; build one per concurrent task.
struct Context {
  WeylGroup W;
  NilCoxEngine nilcox;
  SymEngine sym;
  NilHeckeEngine nilhecke;
  AssfEngine assf;

  Context(Family f, int n)
      : W(build_cartan(f, n)), nilcox(W), sym(), nilhecke(nilcox), assf(nilcox, sym) {}
  Context(const Context&) = delete;
  Context& operator=(const Context&) = delete;

  Family family() const { return W.cartan().family; }
  int rank() const { return W.rank(); }
};

}  // namespace affsym
