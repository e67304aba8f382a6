// Command line interface: affine Stanley symmetric functions, k-Schur duals,
// Pieri expansions, Pieri factor dumps and the verification suites.

#include <cstdlib>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "affsym/cache.hpp"
#include "affsym/checks.hpp"

using namespace affsym;
using nlohmann::json;

namespace {

Word parse_word(const std::string& s) {
  Word w;
  std::string cur;
  auto flush = [&] {
    if (cur.empty()) return;
    w.push_back(std::stoi(cur));
    cur.clear();
  };
  for (size_t i = 0; i < s.size(); ++i) {
    char c = s[i];
    if (c == ' ' || c == ',' || c == '\t') {
      flush();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      throw CLI::ValidationError(
          "word", std::string("unexpected character '") + c + "' at position " +
                      std::to_string(i + 1));
    }
  }
  flush();
  return w;
}

std::string word_str(const Word& w) {
  std::string s;
  for (size_t i = 0; i < w.size(); ++i) {
    if (i) s += ' ';
    s += std::to_string(w[i]);
  }
  return s;
}

json word_json(const Word& w) { return json(w); }

json symfunc_json(const std::string& basis, const std::map<Partition, Rat>& terms, int degree) {
  json arr = json::array();
  // emit larger degree first, lex-descending within a degree (same order as
  // the printed form)
  std::vector<std::pair<Partition, Rat>> items(terms.begin(), terms.end());
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    int wa = weight(a.first), wb = weight(b.first);
    if (wa != wb) return wa < wb;
    return lex_less(b.first, a.first);
  });
  for (auto& [p, c] : items) {
    arr.push_back(json{{"partition", json(p)},
                       {"numerator", std::stoll(numerator(c).str())},
                       {"denominator", std::stoll(denominator(c).str())}});
  }
  return json{{"basis", basis}, {"degree", degree}, {"terms", arr}};
}

struct CommonOpts {
  std::string family = "B";
  int n = 3;
  int max_degree = -1;
  std::string format = "table";
  std::string cache_dir;
  unsigned long long seed = 0;
  int jobs = 1;
};

void add_common(CLI::App* cmd, CommonOpts& o, bool with_n = true) {
  cmd->add_option("--family", o.family, "family A, B, C or D");
  if (with_n) cmd->add_option("--n", o.n, "rank");
  cmd->add_option("--max-degree", o.max_degree, "degree bound for graded computations");
  cmd->add_option("--format", o.format, "table, json or tsv")
      ->check(CLI::IsMember({"table", "json", "tsv"}));
  cmd->add_option("--cache-dir", o.cache_dir, "directory for on-disk caches");
  cmd->add_option("--seed", o.seed, "seed for sampled property checks");
  cmd->add_option("--jobs", o.jobs, "parallel suite items (each on its own context)");
}

std::string resolved_cache_dir(const CommonOpts& o) {
  if (!o.cache_dir.empty()) return o.cache_dir;
  const char* env = std::getenv("AFFSYM_CACHE_DIR");
  return env ? std::string(env) : std::string();
}

int check_degree_warning(const CommonOpts& o, int value) {
  if (value > 2 * o.n)
    std::cerr << "warning: max degree " << value << " exceeds 2*rank = " << 2 * o.n << "\n";
  return value;
}

int run_assf(const CommonOpts& o, const std::string& word_arg, bool all, bool dual) {
  Family fam = parse_family(o.family);
  Context ctx(fam, o.n);
  int maxdeg = o.max_degree > 0 ? check_degree_warning(o, o.max_degree)
                                : pieri_max_length(fam, o.n);

  if (dual && fam != Family::B && fam != Family::D)
    throw CLI::ValidationError("--dual", "dual expansions are available for families B and D");

  struct Row {
    Word w;
    std::string assf, dual;
    json assf_json, dual_json;
  };
  std::vector<Row> rows;

  auto make_row = [&](ElemId w) {
    Row r;
    r.w = ctx.W.canonical_word(w);
    const MMap& F = ctx.assf.assf(w);
    r.assf = symfunc_str("m", F);
    r.assf_json = symfunc_json("m", F, ctx.W.length(w));
    if (dual) {
      if (!ctx.W.is_grassmannian(w))
        throw CLI::ValidationError("--dual", "dual expansion needs a 0-Grassmannian element");
      auto ks = ctx.assf.kschur_dual(w);
      r.dual = symfunc_str("Q", ks.Qschur);
      if (fam == Family::D) r.dual += "   (conjectural)";
      r.dual_json = symfunc_json("Q-schur", ks.Qschur, ctx.W.length(w));
    }
    return r;
  };

  if (all) {
    auto grass = grassmannian_elements_cached(ctx.W, maxdeg, resolved_cache_dir(o));
    for (int d = 1; d <= maxdeg; ++d)
      for (ElemId w : grass[d]) {
        if (dual && fam == Family::D && partition_of(ctx.W, w).color != 'b') continue;
        rows.push_back(make_row(w));
      }
  } else {
    Word w = parse_word(word_arg);
    for (int l : w)
      if (l > o.n)
        throw CLI::ValidationError("--word", "letter " + std::to_string(l) + " out of range 0.." +
                                                 std::to_string(o.n));
    rows.push_back(make_row(ctx.W.from_word(w)));
  }

  if (o.format == "json") {
    json out{{"family", std::string(1, family_char(fam))}, {"n", o.n}, {"rows", json::array()}};
    for (auto& r : rows) {
      json row{{"w", word_json(r.w)}, {"assf", r.assf_json}};
      if (dual) row["dual"] = r.dual_json;
      out["rows"].push_back(row);
    }
    std::cout << out.dump(2) << "\n";
  } else if (o.format == "tsv") {
    for (auto& r : rows) {
      std::cout << word_str(r.w) << '\t' << r.assf;
      if (dual) std::cout << '\t' << r.dual;
      std::cout << '\n';
    }
  } else {
    for (auto& r : rows) {
      std::cout << "F[" << word_str(r.w) << "] = " << r.assf << "\n";
      if (dual) std::cout << "kS[" << word_str(r.w) << "] = " << r.dual << "\n";
    }
  }
  return 0;
}

int run_pieri(const CommonOpts& o, int i, const std::string& word_arg, int rho_variant) {
  Family fam = parse_family(o.family);
  if (i < 1 || i > pieri_max_length(fam, o.n))
    throw CLI::ValidationError("--i", "index out of range 1.." +
                                          std::to_string(pieri_max_length(fam, o.n)));
  Context ctx(fam, o.n);
  Word zw = parse_word(word_arg);
  ElemId z = ctx.W.from_word(zw);
  if (!ctx.W.is_grassmannian(z))
    throw CLI::ValidationError("--word", "Pieri expansion needs a 0-Grassmannian element");

  ElemId x;
  if (fam == Family::D && i == o.n - 1) {
    if (rho_variant == 0)
      throw CLI::ValidationError("--i", "type D at i = n-1 needs --rho1 or --rho2");
    x = ctx.nilcox.rho_D(rho_variant);
  } else {
    if (rho_variant != 0)
      throw CLI::ValidationError("--rho1", "variant flags only apply in type D at i = n-1");
    x = ctx.nilcox.rho(i);
  }

  auto prod = ctx.nilcox.homology_product(x, z);
  if (o.format == "json") {
    json terms = json::array();
    for (auto& [y, c] : prod)
      terms.push_back(json{{"w", word_json(ctx.W.canonical_word(y))},
                           {"numerator", std::stoll(numerator(c).str())},
                           {"denominator", std::stoll(denominator(c).str())}});
    std::cout << json{{"family", std::string(1, family_char(fam))},
                      {"n", o.n},
                      {"i", i},
                      {"z", word_json(zw)},
                      {"terms", terms}}
                     .dump(2)
              << "\n";
  } else {
    std::vector<ElemId> keys;
    for (auto& [y, c] : prod) keys.push_back(y);
    std::sort(keys.begin(), keys.end(),
              [&](ElemId a, ElemId b) { return ctx.W.word_less(a, b); });
    bool first = true;
    for (ElemId y : keys) {
      if (!first) std::cout << " + ";
      first = false;
      Rat c = prod[y];
      if (c != 1) std::cout << rat_str(c) << " * ";
      std::cout << "xi[" << word_str(ctx.W.canonical_word(y)) << "]";
    }
    if (first) std::cout << "0";
    std::cout << "\n";
  }
  return 0;
}

int run_zdump(const CommonOpts& o) {
  Family fam = parse_family(o.family);
  Context ctx(fam, o.n);
  const PieriFactorSet& Z = ctx.nilcox.pieri_set();
  std::cout << "length\tword\tcc\tc\n";
  for (int l = 0; l <= Z.max_length; ++l)
    for (ElemId w : Z.graded[l]) {
      auto sp = support_profile(ctx.W, w);
      std::cout << l << '\t' << word_str(ctx.W.canonical_word(w)) << '\t' << sp.cc << '\t' << sp.c
                << '\n';
    }
  return 0;
}

int run_grassmannian(const CommonOpts& o, int max_length) {
  Family fam = parse_family(o.family);
  Context ctx(fam, o.n);
  auto levels = grassmannian_elements_cached(ctx.W, max_length, resolved_cache_dir(o));
  std::cout << family_char(fam) << ' ' << o.n << ' ' << max_length << '\n';
  for (auto& level : levels)
    for (ElemId w : level) std::cout << word_str(ctx.W.canonical_word(w)) << '\n';
  return 0;
}

struct SuiteItem {
  Family family;
  int n;
};

int run_verify(const CommonOpts& o, const std::string& suite, const std::string& element,
               int n_max) {
  std::vector<SuiteItem> items;
  if (o.family == "all") {
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      int lo = min_rank(f);
      int hi = n_max > 0 ? n_max : o.n;
      for (int n = lo; n <= hi; ++n) items.push_back({f, n});
    }
  } else {
    Family f = parse_family(o.family);
    if (n_max > 0) {
      for (int n = min_rank(f); n <= n_max; ++n) items.push_back({f, n});
    } else {
      items.push_back({f, o.n});
    }
  }

  int maxdeg = o.max_degree > 0 ? check_degree_warning(o, o.max_degree) : 5;

  auto run_item = [&](SuiteItem it) -> SuiteReport {
    Context ctx(it.family, it.n);
    SuiteReport rep;
    if (suite == "membership") {
      rep = element.empty() ? membership_suite(ctx) : membership_element(ctx, parse_word(element));
    } else if (suite == "relations") {
      rep = relations_suite(ctx);
    } else if (suite == "coproduct") {
      rep = coproduct_suite(ctx);
    } else if (suite == "typefree") {
      rep = typefree_suite(ctx);
    } else if (suite == "kernel") {
      rep = kernel_suite(ctx, maxdeg);
    } else if (suite == "duality") {
      rep = duality_suite(ctx, maxdeg);
    } else if (suite == "positivity") {
      rep = positivity_suite(ctx, maxdeg);
    } else if (suite == "typeD") {
      rep = typeD_suite(ctx, maxdeg);
    } else if (suite == "support") {
      rep = support_suite(ctx, maxdeg, o.seed);
    } else {
      throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
    }
    rep.suite = suite + " " + std::string(1, family_char(it.family)) + std::to_string(it.n);
    return rep;
  };

  std::vector<SuiteReport> reports(items.size());
  if (o.jobs > 1) {
    std::vector<std::future<SuiteReport>> futs;
    for (auto& it : items)
      futs.push_back(std::async(std::launch::async, [&run_item, it] { return run_item(it); }));
    for (size_t i = 0; i < futs.size(); ++i) reports[i] = futs[i].get();
  } else {
    for (size_t i = 0; i < items.size(); ++i) reports[i] = run_item(items[i]);
  }

  bool all_pass = true;
  json out = json::array();
  for (auto& rep : reports) {
    all_pass = all_pass && rep.pass();
    if (o.format == "json") {
      out.push_back(rep.to_json());
    } else {
      for (auto& c : rep.checks)
        std::cout << (c.pass ? "PASS" : "FAIL") << "  " << rep.suite << ": " << c.name
                  << (c.detail.empty() ? "" : "  [" + c.detail + "]") << "\n";
    }
  }
  if (o.format == "json") std::cout << out.dump(2) << "\n";
  return all_pass ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"affine Weyl group combinatorics: Pieri factors, nilCoxeter classes and affine "
               "Stanley symmetric functions for the classical families"};
  app.require_subcommand(1);

  CommonOpts o;

  auto* cmd_assf = app.add_subcommand("assf", "affine Stanley symmetric functions");
  std::string word_arg;
  bool all = false, dual = false;
  add_common(cmd_assf, o);
  cmd_assf->add_option("--word", word_arg, "reduced word, letters space- or comma-separated");
  cmd_assf->add_flag("--all", all, "all 0-Grassmannian elements up to the degree bound");
  cmd_assf->add_flag("--dual", dual, "also print the dual k-Schur expansion");

  auto* cmd_pieri = app.add_subcommand("pieri", "homology Pieri expansion xi_rho_i * xi_w");
  int pieri_i = 1;
  std::string pieri_word;
  bool rho1 = false, rho2 = false;
  add_common(cmd_pieri, o);
  cmd_pieri->add_option("--i", pieri_i, "index of the special class rho_i")->required();
  cmd_pieri->add_option("--word", pieri_word, "0-Grassmannian word");
  cmd_pieri->add_flag("--rho1", rho1, "type D: use rho^{(1)} at i = n-1");
  cmd_pieri->add_flag("--rho2", rho2, "type D: use rho^{(2)} at i = n-1");

  auto* cmd_verify = app.add_subcommand("verify", "verification suites");
  std::string suite, element;
  int n_max = 0;
  add_common(cmd_verify, o);
  cmd_verify->add_option("suite", suite,
                         "membership, relations, coproduct, typefree, kernel, duality, "
                         "positivity, typeD or support")
      ->required();
  cmd_verify->add_option("--element", element, "single word for the membership test");
  cmd_verify->add_option("--n-max", n_max, "run for every valid rank up to this bound");

  auto* cmd_zdump = app.add_subcommand("zdump", "Pieri factors as TSV: length word cc c");
  add_common(cmd_zdump, o);

  auto* cmd_grass = app.add_subcommand("grassmannian", "graded 0-Grassmannian word lists");
  int max_length = 5;
  add_common(cmd_grass, o);
  cmd_grass->add_option("--max-length", max_length, "length bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (app.got_subcommand(cmd_assf)) {
      if (!all && !cmd_assf->count("--word")) {
        std::cerr << "error: assf needs --word or --all\n";
        return 2;
      }
      return run_assf(o, word_arg, all, dual);
    }
    if (app.got_subcommand(cmd_pieri))
      return run_pieri(o, pieri_i, pieri_word, rho1 ? 1 : (rho2 ? 2 : 0));
    if (app.got_subcommand(cmd_verify)) return run_verify(o, suite, element, n_max);
    if (app.got_subcommand(cmd_zdump)) return run_zdump(o);
    if (app.got_subcommand(cmd_grass)) return run_grassmannian(o, max_length);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const RankError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
