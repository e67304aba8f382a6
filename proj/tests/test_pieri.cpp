#include <doctest.h>

#include <set>

#include "affsym/checks.hpp"

using namespace affsym;

namespace {

std::set<Word> words_of(WeylGroup& W, const std::vector<ElemId>& elems) {
  std::set<Word> out;
  for (ElemId e : elems) out.insert(W.canonical_word(e));
  return out;
}

}  // namespace

TEST_CASE("pieri generator words") {
  SUBCASE("B3") {
    WeylGroup W(build_cartan(Family::B, 3));
    std::set<ElemId> gens;
    for (auto& w : pieri_generator_words(W)) gens.insert(W.from_word(w));
    std::set<ElemId> expect;
    for (auto w : {Word{0, 2, 3, 2, 0}, Word{1, 2, 3, 2, 1}, Word{2, 3, 2, 1, 0},
                   Word{3, 2, 1, 0, 2}, Word{2, 1, 0, 2, 3}, Word{1, 0, 2, 3, 2}})
      expect.insert(W.from_word(w));
    CHECK(gens == expect);
  }
  SUBCASE("A2: length-2 cyclically decreasing words on {0,1,2}") {
    WeylGroup W(build_cartan(Family::A, 2));
    auto words = pieri_generator_words(W);
    CHECK(words.size() == 3);
    for (auto& w : words) CHECK(w.size() == 2);
  }
  SUBCASE("D4 includes 0 2 4 3 2 0") {
    WeylGroup W(build_cartan(Family::D, 4));
    std::set<ElemId> gens;
    for (auto& w : pieri_generator_words(W)) gens.insert(W.from_word(w));
    CHECK(gens.count(W.from_word(Word{0, 2, 4, 3, 2, 0})) == 1);
    CHECK(gens.size() == 8);  // 2n translation classes
  }
}

TEST_CASE("pieri factor ideals") {
  WeylGroup W(build_cartan(Family::B, 3));
  auto Z = pieri_factors(W);
  CHECK(Z.graded[0] == std::vector<ElemId>{W.identity()});
  CHECK(words_of(W, Z.graded[1]) == std::set<Word>{{0}, {1}, {2}, {3}});

  // rho_5 is the unique Grassmannian element of Z_5, and generally rho_i is
  // the unique one in Z_i
  for (int i = 1; i <= 5; ++i) {
    std::vector<ElemId> grass;
    for (ElemId w : Z.graded[i])
      if (W.is_grassmannian(w)) grass.push_back(w);
    REQUIRE(grass.size() == 1);
  }
  std::vector<ElemId> g5;
  for (ElemId w : Z.graded[5])
    if (W.is_grassmannian(w)) g5.push_back(w);
  CHECK(W.canonical_word(g5[0]) == Word{0, 2, 3, 2, 0});

  // downward closure under Bruhat order
  for (int l = 1; l <= Z.max_length; ++l)
    for (ElemId w : Z.graded[l])
      for (ElemId v : W.lower_covers(w)) CHECK(Z.contains(v, l - 1));
}

TEST_CASE("typefree pieri factors agree") {
  for (auto [f, n] : std::vector<std::pair<Family, int>>{
           {Family::A, 2}, {Family::A, 3}, {Family::B, 3}, {Family::C, 2}, {Family::D, 4}}) {
    CAPTURE(family_char(f));
    CAPTURE(n);
    Context ctx(f, n);
    CHECK(typefree_suite(ctx).pass());
  }
}

TEST_CASE("support profiles") {
  SUBCASE("paper example in B7") {
    WeylGroup W(build_cartan(Family::B, 7));
    auto sp = support_profile(W, W.from_word(Word{3, 6, 2, 1}));
    CHECK(sp.supp == std::set<int>{1, 2, 3, 6});
    CHECK(sp.Supp == std::set<int>{0, 1, 2, 3, 6});
    CHECK(sp.cc == 2);
    REQUIRE(sp.complement_components.size() == 2);
    CHECK(sp.complement_components[0] == std::vector<int>{4, 5});
    CHECK(sp.complement_components[1] == std::vector<int>{7});
  }
  SUBCASE("identity") {
    WeylGroup W(build_cartan(Family::B, 3));
    auto sp = support_profile(W, W.identity());
    CHECK(sp.supp.empty());
    CHECK(sp.cc == 1);
    CHECK(sp.c == 0);
  }
  SUBCASE("single s_2 in B3") {
    WeylGroup W(build_cartan(Family::B, 3));
    auto sp = support_profile(W, W.simple(2));
    CHECK(sp.Supp == std::set<int>{2});
    CHECK(sp.cc == 2);
    REQUIRE(sp.complement_components.size() == 2);
    CHECK(sp.complement_components[0] == std::vector<int>{0, 1});
    CHECK(sp.complement_components[1] == std::vector<int>{3});
  }
  SUBCASE("reduced word independence") {
    Context ctx(Family::B, 3);
    CHECK(support_suite(ctx, 5, 0x9e3779b97f4a7c15ull).pass());
  }
}

TEST_CASE("segments") {
  SUBCASE("B3 tables") {
    WeylGroup W(build_cartan(Family::B, 3));
    auto segs = segments(W);
    auto find = [&](int kind, int len) -> const Segment& {
      for (auto& s : segs)
        if (s.kind == kind && s.len == len) return s;
      REQUIRE(false);
      return segs[0];
    };
    CHECK(find(0, 5).word == Word{0, 2, 3, 2, 0});
    CHECK(find(0, 1).word == Word{0});
    CHECK(find(1, 5).word == Word{1, 2, 3, 2, 1});
    CHECK(find(0, 4).word == Word{2, 3, 2, 0});
  }
  SUBCASE("D4 colored segments") {
    WeylGroup W(build_cartan(Family::D, 4));
    auto segs = segments(W);
    std::set<Word> len3_kind1;
    for (auto& s : segs)
      if (s.kind == 1 && s.len == 3) len3_kind1.insert(s.word);
    CHECK(len3_kind1 == std::set<Word>{{3, 2, 1}, {4, 2, 1}});
  }
  SUBCASE("Grassmannian Pieri factors are segments") {
    for (auto [f, n] : std::vector<std::pair<Family, int>>{{Family::B, 3}, {Family::D, 4}}) {
      WeylGroup W(build_cartan(f, n));
      auto Z = pieri_factors(W);
      auto segs = segments(W);
      std::set<ElemId> seg_elems;
      for (auto& s : segs) seg_elems.insert(s.elem);
      for (int l = 1; l <= Z.max_length; ++l)
        for (ElemId w : Z.graded[l])
          if (W.is_grassmannian(w) || W.is_one_grassmannian(w)) CHECK(seg_elems.count(w) == 1);
    }
  }
}

TEST_CASE("segment factorizations and partitions") {
  WeylGroup W(build_cartan(Family::B, 3));

  auto lam = [&](const Word& w) { return partition_of(W, W.from_word(w)).parts; };
  CHECK(lam({2, 0}) == Partition{2});
  CHECK(lam({0, 2, 3, 2, 0}) == Partition{5});
  CHECK(lam({1, 2, 0}) == Partition{2, 1});
  CHECK(lam({3, 2, 0}) == Partition{3});
  CHECK(lam({1, 3, 2, 0}) == Partition{3, 1});
  CHECK(lam({2, 3, 2, 0}) == Partition{4});
  // the two length-5 rows with fractional top terms m_{3,2} and m_{4,1}
  CHECK(lam({2, 1, 3, 2, 0}) == Partition{3, 2});
  CHECK(lam({1, 2, 3, 2, 0}) == Partition{4, 1});

  CHECK(partition_of(W, W.identity()).parts.empty());
  CHECK_THROWS(segment_factorization(W, W.simple(2)));  // not Grassmannian

  SUBCASE("roundtrip and decreasing lengths") {
    for (auto [f, n, L] : std::vector<std::tuple<Family, int, int>>{{Family::B, 3, 7},
                                                                    {Family::D, 4, 6}}) {
      WeylGroup Wx(build_cartan(f, n));
      auto g = Wx.grassmannian_elements(L);
      for (int l = 1; l <= L; ++l)
        for (ElemId w : g[l]) {
          auto fact = segment_factorization(Wx, w);
          for (size_t i = 1; i < fact.size(); ++i) CHECK(fact[i].len <= fact[i - 1].len);
          CHECK(element_of(Wx, partition_of(Wx, w)) == w);
        }
    }
  }

  SUBCASE("counts match affine partitions") {
    for (auto [f, n, L] : std::vector<std::tuple<Family, int, int>>{{Family::B, 3, 7},
                                                                    {Family::B, 4, 6},
                                                                    {Family::D, 4, 7},
                                                                    {Family::D, 5, 6}}) {
      WeylGroup Wx(build_cartan(f, n));
      auto g = Wx.grassmannian_elements(L);
      for (int d = 1; d <= L; ++d) {
        CAPTURE(family_char(f));
        CAPTURE(n);
        CAPTURE(d);
        CHECK(g[d].size() == affine_partitions(f, n, d).size());
      }
    }
  }
}

TEST_CASE("partition validation") {
  CHECK(valid_affine_partition(Family::B, 3, {{5}, 0}));
  CHECK(!valid_affine_partition(Family::B, 3, {{6}, 0}));
  CHECK(!valid_affine_partition(Family::B, 3, {{2, 2}, 0}));
  CHECK(valid_affine_partition(Family::B, 3, {{5, 5, 3}, 0}));
  CHECK(valid_affine_partition(Family::D, 4, {{3, 3}, 'b'}));
  CHECK(valid_affine_partition(Family::D, 4, {{3, 3}, 'c'}));
  CHECK(!valid_affine_partition(Family::D, 4, {{2, 2}, 'b'}));
  CHECK(!valid_affine_partition(Family::D, 4, {{2}, 'c'}));  // c needs a part n-1
  CHECK(!valid_affine_partition(Family::D, 4, {{2}, 0}));    // color required

  WeylGroup W(build_cartan(Family::D, 4));
  CHECK_THROWS(element_of(W, AffinePartition{{2}, 'c'}));
}

TEST_CASE("partition bijections") {
  CHECK(bijection_B({4}) == Partition{1, 1, 1, 1});
  CHECK(bijection_B({3, 1}) == Partition{3, 1});
  CHECK(bijection_B({5, 4, 2}) == Partition{5, 1, 1, 1, 1, 1, 1});

  // type D: color c keeps parts n-1 whole, color b splits them
  CHECK(bijection_D(5, {{4, 3}, 'c'}) == Partition{4, 3});
  CHECK(bijection_D(5, {{4, 3}, 'b'}) == Partition{3, 1, 1, 1, 1});
  CHECK(bijection_D(5, {{6}, 'b'}) == Partition{3, 3});

  SUBCASE("size preserving and odd for type B") {
    for (int d = 1; d <= 6; ++d)
      for (auto& ap : affine_partitions(Family::B, 3, d)) {
        auto img = bijection_B(ap.parts);
        CHECK(weight(img) == d);
        for (int part : img) CHECK(part % 2 == 1);
        CHECK((img.empty() || img[0] <= 5));
      }
  }
  SUBCASE("injective on P^D_5 for odd rank") {
    std::set<Partition> seen_out;
    for (int d = 1; d <= 6; ++d)
      for (auto& ap : affine_partitions(Family::D, 5, d)) {
        auto img = bijection_D(5, ap);
        CHECK(weight(img) == d);
        CHECK(seen_out.insert(img).second);
      }
  }
}
