#include <doctest.h>

#include "bvs/weave.hpp"
#include "support.hpp"

using namespace bvs;
using testing::kRunning;

namespace {

Weave running_weave() { return build_double_inductive(type_a(2), double_string_of(type_a(2), kRunning)); }

int count(const std::string& s, const std::string& needle) {
  int k = 0;
  for (std::size_t p = s.find(needle); p != std::string::npos; p = s.find(needle, p + 1)) ++k;
  return k;
}

}  // namespace

TEST_CASE("double inductive weave of the running example") {
  Weave w = running_weave();
  check_weave(w);
  CHECK(w.depth() == 7);
  CHECK(vertex_crossings(w) == std::vector<int>{2, 3, 5, 6});
  CHECK(slice_word(w, 0).empty());
  CHECK(slice_word(w, 5) == Word{2, 1, 2});
  CHECK(slice_word(w, 6) == Word{1, 2, 1});
  CHECK(slice_word(w, 7) == Word{1, 2, 1});
  VertexCounts v = count_vertices(w);
  CHECK(v.trivalent == 4);
  CHECK_THROWS_AS(slice_word(w, 8), WeaveError);
}

TEST_CASE("weaves in rank one") {
  CartanData a1 = type_a(1);
  Weave one = build_double_inductive(a1, {{1, Side::Right}});
  CHECK(one.edges.size() == 1);
  CHECK(vertex_crossings(one).empty());
  Weave two = build_double_inductive(a1, {{1, Side::Right}, {1, Side::Right}});
  CHECK(vertex_crossings(two) == std::vector<int>{1});
  CHECK(count_vertices(two).trivalent == 1);
}

TEST_CASE("right and left inductive weaves") {
  CartanData a2 = type_a(2);
  CHECK(count_vertices(right_inductive(a2, {1, 2, 1})).trivalent == 0);
  // Trivalent vertices sit at the depths where the prefix Demazure product
  // stops growing; depth k is keyed k - 1.
  Weave r = right_inductive(a2, {1, 2, 2, 1, 1, 2, 1});
  CHECK(vertex_crossings(r) == std::vector<int>{2, 4, 5, 6});

  auto rng = testing::rng_for(29);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 10, true);
    Word beta(b.begin(), b.end());
    Word rev(beta.rbegin(), beta.rend());
    Weave left = left_inductive(c, beta);
    Weave right = right_inductive(c, rev);
    check_weave(left);
    CHECK(vertex_crossings(left) == vertex_crossings(right));
    std::vector<int> keys;
    for (std::size_t k = 1; k <= rev.size(); ++k) {
      Word prefix(rev.begin(), rev.begin() + static_cast<long>(k));
      Word shorter(rev.begin(), rev.begin() + static_cast<long>(k - 1));
      if (testing::raw_length(testing::brute_demazure(n, prefix)) ==
          testing::raw_length(testing::brute_demazure(n, shorter)))
        keys.push_back(static_cast<int>(k) - 1);
    }
    CHECK(vertex_crossings(right) == keys);
    for (int k = 0; k <= left.depth(); ++k) {
      Word l = slice_word(left, k), rr = slice_word(right, k);
      CHECK(perm_of_word(n, l) == perm_of_word(n, Word(rr.rbegin(), rr.rend())));
    }
  }
}

TEST_CASE("slices are reduced words of the w-sequence") {
  auto rng = testing::rng_for(31);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 10);
    DoubleString s = double_string_of(c, b);
    Weave w = build_double_inductive(c, s);
    check_weave(w);
    auto ws = w_sequence_of_string(c, s);
    for (int k = 0; k <= w.depth(); ++k) {
      CHECK(is_reduced(n, slice_word(w, k)));
      CHECK(perm_of_word(n, slice_word(w, k)) == ws[k]);
    }
    CHECK(static_cast<int>(vertex_crossings(w).size()) == static_cast<int>(b.size()) - n * (n - 1) / 2);
    // Solid crossings e of the word and vertex crossings L - e of the weave.
    std::vector<int> mirrored;
    for (int e : solid_indices(c, b)) mirrored.push_back(static_cast<int>(b.size()) - e);
    CHECK(mirrored == vertex_crossings(w));
  }
}

TEST_CASE("truncation") {
  Weave w = running_weave();
  Weave t = truncate(w, 4);
  check_weave(t);
  CHECK(t.depth() == 4);
  CHECK(vertex_crossings(t) == std::vector<int>{2, 3});
  CHECK(slice_word(t, 4) == slice_word(w, 4));
  CHECK(truncate(w, 7) == w);
}

TEST_CASE("serialization") {
  Weave empty = build_double_inductive(type_a(1), {});
  CHECK(serialize_dot(empty) == "graph weave {\n}\n");

  Weave star = build_double_inductive(type_a(1), {{1, Side::Right}, {1, Side::Right}});
  std::string dot = serialize_dot(star);
  CHECK(count(dot, " -- ") == 3);
  CHECK(count(dot, "shape=circle") == 1);

  Weave w = running_weave();
  CHECK(parse_weave_json(serialize_json(w)) == w);
  CHECK(serialize_dot(w) == serialize_dot(running_weave()));
  CHECK_THROWS_AS(parse_weave_json("{\"n\": 3}"), WeaveError);
}

TEST_CASE("G2 weaves are rejected") {
  CartanData g2 = cartan_from_matrix({{2, -3}, {-1, 2}}, {1, 3});
  CHECK_THROWS(build_double_inductive(g2, {{1, Side::Right}}));
}
