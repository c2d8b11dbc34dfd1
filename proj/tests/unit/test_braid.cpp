#include <doctest.h>

#include "bvs/braid.hpp"
#include "support.hpp"

using namespace bvs;
using testing::kRunning;
using testing::Raw;

namespace {

Raw dem_right(const Raw& w, int i) {
  Raw x = testing::raw_right(w, i);
  return testing::raw_length(x) > testing::raw_length(w) ? x : w;
}

Raw dem_left(const Raw& w, int i) {
  Raw x = testing::raw_left(w, i);
  return testing::raw_length(x) > testing::raw_length(w) ? x : w;
}

// w[L] = id and w[c-1] = s_{|i|*} w[c] for negative letters, w[c] s_i for
// positive ones, both as Demazure steps.
std::vector<Raw> oracle_w_sequence(int n, const DoubleBraidWord& b) {
  std::vector<Raw> w(b.size() + 1);
  w[b.size()] = testing::raw_identity(n);
  for (std::size_t c = b.size(); c >= 1; --c) {
    int i = b[c - 1];
    w[c - 1] = i > 0 ? dem_right(w[c], i) : dem_left(w[c], n + i);
  }
  return w;
}

}  // namespace

TEST_CASE("single word of a double braid word") {
  CartanData a2 = type_a(2);
  CHECK(to_single(a2, kRunning) == Word{1, 2, 2, 1, 1, 2, 1});
  CHECK(to_single(a2, {1, 2}) == Word{2, 1});
  CHECK(to_single(a2, {-1}) == Word{2});
  CHECK_THROWS_AS(to_single(a2, {1, 3}), std::invalid_argument);
  CHECK_THROWS_AS(to_single(a2, {0}), std::invalid_argument);
}

TEST_CASE("Demazure product of double words") {
  CartanData a2 = type_a(2);
  CHECK(demazure_of_double(a2, kRunning) == Perm::longest(3));
  CHECK(demazure_of_double(a2, {}) == Perm::identity(3));
  CHECK(demazure_of_double(type_a(1), {1, -1}) == Perm::simple(2, 1));
  auto rng = testing::rng_for(3);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    DoubleBraidWord b;
    int L = static_cast<int>(rng() % 8);
    for (int k = 0; k < L; ++k) {
      int i = 1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1));
      b.push_back(rng() % 2 ? i : -i);
    }
    CartanData c = type_a(n - 1);
    CHECK(demazure_of_double(c, b) == demazure_product(n, to_single(c, b)));
    CHECK(demazure_of_double(c, b).one_line() == testing::brute_demazure(n, to_single(c, b)));
  }
}

TEST_CASE("w-sequence and solid crossings of the running example") {
  CartanData a2 = type_a(2);
  WSequence ws = w_sequence(a2, kRunning);
  Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  CHECK(ws.at(7) == Perm::identity(3));
  CHECK(ws.at(6) == s2);
  for (int c : {5, 4, 3}) CHECK(ws.at(c) == s2 * s1);
  for (int c : {2, 1, 0}) CHECK(ws.at(c) == s2 * s1 * s2);
  CHECK(solid_indices(a2, kRunning) == std::vector<int>{5, 4, 2, 1});
}

TEST_CASE("solid crossings in small cases") {
  CHECK(solid_indices(type_a(2), {1, 2, 1}).empty());
  CHECK(solid_indices(type_a(1), {1, 1}) == std::vector<int>{1});
}

TEST_CASE("w-sequence matches the recursion oracle") {
  auto rng = testing::rng_for(5);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    DoubleBraidWord b = testing::random_full_word(rng, n, 10);
    CartanData c = type_a(n - 1);
    auto oracle = oracle_w_sequence(n, b);
    WSequence ws = w_sequence(c, b);
    for (std::size_t k = 0; k < oracle.size(); ++k) CHECK(ws.w[k].one_line() == oracle[k]);
    int lw0 = n * (n - 1) / 2;
    CHECK(static_cast<int>(solid_indices(c, b).size()) == static_cast<int>(b.size()) - lw0);
  }
}

TEST_CASE("double strings") {
  CartanData a2 = type_a(2);
  DoubleString s = double_string_of(a2, kRunning);
  CHECK(s == parse_double_string(a2, "2R 1R 1*L 1R 2R 1R 2*L"));
  CHECK(to_string(s) == "2R 1R 2L 1R 2R 1R 1L");
  CHECK(double_word_of(a2, s) == kRunning);

  DoubleString pos = double_string_of(a2, {1, 2, 2});
  CHECK(pos == DoubleString{{2, Side::Right}, {2, Side::Right}, {1, Side::Right}});

  auto ws = w_sequence_of_string(a2, s);
  CHECK(ws.front() == Perm::identity(3));
  for (int k = 5; k <= 7; ++k) CHECK(ws[k] == Perm::longest(3));
  CHECK(w_sequence_of_string(a2, {}).size() == 1);

  CHECK_THROWS_AS(parse_double_string(a2, "2X"), BraidError);
}

TEST_CASE("double string round trip and mirror identity") {
  auto rng = testing::rng_for(17);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 10);
    DoubleString s = double_string_of(c, b);
    CHECK(double_word_of(c, s) == b);
    CHECK(parse_double_string(c, to_string(s)) == s);
    WSequence ws = w_sequence(c, b);
    auto wss = w_sequence_of_string(c, s);
    for (int k = 0; k <= ws.length(); ++k) CHECK(wss[k] == ws.mirrored(k));
  }
}

TEST_CASE("mutable and frozen crossings") {
  CartanData a2 = type_a(2);
  CHECK(is_mutable(a2, kRunning, 5));
  CHECK(is_mutable(a2, kRunning, 4));
  CHECK_FALSE(is_mutable(a2, kRunning, 2));
  CHECK_FALSE(is_mutable(a2, kRunning, 1));
  CHECK_THROWS_AS(v_sequence(a2, kRunning, 3), BraidError);

  // Read from the right, the repeated letter 1 is the first that fails to
  // raise the length; one crossing gives a one-dimensional torus, so frozen.
  CHECK(solid_indices(a2, {1, 2, 1, 1}) == std::vector<int>{3});
  CHECK_FALSE(is_mutable(a2, {1, 2, 1, 1}, 3));

  auto rng = testing::rng_for(19);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 10);
    WSequence ws = w_sequence(c, b);
    for (int e : solid_indices(c, b)) {
      auto v = v_sequence(c, b, e);
      for (int k = e; k <= ws.length(); ++k) CHECK(v[k] == ws.at(k));
    }
  }
}

TEST_CASE("double braid moves") {
  CartanData a2 = type_a(2);
  CHECK(apply_move(a2, {1, 2, 1, 2}, MoveKind::B4, 1).word == DoubleBraidWord{1, 2, 1, -1});
  CHECK(apply_move(a2, {1, -2}, MoveKind::B1, 1).word == DoubleBraidWord{-2, 1});
  CHECK(apply_move(a2, {1, 2, 1}, MoveKind::B3, 1).word == DoubleBraidWord{2, 1, 2});
  CHECK(apply_move(type_a(3), {1, 3}, MoveKind::B2, 1).word == DoubleBraidWord{3, 1});
  CHECK(apply_move(a2, {2, 1}, MoveKind::B5, 1).word == DoubleBraidWord{-2, 1});
  CHECK_THROWS_AS(apply_move(a2, {1, 2}, MoveKind::B2, 1), BraidError);
  CHECK_THROWS_AS(apply_move(a2, {1, 2, 2}, MoveKind::B3, 1), BraidError);
  CHECK_FALSE(move_applies(a2, {1, 2, 1}, MoveKind::B3, 2));

  // Every move is an involution on words.
  auto rng = testing::rng_for(23);
  for (int t = 0; t < 100; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    CartanData c = type_a(n - 1);
    DoubleBraidWord b = testing::random_full_word(rng, n, 10);
    for (MoveKind k : {MoveKind::B1, MoveKind::B2, MoveKind::B3, MoveKind::B4, MoveKind::B5})
      for (int p = 1; p <= static_cast<int>(b.size()); ++p) {
        if (!move_applies(c, b, k, p)) continue;
        MoveResult m = apply_move(c, b, k, p);
        CHECK(apply_move(c, m.word, k, p).word == b);
        if (k != MoveKind::B5) CHECK(demazure_of_double(c, m.word) == demazure_of_double(c, b));
      }
  }
  CHECK(parse_move_kind("B3") == MoveKind::B3);
  CHECK_THROWS_AS(parse_move_kind("B6"), BraidError);
}

TEST_CASE("braid words from Richardson pairs") {
  CartanData a2 = type_a(2);
  Word full = richardson_to_braid(a2, {1, 2, 1}, {1, 2, 1});
  CHECK(full.size() == 6);
  CHECK(demazure_product(3, full) == Perm::longest(3));
  CHECK(richardson_to_braid(a2, {}, {1, 2}) == Word{2, 1});
  // v = s1, so the first word is reduced for w0 s1 = s1 s2.
  Word mixed = richardson_to_braid(a2, {1, 2}, {1, 2});
  CHECK(testing::brute_demazure(3, mixed) == testing::raw_longest(3));
  CHECK_THROWS_AS(richardson_to_braid(a2, {1, 1}, {}), BraidError);
}
