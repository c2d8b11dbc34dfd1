#include <doctest.h>

#include "bvs/weyl.hpp"
#include "support.hpp"

using namespace bvs;
using testing::Raw;

namespace {

// All subwords of a reduced word of w; u <= w iff one of them multiplies to u.
bool brute_bruhat(const Perm& u, const Perm& w) {
  Word rw = lex_reduced_word(w);
  for (unsigned mask = 0; mask < (1u << rw.size()); ++mask) {
    Word sub;
    for (std::size_t k = 0; k < rw.size(); ++k)
      if (mask & (1u << k)) sub.push_back(rw[k]);
    if (testing::raw_of_word(w.n(), sub) == u.one_line()) return true;
  }
  return false;
}

std::vector<Perm> all_perms(int n) {
  Raw r = testing::raw_identity(n);
  std::vector<Perm> out;
  do out.emplace_back(r);
  while (std::next_permutation(r.begin(), r.end()));
  return out;
}

}  // namespace

TEST_CASE("permutation basics") {
  Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  CHECK((s1 * s2).one_line() == std::vector<int>{2, 3, 1});
  CHECK(Perm::longest(3).one_line() == std::vector<int>{3, 2, 1});
  CHECK(Perm::longest(4).length() == 6);
  CHECK((s1 * s2 * s1) == (s2 * s1 * s2));
  for (const Perm& w : all_perms(4)) {
    CHECK(w.length() == testing::raw_length(w.one_line()));
    CHECK((w * w.inverse()) == Perm::identity(4));
    CHECK(perm_of_word(4, lex_reduced_word(w)) == w);
    CHECK(static_cast<int>(lex_reduced_word(w).size()) == w.length());
  }
}

TEST_CASE("Demazure steps") {
  Perm id = Perm::identity(2);
  CHECK(demazure_step(id, 1, Side::Right) == Perm::simple(2, 1));
  CHECK(demazure_step(Perm::simple(2, 1), 1, Side::Right) == Perm::simple(2, 1));
  CHECK(demazure_step(Perm::simple(3, 1), 2, Side::Left) == Perm::simple(3, 2) * Perm::simple(3, 1));
}

TEST_CASE("Demazure products") {
  CHECK(demazure_product(3, {1, 2, 2, 1, 1, 2, 1}) == Perm::longest(3));
  CHECK(demazure_product(3, {}) == Perm::identity(3));
  CHECK(demazure_product(2, {1, 1}) == Perm::simple(2, 1));
  CHECK(demazure_product(3, {2, 1}) == Perm::simple(3, 2) * Perm::simple(3, 1));
}

TEST_CASE("Demazure product matches the subword maximum") {
  auto rng = testing::rng_for(11);
  for (int t = 0; t < 200; ++t) {
    int n = 2 + static_cast<int>(rng() % 3);
    int L = static_cast<int>(rng() % 9);
    Word w;
    for (int k = 0; k < L; ++k) w.push_back(1 + static_cast<int>(rng() % static_cast<unsigned>(n - 1)));
    CHECK(demazure_product(n, w).one_line() == testing::brute_demazure(n, w));
  }
}

TEST_CASE("Bruhat order") {
  CHECK(bruhat_leq(Perm::identity(3), Perm::longest(3)));
  CHECK_FALSE(bruhat_leq(Perm::longest(3), Perm::simple(3, 1)));
  Perm s1 = Perm::simple(3, 1), s2 = Perm::simple(3, 2);
  CHECK_FALSE(bruhat_leq(s1 * s2, s2 * s1));
  for (const Perm& u : all_perms(4))
    for (const Perm& w : all_perms(4)) CHECK(bruhat_leq(u, w) == brute_bruhat(u, w));
}

TEST_CASE("reduced words") {
  auto r3 = reduced_words(Perm::longest(3));
  CHECK(r3 == std::vector<Word>{{1, 2, 1}, {2, 1, 2}});
  auto g = reduced_word_graph(Perm::longest(3));
  REQUIRE(g.edges.size() == 1);
  CHECK(g.edges[0].move.kind == 3);
  CHECK(reduced_words(Perm::simple(3, 1)) == std::vector<Word>{{1}});
  CHECK(reduced_word_graph(Perm::simple(3, 1)).edges.empty());

  // Brute force: all words of length 6 over {1,2,3} that multiply to w0.
  std::set<Word> brute;
  for (int code = 0; code < 729; ++code) {
    Word w;
    for (int k = 0, c = code; k < 6; ++k, c /= 3) w.push_back(1 + c % 3);
    if (testing::raw_of_word(4, w) == testing::raw_longest(4)) brute.insert(w);
  }
  auto r4 = reduced_words(Perm::longest(4));
  CHECK(r4.size() == 16);
  CHECK(std::set<Word>(r4.begin(), r4.end()) == brute);
}

TEST_CASE("move chains") {
  auto chain = move_chain(3, {1, 2, 1}, {2, 1, 2});
  REQUIRE(chain.size() == 1);
  CHECK(chain[0] == WordMove{0, 3});
  CHECK(move_chain(3, {1, 2, 1}, {1, 2, 1}).empty());

  auto words = reduced_words(Perm::longest(4));
  for (const Word& s : words)
    for (const Word& t : words) {
      Word x = s;
      for (const auto& m : move_chain(4, s, t)) x = apply_word_move(x, m);
      CHECK(x == t);
    }
  CHECK_THROWS_AS(move_chain(3, {1, 1}, {2, 2}), WeylError);
}

TEST_CASE("BFS targets do not depend on the exploration order") {
  for (const Word& s : reduced_words(Perm::longest(4)))
    for (int i = 1; i <= 3; ++i) {
      auto accept = [i](const Word& x) { return x.back() == i; };
      Word a = s, b = s;
      for (const auto& m : bfs_moves(s, accept, MoveOrder::LeftmostFirst)) a = apply_word_move(a, m);
      for (const auto& m : bfs_moves(s, accept, MoveOrder::RightmostFirst)) b = apply_word_move(b, m);
      CHECK(a == b);
      CHECK(a.back() == i);
    }
}
