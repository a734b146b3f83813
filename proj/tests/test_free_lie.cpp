#include "oracle.hpp"

#include "schur/free_lie.hpp"
#include "schur/lie_core.hpp"

#include <doctest.h>

#include <random>

using namespace schur;

namespace {

BracketExpr g(std::size_t k) { return BracketExpr::generator(k); }
BracketExpr br(BracketExpr a, BracketExpr b) { return BracketExpr::bracket(std::move(a), std::move(b)); }

// image in the free associative algebra, [a,b] -> ab - ba
oracle::Poly assoc(const BracketExpr& e) {
  if (e.is_generator()) return {{{e.generator_index()}, 1}};
  return oracle::commutator(assoc(e.left()), assoc(e.right()));
}

oracle::Poly assoc(const FreeLieElement& f) {
  oracle::Poly out;
  for (const auto& [w, c] : f.terms()) oracle::add_into(out, assoc(standard_bracketing(w)), c);
  return out;
}

BracketExpr random_tree(std::mt19937& rng, std::size_t degree, std::size_t letters) {
  if (degree == 1) return g(std::uniform_int_distribution<std::size_t>(0, letters - 1)(rng));
  const std::size_t left = std::uniform_int_distribution<std::size_t>(1, degree - 1)(rng);
  return br(random_tree(rng, left, letters), random_tree(rng, degree - left, letters));
}

int mobius(int n) {
  int result = 1;
  for (int p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    n /= p;
    if (n % p == 0) return 0;
    result = -result;
  }
  return n > 1 ? -result : result;
}

// necklace count (1/k) sum_{d|k} mu(d) q^{k/d}
long witt(int q, int k) {
  long s = 0;
  for (int d = 1; d <= k; ++d) {
    if (k % d) continue;
    long p = 1;
    for (int t = 0; t < k / d; ++t) p *= q;
    s += mobius(d) * p;
  }
  return s / k;
}

}  // namespace

TEST_CASE("left and right normed brackets") {
  CHECK(left_normed({0}) == g(0));
  CHECK(left_normed({0, 1, 2}) == br(br(g(0), g(1)), g(2)));
  CHECK(left_normed({0, 1, 2, 3}) == br(br(br(g(0), g(1)), g(2)), g(3)));
  CHECK(right_normed({0}) == g(0));
  CHECK(right_normed({0, 1, 2}) == br(g(0), br(g(1), g(2))));
  CHECK(right_normed({1, 2, 3, 4}) == br(g(1), br(g(2), br(g(3), g(4)))));
  CHECK(right_normed({1, 2, 3, 4}).to_string() == "[x2,[x3,[x4,x5]]]");
  CHECK_THROWS_AS(left_normed({}), std::invalid_argument);
  CHECK_THROWS_AS(right_normed({}), std::invalid_argument);
}

TEST_CASE("Lyndon words") {
  CHECK(is_lyndon({0, 1}));
  CHECK(is_lyndon({0, 0, 1}));
  CHECK_FALSE(is_lyndon({1, 0}));
  CHECK_FALSE(is_lyndon({0, 1, 0, 1}));
  CHECK(standard_factorization({0, 0, 1}) == std::pair<Word, Word>{{0}, {0, 1}});
  CHECK(standard_factorization({0, 1, 1}) == std::pair<Word, Word>{{0, 1}, {1}});
  CHECK(lyndon_words(2, 3) == std::vector<Word>{{0}, {1}, {0, 1}, {0, 0, 1}, {0, 1, 1}});

  SUBCASE("counts match the necklace formula") {
    for (int d = 1; d <= 3; ++d)
      for (int k = 1; k <= 6; ++k) {
        std::size_t count = 0;
        for (const auto& w : lyndon_words(d, k)) {
          CHECK(is_lyndon(w));
          if (w.size() == static_cast<std::size_t>(k)) ++count;
        }
        CAPTURE(d);
        CAPTURE(k);
        CHECK(static_cast<long>(count) == witt(d, k));
      }
  }
}

TEST_CASE("expand_to_lyndon on small cases") {
  CHECK(expand_to_lyndon(br(g(0), g(0))).is_zero());
  const FreeLieElement r = expand_to_lyndon(br(g(1), g(0)));
  CHECK(r.terms().size() == 1);
  CHECK(r.coefficient({0, 1}) == -1);
  // cyclic Jacobi sum
  const BracketSum jac{{1, br(br(g(0), g(1)), g(2))}, {1, br(br(g(1), g(2)), g(0))}, {1, br(br(g(2), g(0)), g(1))}};
  CHECK(expand_to_lyndon(jac).is_zero());
}

TEST_CASE("expand_to_lyndon agrees with the associative embedding") {
  std::mt19937 rng(11);
  for (int t = 0; t < 300; ++t) {
    const std::size_t deg = std::uniform_int_distribution<std::size_t>(1, 7)(rng);
    const BracketExpr e = random_tree(rng, deg, 3);
    CAPTURE(e.to_string());
    const FreeLieElement f = expand_to_lyndon(e);
    for (const auto& [w, c] : f.terms()) CHECK(is_lyndon(w));
    CHECK(assoc(f) == assoc(e));
  }
}

TEST_CASE("expand_to_lyndon kills antisymmetry and Jacobi consequences") {
  std::mt19937 rng(5);
  for (int t = 0; t < 100; ++t) {
    const std::size_t total = std::uniform_int_distribution<std::size_t>(2, 6)(rng);
    const std::size_t left = std::uniform_int_distribution<std::size_t>(1, total - 1)(rng);
    const BracketExpr e = random_tree(rng, left, 3);
    const BracketExpr f = random_tree(rng, total - left, 3);
    CHECK(expand_to_lyndon(br(e, f)) == Rational(-1) * expand_to_lyndon(br(f, e)));
  }
  for (int t = 0; t < 100; ++t) {
    const BracketExpr a = random_tree(rng, std::uniform_int_distribution<std::size_t>(1, 2)(rng), 3);
    const BracketExpr b = random_tree(rng, std::uniform_int_distribution<std::size_t>(1, 2)(rng), 3);
    const BracketExpr c = random_tree(rng, std::uniform_int_distribution<std::size_t>(1, 2)(rng), 3);
    const BracketSum jac{{1, br(br(a, b), c)}, {1, br(br(b, c), a)}, {1, br(br(c, a), b)}};
    CHECK(expand_to_lyndon(jac).is_zero());
  }
}

TEST_CASE("commutator identity expressions") {
  SUBCASE("i = 3 reproduces the four spelled-out terms") {
    // [[x1,x2],x3,x4]_l + [x4,[x1,x2],x3]_l + [[x3,x4],x1,x2]_l + [x2,[x3,x4],x1]_l
    const BracketSum s = lemma31_expression(3);
    REQUIRE(s.size() == 4);
    CHECK(s[0].expr == left_normed({0, 1, 2, 3}));
    CHECK(s[1].expr == br(br(g(3), br(g(0), g(1))), g(2)));
    CHECK(s[2].expr == br(br(br(g(2), g(3)), g(0)), g(1)));
    CHECK(s[3].expr == br(br(g(1), br(g(2), g(3))), g(0)));
    for (const auto& t : s) CHECK(t.coeff == 1);
  }
  SUBCASE("i = 4 has five terms") {
    const BracketSum s = lemma31_expression(4);
    REQUIRE(s.size() == 5);
    CHECK(s[2].expr == br(br(br(g(3), g(4)), br(g(0), g(1))), g(2)));
    CHECK(s[3].expr == br(br(right_normed({2, 3, 4}), g(0)), g(1)));
    CHECK(s[4].expr == br(right_normed({1, 2, 3, 4}), g(0)));
  }
  SUBCASE("every commutator has weight i") {
    for (std::size_t i = 2; i <= 7; ++i) {
      const auto terms = identity_terms(i);
      CHECK(terms.size() == i + 1);
      for (const auto& t : terms) CHECK(t.commutator.degree() == i);
    }
  }
  CHECK_THROWS_AS(lemma31_expression(2), std::invalid_argument);
  CHECK_THROWS_AS(verify_lemma31(2), std::invalid_argument);
}

TEST_CASE("the commutator identity rewrites to zero") {
  for (std::size_t i = 3; i <= kDefaultArityCap + 1; ++i) {
    CAPTURE(i);
    CHECK(verify_lemma31(i).is_zero());
  }
  // a single flipped sign must leave a residual
  BracketSum broken = lemma31_expression(4);
  broken[2].coeff = -1;
  CHECK_FALSE(expand_to_lyndon(broken).is_zero());
}

TEST_CASE("free nilpotent algebras") {
  const LieAlgebra f22 = free_nilpotent(2, 2);
  CHECK(f22.dim() == 3);
  StructureConstants h3(3);
  h3.set(0, 1, unit_vector(3, 2));
  CHECK(f22.structure() == h3);

  const LieAlgebra f23 = free_nilpotent(2, 3);
  CHECK(f23.dim() == 5);
  const auto p23 = series_profile(f23);
  CHECK(p23.derived_dim == 3);
  CHECK(p23.nilpotency_class == 3);

  const LieAlgebra f32 = free_nilpotent(3, 2);
  CHECK(f32.dim() == 6);
  CHECK(series_profile(f32).derived_dim == 3);

  for (std::size_t d = 1; d <= 3; ++d)
    for (std::size_t c = 1; c <= 4; ++c) {
      if (d == 3 && c == 4) continue;
      const auto p = series_profile(free_nilpotent(d, c));
      CAPTURE(d);
      CAPTURE(c);
      CHECK(p.gen_count == d);
      CHECK(p.nilpotency_class == (d == 1 ? 1 : c));
    }
  CHECK_THROWS_AS(free_nilpotent(0, 2), std::invalid_argument);
}

TEST_CASE("evaluate binds generators to vectors") {
  const LieAlgebra f23 = free_nilpotent(2, 3);
  const std::vector<Vector> xs{unit_vector(5, 0), unit_vector(5, 1)};
  // the identity at i = 3 holds in any Lie algebra, here with repeated arguments
  Vector acc = zero_vector(5);
  std::vector<Vector> args{xs[0], xs[1], xs[0], xs[1]};
  for (const auto& t : lemma31_expression(3)) {
    const Vector v = evaluate(t.expr, f23, args);
    for (std::size_t k = 0; k < 5; ++k) acc[k] += v[k];
  }
  CHECK(is_zero(acc));
  CHECK(evaluate(left_normed({0, 1}), f23, xs) == unit_vector(5, 2));
}
