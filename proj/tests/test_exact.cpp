#include <random>

#include "doctest.h"
#include "tanaka/linalg.hpp"

using namespace tanaka;

namespace {

Gaussian random_gaussian(std::mt19937& rng, int range = 3) {
  std::uniform_int_distribution<int> d(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  return Gaussian(rat(d(rng), den(rng)), rat(d(rng), den(rng)));
}

Vec random_vec(std::mt19937& rng, std::size_t n) {
  Vec v(n);
  for (auto& x : v) x = random_gaussian(rng);
  return v;
}

// Sparse random vectors make dependent families likely.
Vec sparse_vec(std::mt19937& rng, std::size_t n) {
  std::uniform_int_distribution<int> coin(0, 2);
  Vec v(n);
  for (auto& x : v)
    if (coin(rng) == 0) x = random_gaussian(rng, 2);
  return v;
}

}  // namespace

TEST_CASE("rational normalization and text form") {
  CHECK(to_string(rat(2, 4)) == "1/2");
  CHECK(to_string(rat(-6, 3)) == "-2");
  CHECK(to_string(rat(0, 5)) == "0");
  CHECK(rat(3, -6) == rat(-1, 2));
  CHECK(rat(3, -6).get_den() == 2);
  CHECK(parse_rational("-10/4") == rat(-5, 2));
  CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
  CHECK_THROWS_AS(parse_rational("abc"), ParseError);
}

TEST_CASE("gaussian serialization round trips") {
  Gaussian half_i(rat(0), rat(1, 2));
  CHECK(half_i.str() == "0+1/2*i");
  CHECK(Gaussian(rat(1, 3), rat(-2, 5)).str() == "1/3-2/5*i");
  CHECK(Gaussian(rat(7)).str() == "7");
  CHECK(half_i.pretty() == "i/2");
  CHECK(Gaussian(rat(0), rat(-3, 2)).pretty() == "-3i/2");
  CHECK(Gaussian::parse("i/2") == half_i);
  CHECK(Gaussian::parse("-i") == Gaussian(rat(0), rat(-1)));
  CHECK(Gaussian::parse("2*i") == Gaussian(rat(0), rat(2)));
  CHECK(Gaussian::parse("(1+i)") == Gaussian(rat(1), rat(1)));
  std::mt19937 rng(7);
  for (int n = 0; n < 200; ++n) {
    Gaussian g = random_gaussian(rng, 20);
    CHECK(Gaussian::parse(g.str()) == g);
    CHECK(Gaussian::parse(g.pretty()) == g);
  }
}

TEST_CASE("gaussian field axioms") {
  std::mt19937 rng(11);
  for (int n = 0; n < 200; ++n) {
    Gaussian a = random_gaussian(rng), b = random_gaussian(rng), c = random_gaussian(rng);
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a.conj().conj() == a);
    CHECK((a * b).conj() == a.conj() * b.conj());
    CHECK(a.norm2() >= 0);
    CHECK((a * a.conj()) == Gaussian(a.norm2()));
    if (!a.is_zero()) CHECK((b / a) * a == b);
  }
  CHECK_THROWS_AS(Gaussian(1) / Gaussian(0), DomainError);
  CHECK(Gaussian::i() * Gaussian::i() == Gaussian(-1));
}

TEST_CASE("kernel examples") {
  CHECK(kernel(Matrix::identity(2)).dim() == 0);
  CHECK(kernel(Matrix(3, 3)).dim() == 3);

  Gaussian i = Gaussian::i();
  Matrix m = Matrix::from_rows({{1, i}, {-i, 1}}, 2);
  Subspace k = kernel(m);
  CHECK(k.dim() == 1);
  Vec v = {-i, Gaussian(1)};
  CHECK(k.contains(v));
  CHECK(is_zero(m * v));
}

TEST_CASE("rank plus nullity") {
  std::mt19937 rng(3);
  for (int n = 0; n < 100; ++n) {
    std::uniform_int_distribution<int> sz(1, 6);
    std::size_t r = sz(rng), c = sz(rng);
    std::vector<Vec> rows;
    for (std::size_t j = 0; j < r; ++j) rows.push_back(sparse_vec(rng, c));
    Matrix m = Matrix::from_rows(rows, c);
    Subspace k = kernel(m);
    CHECK(rank(m) + k.dim() == c);
    for (const auto& b : k.basis()) CHECK(is_zero(m * b));
  }
}

TEST_CASE("solve examples") {
  Vec b = {Gaussian(rat(3, 2)), Gaussian(rat(0), rat(2))};
  AffineSolution s = solve(Matrix::identity(2), b);
  CHECK(s.consistent);
  CHECK(s.particular == b);
  CHECK(s.kernel.dim() == 0);

  Matrix a = Matrix::from_rows({{1, 1}}, 2);
  AffineSolution t = solve(a, {Gaussian(2)});
  CHECK(t.consistent);
  CHECK(t.particular == Vec{Gaussian(2), Gaussian(0)});
  CHECK(a * t.particular == Vec{Gaussian(2)});
  CHECK(t.kernel.dim() == 1);
  CHECK(t.kernel.contains({Gaussian(1), Gaussian(-1)}));

  AffineSolution u = solve(Matrix::from_rows({{1}, {0}}, 1), {Gaussian(0), Gaussian(1)});
  CHECK_FALSE(u.consistent);
}

TEST_CASE("subspace lattice examples") {
  auto e = [](std::size_t i) { return unit_vec(3, i); };
  Subspace s1 = Subspace::span(3, {e(0)});
  Subspace s2 = Subspace::span(3, {e(1)});
  CHECK(intersect(s1, s2).dim() == 0);
  Subspace a = Subspace::span(3, {e(0), e(1)});
  Subspace b = Subspace::span(3, {e(1), e(2)});
  CHECK(intersect(a, b) == Subspace::span(3, {e(1)}));
  CHECK(intersect(a, a) == a);
  CHECK(sum(a, b) == Subspace::full(3));
  CHECK_THROWS_AS(intersect(a, Subspace(4)), DimensionError);
}

TEST_CASE("dimension formula on random subspace pairs") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> amb(1, 12);
  for (int n = 0; n < 500; ++n) {
    std::size_t d = amb(rng);
    std::uniform_int_distribution<int> cnt(0, static_cast<int>(d));
    std::vector<Vec> va, vb;
    int na = cnt(rng), nb = cnt(rng);
    for (int j = 0; j < na; ++j) va.push_back(sparse_vec(rng, d));
    for (int j = 0; j < nb; ++j) vb.push_back(sparse_vec(rng, d));
    Subspace a = Subspace::span(d, va), b = Subspace::span(d, vb);
    Subspace s = sum(a, b), m = intersect(a, b);
    CHECK(a.dim() + b.dim() == s.dim() + m.dim());
    CHECK(m.is_subspace_of(a));
    CHECK(m.is_subspace_of(b));
    CHECK(a.is_subspace_of(s));
  }
}

TEST_CASE("canonical form does not depend on the spanning set") {
  std::mt19937 rng(99);
  for (int n = 0; n < 100; ++n) {
    std::size_t d = 6;
    std::vector<Vec> base;
    for (int j = 0; j < 3; ++j) base.push_back(random_vec(rng, d));
    std::vector<Vec> mixed;
    for (int j = 0; j < 4; ++j) {
      Vec v(d);
      for (const auto& b : base) axpy(v, random_gaussian(rng), b);
      mixed.push_back(v);
    }
    Subspace a = Subspace::span(d, base);
    Subspace b = Subspace::span(d, mixed);
    if (b.dim() == a.dim()) CHECK(a == b);
    for (std::size_t j = 0; j < a.dim(); ++j) CHECK(a.basis()[j][a.pivots()[j]] == Gaussian(1));
  }
}
