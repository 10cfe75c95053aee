#include <algorithm>
#include <random>

#include "doctest.h"
#include "tanaka/cochain.hpp"
#include "tanaka/so32.hpp"

using namespace tanaka;
using namespace tanaka::cochain;

namespace {

const int kGrade[10] = {-2, -1, -1, 0, 0, 0, 0, 1, 1, 2};
const int kGradeDim[5] = {1, 2, 4, 2, 1};  // grades -2..2

std::size_t oracle_dim(int ell, int k) {
  // Argument grade multisets: choose ell of {-2, -1, -1}.
  std::vector<std::vector<int>> subsets;
  int args[3] = {-2, -1, -1};
  for (unsigned mask = 0; mask < 8; ++mask) {
    std::vector<int> s;
    for (int b = 0; b < 3; ++b)
      if (mask & (1u << b)) s.push_back(args[b]);
    if (static_cast<int>(s.size()) == ell) subsets.push_back(s);
  }
  std::size_t total = 0;
  for (const auto& s : subsets) {
    int g = k;
    for (int a : s) g += a;
    if (g >= -2 && g <= 2) total += static_cast<std::size_t>(kGradeDim[g + 2]);
  }
  return total;
}

// Alternating evaluation: sign of the permutation sorting seq, 0 on repeats.
int perm_sign(std::vector<std::size_t> seq) {
  int sign = 1;
  for (std::size_t a = 0; a < seq.size(); ++a)
    for (std::size_t b = a + 1; b < seq.size(); ++b) {
      if (seq[a] == seq[b]) return 0;
      if (seq[a] > seq[b]) sign = -sign;
    }
  return sign;
}

// Coboundary evaluated straight from the defining formula on basis arguments.
Vec oracle_coboundary_value(const Cochain& c, const std::vector<std::size_t>& x) {
  Vec out(10);
  std::size_t n = x.size();
  for (std::size_t s = 0; s < n; ++s) {
    std::vector<std::size_t> rest = x;
    rest.erase(rest.begin() + static_cast<long>(s));
    Vec term = so32::bracket(so32::basis_vec(x[s]), c.value(rest));
    axpy(out, Gaussian(s % 2 == 0 ? 1 : -1), term);
  }
  for (std::size_t s = 0; s < n; ++s)
    for (std::size_t t = s + 1; t < n; ++t) {
      Vec br = so32::bracket(so32::basis_vec(x[s]), so32::basis_vec(x[t]));
      std::vector<std::size_t> rest;
      for (std::size_t u = 0; u < n; ++u)
        if (u != s && u != t) rest.push_back(x[u]);
      for (std::size_t b = 0; b < 3; ++b) {
        if (br[b].is_zero()) continue;
        std::vector<std::size_t> args = {b};
        args.insert(args.end(), rest.begin(), rest.end());
        axpy(out, br[b] * Gaussian((s + t) % 2 == 0 ? 1 : -1), c.value(args));
      }
      for (std::size_t b = 3; b < 10; ++b) REQUIRE(br[b].is_zero());
    }
  return out;
}

Cochain oracle_coboundary(const Cochain& c) {
  Cochain out = Cochain::zero(c.ell + 1, c.k);
  const auto& mons = monomials(c.ell + 1);
  for (std::size_t i = 0; i < mons.size(); ++i) {
    Vec v = oracle_coboundary_value(c, mons[i]);
    for (std::size_t a = 0; a < 10; ++a) out.coeffs[slot(c.ell + 1, i, a)] = v[a];
  }
  return out;
}

// Killing-dual positive basis written in terms of its own pairing, solved by hand:
// Z_b is the element of span(E_1^1, E_2^1, E^2) with kappa(Z_b, e_c) = delta.
std::vector<Vec> oracle_duals() {
  std::vector<Vec> out;
  for (std::size_t b = 0; b < 3; ++b) {
    // kappa pairs index c with exactly one positive index; find its partner and scale.
    Vec z(10);
    for (std::size_t h = 7; h < 10; ++h) {
      Gaussian kc = so32::killing(so32::basis_vec(b), so32::basis_vec(h));
      if (!kc.is_zero()) z[h] = Gaussian(1) / kc;
    }
    out.push_back(z);
  }
  return out;
}

// Lie algebra homology boundary on wedge(Z) (x) g, transported back to cochains.
Cochain oracle_codifferential(const Cochain& c) {
  auto z = oracle_duals();
  // Bracket of two Z's expanded in the Z basis (the span is closed).
  auto z_bracket = [&](std::size_t s, std::size_t t) {
    Vec w = so32::bracket(z[s], z[t]);
    Vec coords(3);
    for (std::size_t b = 0; b < 3; ++b) {
      std::size_t h = 0;
      while (z[b][h].is_zero()) ++h;
      coords[b] = w[h] / z[b][h];
    }
    return coords;
  };
  Cochain out = Cochain::zero(c.ell - 1, c.k);
  const auto& mons = monomials(c.ell);
  for (std::size_t i = 0; i < mons.size(); ++i)
    for (std::size_t a = 0; a < 10; ++a) {
      Gaussian coef = c.coeffs[slot(c.ell, i, a)];
      if (coef.is_zero()) continue;
      const auto& J = mons[i];
      auto add = [&](std::vector<std::size_t> seq, const Vec& value, const Gaussian& scale) {
        int sign = perm_sign(seq);
        if (sign == 0) return;
        std::sort(seq.begin(), seq.end());
        const auto& target = monomials(c.ell - 1);
        std::size_t m = static_cast<std::size_t>(std::find(target.begin(), target.end(), seq) - target.begin());
        for (std::size_t v = 0; v < 10; ++v) out.coeffs[slot(c.ell - 1, m, v)] += scale * Gaussian(sign) * value[v];
      };
      for (std::size_t s = 0; s < J.size(); ++s) {
        std::vector<std::size_t> rest = J;
        rest.erase(rest.begin() + static_cast<long>(s));
        add(rest, so32::bracket(z[J[s]], so32::basis_vec(a)), coef * Gaussian(s % 2 == 0 ? 1 : -1));
      }
      for (std::size_t s = 0; s < J.size(); ++s)
        for (std::size_t t = s + 1; t < J.size(); ++t) {
          Vec br = z_bracket(J[s], J[t]);
          std::vector<std::size_t> rest;
          for (std::size_t u = 0; u < J.size(); ++u)
            if (u != s && u != t) rest.push_back(J[u]);
          for (std::size_t b = 0; b < 3; ++b) {
            if (br[b].is_zero()) continue;
            std::vector<std::size_t> seq = {b};
            seq.insert(seq.end(), rest.begin(), rest.end());
            add(seq, so32::basis_vec(a), -coef * br[b] * Gaussian((s + t) % 2 == 0 ? 1 : -1));
          }
        }
    }
  return out;
}

std::vector<Vec> degree_zero_and_positive() {
  std::vector<Vec> out;
  for (std::size_t x = 3; x < 10; ++x) out.push_back(so32::basis_vec(x));
  return out;
}

}  // namespace

TEST_CASE("cochain space dimensions") {
  CHECK(cochain_space(1, 1).dim() == 10);
  CHECK(cochain_space(2, 1).dim() == 4);
  CHECK(cochain_space(1, 2).dim() == 8);
  CHECK(cochain_space(2, 2).dim() == 8);
  CHECK(cochain_space(3, 2).dim() == 1);
  CHECK(cochain_space(1, 3).dim() == 4);
  CHECK(cochain_space(2, 3).dim() == 10);
  CHECK(cochain_space(0, 2).dim() == 1);
  for (int ell = 0; ell <= 3; ++ell)
    for (int k = -4; k <= 8; ++k) {
      CAPTURE(ell);
      CAPTURE(k);
      CHECK(cochain_space(ell, k).dim() == oracle_dim(ell, k));
    }
  std::size_t total = 0;
  for (int k = -6; k <= 8; ++k) total += cochain_space(2, k).dim();
  CHECK(total == full_dim(2));
  CHECK_THROWS_AS(cochain_space(4, 0), DomainError);
  CHECK_THROWS_AS(cochain_space(-1, 0), DomainError);
}

TEST_CASE("homogeneity is enforced") {
  Vec v(full_dim(1));
  v[slot(1, 0, 9)] = Gaussian(1);  // e^-2 -> E^2 has degree 4
  CHECK(Cochain::make(1, 4, v).k == 4);
  CHECK_THROWS_AS(Cochain::make(1, 3, v), DomainError);
  CHECK_THROWS_AS(Cochain::make(1, 4, Vec(5)), DimensionError);
}

TEST_CASE("coboundary of a 0-cochain") {
  Cochain c = Cochain::make(0, 2, unit_vec(10, 9));
  Cochain d = coboundary(c);
  Vec on_em2 = so32::to_complex(d.value({0}));
  Vec expected(10);
  expected[so32::cx::E0_10] = Gaussian(-1);
  expected[so32::cx::E0_01] = Gaussian(-1);
  CHECK(on_em2 == expected);
  CHECK_THROWS_AS(coboundary(Cochain::zero(3, 0)), DomainError);
  CHECK_THROWS_AS(codifferential(Cochain::zero(0, 0)), DomainError);
}

TEST_CASE("coboundary agrees with the defining formula") {
  for (int ell = 0; ell <= 2; ++ell)
    for (std::size_t s = 0; s < full_dim(ell); ++s) {
      Cochain c{ell, slot_degree(ell, s), unit_vec(full_dim(ell), s)};
      CHECK(coboundary(c) == oracle_coboundary(c));
    }
}

TEST_CASE("adjoint-type 1-cochains are closed") {
  for (std::size_t zi = 0; zi < 10; ++zi) {
    int g = so32::grades()[zi];
    Cochain c = Cochain::zero(1, g);
    for (std::size_t y = 0; y < 3; ++y) {
      Vec v = so32::bracket(so32::basis_vec(y), so32::basis_vec(zi));
      for (std::size_t a = 0; a < 10; ++a) c.coeffs[slot(1, y, a)] = v[a];
    }
    c = Cochain::make(1, g, c.coeffs);
    CHECK(coboundary(c).is_zero());
  }
}

TEST_CASE("dual arguments pair with the arguments") {
  const auto& z = dual_arguments();
  for (std::size_t b = 0; b < 3; ++b)
    for (std::size_t c = 0; c < 3; ++c)
      CHECK(so32::killing(z[b], so32::basis_vec(c)) == Gaussian(b == c ? 1 : 0));
  CHECK(z == oracle_duals());
}

TEST_CASE("codifferential agrees with the homology boundary") {
  for (int ell = 1; ell <= 3; ++ell)
    for (std::size_t s = 0; s < full_dim(ell); ++s) {
      Cochain c{ell, slot_degree(ell, s), unit_vec(full_dim(ell), s)};
      CHECK(codifferential(c) == oracle_codifferential(c));
    }
  CHECK(codifferential(Cochain::zero(2, 2)).is_zero());
}

TEST_CASE("both operators square to zero and preserve degree") {
  for (int ell = 0; ell <= 1; ++ell) CHECK((coboundary_matrix(ell + 1) * coboundary_matrix(ell)).is_zero());
  for (int ell = 2; ell <= 3; ++ell) CHECK((codifferential_matrix(ell - 1) * codifferential_matrix(ell)).is_zero());
  for (std::size_t s = 0; s < cochain_space(1, 1).dim(); ++s)
    CHECK(coboundary(coboundary(cochain_space(1, 1).basis(s))).is_zero());
  for (std::size_t s = 0; s < cochain_space(2, 2).dim(); ++s)
    CHECK(codifferential(codifferential(cochain_space(2, 2).basis(s))).is_zero());
  for (int ell = 0; ell <= 3; ++ell)
    for (std::size_t s = 0; s < full_dim(ell); ++s) {
      int k = slot_degree(ell, s);
      Cochain c{ell, k, unit_vec(full_dim(ell), s)};
      if (ell < 3) CHECK_NOTHROW(Cochain::make(ell + 1, k, coboundary(c).coeffs));
      if (ell > 0) CHECK_NOTHROW(Cochain::make(ell - 1, k, codifferential(c).coeffs));
    }
}

TEST_CASE("equivariance under the degree-zero part") {
  for (std::size_t x = 3; x < 7; ++x) {
    Vec xv = so32::basis_vec(x);
    for (int ell = 0; ell <= 2; ++ell)
      CHECK(coboundary_matrix(ell) * action_matrix(xv, ell) == action_matrix(xv, ell + 1) * coboundary_matrix(ell));
    for (int ell = 1; ell <= 3; ++ell)
      CHECK(codifferential_matrix(ell) * action_matrix(xv, ell) ==
            action_matrix(xv, ell - 1) * codifferential_matrix(ell));
  }
}

TEST_CASE("coclosed cochains are invariant under the parabolic part") {
  for (const Vec& x : degree_zero_and_positive())
    for (int ell = 1; ell <= 3; ++ell) {
      Matrix act_x = action_matrix(x, ell);
      for (int k = -2; k <= 6; ++k) {
        Subspace kc = coclosed_space(ell, k);
        int shift = so32::grades()[std::find_if(x.begin(), x.end(), [](const Gaussian& g) { return !g.is_zero(); }) - x.begin()];
        Subspace target = coclosed_space(ell, k + shift);
        for (const auto& b : kc.basis()) CHECK(target.contains(act_x * b));
      }
    }
}

TEST_CASE("Hodge decomposition") {
  for (int ell = 0; ell <= 3; ++ell)
    for (int k = -2; k <= 6; ++k) {
      CAPTURE(ell);
      CAPTURE(k);
      Subspace e = exact_space(ell, k), h = harmonic_space(ell, k), x = coexact_space(ell, k);
      CHECK(e.dim() + h.dim() + x.dim() == cochain_space(ell, k).dim());
      CHECK(sum(sum(e, h), x) == cochain_space(ell, k).as_subspace());
      CHECK(static_cast<std::size_t>(cohomology_dim(ell, k)) == h.dim());
      CHECK(sum(h, x) == coclosed_space(ell, k));
      CHECK(sum(e, h) == closed_space(ell, k));
      if (cochain_space(ell, k).dim() == 0) CHECK(cohomology_dim(ell, k) == 0);
    }
  std::mt19937 rng(31);
  std::uniform_int_distribution<int> d(-4, 4);
  for (int k = 1; k <= 4; ++k) {
    CochainSpace sp = cochain_space(2, k);
    CHECK(sp.dim() == exact_space(2, k).dim() + harmonic_space(2, k).dim() + coexact_space(2, k).dim());
    for (int n = 0; n < 20; ++n) {
      Vec local(sp.dim());
      for (auto& g : local) g = Gaussian(rat(d(rng), 2), rat(d(rng)));
      Cochain c = Cochain::make(2, k, sp.embed(local));
      HodgeTriple t = hodge_decompose(c);
      CHECK(t.exact + t.harmonic + t.coexact == c);
      CHECK(exact_space(2, k).contains(t.exact.coeffs));
      CHECK(harmonic_space(2, k).contains(t.harmonic.coeffs));
      CHECK(coexact_space(2, k).contains(t.coexact.coeffs));
      // projectors are idempotent
      HodgeTriple again = hodge_decompose(t.exact);
      CHECK(again.exact == t.exact);
      CHECK(again.harmonic.is_zero());
      CHECK(hodge_decompose(t.harmonic).harmonic == t.harmonic);
      CHECK(hodge_decompose(t.coexact).coexact == t.coexact);
    }
    // exact input
    Cochain b = cochain_space(1, k).basis(0);
    Cochain db = coboundary(b);
    HodgeTriple t = hodge_decompose(db);
    CHECK(t.exact == db);
    CHECK(t.harmonic.is_zero());
    CHECK(t.coexact.is_zero());
  }
}

TEST_CASE("low-degree cohomology") {
  for (int k = -4; k < 0; ++k) {
    // H^0_k = g^k intersected with the kernel of ad of the arguments.
    std::vector<Vec> gk;
    for (std::size_t a = 0; a < 10; ++a)
      if (kGrade[a] == k) gk.push_back(so32::basis_vec(a));
    std::size_t invariant = 0;
    if (!gk.empty()) {
      std::vector<Vec> rows;
      Matrix stack(30, gk.size());
      for (std::size_t j = 0; j < gk.size(); ++j)
        for (std::size_t y = 0; y < 3; ++y) {
          Vec br = so32::bracket(so32::basis_vec(y), gk[j]);
          for (std::size_t a = 0; a < 10; ++a) stack(y * 10 + a, j) = br[a];
        }
      invariant = kernel(stack).dim();
    }
    CHECK(static_cast<std::size_t>(cohomology_dim(0, k)) == invariant);
  }
  CHECK(cohomology_dim(0, -2) == 1);
}

TEST_CASE("cochain text form") {
  Cochain c = Cochain::make(0, 2, unit_vec(10, 9));
  CHECK(format(c) == "() -> E^{2}");
  CHECK(format(coboundary(c)).rfind("e^{-2} -> ", 0) == 0);
  CHECK(format(Cochain::zero(1, 0)) == "0");
}
