#include <algorithm>
#include <random>
#include <vector>

#include "doctest.h"
#include "ppforge/errors.hpp"
#include "ppforge/poly.hpp"

using namespace ppforge;

namespace {

SparsePoly poly(const FieldPtr& f, std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> terms) {
  std::vector<RawTerm> raw;
  for (auto [e, c] : terms) raw.push_back({e, f->element(c)});
  return poly_reduce(f, raw);
}

// Random raw polynomial with exponents possibly well above q.
std::vector<RawTerm> random_raw(const FieldPtr& f, std::mt19937_64& rng, int count) {
  std::vector<RawTerm> raw;
  for (int k = 0; k < count; ++k) raw.push_back({rng() % (3 * f->q()), f->element(rng() % f->q())});
  return raw;
}

// Direct evaluation of raw terms by repeated multiplication.
Element eval_raw(const FieldPtr& f, const std::vector<RawTerm>& raw, const Element& c) {
  Element acc = f->zero();
  for (const auto& t : raw) {
    Element pw = f->one();
    for (std::uint64_t k = 0; k < t.exponent; ++k) pw = pw * c;
    acc += t.coeff * pw;
  }
  return acc;
}

}  // namespace

TEST_CASE("reduce_exponent keeps x^(q-1) distinct from 1") {
  CHECK(reduce_exponent(0, 7) == 0);
  CHECK(reduce_exponent(6, 7) == 6);
  CHECK(reduce_exponent(7, 7) == 1);
  CHECK(reduce_exponent(8, 7) == 2);
  CHECK(reduce_exponent(12, 7) == 6);
  CHECK(reduce_exponent(13, 7) == 1);
  CHECK(reduce_exponent(5, 2) == 1);
}

TEST_CASE("poly_eval examples") {
  auto f7 = make_field(7, 1);
  CHECK(poly_eval(SparsePoly::x(f7), f7->element(5)) == f7->element(5));
  CHECK(poly_eval(poly(f7, {{5, 1}, {3, 2}, {1, 5}}), f7->one()) == f7->one());
  CHECK(poly_eval(poly(f7, {{5, 3}}), f7->element(2)) == f7->element(5));
  CHECK(poly_eval(poly(f7, {{0, 4}}), f7->zero()) == f7->element(4));  // 0^0 = 1
  CHECK_THROWS_AS(poly_eval(SparsePoly::x(f7), make_field(5, 1)->one()), FieldMismatch);
}

TEST_CASE("poly_reduce examples") {
  auto f7 = make_field(7, 1);
  CHECK(poly(f7, {{7, 1}}) == SparsePoly::x(f7));
  CHECK(poly(f7, {{8, 1}}) == SparsePoly::monomial(f7, f7->one(), 2));
  CHECK(poly(f7, {{7, 1}, {1, 6}}).is_zero());
  CHECK(poly(f7, {{3, 0}}).is_zero());
  CHECK(poly(f7, {{6, 1}}) != poly(f7, {{0, 1}}));
  CHECK(poly(f7, {{2, 3}, {8, 5}}) == poly(f7, {{2, 1}}));
}

TEST_CASE("poly_reduce is idempotent and preserves values") {
  std::mt19937_64 rng(17);
  for (auto [p, n] : {std::pair{7ULL, 1U}, {2ULL, 3U}, {3ULL, 2U}, {2ULL, 9U}, {5ULL, 3U}, {2ULL, 1U}}) {
    auto f = make_field(p, n);
    for (int k = 0; k < 10; ++k) {
      const auto raw = random_raw(f, rng, 6);
      const SparsePoly once = poly_reduce(f, raw);
      std::vector<RawTerm> again;
      for (auto [e, c] : once.terms()) again.push_back({e, f->element(c)});
      CHECK(poly_reduce(f, again) == once);
      for (const auto& [e, c] : once.terms()) {
        CHECK(e < f->q());
        CHECK(c != 0);
      }
      if (f->q() <= 32) {
        for (std::uint64_t c = 0; c < f->q(); ++c) CHECK(once(f->element(c)) == eval_raw(f, raw, f->element(c)));
      } else {
        const auto vals = value_table(once);
        for (std::uint64_t c = 0; c < f->q(); ++c) {
          Element acc = f->zero();
          for (const auto& t : raw) acc += t.coeff * f->element(c).pow_u(t.exponent);
          REQUIRE(vals[c] == acc.index());
        }
      }
    }
  }
}

TEST_CASE("arithmetic on sparse polynomials") {
  auto f7 = make_field(7, 1);
  const SparsePoly x = SparsePoly::x(f7);
  const SparsePoly a = poly(f7, {{1, 1}, {0, 1}});  // x + 1
  CHECK(a * a == poly(f7, {{2, 1}, {1, 2}, {0, 1}}));
  CHECK(a - a == SparsePoly(f7));
  CHECK(f7->element(3) * x == poly(f7, {{1, 3}}));
  CHECK((x * x * x * x * x * x * x) == x);
  CHECK(poly_pow(a, 7) == poly(f7, {{7, 1}, {0, 1}}));
  CHECK(poly_pow(x, 0) == SparsePoly::constant(f7, f7->one()));
  CHECK(poly(f7, {{5, 1}, {3, 2}, {1, 5}}).to_string() == "x^5 + 2*x^3 + 5*x");
  CHECK(SparsePoly(f7).to_string() == "0");
}

TEST_CASE("poly_compose_mod examples") {
  auto f7 = make_field(7, 1);
  const SparsePoly g = poly(f7, {{4, 2}, {1, 3}, {0, 1}});
  CHECK(poly_compose_mod(SparsePoly::x(f7), g) == g);
  const SparsePoly h = poly(f7, {{5, 3}});
  CHECK(poly_compose_mod(h, h) == SparsePoly::x(f7));
  auto f4 = make_field(2, 2);
  const SparsePoly sq = SparsePoly::monomial(f4, f4->one(), 2);
  CHECK(poly_compose_mod(sq, sq) == SparsePoly::x(f4));
  CHECK_THROWS_AS(poly_compose_mod(g, SparsePoly::x(make_field(5, 1))), FieldMismatch);
}

TEST_CASE("composition agrees with pointwise evaluation") {
  std::mt19937_64 rng(23);
  for (auto [p, n] : {std::pair{7ULL, 1U}, {2ULL, 4U}, {3ULL, 2U}, {13ULL, 1U}, {5ULL, 2U}}) {
    auto f = make_field(p, n);
    for (int k = 0; k < 8; ++k) {
      const SparsePoly a = poly_reduce(f, random_raw(f, rng, 4));
      const SparsePoly b = poly_reduce(f, random_raw(f, rng, 4));
      const SparsePoly ab = poly_compose_mod(a, b);
      for (std::uint64_t c = 0; c < f->q(); ++c) {
        const Element e = f->element(c);
        CHECK(ab(e) == a(b(e)));
      }
    }
  }
}

TEST_CASE("is_permutation examples") {
  auto f7 = make_field(7, 1);
  CHECK(is_permutation(SparsePoly::x(f7)));
  CHECK(is_permutation(SparsePoly::x(make_field(2, 5))));
  CHECK_FALSE(is_permutation(poly(f7, {{2, 1}})));
  CHECK(is_permutation(poly(f7, {{5, 1}, {3, 2}, {1, 5}})));
  CHECK_THROWS_AS(is_permutation(SparsePoly::x(make_field(2, 17))), CapExceeded);
  CHECK_NOTHROW(is_permutation(SparsePoly::x(make_field(2, 17)), std::uint64_t{1} << 17));
}

TEST_CASE("lagrange_inverse examples") {
  auto f5 = make_field(5, 1);
  CHECK(lagrange_inverse(SparsePoly::x(f5)) == SparsePoly::x(f5));
  auto f7 = make_field(7, 1);
  CHECK(lagrange_inverse(poly(f7, {{5, 3}})) == poly(f7, {{5, 3}}));
  auto f13 = make_field(13, 1);
  const SparsePoly g = poly(f13, {{11, 1}, {5, 11}});
  CHECK(lagrange_inverse(g) == g);
  CHECK_THROWS_AS(lagrange_inverse(poly(f7, {{2, 1}})), PreconditionError);
  CHECK_THROWS_AS(lagrange_inverse(SparsePoly::x(make_field(2, 17))), CapExceeded);
}

TEST_CASE("lagrange_inverse composes to x both ways for random permutations") {
  std::mt19937_64 rng(29);
  for (auto [p, n] : {std::pair{2ULL, 1U}, {3ULL, 1U}, {2ULL, 2U}, {7ULL, 1U}, {2ULL, 3U}, {3ULL, 2U},
                      {11ULL, 1U}, {2ULL, 4U}, {5ULL, 2U}, {2ULL, 5U}, {2ULL, 9U}}) {
    auto f = make_field(p, n);
    const int trials = f->q() > 256 ? 1 : f->q() > 64 ? 2 : 6;
    for (int t = 0; t < trials; ++t) {
      // Interpolate a random permutation from its value table.
      std::vector<std::uint64_t> perm(f->q());
      for (std::uint64_t i = 0; i < f->q(); ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      std::vector<RawTerm> raw;
      // sum_c perm[c] (1 - (x - c)^(q-1)) expanded with binomial weights b^(q-1-k).
      const std::uint64_t q = f->q();
      for (std::uint64_t c = 0; c < q; ++c) {
        if (perm[c] == 0) continue;
        const Element v = f->element(perm[c]);
        raw.push_back({0, v});
        for (std::uint64_t k = 0; k < q; ++k) {
          // (x - c)^(q-1) = sum_k c^(q-1-k) x^k in characteristic p
          raw.push_back({k, -(v * f->element(c).pow_u(q - 1 - k))});
        }
      }
      const SparsePoly fp = poly_reduce(f, raw);
      const auto vals = value_table(fp);
      REQUIRE(vals == perm);
      const SparsePoly inv = lagrange_inverse(fp);
      CHECK(poly_compose_mod(inv, fp) == SparsePoly::x(f));
      CHECK(poly_compose_mod(fp, inv) == SparsePoly::x(f));
      for (const auto& [e, c] : inv.terms()) CHECK(e < q);
    }
  }
}

TEST_CASE("interpolate through distinct nodes") {
  std::mt19937_64 rng(31);
  for (auto [p, n] : {std::pair{13ULL, 1U}, {2ULL, 4U}, {5ULL, 2U}}) {
    auto f = make_field(p, n);
    for (std::uint64_t k : {1, 2, 5, 8}) {
      std::vector<std::uint64_t> idx(f->q());
      for (std::uint64_t i = 0; i < f->q(); ++i) idx[i] = i;
      std::shuffle(idx.begin(), idx.end(), rng);
      std::vector<Element> xs, ys;
      for (std::uint64_t i = 0; i < k; ++i) {
        xs.push_back(f->element(idx[i]));
        ys.push_back(f->element(rng() % f->q()));
      }
      const SparsePoly h = interpolate(f, xs, ys);
      for (std::uint64_t i = 0; i < k; ++i) CHECK(h(xs[i]) == ys[i]);
      if (!h.is_zero()) CHECK(h.terms().rbegin()->first < k);
    }
  }
  auto f7 = make_field(7, 1);
  const std::vector<Element> twice{f7->one(), f7->one()};
  CHECK_THROWS_AS(interpolate(f7, twice, twice), std::invalid_argument);
  CHECK_THROWS_AS(interpolate(f7, twice, std::vector<Element>{f7->one()}), std::invalid_argument);
}
