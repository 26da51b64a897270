#include <algorithm>

#include "doctest.h"
#include "ppforge/errors.hpp"
#include "ppforge/selfinv.hpp"

using namespace ppforge;

namespace {

SparsePoly poly(const FieldPtr& f, std::initializer_list<std::pair<std::uint64_t, std::uint64_t>> terms) {
  std::vector<RawTerm> raw;
  for (auto [e, c] : terms) raw.push_back({e, f->element(c)});
  return poly_reduce(f, raw);
}

bool contains(const std::vector<SelfInverseEntry>& cat, const SparsePoly& f) {
  return std::any_of(cat.begin(), cat.end(), [&](const SelfInverseEntry& e) { return e.poly == f; });
}

}  // namespace

TEST_CASE("fit_mapping recovers coset-wise monomials") {
  auto f7 = make_field(7, 1);
  const auto m = fit_mapping(poly(f7, {{5, 1}, {3, 2}, {1, 5}}), 3);
  REQUIRE(m.has_value());
  CHECK(m->s() == 2);
  CHECK(mapping_to_poly(*m) == poly(f7, {{5, 1}, {3, 2}, {1, 5}}));
  for (auto r : m->r()) CHECK(r <= 6);

  auto f13 = make_field(13, 1);
  const auto g = fit_mapping(poly(f13, {{11, 1}, {5, 11}}), 2);
  REQUIRE(g.has_value());
  CHECK(g->r() == std::vector<std::uint64_t>{5, 5});

  const auto h = fit_mapping(poly(f13, {{11, 9}, {8, 6}, {2, 9}}), 4);
  REQUIRE(h.has_value());
  for (auto r : h->r()) CHECK(r % 3 == 2);

  CHECK_FALSE(fit_mapping(poly(f7, {{0, 1}, {1, 1}}), 1).has_value());  // f(0) != 0
  CHECK_FALSE(fit_mapping(poly(f7, {{2, 1}, {1, 1}}), 1).has_value());
  CHECK_THROWS_AS(fit_mapping(SparsePoly::x(f7), 4), std::invalid_argument);

  const auto any = fit_mapping_any(poly(f7, {{5, 3}}));
  REQUIRE(any.has_value());
  CHECK(any->d() == 1);
}

TEST_CASE("F_7 catalog contains the known involutions and x") {
  auto f7 = make_field(7, 1);
  SelfInverseOptions opts;
  opts.max_r = 5;
  const auto cat = search_self_inverse(f7, opts);
  CHECK(contains(cat, poly(f7, {{5, 1}, {3, 2}, {1, 5}})));
  CHECK(contains(cat, poly(f7, {{5, 2}, {3, 3}, {1, 3}})));
  CHECK(contains(cat, SparsePoly::x(f7)));
  CHECK(contains(cat, poly(f7, {{5, 1}})));  // x^25 = x
  CHECK_FALSE(contains(cat, poly(f7, {{1, 2}})));
  for (const auto& e : cat) {
    CHECK(poly_compose_mod(e.poly, e.poly) == SparsePoly::x(f7));
    CHECK(e.poly == mapping_to_poly(e.mapping));
    CHECK(e.verified == Verification::exhaustive);
    for (auto r : e.mapping.r()) CHECK(r <= 5);
  }
}

TEST_CASE("F_13 catalog contains the known involutions") {
  auto f13 = make_field(13, 1);
  SelfInverseOptions opts;
  opts.d_values = {1, 2, 3, 4};
  const auto cat = search_self_inverse(f13, opts);
  CHECK(contains(cat, poly(f13, {{11, 1}, {5, 11}})));
  CHECK(contains(cat, poly(f13, {{11, 9}, {8, 6}, {2, 9}})));
  CHECK(contains(cat, SparsePoly::x(f13)));
}

TEST_CASE("catalog order, a-set filter and determinism") {
  auto f7 = make_field(7, 1);
  SelfInverseOptions opts;
  opts.max_r = 5;
  const auto a = search_self_inverse(f7, opts);
  const auto b = search_self_inverse(f7, opts);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) CHECK(a[i].poly == b[i].poly);
  for (std::size_t i = 1; i < a.size(); ++i) CHECK(a[i - 1].mapping.d() <= a[i].mapping.d());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) CHECK_FALSE(a[i].poly == a[j].poly);

  SelfInverseOptions ones = opts;
  ones.a_set = {1};
  const auto c = search_self_inverse(f7, ones);
  CHECK(contains(c, SparsePoly::x(f7)));
  for (const auto& e : c)
    for (const auto& ai : e.mapping.a()) CHECK(ai.is_one());

  SelfInverseOptions bad = opts;
  bad.d_values = {4};
  CHECK_THROWS_AS(search_self_inverse(f7, bad), std::invalid_argument);
  CHECK_THROWS_AS(search_self_inverse(make_field(2, 17), SelfInverseOptions{}), CapExceeded);
}

TEST_CASE("every catalog entry is a verified involution on small fields") {
  for (auto [p, n] : {std::pair{2ULL, 1U}, {3ULL, 1U}, {2ULL, 2U}, {5ULL, 1U}, {2ULL, 3U}, {3ULL, 2U}, {2ULL, 4U}}) {
    auto f = make_field(p, n);
    SelfInverseOptions opts;
    // With d = q - 1 = 15 every involution of F_16^* qualifies, about 10^7 of them.
    if (f->q() == 16) opts.d_values = {1, 3, 5};
    const auto cat = search_self_inverse(f, opts);
    CHECK(contains(cat, SparsePoly::x(f)));
    for (const auto& e : cat) {
      CHECK(is_permutation(e.poly));
      CHECK(lagrange_inverse(e.poly) == e.poly);
    }
  }
}
