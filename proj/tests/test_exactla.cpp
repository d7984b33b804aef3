#include "quadop/exactla.hpp"

#include <algorithm>
#include <random>

#include "doctest.h"
#include "quadop/error.hpp"
#include "quadop/rational.hpp"

using namespace quadop;

namespace {

std::vector<Rat> unit(int ambient, int k) {
  std::vector<Rat> v(ambient, Rat(0));
  v[k] = 1;
  return v;
}

std::vector<std::vector<Rat>> random_vectors(std::mt19937_64& rng, int count, int ambient) {
  std::vector<std::vector<Rat>> out;
  for (int r = 0; r < count; ++r) {
    std::vector<Rat> v(ambient, Rat(0));
    for (auto& x : v) x = Rat(static_cast<long>(rng() % 7) - 3);
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<Rat> random_form(std::mt19937_64& rng, int ambient) {
  std::vector<Rat> f(ambient, Rat(1));
  for (auto& x : f)
    if (rng() % 2) x = -1;
  return f;
}

}  // namespace

TEST_CASE("span basics") {
  CHECK(Subspace::span({}, 12).dim() == 0);

  std::vector<Rat> v(12, Rat(0));
  v[3] = Rat(1, 2);
  v[7] = -2;
  std::vector<Rat> twice(12, Rat(0));
  twice[3] = 1;
  twice[7] = -4;
  CHECK(Subspace::span({v, twice}, 12).dim() == 1);

  std::vector<std::vector<Rat>> all;
  for (int k = 0; k < 12; ++k) all.push_back(unit(12, k));
  CHECK(Subspace::span(all, 12).dim() == 12);

  CHECK_THROWS_AS(Subspace::span({std::vector<Rat>(5, Rat(1))}, 12), invalid_input);
}

TEST_CASE("membership") {
  const Subspace e1 = Subspace::span({unit(4, 0)}, 4);
  CHECK(e1.contains(std::vector<Rat>(4, Rat(0))));
  CHECK_FALSE(e1.contains(unit(4, 1)));

  auto e12 = unit(4, 0);
  e12[1] = 1;
  const Subspace s = Subspace::span({e12, unit(4, 1)}, 4);
  CHECK(s.contains(unit(4, 0)));
  CHECK_THROWS_AS(s.contains(unit(5, 0)), invalid_input);
}

TEST_CASE("orthogonal complement dimensions") {
  const std::vector<Rat> form(12, Rat(1));
  CHECK(Subspace(12).orthogonal_complement(form).dim() == 12);

  const Subspace one = Subspace::span({unit(12, 5)}, 12);
  CHECK(one.orthogonal_complement(form).dim() == 11);

  std::vector<Rat> bad(12, Rat(1));
  bad[0] = 2;
  CHECK_THROWS_AS(one.orthogonal_complement(bad), invalid_input);
}

TEST_CASE("complement properties over random subspaces") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 1000; ++trial) {
    const int ambient = 12;
    const int count = 1 + static_cast<int>(rng() % 8);
    const Subspace s = Subspace::span(random_vectors(rng, count, ambient), ambient);
    const auto form = random_form(rng, ambient);
    const Subspace perp = s.orthogonal_complement(form);
    CHECK(s.dim() + perp.dim() == ambient);
    CHECK(perp.orthogonal_complement(form) == s);
    // every pair is orthogonal under the form
    for (const auto& a : s.dense_basis())
      for (const auto& b : perp.dense_basis()) {
        Rat dot(0);
        for (int k = 0; k < ambient; ++k) dot += form[k] * a[k] * b[k];
        CHECK(dot == 0);
      }
  }
}

TEST_CASE("span is idempotent and order-independent") {
  std::mt19937_64 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    auto vectors = random_vectors(rng, 6, 10);
    const Subspace s = Subspace::span(vectors, 10);
    CHECK(Subspace::span(s.dense_basis(), 10) == s);

    std::shuffle(vectors.begin(), vectors.end(), rng);
    CHECK(Subspace::span(vectors, 10) == s);
  }
}

TEST_CASE("serial and parallel kernels produce identical output") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 50; ++trial) {
    const int ambient = 40;
    std::vector<SparseVec> rows;
    for (int r = 0; r < 120; ++r) {
      SparseVec v;
      for (int k = 0; k < ambient; ++k)
        if (rng() % 3 == 0) v.emplace_back(k, Rat(static_cast<long>(rng() % 9) - 4));
      std::erase_if(v, [](const auto& e) { return e.second == 0; });
      rows.push_back(std::move(v));
    }
    CHECK(row_reduce_serial(rows) == row_reduce_parallel(rows));
  }
}

TEST_CASE("reduced basis is canonical echelon form") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 100; ++trial) {
    const Subspace s = Subspace::span(random_vectors(rng, 7, 9), 9);
    int last_pivot = -1;
    for (const auto& row : s.basis()) {
      REQUIRE(!row.empty());
      const int pivot = row.front().first;
      CHECK(pivot > last_pivot);
      last_pivot = pivot;
      CHECK(row.front().second == 1);
      for (const auto& other : s.basis())
        if (&other != &row) CHECK(sparse::at(other, pivot) == 0);
    }
  }
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("3/4") == Rat(3, 4));
  CHECK(parse_rational("-6/4") == Rat(-3, 2));
  CHECK(parse_rational("12") == 12);
  CHECK(parse_rational("+2") == 2);
  CHECK_THROWS_AS(parse_rational("1/0"), parse_error);
  CHECK_THROWS_AS(parse_rational("a"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/-2"), parse_error);
  CHECK_THROWS_AS(parse_rational("1/2/3"), parse_error);
  CHECK(rat_str(Rat(-3, 2)) == "-3/2");
  CHECK(is_nonnegative_integer(Rat(4)));
  CHECK_FALSE(is_nonnegative_integer(Rat(-4)));
  CHECK_FALSE(is_nonnegative_integer(Rat(1, 2)));
}
