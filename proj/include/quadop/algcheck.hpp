#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "quadop/perm.hpp"
#include "quadop/rational.hpp"

namespace quadop {

// Finite-dimensional algebra given by structure constants:
// mu(e_i, e_j) = sum_k c(i,j,k) e_k, exact rationals, 1 <= dim <= 10.
class AlgebraData {
public:
  explicit AlgebraData(int dim);

  // Text format: optional '#' comments, a "dim: d" line, then lines
  // "c i j k = p/q" for the nonzero entries; omitted entries are zero.
  static AlgebraData parse(const std::string& text);

  int dim() const { return dim_; }
  const Rat& c(int i, int j, int k) const { return at(i, j, k); }
  void set(int i, int j, int k, const Rat& v) { at(i, j, k) = v; }

  bool is_antisymmetric() const;
  std::string str() const;

  friend bool operator==(const AlgebraData&, const AlgebraData&) = default;

private:
  const Rat& at(int i, int j, int k) const;
  Rat& at(int i, int j, int k);

  int dim_;
  std::vector<Rat> c_;
};

// Coordinates of mu(mu(e_i,e_j),e_k) - mu(e_i,mu(e_j,e_k)).
std::vector<Rat> associator(const AlgebraData& a, int i, int j, int k);

// True iff the signed sum of permuted associators over the subgroup
// vanishes on every basis triple (enough, by multilinearity).
bool is_gi_associative(const AlgebraData& a, GSubgroup g);

// The full-group condition.
bool is_lie_admissible(const AlgebraData& a);

// Bracket [x,y] = mu(x,y) - mu(y,x); always antisymmetric.
AlgebraData commutator(const AlgebraData& a);

// Requires an antisymmetric table; true iff the cyclic sum of double
// products vanishes on every basis triple.
bool jacobi_check(const AlgebraData& a);

// mu'(x,y) = mu(y,x).
AlgebraData opposite(const AlgebraData& a);

// mu(x,y) = [x,y]/2 for a Lie bracket; requires antisymmetry and the
// Jacobi identity.
AlgebraData half_bracket(const AlgebraData& a);

struct AlgebraReport {
  int dim = 0;
  std::array<bool, 6> gi{};  // index i-1 holds the G_{i} verdict
  bool lie_admissible = false;
  bool commutator_jacobi = false;
};

AlgebraReport check_algebra(const AlgebraData& a);

// Exact random samples. Each sample lives on a graded space
// V1 + V2 + V3 with products V1*V1 -> V2, V2*V1 -> V3, V1*V2 -> V3 and
// nothing else, so the subgroup condition is linear in the top-level
// blocks once the V1*V1 block is fixed; those blocks are drawn from the
// exact nullspace of the condition, then the basis is scrambled by a
// random unimodular change. Deterministic in the seed.
AlgebraData sample_gi_algebra(GSubgroup g, std::uint64_t seed);

// Classic associative tables (matrix units, truncated polynomials,
// a cyclic group algebra) under a random unimodular change of basis.
AlgebraData sample_associative(std::uint64_t seed);

// Unstructured table with small integer entries; almost never satisfies
// any identity.
AlgebraData random_table(int dim, std::uint64_t seed);

}  // namespace quadop
