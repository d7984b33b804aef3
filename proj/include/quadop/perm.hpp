#pragma once

#include <compare>
#include <string>
#include <vector>

namespace quadop {

// Element of the symmetric group on {1..n}, stored in one-line image
// notation: entry i-1 holds the image of i.
class Permutation {
public:
  // Validates that images is a bijection of {1..n}.
  explicit Permutation(std::vector<int> images);

  static Permutation identity(int n);
  // Swaps a and b, fixes everything else.
  static Permutation transposition(int n, int a, int b);
  // The cycle a1 -> a2 -> ... -> ak -> a1 inside {1..n}.
  static Permutation cycle(int n, const std::vector<int>& points);

  int arity() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i - 1]; }
  const std::vector<int>& images() const { return images_; }

  // (-1)^(number of inversions).
  int sign() const;
  bool is_identity() const;

  // (p.compose(q))(i) = p(q(i)).
  Permutation compose(const Permutation& q) const;
  Permutation inverse() const;

  // "[2 3 1]"
  std::string str() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
  std::vector<int> images_;
};

// All n! permutations of {1..n} in lexicographic order on image arrays.
// Requires 1 <= n <= 8.
std::vector<Permutation> all_permutations(int n);

// The six subgroups of the symmetric group on three letters, in the
// fixed order G1..G6.
enum class GSubgroup { G1, G2, G3, G4, G5, G6 };

const std::vector<GSubgroup>& all_subgroups();
std::string subgroup_name(GSubgroup g);
// Throws invalid_input for unknown names ("G1".."G6").
GSubgroup subgroup_from_name(const std::string& name);

// G1 = {id}, G2 = {id, swap12}, G3 = {id, swap23}, G4 = {id, swap13},
// G5 = {id, both 3-cycles}, G6 = the whole group. Deterministic order:
// identity first, then the listed extras.
const std::vector<Permutation>& subgroup_elements(GSubgroup g);

// Lexicographic rank of a permutation of {1..n} among all n! of them.
int lehmer_rank(const std::vector<int>& images);
std::vector<int> lehmer_unrank(int n, int rank);

long factorial(int n);

}  // namespace quadop
