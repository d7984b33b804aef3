#include "quadop/perm.hpp"

#include <algorithm>
#include <numeric>

#include "quadop/error.hpp"

namespace quadop {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = static_cast<int>(images_.size());
  if (n == 0) throw invalid_input("empty permutation");
  std::vector<bool> seen(n, false);
  for (int v : images_) {
    if (v < 1 || v > n || seen[v - 1]) throw invalid_input("images are not a bijection of {1..n}");
    seen[v - 1] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  return Permutation(std::move(im));
}

Permutation Permutation::transposition(int n, int a, int b) {
  if (a < 1 || a > n || b < 1 || b > n || a == b) throw invalid_input("bad transposition");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::swap(im[a - 1], im[b - 1]);
  return Permutation(std::move(im));
}

Permutation Permutation::cycle(int n, const std::vector<int>& points) {
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  const int k = static_cast<int>(points.size());
  for (int i = 0; i < k; ++i) {
    int from = points[i], to = points[(i + 1) % k];
    if (from < 1 || from > n) throw invalid_input("cycle point out of range");
    im[from - 1] = to;
  }
  return Permutation(std::move(im));
}

int Permutation::sign() const {
  int inversions = 0;
  const int n = arity();
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (images_[i] > images_[j]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

bool Permutation::is_identity() const {
  for (int i = 0; i < arity(); ++i)
    if (images_[i] != i + 1) return false;
  return true;
}

Permutation Permutation::compose(const Permutation& q) const {
  if (arity() != q.arity()) throw invalid_input("arity mismatch in composition");
  std::vector<int> im(arity());
  for (int i = 1; i <= arity(); ++i) im[i - 1] = images_[q(i) - 1];
  return Permutation(std::move(im));
}

Permutation Permutation::inverse() const {
  std::vector<int> im(arity());
  for (int i = 1; i <= arity(); ++i) im[images_[i - 1] - 1] = i;
  return Permutation(std::move(im));
}

std::string Permutation::str() const {
  std::string s = "[";
  for (int i = 0; i < arity(); ++i) {
    if (i) s += ' ';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::vector<Permutation> all_permutations(int n) {
  if (n < 1 || n > 8) throw invalid_input("permutation arity must be in 1..8");
  std::vector<int> im(n);
  std::iota(im.begin(), im.end(), 1);
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  do {
    out.push_back(Permutation(im));
  } while (std::next_permutation(im.begin(), im.end()));
  return out;
}

const std::vector<GSubgroup>& all_subgroups() {
  static const std::vector<GSubgroup> gs = {GSubgroup::G1, GSubgroup::G2, GSubgroup::G3,
                                            GSubgroup::G4, GSubgroup::G5, GSubgroup::G6};
  return gs;
}

std::string subgroup_name(GSubgroup g) {
  switch (g) {
    case GSubgroup::G1: return "G1";
    case GSubgroup::G2: return "G2";
    case GSubgroup::G3: return "G3";
    case GSubgroup::G4: return "G4";
    case GSubgroup::G5: return "G5";
    case GSubgroup::G6: return "G6";
  }
  throw internal_error("unreachable subgroup tag");
}

GSubgroup subgroup_from_name(const std::string& name) {
  for (GSubgroup g : all_subgroups())
    if (subgroup_name(g) == name) return g;
  throw invalid_input("unknown subgroup '" + name + "'");
}

const std::vector<Permutation>& subgroup_elements(GSubgroup g) {
  static const auto make = [](std::vector<std::vector<int>> ims) {
    std::vector<Permutation> v;
    for (auto& im : ims) v.push_back(Permutation(std::move(im)));
    return v;
  };
  static const std::vector<Permutation> g1 = make({{1, 2, 3}});
  static const std::vector<Permutation> g2 = make({{1, 2, 3}, {2, 1, 3}});
  static const std::vector<Permutation> g3 = make({{1, 2, 3}, {1, 3, 2}});
  static const std::vector<Permutation> g4 = make({{1, 2, 3}, {3, 2, 1}});
  static const std::vector<Permutation> g5 = make({{1, 2, 3}, {2, 3, 1}, {3, 1, 2}});
  static const std::vector<Permutation> g6 =
      make({{1, 2, 3}, {2, 1, 3}, {1, 3, 2}, {3, 2, 1}, {2, 3, 1}, {3, 1, 2}});
  switch (g) {
    case GSubgroup::G1: return g1;
    case GSubgroup::G2: return g2;
    case GSubgroup::G3: return g3;
    case GSubgroup::G4: return g4;
    case GSubgroup::G5: return g5;
    case GSubgroup::G6: return g6;
  }
  throw internal_error("unreachable subgroup tag");
}

int lehmer_rank(const std::vector<int>& images) {
  const int n = static_cast<int>(images.size());
  int rank = 0;
  for (int i = 0; i < n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j < n; ++j)
      if (images[j] < images[i]) ++smaller;
    rank += smaller * static_cast<int>(factorial(n - 1 - i));
  }
  return rank;
}

std::vector<int> lehmer_unrank(int n, int rank) {
  std::vector<int> pool(n);
  std::iota(pool.begin(), pool.end(), 1);
  std::vector<int> out;
  out.reserve(n);
  for (int i = n - 1; i >= 0; --i) {
    const long f = factorial(i);
    int idx = static_cast<int>(rank / f);
    rank = static_cast<int>(rank % f);
    out.push_back(pool[idx]);
    pool.erase(pool.begin() + idx);
  }
  return out;
}

long factorial(int n) {
  static const long table[] = {1, 1, 2, 6, 24, 120, 720, 5040, 40320};
  if (n < 0 || n > 8) throw invalid_input("factorial argument out of range");
  return table[n];
}

}  // namespace quadop
