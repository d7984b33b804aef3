#include "quadop/algcheck.hpp"

#include <random>
#include <sstream>

#include "quadop/error.hpp"
#include "quadop/exactla.hpp"

namespace quadop {

AlgebraData::AlgebraData(int dim) : dim_(dim) {
  if (dim < 1 || dim > 10) throw invalid_input("algebra dimension must be in 1..10");
  c_.assign(static_cast<std::size_t>(dim) * dim * dim, Rat(0));
}

const Rat& AlgebraData::at(int i, int j, int k) const {
  if (i < 1 || i > dim_ || j < 1 || j > dim_ || k < 1 || k > dim_)
    throw invalid_input("structure constant index out of range");
  return c_[(static_cast<std::size_t>(i - 1) * dim_ + (j - 1)) * dim_ + (k - 1)];
}

Rat& AlgebraData::at(int i, int j, int k) {
  return const_cast<Rat&>(std::as_const(*this).at(i, j, k));
}

AlgebraData AlgebraData::parse(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  int dim = 0;
  std::vector<std::tuple<int, int, int, Rat>> entries;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    std::istringstream line(raw);
    std::string head;
    if (!(line >> head)) continue;
    if (dim == 0) {
      if (head != "dim:") throw parse_error("expected 'dim: <d>' first", line_no);
      if (!(line >> dim)) throw parse_error("malformed dimension", line_no);
      if (dim < 1 || dim > 10) throw invalid_input("algebra dimension must be in 1..10");
      std::string rest;
      if (line >> rest) throw parse_error("trailing text after dimension", line_no);
      continue;
    }
    if (head != "c") throw parse_error("expected 'c i j k = value'", line_no);
    int i, j, k;
    std::string eq, value;
    if (!(line >> i >> j >> k >> eq >> value) || eq != "=")
      throw parse_error("expected 'c i j k = value'", line_no);
    std::string rest;
    if (line >> rest) throw parse_error("trailing text after entry", line_no);
    Rat v;
    try {
      v = parse_rational(value);
    } catch (const parse_error& e) {
      throw parse_error(e.what(), line_no);
    }
    entries.emplace_back(i, j, k, std::move(v));
  }
  if (dim == 0) throw parse_error("missing 'dim: <d>' line");

  AlgebraData a(dim);
  std::vector<bool> assigned(static_cast<std::size_t>(dim) * dim * dim, false);
  for (const auto& [i, j, k, v] : entries) {
    if (i < 1 || i > dim || j < 1 || j > dim || k < 1 || k > dim)
      throw invalid_input("structure constant index out of range");
    const std::size_t slot = (static_cast<std::size_t>(i - 1) * dim + (j - 1)) * dim + (k - 1);
    if (assigned[slot])
      throw invalid_input("duplicate entry c " + std::to_string(i) + " " + std::to_string(j) +
                          " " + std::to_string(k));
    assigned[slot] = true;
    a.set(i, j, k, v);
  }
  return a;
}

bool AlgebraData::is_antisymmetric() const {
  for (int i = 1; i <= dim_; ++i)
    for (int j = i; j <= dim_; ++j)
      for (int k = 1; k <= dim_; ++k)
        if (c(i, j, k) != -c(j, i, k)) return false;
  return true;
}

std::string AlgebraData::str() const {
  std::string out = "dim: " + std::to_string(dim_) + "\n";
  for (int i = 1; i <= dim_; ++i)
    for (int j = 1; j <= dim_; ++j)
      for (int k = 1; k <= dim_; ++k)
        if (c(i, j, k) != 0)
          out += "c " + std::to_string(i) + " " + std::to_string(j) + " " +
                 std::to_string(k) + " = " + rat_str(c(i, j, k)) + "\n";
  return out;
}

std::vector<Rat> associator(const AlgebraData& a, int i, int j, int k) {
  const int d = a.dim();
  std::vector<Rat> out(d, Rat(0));
  for (int m = 1; m <= d; ++m) {
    const Rat& left = a.c(i, j, m);
    if (left != 0)
      for (int s = 1; s <= d; ++s) out[s - 1] += left * a.c(m, k, s);
    const Rat& right = a.c(j, k, m);
    if (right != 0)
      for (int s = 1; s <= d; ++s) out[s - 1] -= a.c(i, m, s) * right;
  }
  return out;
}

namespace {

// A[i][j][k][s] flattened, d^4 entries.
std::vector<Rat> associator_tensor(const AlgebraData& a) {
  const int d = a.dim();
  std::vector<Rat> t(static_cast<std::size_t>(d) * d * d * d, Rat(0));
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        auto v = associator(a, i, j, k);
        const std::size_t base =
            ((static_cast<std::size_t>(i - 1) * d + (j - 1)) * d + (k - 1)) * d;
        for (int s = 0; s < d; ++s) t[base + s] = std::move(v[s]);
      }
  return t;
}

}  // namespace

bool is_gi_associative(const AlgebraData& a, GSubgroup g) {
  const int d = a.dim();
  const auto tensor = associator_tensor(a);
  const auto& elements = subgroup_elements(g);
  auto entry = [&](int i, int j, int k, int s) -> const Rat& {
    return tensor[((static_cast<std::size_t>(i - 1) * d + (j - 1)) * d + (k - 1)) * d +
                  (s - 1)];
  };
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k)
        for (int s = 1; s <= d; ++s) {
          Rat sum(0);
          for (const auto& sigma : elements) {
            const Permutation inv = sigma.inverse();
            const int t[3] = {i, j, k};
            const Rat& term = entry(t[inv(1) - 1], t[inv(2) - 1], t[inv(3) - 1], s);
            if (sigma.sign() > 0)
              sum += term;
            else
              sum -= term;
          }
          if (sum != 0) return false;
        }
  return true;
}

bool is_lie_admissible(const AlgebraData& a) { return is_gi_associative(a, GSubgroup::G6); }

AlgebraData commutator(const AlgebraData& a) {
  const int d = a.dim();
  AlgebraData b(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) b.set(i, j, k, a.c(i, j, k) - a.c(j, i, k));
  return b;
}

bool jacobi_check(const AlgebraData& a) {
  if (!a.is_antisymmetric()) throw invalid_input("Jacobi check needs an antisymmetric table");
  const int d = a.dim();
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) {
        std::vector<Rat> sum(d, Rat(0));
        const int triples[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& t : triples)
          for (int m = 1; m <= d; ++m) {
            const Rat& left = a.c(t[0], t[1], m);
            if (left != 0)
              for (int s = 1; s <= d; ++s) sum[s - 1] += left * a.c(m, t[2], s);
          }
        for (const auto& v : sum)
          if (v != 0) return false;
      }
  return true;
}

AlgebraData opposite(const AlgebraData& a) {
  const int d = a.dim();
  AlgebraData b(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) b.set(i, j, k, a.c(j, i, k));
  return b;
}

AlgebraData half_bracket(const AlgebraData& a) {
  if (!a.is_antisymmetric() || !jacobi_check(a))
    throw invalid_input("half-bracket needs a Lie bracket table");
  const int d = a.dim();
  AlgebraData b(d);
  for (int i = 1; i <= d; ++i)
    for (int j = 1; j <= d; ++j)
      for (int k = 1; k <= d; ++k) b.set(i, j, k, a.c(i, j, k) / 2);
  return b;
}

AlgebraReport check_algebra(const AlgebraData& a) {
  AlgebraReport r;
  r.dim = a.dim();
  for (int i = 0; i < 6; ++i) r.gi[i] = is_gi_associative(a, all_subgroups()[i]);
  r.lie_admissible = r.gi[5];
  r.commutator_jacobi = jacobi_check(commutator(a));
  return r;
}

namespace {

int rand_int(std::mt19937_64& rng, int lo, int hi) {
  return static_cast<int>(lo + rng() % static_cast<std::uint64_t>(hi - lo + 1));
}

// Random product of elementary matrices; determinant +-1, integer inverse.
std::vector<std::vector<Rat>> random_unimodular(int d, std::mt19937_64& rng, int ops) {
  std::vector<std::vector<Rat>> p(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i) p[i][i] = 1;
  for (int t = 0; t < ops; ++t) {
    int a = rand_int(rng, 0, d - 1), b = rand_int(rng, 0, d - 1);
    if (a == b) continue;
    if (rng() % 2 == 0) {
      std::swap(p[a], p[b]);
    } else {
      const Rat f(rng() % 2 == 0 ? 1 : -1);
      for (int j = 0; j < d; ++j) p[b][j] += f * p[a][j];
    }
  }
  return p;
}

std::vector<std::vector<Rat>> invert_matrix(const std::vector<std::vector<Rat>>& m) {
  const int d = static_cast<int>(m.size());
  std::vector<std::vector<Rat>> a = m;
  std::vector<std::vector<Rat>> inv(d, std::vector<Rat>(d, Rat(0)));
  for (int i = 0; i < d; ++i) inv[i][i] = 1;
  for (int col = 0; col < d; ++col) {
    int pivot = -1;
    for (int r = col; r < d; ++r)
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) throw internal_error("singular change-of-basis matrix");
    std::swap(a[col], a[pivot]);
    std::swap(inv[col], inv[pivot]);
    const Rat lead = a[col][col];
    for (int j = 0; j < d; ++j) {
      a[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (int r = 0; r < d; ++r) {
      if (r == col || a[r][col] == 0) continue;
      const Rat f = a[r][col];
      for (int j = 0; j < d; ++j) {
        a[r][j] -= f * a[col][j];
        inv[r][j] -= f * inv[col][j];
      }
    }
  }
  return inv;
}

// mu'(f_a, f_b) expressed in the new basis f = e P.
AlgebraData change_basis(const AlgebraData& alg, const std::vector<std::vector<Rat>>& p) {
  const int d = alg.dim();
  const auto q = invert_matrix(p);
  AlgebraData out(d);
  for (int a = 1; a <= d; ++a)
    for (int b = 1; b <= d; ++b) {
      std::vector<Rat> image(d, Rat(0));  // mu(P e_a, P e_b) in the old basis
      for (int i = 1; i <= d; ++i) {
        if (p[i - 1][a - 1] == 0) continue;
        for (int j = 1; j <= d; ++j) {
          if (p[j - 1][b - 1] == 0) continue;
          const Rat f = p[i - 1][a - 1] * p[j - 1][b - 1];
          for (int k = 1; k <= d; ++k) {
            const Rat& v = alg.c(i, j, k);
            if (v != 0) image[k - 1] += f * v;
          }
        }
      }
      for (int l = 1; l <= d; ++l) {
        Rat v(0);
        for (int k = 1; k <= d; ++k)
          if (image[k - 1] != 0) v += q[l - 1][k - 1] * image[k - 1];
        if (v != 0) out.set(a, b, l, v);
      }
    }
  return out;
}

// Graded sample space V1 + V2 + V3. B fixes V1*V1 -> V2; the unknown
// blocks are C : V2 x V1 -> V3 and D : V1 x V2 -> V3. The associator is
// supported on V1 triples where it equals C(B(x,y), z) - D(x, B(y,z)),
// linear in (C, D) once B is fixed.
//
// For the associative condition a random B generically admits only the
// zero solution, so that case uses dim V1 = 2 with B the tensor pairing
// (one C unknown glued to one D unknown per equation, kernel dimension
// 16). The other subgroups get dim V1 = 3 and a random B, which keeps
// the full-group condition non-vacuous.
struct GradedFamily {
  int d1, d2, d3;
  int dim;
  int unknowns;
  std::vector<int> b;  // B[x][y][m]

  GradedFamily(std::mt19937_64& rng, bool associative_case) {
    if (associative_case) {
      d1 = 2, d2 = 4, d3 = 2;
      b.assign(d1 * d1 * d2, 0);
      for (int x = 0; x < d1; ++x)
        for (int y = 0; y < d1; ++y) b[(x * d1 + y) * d2 + (x * d1 + y)] = 1;
    } else {
      d1 = 3, d2 = 4, d3 = 2;
      b.assign(d1 * d1 * d2, 0);
      bool nonzero = false;
      while (!nonzero)
        for (auto& v : b) {
          v = rand_int(rng, -2, 2);
          nonzero = nonzero || v != 0;
        }
    }
    dim = d1 + d2 + d3;
    unknowns = 2 * d1 * d2 * d3;
  }

  int bval(int x, int y, int m) const { return b[(x * d1 + y) * d2 + m]; }
  int c_index(int m, int z, int s) const { return (m * d1 + z) * d3 + s; }
  int d_index(int x, int m, int s) const { return d2 * d1 * d3 + (x * d2 + m) * d3 + s; }

  // Signed-sum condition over the subgroup, one row per (x,y,z,s).
  std::vector<SparseVec> condition_rows(GSubgroup g) const {
    std::vector<SparseVec> rows;
    for (int x = 0; x < d1; ++x)
      for (int y = 0; y < d1; ++y)
        for (int z = 0; z < d1; ++z)
          for (int s = 0; s < d3; ++s) {
            std::vector<Rat> row(unknowns, Rat(0));
            for (const auto& sigma : subgroup_elements(g)) {
              const Permutation inv = sigma.inverse();
              const int t[3] = {x, y, z};
              const int p1 = t[inv(1) - 1], p2 = t[inv(2) - 1], p3 = t[inv(3) - 1];
              const int sgn = sigma.sign();
              for (int m = 0; m < d2; ++m) {
                if (int v = bval(p1, p2, m); v != 0) row[c_index(m, p3, s)] += sgn * v;
                if (int v = bval(p2, p3, m); v != 0) row[d_index(p1, m, s)] -= sgn * v;
              }
            }
            rows.push_back(sparse::from_dense(row));
          }
    return rows;
  }

  AlgebraData assemble(const std::vector<Rat>& cd) const {
    AlgebraData a(dim);
    for (int x = 0; x < d1; ++x)
      for (int y = 0; y < d1; ++y)
        for (int m = 0; m < d2; ++m)
          if (int v = bval(x, y, m); v != 0) a.set(x + 1, y + 1, d1 + m + 1, Rat(v));
    for (int m = 0; m < d2; ++m)
      for (int z = 0; z < d1; ++z)
        for (int s = 0; s < d3; ++s)
          a.set(d1 + m + 1, z + 1, d1 + d2 + s + 1, cd[c_index(m, z, s)]);
    for (int x = 0; x < d1; ++x)
      for (int m = 0; m < d2; ++m)
        for (int s = 0; s < d3; ++s)
          a.set(x + 1, d1 + m + 1, d1 + d2 + s + 1, cd[d_index(x, m, s)]);
    return a;
  }
};

}  // namespace

AlgebraData sample_gi_algebra(GSubgroup g, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x9e3779b97f4a7c15ULL + static_cast<int>(g) + 1);
  for (int attempt = 0; attempt < 32; ++attempt) {
    GradedFamily family(rng, g == GSubgroup::G1);
    const Subspace conditions =
        Subspace::span_sparse(family.condition_rows(g), family.unknowns);
    const Subspace kernel =
        conditions.orthogonal_complement(std::vector<Rat>(family.unknowns, Rat(1)));
    if (kernel.dim() == 0) continue;

    std::vector<Rat> cd(family.unknowns, Rat(0));
    bool nonzero = false;
    for (const auto& row : kernel.basis()) {
      const int coeff = rand_int(rng, -3, 3);
      if (coeff == 0) continue;
      nonzero = true;
      for (const auto& [col, val] : row) cd[col] += coeff * val;
    }
    if (!nonzero) continue;
    return change_basis(family.assemble(cd), random_unimodular(family.dim, rng, 8));
  }
  throw internal_error("graded sampling failed to produce a nonzero table");
}

AlgebraData sample_associative(std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0x2545f4914f6cdd1dULL + 17);
  AlgebraData base = [&]() -> AlgebraData {
    switch (rng() % 3) {
      case 0: {
        // 2x2 matrix units, basis order E11 E12 E21 E22.
        AlgebraData a(4);
        auto idx = [](int r, int c) { return (r - 1) * 2 + c; };
        for (int r = 1; r <= 2; ++r)
          for (int c = 1; c <= 2; ++c)
            for (int c2 = 1; c2 <= 2; ++c2)
              for (int e = 1; e <= 2; ++e)
                if (c == c2) a.set(idx(r, c), idx(c2, e), idx(r, e), Rat(1));
        return a;
      }
      case 1: {
        // K[t]/(t^4), basis 1, t, t^2, t^3.
        AlgebraData a(4);
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= 4; ++j)
            if (i + j - 1 <= 4) a.set(i, j, i + j - 1, Rat(1));
        return a;
      }
      default: {
        // Group algebra of the cyclic group of order 4.
        AlgebraData a(4);
        for (int i = 1; i <= 4; ++i)
          for (int j = 1; j <= 4; ++j) a.set(i, j, (i + j - 2) % 4 + 1, Rat(1));
        return a;
      }
    }
  }();
  return change_basis(base, random_unimodular(base.dim(), rng, 8));
}

AlgebraData random_table(int dim, std::uint64_t seed) {
  std::mt19937_64 rng(seed * 0xda942042e4dd58b5ULL + 3);
  AlgebraData a(dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = 1; j <= dim; ++j)
      for (int k = 1; k <= dim; ++k) a.set(i, j, k, Rat(rand_int(rng, -2, 2)));
  return a;
}

}  // namespace quadop
