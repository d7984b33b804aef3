// Times the serial reference row reduction against the OpenMP pivot-sweep
// on the matrices the workbench actually produces (ideal expansion
// spanning sets) and on dense random rational matrices, and verifies the
// outputs are identical.

#include <omp.h>

#include <cstdio>
#include <random>
#include <string>
#include <vector>

#include "quadop/expansion.hpp"
#include "quadop/koszul.hpp"

using namespace quadop;

namespace {

std::vector<SparseVec> expansion_candidates(Builtin b, int arity) {
  const auto comps = ideal_components(builtin(b), arity - 1);
  const Subspace& prev = comps.back();
  const OperadElement gen = OperadElement::monomial(TreeMonomial::parse("(1 2)"));
  const auto perms = all_permutations(arity);
  std::vector<SparseVec> rows;
  for (const auto& row : prev.basis()) {
    const OperadElement r = OperadElement::from_sparse_coords(arity - 1, row);
    std::vector<OperadElement> grafts;
    for (int slot = 1; slot <= arity - 1; ++slot) grafts.push_back(graft(r, slot, gen));
    for (int slot = 1; slot <= 2; ++slot) grafts.push_back(graft(gen, slot, r));
    for (const auto& e : grafts)
      for (const auto& sigma : perms) rows.push_back(act(sigma, e).sparse_coords());
  }
  return rows;
}

std::vector<SparseVec> random_rows(int rows, int cols, int fill_percent,
                                   std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<SparseVec> out;
  for (int r = 0; r < rows; ++r) {
    SparseVec v;
    for (int c = 0; c < cols; ++c) {
      if (rng() % 100 >= static_cast<std::uint64_t>(fill_percent)) continue;
      const long num = static_cast<long>(rng() % 9) - 4;
      if (num == 0) continue;
      v.emplace_back(c, Rat(num));
    }
    out.push_back(std::move(v));
  }
  return out;
}

void run_case(const std::string& name, const std::vector<SparseVec>& rows) {
  const double t0 = omp_get_wtime();
  const auto serial = row_reduce_serial(rows);
  const double t1 = omp_get_wtime();
  const auto parallel = row_reduce_parallel(rows);
  const double t2 = omp_get_wtime();
  const bool equal = serial == parallel;
  std::printf("%-26s %7zu rows  rank %5zu  serial %8.3fs  parallel %8.3fs  x%.2f  %s\n",
              name.c_str(), rows.size(), serial.size(), t1 - t0, t2 - t1,
              (t1 - t0) / (t2 - t1 > 0 ? t2 - t1 : 1e-9), equal ? "identical" : "MISMATCH");
  std::fflush(stdout);
}

}  // namespace

int main() {
  std::printf("row reduction kernels, %d OpenMP threads\n", omp_get_max_threads());
  run_case("ass ideal, arity 4", expansion_candidates(Builtin::Ass, 4));
  run_case("ass ideal, arity 5", expansion_candidates(Builtin::Ass, 5));
  run_case("lieadm ideal, arity 5", expansion_candidates(Builtin::LieAdm, 5));
  run_case("dense random 240x160", random_rows(240, 160, 40, 7));
  run_case("sparse random 500x280", random_rows(500, 280, 3, 11));
  return 0;
}
