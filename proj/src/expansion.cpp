#include "quadop/expansion.hpp"

#include <algorithm>
#include <set>

#include "quadop/error.hpp"

namespace quadop {

namespace {

// Index maps of the one-step graft operations from arity m-1 into arity m:
// grafting the binary generator at slot i of a monomial, and grafting a
// monomial into either slot of the generator. Relabelings commute with
// these maps monomial by monomial, so candidates are pure index shuffles.
std::vector<std::vector<int>> graft_maps(int m) {
  const auto& lower = basis(m - 1);
  const TreeMonomial gen = TreeMonomial::parse("(1 2)");
  std::vector<std::vector<int>> maps;
  for (int slot = 1; slot <= m - 1; ++slot) {
    std::vector<int> table(lower.size());
    for (std::size_t r = 0; r < lower.size(); ++r)
      table[r] = lower[r].graft(slot, gen).basis_index();
    maps.push_back(std::move(table));
  }
  for (int slot = 1; slot <= 2; ++slot) {
    std::vector<int> table(lower.size());
    for (std::size_t r = 0; r < lower.size(); ++r)
      table[r] = gen.graft(slot, lower[r]).basis_index();
    maps.push_back(std::move(table));
  }
  return maps;
}

SparseVec remap(const SparseVec& v, const std::vector<int>& table) {
  SparseVec out;
  out.reserve(v.size());
  for (const auto& [col, val] : v) out.emplace_back(table[col], val);
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.first < b.first; });
  return out;
}

// Sparse rows ordered shortest first, then lexicographically; keeps the
// reduction working on the sparsest pivots and makes deduplication a
// neighbour scan.
bool candidate_less(const SparseVec& a, const SparseVec& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

}  // namespace

std::vector<Subspace> ideal_components(const Presentation& p, int n,
                                       std::vector<ExpansionStats>* stats) {
  if (n < 3 || n > 5) throw invalid_input("ideal components are computed for arities 3..5");

  std::vector<Subspace> comps;
  comps.push_back(p.relations);
  if (stats) {
    stats->push_back({3, free_dim(3), static_cast<std::size_t>(p.relations.dim()),
                      p.relations.dim(), free_dim(3) - p.relations.dim()});
  }

  for (int m = 4; m <= n; ++m) {
    const Subspace& prev = comps.back();
    const auto maps = graft_maps(m);
    const auto perms = all_permutations(m);
    std::vector<std::vector<int>> sigma_tables(perms.size());
    const long nperm = static_cast<long>(perms.size());
#pragma omp parallel for schedule(dynamic, 8)
    for (long s = 0; s < nperm; ++s) sigma_tables[s] = action_index_table(perms[s]);

    const auto& rows = prev.basis();
    const long nrows = static_cast<long>(rows.size());
    std::vector<std::vector<SparseVec>> buckets(rows.size());
#pragma omp parallel for schedule(dynamic, 4)
    for (long r = 0; r < nrows; ++r) {
      auto& bucket = buckets[r];
      bucket.reserve(maps.size() * perms.size());
      for (const auto& gmap : maps) {
        const SparseVec grafted = remap(rows[r], gmap);
        for (const auto& table : sigma_tables) bucket.push_back(remap(grafted, table));
      }
    }

    std::vector<SparseVec> candidates;
    for (auto& bucket : buckets)
      for (auto& v : bucket) candidates.push_back(std::move(v));
    std::sort(candidates.begin(), candidates.end(), candidate_less);
    candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());

    const std::size_t spanning = candidates.size();
    comps.push_back(Subspace::span_sparse(std::move(candidates), free_dim(m)));
    if (stats) {
      stats->push_back({m, free_dim(m), spanning, comps.back().dim(),
                        free_dim(m) - comps.back().dim()});
    }
  }
  return comps;
}

Subspace ideal_component(const Presentation& p, int n) {
  return ideal_components(p, n).back();
}

int operad_dim(const Presentation& p, int n) {
  if (n < 1 || n > 5) throw invalid_input("operad dimensions are computed for arities 1..5");
  if (n == 1) return 1;
  if (n == 2) return 2;
  return free_dim(n) - ideal_component(p, n).dim();
}

DimensionTable dimension_table(const Presentation& p, int max_arity) {
  if (max_arity < 3 || max_arity > 5) throw invalid_input("max arity must be in 3..5");
  DimensionTable t;
  t.operad_name = p.name;
  t.dims[1] = 1;
  t.dims[2] = 2;
  const auto comps = ideal_components(p, max_arity);
  for (int m = 3; m <= max_arity; ++m)
    t.dims[m] = free_dim(m) - comps[m - 3].dim();
  return t;
}

std::vector<ExpansionStats> expansion_report(const Presentation& p, int max_arity) {
  if (max_arity < 3 || max_arity > 5) throw invalid_input("max arity must be in 3..5");
  std::vector<ExpansionStats> stats;
  ideal_components(p, max_arity, &stats);
  return stats;
}

int dual_dim_oracle(const std::vector<std::string>& identities, int n) {
  if (n < 1 || n > 5) throw invalid_input("word oracle supports arities 1..5");
  static const std::set<std::string> supported = {"acb", "bac", "cba", "bca", "cab"};
  for (const auto& w : identities)
    if (!supported.count(w)) throw invalid_input("unsupported identity word '" + w + "'");

  const int words = static_cast<int>(factorial(n));
  if (n < 3 || identities.empty()) return words;

  const auto perms = all_permutations(n);
  std::vector<SparseVec> relations;
  for (const auto& perm : perms) {
    const auto& w = perm.images();
    const int rank = lehmer_rank(w);
    for (const auto& identity : identities) {
      // Blocks A B C covering w[start..start+len), prefix and suffix fixed.
      for (int start = 0; start + 3 <= n; ++start) {
        for (int alen = 1; start + alen + 2 <= n; ++alen) {
          for (int blen = 1; start + alen + blen + 1 <= n; ++blen) {
            for (int clen = 1; start + alen + blen + clen <= n; ++clen) {
              std::vector<int> image(w.begin(), w.begin() + start);
              for (char ch : identity) {
                int block_start = start, block_len = alen;
                if (ch == 'b') block_start = start + alen, block_len = blen;
                if (ch == 'c') block_start = start + alen + blen, block_len = clen;
                image.insert(image.end(), w.begin() + block_start,
                             w.begin() + block_start + block_len);
              }
              image.insert(image.end(), w.begin() + start + alen + blen + clen, w.end());
              const int other = lehmer_rank(image);
              if (other == rank) continue;
              relations.push_back({{std::min(rank, other), Rat(1)},
                                   {std::max(rank, other), Rat(-1)}});
            }
          }
        }
      }
    }
  }
  const int rank = Subspace::span_sparse(std::move(relations), words).dim();
  return words - rank;
}

}  // namespace quadop
