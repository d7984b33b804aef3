#pragma once

#include <map>
#include <string>
#include <vector>

#include "quadop/presentations.hpp"

namespace quadop {

// Per-operad component dimensions, arities 1..N. dims[1] = 1 and
// dims[2] = 2 for every presentation over the regular binary generator.
struct DimensionTable {
  std::string operad_name;
  std::map<int, int> dims;
};

struct ExpansionStats {
  int arity = 0;
  int free_dim = 0;
  std::size_t spanning_vectors = 0;  // distinct candidates fed to reduction
  int ideal_dim = 0;
  int operad_dim = 0;
};

// Arity-n component of the operadic ideal generated by the relations
// (3 <= n <= 5): iterated one-step grafts with the binary generator,
// closed under the symmetric-group action at each arity.
Subspace ideal_component(const Presentation& p, int n);

// The chain R(3), ..., R(n) in one pass; stats describe each step.
std::vector<Subspace> ideal_components(const Presentation& p, int n,
                                       std::vector<ExpansionStats>* stats = nullptr);

// dim F(n) - dim R(n); 1 and 2 in arities 1 and 2. Requires 1 <= n <= 5.
int operad_dim(const Presentation& p, int n);

DimensionTable dimension_table(const Presentation& p, int max_arity);

std::vector<ExpansionStats> expansion_report(const Presentation& p, int max_arity);

// Independent cross-check for dual operads: dimension of the span of
// multilinear words of n letters modulo all degree-n consequences of the
// given permutation identities in an associative algebra (each identity
// applied to three consecutive blocks of any subword, prefix and suffix
// fixed). Identities are words over {a,b,c} as in dual_identity_words.
int dual_dim_oracle(const std::vector<std::string>& identities, int n);

}  // namespace quadop
