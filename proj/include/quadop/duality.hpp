#pragma once

#include <string>
#include <vector>

#include "quadop/presentations.hpp"

namespace quadop {

// Diagonal of the signed pairing on the arity-3 component, indexed by the
// basis enumeration: +sgn(i,j,k) on (i (j k)), -sgn(i,j,k) on ((i j) k),
// distinct basis monomials orthogonal.
const std::vector<Rat>& signed_form();

Rat scalar_product(const OperadElement& u, const OperadElement& v);

// Dual presentation: relations replaced by their orthogonal complement
// under the signed pairing. Involutive; the complement is again a
// symmetric-group submodule (both checked, internal_error on failure).
Presentation dual_presentation(const Presentation& p);

struct IdentityCheck {
  std::string name;  // "associativity", "abc=acb", ...
  bool holds = false;
};

struct DualReport {
  std::string presentation;
  std::string dual_name;
  int dual_dim = 0;
  std::vector<IdentityCheck> identities;
  bool closure_matches = false;  // expected identities span the dual exactly
  bool pass = false;
};

// Permutation identities satisfied by algebras over each builtin's dual,
// as words over {a,b,c}: ass {}, vinb {bac}, prelie {acb}, g4ass {cba},
// g5ass {bca, cab}, lieadm {acb, bac}.
const std::vector<std::string>& dual_identity_words(Builtin b);

// The arity-3 vectors expressing word identity abc = w in both bracketing
// patterns: ((1 2) 3) - ((w1 w2) w3) and (1 (2 3)) - (w1 (w2 w3)).
std::vector<OperadElement> identity_vectors(const std::string& word);

// Checks that every expected identity vector of the dual lies in the
// computed complement and that together with associativity they span it
// exactly.
DualReport verify_dual_identities(Builtin b);

}  // namespace quadop
