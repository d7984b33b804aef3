#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadop/exactla.hpp"
#include "quadop/treespace.hpp"

namespace quadop {

// Quadratic presentation over the regular binary generator module: a name
// plus the relation subspace of the 12-dimensional arity-3 component,
// always stored as a symmetric-group submodule.
struct Presentation {
  std::string name;
  Subspace relations;  // ambient dimension 12
};

// Span of the full symmetric-group orbit of the generators (arity 3).
Subspace sigma_closure(const std::vector<OperadElement>& generators);

// True iff the subspace is stable under every relabeling of {1..arity}.
bool sigma_stable(const Subspace& s, int arity);

enum class Builtin { Ass, Vinb, PreLie, G4Ass, G5Ass, LieAdm };

const std::vector<Builtin>& all_builtins();
std::string builtin_name(Builtin b);
std::optional<Builtin> builtin_from_name(const std::string& name);

// The six built-in presentations. Relation dimensions: ass 6, vinb 3,
// prelie 3, g4ass 3, g5ass 2, lieadm 1.
Presentation builtin(Builtin b);

// The 12-term alternating generator of the Lie-admissible relations.
OperadElement lie_admissible_generator();

// The single generating vector each builtin's relations are the closure of.
OperadElement builtin_generator(Builtin b);

struct ParsedPresentation {
  Presentation presentation{std::string(), Subspace(12)};
  int generator_count = 0;
  int input_span_dim = 0;   // span of the file's vectors alone
  int closed_dim = 0;       // after symmetric-group closure
  std::vector<int> zero_relation_lines;  // relations that cancel to zero
};

// Presentation file format: '#' starts a comment; each relation line is
//   relation: <coeff> <monomial> [(+|-) <coeff> <monomial>]...
// with integer or p/q coefficients and monomials over the labels {1,2,3}.
// The relation subspace is the symmetric-group closure of the parsed
// vectors. Throws parse_error with line/column positions.
ParsedPresentation parse_presentation(const std::string& text, const std::string& name);

}  // namespace quadop
