#include "quadop/duality.hpp"

#include "quadop/error.hpp"

namespace quadop {

const std::vector<Rat>& signed_form() {
  static const std::vector<Rat> form = [] {
    std::vector<Rat> diag;
    diag.reserve(free_dim(3));
    for (const auto& m : basis(3)) {
      const int sgn = Permutation(m.labels()).sign();
      // Shape 0 is the left comb ((i j) k), shape 1 is (i (j k)).
      diag.push_back(Rat(m.shape() == 0 ? -sgn : sgn));
    }
    return diag;
  }();
  return form;
}

Rat scalar_product(const OperadElement& u, const OperadElement& v) {
  if (u.arity() != 3 || v.arity() != 3)
    throw invalid_input("the signed pairing lives on arity 3");
  const auto& diag = signed_form();
  Rat sum(0);
  for (const auto& [m, c] : u.coeffs()) {
    Rat other = v.coeff(m);
    if (other != 0) sum += diag[m.basis_index()] * c * other;
  }
  return sum;
}

Presentation dual_presentation(const Presentation& p) {
  Subspace perp = p.relations.orthogonal_complement(signed_form());
  if (perp.dim() + p.relations.dim() != free_dim(3))
    throw internal_error("complement dimension formula violated");
  if (!sigma_stable(perp, 3))
    throw internal_error("dual relations are not a symmetric-group submodule");
  return Presentation{p.name + "!", std::move(perp)};
}

const std::vector<std::string>& dual_identity_words(Builtin b) {
  static const std::vector<std::string> none = {};
  static const std::vector<std::string> vinb = {"bac"};
  static const std::vector<std::string> prelie = {"acb"};
  static const std::vector<std::string> g4 = {"cba"};
  static const std::vector<std::string> g5 = {"bca", "cab"};
  static const std::vector<std::string> lieadm = {"acb", "bac"};
  switch (b) {
    case Builtin::Ass: return none;
    case Builtin::Vinb: return vinb;
    case Builtin::PreLie: return prelie;
    case Builtin::G4Ass: return g4;
    case Builtin::G5Ass: return g5;
    case Builtin::LieAdm: return lieadm;
  }
  throw internal_error("unreachable builtin tag");
}

std::vector<OperadElement> identity_vectors(const std::string& word) {
  if (word.size() != 3) throw invalid_input("identity words have three letters");
  std::string digits;
  for (char ch : word) {
    if (ch < 'a' || ch > 'c') throw invalid_input("identity words use letters a, b, c");
    digits += static_cast<char>('1' + (ch - 'a'));
  }
  const std::string l = "((" + digits.substr(0, 1) + " " + digits.substr(1, 1) + ") " +
                        digits.substr(2, 1) + ")";
  const std::string r = "(" + digits.substr(0, 1) + " (" + digits.substr(1, 1) + " " +
                        digits.substr(2, 1) + "))";
  return {
      OperadElement::from_terms({{Rat(1), "((1 2) 3)"}, {Rat(-1), l}}),
      OperadElement::from_terms({{Rat(1), "(1 (2 3))"}, {Rat(-1), r}}),
  };
}

DualReport verify_dual_identities(Builtin b) {
  const Presentation p = builtin(b);
  const Presentation dual = dual_presentation(p);

  DualReport report;
  report.presentation = p.name;
  report.dual_name = dual.name;
  report.dual_dim = dual.relations.dim();

  std::vector<OperadElement> expected;
  expected.push_back(builtin_generator(Builtin::Ass));
  report.identities.push_back(
      {"associativity", dual.relations.contains(expected.back().sparse_coords())});

  for (const auto& word : dual_identity_words(b)) {
    bool holds = true;
    for (auto& v : identity_vectors(word)) {
      holds = holds && dual.relations.contains(v.sparse_coords());
      expected.push_back(std::move(v));
    }
    report.identities.push_back({"abc=" + word, holds});
  }

  report.closure_matches = sigma_closure(expected) == dual.relations;
  report.pass = report.closure_matches;
  for (const auto& ic : report.identities) report.pass = report.pass && ic.holds;
  return report;
}

}  // namespace quadop
