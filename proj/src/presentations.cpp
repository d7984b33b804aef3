#include "quadop/presentations.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <string_view>

#include "quadop/error.hpp"

namespace quadop {

Subspace sigma_closure(const std::vector<OperadElement>& generators) {
  std::vector<SparseVec> rows;
  rows.reserve(generators.size() * 6);
  for (const auto& g : generators) {
    if (g.arity() != 3) throw invalid_input("relation generators must have arity 3");
    for (const auto& sigma : all_permutations(3))
      rows.push_back(act(sigma, g).sparse_coords());
  }
  return Subspace::span_sparse(std::move(rows), free_dim(3));
}

bool sigma_stable(const Subspace& s, int arity) {
  for (const auto& sigma : all_permutations(arity)) {
    const auto table = action_index_table(sigma);
    for (const auto& row : s.basis()) {
      SparseVec image;
      image.reserve(row.size());
      for (const auto& [col, val] : row) image.emplace_back(table[col], val);
      std::sort(image.begin(), image.end(),
                [](const auto& a, const auto& b) { return a.first < b.first; });
      if (!s.contains(image)) return false;
    }
  }
  return true;
}

const std::vector<Builtin>& all_builtins() {
  static const std::vector<Builtin> bs = {Builtin::Ass,   Builtin::Vinb,  Builtin::PreLie,
                                          Builtin::G4Ass, Builtin::G5Ass, Builtin::LieAdm};
  return bs;
}

std::string builtin_name(Builtin b) {
  switch (b) {
    case Builtin::Ass: return "ass";
    case Builtin::Vinb: return "vinb";
    case Builtin::PreLie: return "prelie";
    case Builtin::G4Ass: return "g4ass";
    case Builtin::G5Ass: return "g5ass";
    case Builtin::LieAdm: return "lieadm";
  }
  throw internal_error("unreachable builtin tag");
}

std::optional<Builtin> builtin_from_name(const std::string& name) {
  for (Builtin b : all_builtins())
    if (builtin_name(b) == name) return b;
  return std::nullopt;
}

OperadElement lie_admissible_generator() {
  return OperadElement::from_terms({
      {Rat(1), "(1 (2 3))"},
      {Rat(1), "(2 (3 1))"},
      {Rat(1), "(3 (1 2))"},
      {Rat(-1), "(2 (1 3))"},
      {Rat(-1), "(3 (2 1))"},
      {Rat(-1), "(1 (3 2))"},
      {Rat(-1), "((1 2) 3)"},
      {Rat(-1), "((2 3) 1)"},
      {Rat(-1), "((3 1) 2)"},
      {Rat(1), "((2 1) 3)"},
      {Rat(1), "((3 2) 1)"},
      {Rat(1), "((1 3) 2)"},
  });
}

OperadElement builtin_generator(Builtin b) {
  switch (b) {
    case Builtin::Ass:
      return OperadElement::from_terms({{Rat(1), "(1 (2 3))"}, {Rat(-1), "((1 2) 3)"}});
    case Builtin::Vinb:
      return OperadElement::from_terms({{Rat(1), "(1 (2 3))"},
                                        {Rat(-1), "(2 (1 3))"},
                                        {Rat(-1), "((1 2) 3)"},
                                        {Rat(1), "((2 1) 3)"}});
    case Builtin::PreLie:
      return OperadElement::from_terms({{Rat(1), "(1 (2 3))"},
                                        {Rat(-1), "(1 (3 2))"},
                                        {Rat(-1), "((1 2) 3)"},
                                        {Rat(1), "((1 3) 2)"}});
    case Builtin::G4Ass:
      return OperadElement::from_terms({{Rat(1), "(1 (2 3))"},
                                        {Rat(-1), "(3 (2 1))"},
                                        {Rat(-1), "((1 2) 3)"},
                                        {Rat(1), "((3 2) 1)"}});
    case Builtin::G5Ass:
      return OperadElement::from_terms({{Rat(1), "(1 (2 3))"},
                                        {Rat(1), "(2 (3 1))"},
                                        {Rat(1), "(3 (1 2))"},
                                        {Rat(-1), "((1 2) 3)"},
                                        {Rat(-1), "((2 3) 1)"},
                                        {Rat(-1), "((3 1) 2)"}});
    case Builtin::LieAdm:
      return lie_admissible_generator();
  }
  throw internal_error("unreachable builtin tag");
}

Presentation builtin(Builtin b) {
  return Presentation{builtin_name(b), sigma_closure({builtin_generator(b)})};
}

namespace {

struct LineScanner {
  const std::string& line;
  int line_no;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < line.size() && (line[pos] == ' ' || line[pos] == '\t')) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= line.size();
  }
  [[noreturn]] void fail(const std::string& msg) {
    throw parse_error(msg, line_no, static_cast<int>(pos) + 1);
  }
};

Rat scan_coefficient(LineScanner& sc) {
  sc.skip_ws();
  const std::size_t start = sc.pos;
  while (sc.pos < sc.line.size() &&
         (std::isdigit(static_cast<unsigned char>(sc.line[sc.pos])) || sc.line[sc.pos] == '/'))
    ++sc.pos;
  if (sc.pos == start) sc.fail("expected coefficient");
  try {
    return parse_rational(sc.line.substr(start, sc.pos - start));
  } catch (const parse_error& e) {
    sc.pos = start;
    sc.fail(e.what());
  }
}

TreeMonomial scan_monomial(LineScanner& sc) {
  sc.skip_ws();
  TreeMonomial m = [&] {
    try {
      return parse_monomial(sc.line, sc.pos);
    } catch (const parse_error& e) {
      throw parse_error(e.what(), sc.line_no, e.column());
    }
  }();
  if (m.arity() != 3) sc.fail("relation monomials must use the labels {1,2,3}");
  std::vector<bool> seen(3, false);
  for (int l : m.labels()) {
    if (l < 1 || l > 3 || seen[l - 1])
      sc.fail("relation monomials must use the labels {1,2,3}, each once");
    seen[l - 1] = true;
  }
  return m;
}

}  // namespace

ParsedPresentation parse_presentation(const std::string& text, const std::string& name) {
  ParsedPresentation out;
  std::vector<OperadElement> generators;

  std::istringstream in(text);
  std::string raw;
  int line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    if (auto hash = raw.find('#'); hash != std::string::npos) raw.resize(hash);
    LineScanner sc{raw, line_no};
    if (sc.done()) continue;

    constexpr std::string_view kKeyword = "relation:";
    if (raw.compare(sc.pos, kKeyword.size(), kKeyword) != 0)
      sc.fail("expected 'relation:'");
    sc.pos += kKeyword.size();

    OperadElement rel(3);
    bool negate = false;
    if (!sc.done() && (sc.line[sc.pos] == '+' || sc.line[sc.pos] == '-')) {
      negate = sc.line[sc.pos] == '-';
      ++sc.pos;
    }
    while (true) {
      Rat c = scan_coefficient(sc);
      if (negate) c = -c;
      TreeMonomial m = scan_monomial(sc);
      rel.add(m, c);
      if (sc.done()) break;
      if (sc.line[sc.pos] == '+' || sc.line[sc.pos] == '-') {
        negate = sc.line[sc.pos] == '-';
        ++sc.pos;
      } else {
        sc.fail("expected '+' or '-' between terms");
      }
    }

    if (rel.is_zero())
      out.zero_relation_lines.push_back(line_no);
    else
      generators.push_back(std::move(rel));
  }

  out.generator_count = static_cast<int>(generators.size());
  std::vector<SparseVec> plain;
  for (const auto& g : generators) plain.push_back(g.sparse_coords());
  out.input_span_dim = Subspace::span_sparse(std::move(plain), free_dim(3)).dim();

  out.presentation = Presentation{name, sigma_closure(generators)};
  out.closed_dim = out.presentation.relations.dim();
  return out;
}

}  // namespace quadop
