#include "quadop/treespace.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <unordered_map>

#include "quadop/error.hpp"

namespace quadop {

namespace {

constexpr int kMaxShapeArity = 8;

// Tree shapes encoded as strings: "L" is a leaf, "(<left><right>)" an
// internal node. Catalog order: left subtree size descending, then left
// and right recursively, which puts the left comb first.
struct Catalog {
  std::vector<std::string> shapes;
  std::unordered_map<std::string, int> index;
};

const Catalog& catalog(int n) {
  static const std::vector<Catalog> all = [] {
    std::vector<Catalog> cats(kMaxShapeArity + 1);
    cats[1].shapes = {"L"};
    cats[1].index = {{"L", 0}};
    for (int m = 2; m <= kMaxShapeArity; ++m) {
      for (int k = m - 1; k >= 1; --k)
        for (const auto& left : cats[k].shapes)
          for (const auto& right : cats[m - k].shapes) {
            std::string s = "(" + left + right + ")";
            cats[m].index.emplace(s, static_cast<int>(cats[m].shapes.size()));
            cats[m].shapes.push_back(std::move(s));
          }
    }
    return cats;
  }();
  if (n < 1 || n > kMaxShapeArity)
    throw invalid_input("tree arity must be in 1.." + std::to_string(kMaxShapeArity));
  return all[n];
}

int catalan(int n) {
  static const std::array<int, 8> c = {1, 1, 2, 5, 14, 42, 132, 429};
  return c[n];
}

}  // namespace

TreeMonomial::TreeMonomial(int shape, std::vector<int> labels)
    : shape_(shape), labels_(std::move(labels)) {}

TreeMonomial parse_monomial(std::string_view text, std::size_t& pos) {
  auto skip_ws = [&] {
    while (pos < text.size() && text[pos] == ' ') ++pos;
  };
  auto fail = [&](const std::string& msg) -> void {
    throw parse_error(msg, 0, static_cast<int>(pos) + 1);
  };

  skip_ws();
  if (pos >= text.size()) fail("expected monomial, found end of input");

  if (text[pos] == '(') {
    ++pos;
    TreeMonomial left = parse_monomial(text, pos);
    if (pos >= text.size() || text[pos] != ' ')
      fail("expected ' ' between the two factors");
    TreeMonomial right = parse_monomial(text, pos);
    skip_ws();
    if (pos >= text.size() || text[pos] != ')') fail("expected ')'");
    ++pos;

    const std::string shape = "(" + catalog(left.arity()).shapes[left.shape_] +
                              catalog(right.arity()).shapes[right.shape_] + ")";
    const int n = left.arity() + right.arity();
    std::vector<int> labels = left.labels_;
    labels.insert(labels.end(), right.labels_.begin(), right.labels_.end());
    return TreeMonomial(catalog(n).index.at(shape), std::move(labels));
  }

  if (std::isdigit(static_cast<unsigned char>(text[pos]))) {
    int v = 0;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
      v = v * 10 + (text[pos] - '0');
      if (v > 1000) fail("label too large");
      ++pos;
    }
    if (v < 1) fail("labels start at 1");
    return TreeMonomial(0, {v});
  }

  fail(std::string("unexpected character '") + text[pos] + "'");
  throw internal_error("unreachable");
}

TreeMonomial TreeMonomial::parse(std::string_view text) {
  std::size_t pos = 0;
  TreeMonomial m = parse_monomial(text, pos);
  while (pos < text.size() && text[pos] == ' ') ++pos;
  if (pos != text.size())
    throw parse_error("trailing characters after monomial", 0, static_cast<int>(pos) + 1);
  const int n = m.arity();
  std::vector<bool> seen(n, false);
  for (int l : m.labels_) {
    if (l < 1 || l > n || seen[l - 1])
      throw parse_error("labels must be exactly 1.." + std::to_string(n) +
                        ", each occurring once");
    seen[l - 1] = true;
  }
  return m;
}

TreeMonomial TreeMonomial::from_basis_index(int n, int index) {
  if (index < 0 || index >= free_dim(n)) throw invalid_input("basis index out of range");
  const int nf = static_cast<int>(factorial(n));
  return TreeMonomial(index / nf, lehmer_unrank(n, index % nf));
}

int TreeMonomial::basis_index() const {
  return shape_ * static_cast<int>(factorial(arity())) + lehmer_rank(labels_);
}

TreeMonomial TreeMonomial::relabel(const Permutation& p) const {
  if (p.arity() != arity()) throw invalid_input("arity mismatch in action");
  std::vector<int> labels(labels_.size());
  for (std::size_t i = 0; i < labels_.size(); ++i) labels[i] = p(labels_[i]);
  return TreeMonomial(shape_, std::move(labels));
}

TreeMonomial TreeMonomial::graft(int slot, const TreeMonomial& other) const {
  const int n = arity(), k = other.arity();
  if (slot < 1 || slot > n) throw invalid_input("graft slot out of range");

  const auto pos =
      std::find(labels_.begin(), labels_.end(), slot) - labels_.begin();

  const std::string& outer = catalog(n).shapes[shape_];
  const std::string& inner = catalog(k).shapes[other.shape_];
  std::string shape;
  shape.reserve(outer.size() + inner.size());
  int leaf = 0;
  for (char c : outer) {
    if (c == 'L' && leaf++ == pos)
      shape += inner;
    else
      shape += c;
  }

  std::vector<int> labels;
  labels.reserve(n + k - 1);
  auto shifted = [&](int j) { return j < slot ? j : j + k - 1; };
  for (std::size_t q = 0; q < labels_.size(); ++q) {
    if (static_cast<long>(q) == pos)
      for (int t : other.labels_) labels.push_back(t + slot - 1);
    else
      labels.push_back(shifted(labels_[q]));
  }
  return TreeMonomial(catalog(n + k - 1).index.at(shape), std::move(labels));
}

std::string TreeMonomial::str() const {
  const std::string& shape = catalog(arity()).shapes[shape_];
  std::size_t leaf = 0;
  std::string out;
  // Rebuild the nested-pair text by walking the shape string; a space
  // goes between the two children of each node.
  std::vector<int> states;  // 0 = before left child, 1 = before right child
  for (char c : shape) {
    auto emit = [&](const std::string& piece) {
      if (!states.empty() && states.back() == 1) out += ' ';
      out += piece;
      if (!states.empty()) states.back() = 1;
    };
    if (c == '(') {
      if (!states.empty() && states.back() == 1) out += ' ';
      if (!states.empty()) states.back() = 1;
      out += '(';
      states.push_back(0);
    } else if (c == 'L') {
      emit(std::to_string(labels_[leaf++]));
    } else {  // ')'
      states.pop_back();
      out += ')';
    }
  }
  return out;
}

int free_dim(int n) {
  if (n < 1 || n > kMaxShapeArity) throw invalid_input("arity out of range");
  return catalan(n - 1) * static_cast<int>(factorial(n));
}

const std::vector<TreeMonomial>& basis(int n) {
  if (n < 1 || n > 5) throw invalid_input("basis arity must be in 1..5");
  static const std::vector<std::vector<TreeMonomial>> cache = [] {
    std::vector<std::vector<TreeMonomial>> all(6);
    for (int m = 1; m <= 5; ++m) {
      all[m].reserve(free_dim(m));
      for (int idx = 0; idx < free_dim(m); ++idx)
        all[m].push_back(TreeMonomial::from_basis_index(m, idx));
    }
    return all;
  }();
  return cache[n];
}

OperadElement::OperadElement(int arity) : arity_(arity) {
  if (arity < 1) throw invalid_input("operad element arity must be positive");
}

OperadElement OperadElement::monomial(const TreeMonomial& m, Rat coeff) {
  OperadElement e(m.arity());
  e.add(m, coeff);
  return e;
}

OperadElement OperadElement::from_terms(
    const std::vector<std::pair<Rat, std::string>>& terms) {
  if (terms.empty()) throw invalid_input("no terms");
  OperadElement e(TreeMonomial::parse(terms.front().second).arity());
  for (const auto& [c, text] : terms) e.add(TreeMonomial::parse(text), c);
  return e;
}

Rat OperadElement::coeff(const TreeMonomial& m) const {
  auto it = coeffs_.find(m);
  return it == coeffs_.end() ? Rat(0) : it->second;
}

OperadElement& OperadElement::add(const TreeMonomial& m, const Rat& c) {
  if (m.arity() != arity_) throw invalid_input("arity mismatch");
  if (c == 0) return *this;
  auto [it, fresh] = coeffs_.emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
  return *this;
}

OperadElement OperadElement::operator+(const OperadElement& o) const {
  if (o.arity_ != arity_) throw invalid_input("arity mismatch");
  OperadElement out = *this;
  for (const auto& [m, c] : o.coeffs_) out.add(m, c);
  return out;
}

OperadElement OperadElement::operator-(const OperadElement& o) const {
  if (o.arity_ != arity_) throw invalid_input("arity mismatch");
  OperadElement out = *this;
  for (const auto& [m, c] : o.coeffs_) out.add(m, -c);
  return out;
}

OperadElement OperadElement::operator-() const { return *this * Rat(-1); }

OperadElement OperadElement::operator*(const Rat& c) const {
  OperadElement out(arity_);
  if (c == 0) return out;
  for (const auto& [m, v] : coeffs_) out.coeffs_.emplace(m, v * c);
  return out;
}

SparseVec OperadElement::sparse_coords() const {
  // Map order is (shape, labels) which matches the basis enumeration, so
  // the columns come out sorted.
  SparseVec out;
  out.reserve(coeffs_.size());
  for (const auto& [m, c] : coeffs_) out.emplace_back(m.basis_index(), c);
  return out;
}

std::vector<Rat> OperadElement::dense_coords() const {
  return sparse::to_dense(sparse_coords(), free_dim(arity_));
}

OperadElement OperadElement::from_sparse_coords(int n, const SparseVec& v) {
  OperadElement e(n);
  for (const auto& [idx, c] : v) e.add(TreeMonomial::from_basis_index(n, idx), c);
  return e;
}

std::string OperadElement::str() const {
  if (coeffs_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : coeffs_) {
    const bool neg = c < 0;
    if (first) {
      if (neg) out += "- ";
      first = false;
    } else {
      out += neg ? " - " : " + ";
    }
    out += rat_str(abs(c)) + " " + m.str();
  }
  return out;
}

OperadElement act(const Permutation& p, const OperadElement& e) {
  OperadElement out(e.arity());
  for (const auto& [m, c] : e.coeffs()) out.add(m.relabel(p), c);
  return out;
}

OperadElement graft(const OperadElement& a, int slot, const OperadElement& b) {
  if (slot < 1 || slot > a.arity()) throw invalid_input("graft slot out of range");
  OperadElement out(a.arity() + b.arity() - 1);
  for (const auto& [ma, ca] : a.coeffs())
    for (const auto& [mb, cb] : b.coeffs()) out.add(ma.graft(slot, mb), ca * cb);
  return out;
}

std::vector<int> action_index_table(const Permutation& p) {
  const int n = p.arity();
  const auto& b = basis(n);
  std::vector<int> table(b.size());
  for (std::size_t i = 0; i < b.size(); ++i) table[i] = b[i].relabel(p).basis_index();
  return table;
}

Permutation block_permutation(const Permutation& p, int slot, int inner_arity) {
  const int n = p.arity(), k = inner_arity;
  if (slot < 1 || slot > n) throw invalid_input("slot out of range");
  const int target = p(slot);
  auto shifted = [&](int y) { return y < target ? y : y + k - 1; };
  std::vector<int> im(n + k - 1);
  for (int x = 1; x <= n + k - 1; ++x) {
    if (x < slot)
      im[x - 1] = shifted(p(x));
    else if (x < slot + k)
      im[x - 1] = target + (x - slot);
    else
      im[x - 1] = shifted(p(x - k + 1));
  }
  return Permutation(std::move(im));
}

OperadElement condition_vector(GSubgroup g) {
  const OperadElement a = OperadElement::from_terms({{Rat(1), "((1 2) 3)"},
                                                     {Rat(-1), "(1 (2 3))"}});
  OperadElement sum(3);
  for (const auto& sigma : subgroup_elements(g))
    sum = sum + act(sigma, a) * Rat(sigma.sign());
  return sum;
}

}  // namespace quadop
