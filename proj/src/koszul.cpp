#include "quadop/koszul.hpp"

#include "quadop/duality.hpp"
#include "quadop/error.hpp"

namespace quadop {

namespace {

Rat series_coefficient(int dim, int degree) {
  Rat c = Rat(dim) / Rat(factorial(degree));
  return degree % 2 == 0 ? c : -c;
}

// f * g truncated to the common order.
PoincareSeries truncated_product(const PoincareSeries& f, const PoincareSeries& g) {
  PoincareSeries out{f.order, std::vector<Rat>(f.order, Rat(0))};
  for (int i = 1; i <= f.order; ++i) {
    if (f.coeff(i) == 0) continue;
    for (int j = 1; i + j <= f.order; ++j)
      out.coeffs[i + j - 1] += f.coeff(i) * g.coeff(j);
  }
  return out;
}

PoincareSeries identity_series(int order) {
  PoincareSeries x{order, std::vector<Rat>(order, Rat(0))};
  x.coeffs[0] = 1;
  return x;
}

}  // namespace

PoincareSeries PoincareSeries::from_dims(const DimensionTable& t, int order) {
  if (order < 1) throw invalid_input("series order must be positive");
  PoincareSeries s{order, {}};
  s.coeffs.reserve(order);
  for (int d = 1; d <= order; ++d) {
    auto it = t.dims.find(d);
    if (it == t.dims.end())
      throw invalid_input("missing dimension for arity " + std::to_string(d));
    s.coeffs.push_back(series_coefficient(it->second, d));
  }
  return s;
}

const Rat& PoincareSeries::coeff(int degree) const {
  if (degree < 1 || degree > order) throw invalid_input("degree out of range");
  return coeffs[degree - 1];
}

bool PoincareSeries::is_identity() const {
  for (int d = 1; d <= order; ++d)
    if (coeff(d) != (d == 1 ? 1 : 0)) return false;
  return true;
}

std::string PoincareSeries::str() const {
  std::string out;
  for (int d = 1; d <= order; ++d) {
    const Rat& c = coeff(d);
    if (c == 0) continue;
    const Rat a = abs(c);
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (a != 1) out += rat_str(a) + " ";
    out += d == 1 ? "x" : "x^" + std::to_string(d);
  }
  return out.empty() ? "0" : out;
}

PoincareSeries compose(const PoincareSeries& f, const PoincareSeries& g) {
  if (f.order != g.order) throw invalid_input("series truncation orders differ");
  PoincareSeries out{f.order, std::vector<Rat>(f.order, Rat(0))};
  PoincareSeries power = g;  // g^k
  for (int k = 1; k <= f.order; ++k) {
    if (k > 1) power = truncated_product(power, g);
    if (f.coeff(k) == 0) continue;
    for (int d = k; d <= f.order; ++d) out.coeffs[d - 1] += f.coeff(k) * power.coeff(d);
  }
  return out;
}

PoincareSeries invert(const PoincareSeries& f) {
  if (f.order < 1 || f.coeff(1) == 0)
    throw invalid_input("series is not invertible under composition");
  PoincareSeries h{f.order, std::vector<Rat>(f.order, Rat(0))};
  h.coeffs[0] = Rat(1) / f.coeff(1);
  for (int d = 2; d <= f.order; ++d) {
    // With h_d still zero, the degree-d defect of f(h) is linear in h_d
    // with slope f_1.
    const Rat defect = compose(f, h).coeff(d);
    h.coeffs[d - 1] = -defect / f.coeff(1);
  }
  return h;
}

namespace {

std::vector<Rat> canonical(std::vector<Rat> v) {
  for (auto& r : v) r.canonicalize();
  return v;
}

}  // namespace

std::optional<std::vector<Rat>> reference_series(const std::string& name) {
  if (name == "g4ass")
    return canonical({Rat(-1), Rat(1), Rat(-3, 2), Rat(59, 24)});
  if (name == "g5ass")
    return canonical({Rat(-1), Rat(1), Rat(-5, 3), Rat(39, 24)});
  return std::nullopt;
}

std::optional<std::vector<Rat>> reference_dual_series(const std::string& name) {
  if (name == "g4ass")
    return canonical({Rat(-1), Rat(1), Rat(-1, 2), Rat(-1, 4)});
  if (name == "g5ass")
    return canonical({Rat(-1), Rat(1), Rat(-1, 3), Rat(1, 12)});
  return std::nullopt;
}

namespace {

void collect_notes(const std::string& which, const std::optional<std::vector<Rat>>& reference,
                   const PoincareSeries& computed, const DimensionTable& dims,
                   std::vector<ReferenceNote>& notes) {
  if (!reference) return;
  const int upto = std::min<int>(computed.order, static_cast<int>(reference->size()));
  for (int d = 1; d <= upto; ++d) {
    Rat ref = (*reference)[d - 1];
    ref.canonicalize();
    if (ref == computed.coeff(d)) continue;
    // (-1)^d * dim / d! = ref has an integer solution dim >= 0 or not.
    Rat dim_value = ref * factorial(d);
    if (d % 2 == 1) dim_value = -dim_value;
    notes.push_back({which, d, ref, computed.coeff(d), dims.dims.at(d),
                     !is_nonnegative_integer(dim_value)});
  }
}

}  // namespace

KoszulReport koszul_necessary_check(const Presentation& p, int order) {
  if (order < 3 || order > 5) throw invalid_input("truncation order must be in 3..5");

  KoszulReport report;
  report.name = p.name;
  report.order = order;
  report.dims = dimension_table(p, order);
  const Presentation dual = dual_presentation(p);
  report.dual_name = dual.name;
  report.dual_dims = dimension_table(dual, order);

  report.series = PoincareSeries::from_dims(report.dims, order);
  report.dual_series = PoincareSeries::from_dims(report.dual_dims, order);
  report.composition = compose(report.series, report.dual_series);

  report.pass = report.composition.is_identity();
  report.first_fail_degree = 0;
  report.first_fail_coeff = 0;
  if (!report.pass) {
    const PoincareSeries x = identity_series(order);
    for (int d = 1; d <= order; ++d) {
      if (report.composition.coeff(d) != x.coeff(d)) {
        report.first_fail_degree = d;
        report.first_fail_coeff = report.composition.coeff(d) - x.coeff(d);
        break;
      }
    }
  }

  collect_notes("primal", reference_series(p.name), report.series, report.dims, report.notes);
  collect_notes("dual", reference_dual_series(p.name), report.dual_series, report.dual_dims,
                report.notes);
  return report;
}

}  // namespace quadop
