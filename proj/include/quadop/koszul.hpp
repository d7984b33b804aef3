#pragma once

#include <optional>
#include <string>
#include <vector>

#include "quadop/expansion.hpp"

namespace quadop {

// Truncated generating series: coefficient of x^d is
// (-1)^d * dim P(d) / d! for an operad, degrees 1..order.
struct PoincareSeries {
  int order = 0;
  std::vector<Rat> coeffs;  // coeffs[d-1] holds degree d

  static PoincareSeries from_dims(const DimensionTable& t, int order);

  const Rat& coeff(int degree) const;
  bool is_identity() const;  // equal to the series x
  std::string str() const;

  friend bool operator==(const PoincareSeries&, const PoincareSeries&) = default;
};

// Coefficients of f(g(x)) through the common truncation order. Both
// series start in degree 1.
PoincareSeries compose(const PoincareSeries& f, const PoincareSeries& g);

// Compositional inverse: compose(f, invert(f)) is the identity series.
// Requires a nonzero degree-1 coefficient.
PoincareSeries invert(const PoincareSeries& f);

// Cross-check data: series coefficients reported for these operads in the
// literature, recorded per degree. Empty when none are on file.
std::optional<std::vector<Rat>> reference_series(const std::string& name);
std::optional<std::vector<Rat>> reference_dual_series(const std::string& name);

// A reference coefficient that disagrees with the computed one. When no
// nonnegative integer dimension can produce the reference value at this
// degree, the reference itself is flagged as impossible.
struct ReferenceNote {
  std::string series;  // "primal" or "dual"
  int degree = 0;
  Rat reference;
  Rat computed;
  int computed_dim = 0;
  bool impossible_dimension = false;
};

struct KoszulReport {
  std::string name;
  std::string dual_name;
  int order = 0;
  DimensionTable dims;
  DimensionTable dual_dims;
  PoincareSeries series;
  PoincareSeries dual_series;
  PoincareSeries composition;
  bool pass = false;
  int first_fail_degree = 0;  // 0 when the composition is the identity
  Rat first_fail_coeff;
  std::vector<ReferenceNote> notes;
};

// Functional-equation test: composes the series of the presentation with
// the series of its dual, both computed by ideal expansion. The identity
// through the truncation order is necessary for Koszulity, never a proof
// of it. Requires 3 <= order <= 5.
KoszulReport koszul_necessary_check(const Presentation& p, int order);

}  // namespace quadop
