#include "quadop/presentations.hpp"

#include "doctest.h"
#include "quadop/duality.hpp"
#include "quadop/error.hpp"

using namespace quadop;

TEST_CASE("closure dimensions of single generators") {
  CHECK(sigma_closure({lie_admissible_generator()}).dim() == 1);
  CHECK(sigma_closure({builtin_generator(Builtin::Ass)}).dim() == 6);
  CHECK(sigma_closure({builtin_generator(Builtin::Vinb)}).dim() == 3);
  CHECK(sigma_closure({}).dim() == 0);
  CHECK_THROWS_AS(sigma_closure({OperadElement::monomial(TreeMonomial::parse("(1 2)"))}),
                  invalid_input);
}

TEST_CASE("builtin relation dimensions") {
  CHECK(builtin(Builtin::Ass).relations.dim() == 6);
  CHECK(builtin(Builtin::Vinb).relations.dim() == 3);
  CHECK(builtin(Builtin::PreLie).relations.dim() == 3);
  CHECK(builtin(Builtin::G4Ass).relations.dim() == 3);
  CHECK(builtin(Builtin::G5Ass).relations.dim() == 2);
  CHECK(builtin(Builtin::LieAdm).relations.dim() == 1);
}

TEST_CASE("builtin names round-trip") {
  for (Builtin b : all_builtins()) {
    auto back = builtin_from_name(builtin_name(b));
    REQUIRE(back.has_value());
    CHECK(*back == b);
  }
  CHECK_FALSE(builtin_from_name("nope").has_value());
}

TEST_CASE("every builtin relation module is stable under all relabelings") {
  for (Builtin b : all_builtins()) CHECK(sigma_stable(builtin(b).relations, 3));
}

TEST_CASE("subgroup condition vectors generate the builtin relation modules") {
  const std::pair<Builtin, GSubgroup> pairs[] = {
      {Builtin::Ass, GSubgroup::G1},    {Builtin::Vinb, GSubgroup::G2},
      {Builtin::PreLie, GSubgroup::G3}, {Builtin::G4Ass, GSubgroup::G4},
      {Builtin::G5Ass, GSubgroup::G5},  {Builtin::LieAdm, GSubgroup::G6},
  };
  for (const auto& [b, g] : pairs)
    CHECK(sigma_closure({condition_vector(g)}) == builtin(b).relations);
}

TEST_CASE("full-group condition vector equals the alternating generator up to sign") {
  const OperadElement cv = condition_vector(GSubgroup::G6);
  const OperadElement u6 = lie_admissible_generator();
  const bool plus = cv == u6;
  const bool minus = cv == -u6;
  CHECK(plus != minus);  // exactly one global sign works
  CHECK(minus);          // with this action convention the sign is -1
}

TEST_CASE("alternating generator lies in the closures of the two-element and cyclic conditions") {
  const SparseVec u6 = lie_admissible_generator().sparse_coords();
  for (GSubgroup g : {GSubgroup::G2, GSubgroup::G3, GSubgroup::G4, GSubgroup::G5})
    CHECK(sigma_closure({condition_vector(g)}).contains(u6));
}

TEST_CASE("relation dim plus complement dim is the full 12") {
  for (Builtin b : all_builtins()) {
    const Presentation p = builtin(b);
    CHECK(p.relations.dim() +
              p.relations.orthogonal_complement(signed_form()).dim() == 12);
  }
}

TEST_CASE("presentation file: same generator as the associativity builtin") {
  const auto parsed =
      parse_presentation("relation: 1 ((1 2) 3) - 1 (1 (2 3))\n", "user");
  CHECK(parsed.presentation.relations == builtin(Builtin::Ass).relations);
  CHECK(parsed.generator_count == 1);
  CHECK(parsed.input_span_dim == 1);
  CHECK(parsed.closed_dim == 6);
}

TEST_CASE("presentation file: empty relation list gives the zero subspace") {
  const auto parsed = parse_presentation("# just a comment\n\n", "free");
  CHECK(parsed.presentation.relations.dim() == 0);
}

TEST_CASE("presentation file: coefficients, signs, comments") {
  const auto parsed = parse_presentation(
      "# vinberg relation, scaled\n"
      "relation: -2 (1 (2 3)) + 2 (2 (1 3)) + 2 ((1 2) 3) - 2 ((2 1) 3)\n"
      "relation: 1/2 (1 (2 3)) - 1/2 (2 (1 3)) - 1/2 ((1 2) 3) + 1/2 ((2 1) 3)  # same\n",
      "user");
  CHECK(parsed.presentation.relations == builtin(Builtin::Vinb).relations);
  CHECK(parsed.input_span_dim == 1);
  CHECK(parsed.closed_dim == 3);
}

TEST_CASE("presentation file: zero relations are reported") {
  const auto parsed = parse_presentation(
      "relation: 1 ((1 2) 3) - 1 ((1 2) 3)\nrelation: 1 (1 (2 3)) - 1 ((1 2) 3)\n",
      "user");
  CHECK(parsed.zero_relation_lines == std::vector<int>{1});
  CHECK(parsed.closed_dim == 6);
}

TEST_CASE("presentation file errors carry positions") {
  try {
    parse_presentation("relation: 1 ((1 2) 3)\nrelation 1 (1 (2 3))\n", "user");
    FAIL("expected parse_error");
  } catch (const parse_error& e) {
    CHECK(e.line() == 2);
  }

  // labels must be exactly {1,2,3}
  CHECK_THROWS_AS(parse_presentation("relation: 1 ((1 2) 4)\n", "user"), parse_error);
  CHECK_THROWS_AS(parse_presentation("relation: 1 (1 2)\n", "user"), parse_error);
  // malformed term separators and coefficients
  CHECK_THROWS_AS(parse_presentation("relation: (1 (2 3))\n", "user"), parse_error);
  CHECK_THROWS_AS(parse_presentation("relation: 1 (1 (2 3)) 1 ((1 2) 3)\n", "user"),
                  parse_error);
  CHECK_THROWS_AS(parse_presentation("relation: 1/0 (1 (2 3))\n", "user"), parse_error);
}

TEST_CASE("non-stable user input is closed automatically") {
  // a single non-symmetric vector: its plain span is 1-dimensional but the
  // stored relations are the full orbit span
  const auto parsed = parse_presentation("relation: 1 ((1 2) 3) - 1 ((1 3) 2)\n", "user");
  CHECK(parsed.input_span_dim == 1);
  CHECK(parsed.closed_dim > 1);
  CHECK(sigma_stable(parsed.presentation.relations, 3));
}
