#include <catch2/catch_amalgamated.hpp>

#include "atiyah/psi.hpp"

using namespace atiyah;

TEST_CASE("psi prefix convention") {
  CHECK(psi({1}) == SymPoly::constant(1) + xi_var(1) * x_var(1));
  SymPoly p12 = SymPoly::constant(1) + (xi_var(1) + xi_var(2)) * x_var(1) +
                xi_var(1) * xi_var(2) * (x_var(1) * x_var(2));
  CHECK(psi({1, 2}) == p12);
  // upper indices may repeat; only the first k of them enter the k-th term
  Alphabet lo = {xi_slot(1), xi_slot(2), xi_slot(3)};
  SymPoly expect = SymPoly::constant(1) + elementary(1, lo) * x_var(2) +
                   elementary(2, lo) * (x_var(2) * x_var(4)) +
                   elementary(3, lo) * (x_var(2) * x_var(4).pow(2));
  CHECK(psi({2, 4, 4}, {1, 2, 3}) == expect);
  CHECK_THROWS(psi({1, 2}, {1}));
}

TEST_CASE("index sequences") {
  CHECK(seq_full(4) == IndexSeq{1, 2, 3, 4});
  CHECK(seq_del(4, 2) == IndexSeq{1, 3, 4});
  CHECK(seq_with_doubled(4, 2) == IndexSeq{1, 2, 2, 3});
  CHECK(seq_with_doubled(2, 1) == IndexSeq{1, 1});
}

TEST_CASE("m-basis grouping enforces symmetry") {
  Alphabet xi12 = {xi_slot(1), xi_slot(2)};
  SymPoly sym = xi_var(1) * xi_var(2) * x_var(1) + (xi_var(1) + xi_var(2)) * x_var(2);
  auto mb = to_m_basis(sym, xi12);
  REQUIRE(mb.size() == 2);
  CHECK(mb.at({1, 1}) == x_var(1));
  CHECK(mb.at({1}) == x_var(2));
  SymPoly asym = xi_var(1) * x_var(1);
  CHECK_THROWS_AS(to_m_basis(asym, xi12), std::logic_error);
}

TEST_CASE("telescoping substitution certifies ordered differences") {
  std::vector<int> slots = {x_slot(1), x_slot(2), x_slot(3)};
  SymPoly diff = x_var(1) - x_var(3);
  CHECK(telescope_substitute(diff, slots) == x_var(1) + x_var(2));
  CHECK(telescope_substitute(x_var(3) - x_var(1), slots).all_coeffs_nonneg() == false);
}

TEST_CASE("numeric counterexample search") {
  std::vector<int> slots = {x_slot(1), x_slot(2)};
  CHECK_FALSE(numeric_counterexample(x_var(1) * xi_var(1), slots).has_value());
  CHECK(numeric_counterexample(-(x_var(2) * x_var(2)), slots).has_value());
}

TEST_CASE("conjecture 3.3 small cases match the printed forms") {
  CHECK(conjecture_3_3_n2_matches());
  CHECK(conjecture_3_3_n3_decomposition());
}

TEST_CASE("conjecture 3.3 certificates") {
  for (int n : {2, 3, 4}) {
    Certificate c = conjecture_check("3.3", n);
    CAPTURE(n, c.detail);
    CHECK(c.passed());
  }
}

TEST_CASE("conjecture 3.4 certificates leave X1 free") {
  for (int n : {2, 3, 4}) {
    Certificate c = conjecture_check("3.4", n);
    CAPTURE(n, c.detail);
    CHECK(c.passed());
  }
  // n = 2 is an exact identity
  CHECK(conjecture_3_4_difference(2).is_zero());
}

TEST_CASE("conjecture 3.9 certificates and n=3 residual") {
  CHECK(conjecture_3_9_difference(2).is_zero());
  CHECK(conjecture_3_9_n3_residual_matches());
  for (int n : {3, 4}) {
    Certificate c = conjecture_check("3.9", n);
    CAPTURE(n, c.detail);
    CHECK(c.passed());
  }
}

TEST_CASE("conjecture 5.3 certificates") {
  for (int n : {3, 4}) {
    Certificate c = conjecture_check("5.3", n);
    CAPTURE(n, c.detail);
    CHECK(c.passed());
  }
}

TEST_CASE("chain endpoint certificates and the printed n=4 witness") {
  Certificate c4 = conjecture_check("3.8", 4);
  CHECK(c4.passed());
  CHECK_FALSE(c4.witness.empty());
  CHECK(q4_endpoint_witness_matches());
  CHECK(conjecture_check("3.8", 3).status == CertStatus::refused);
}

TEST_CASE("budget guards") {
  CHECK(conjecture_check("3.3", 6).status == CertStatus::refused);
  CHECK(conjecture_check("3.3", 8, true).status == CertStatus::refused);
  CHECK_THROWS(conjecture_check("nope", 3));
}

TEST_CASE("partition property") {
  Certificate c = partition_property_check({{1, 2}, {3}}, {{1, 2}, {3}});
  CHECK(c.passed());
  Certificate mixed = partition_property_check({{1, 3}, {2, 4}}, {{2, 4}, {1, 3}});
  CHECK(mixed.passed());
  CHECK_THROWS(partition_property_check({{1, 2}}, {{1}, {2}}));
}

TEST_CASE("Qtilde certificates") {
  Certificate q4 = qtilde_check(4);
  CAPTURE(q4.detail);
  CHECK(q4.passed());
  CHECK(qtilde_check(3).status == CertStatus::refused);
}

TEST_CASE("Theorem 3.6 closed derivative formulas") {
  for (int n = 2; n <= 4; ++n)
    for (int k = 1; k <= n; ++k)
      for (int r = 1; r <= n; ++r) {
        if (k == r) continue;
        CAPTURE(n, k, r);
        CHECK(theorem_3_6_delta(n, k, r).equal);
      }
  CHECK_THROWS(theorem_3_6_delta(3, 2, 2));
}

TEST_CASE("Lemma 5.1 closed derivative formula and Corollary 5.2") {
  for (int n = 2; n <= 4; ++n)
    for (int r = 2; r <= n; ++r) {
      CAPTURE(n, r);
      CHECK(lemma_5_1_delta(n, r).equal);
    }
  CHECK(corollary_5_2_check(3));
  CHECK(corollary_5_2_check(4));
}

TEST_CASE("resultant route") {
  CHECK(reduced_matrix_printed_check_n3());
  CHECK(reduced_matrix_printed_check_n4());
  for (int n : {2, 3, 4}) {
    ResultantPath rp = resultant_path(n);
    CAPTURE(n);
    CHECK(rp.lemma_3_11_holds);
    CHECK(rp.dets_match);
    CHECK(rp.hadamard_equals_conjecture_3_9);
    CHECK(rp.hadamard_cert.passed());
  }
}

TEST_CASE("type-A determinant") {
  TypeAResult r = typeA_determinant({Rational(1), Rational(2)});
  CHECK(r.det_matrix == 11);
  CHECK(r.det_closed == 11);
  CHECK(r.product_bound == 10);
  CHECK(r.matrix_matches);
  CHECK(r.c2_holds);
  // boundary case: equal lambdas meet the bound with equality
  TypeAResult eq = typeA_determinant({Rational(1), Rational(1)});
  CHECK(eq.det_closed == 4);
  CHECK(eq.det_closed == eq.product_bound);
  TypeAResult big = typeA_determinant(
      {Rational(1, 3), Rational(1, 2), Rational(2), Rational(7, 2), Rational(5)});
  CHECK(big.matrix_matches);
  CHECK(big.c2_holds);
  CHECK_THROWS(typeA_determinant({Rational(-1)}));
}
