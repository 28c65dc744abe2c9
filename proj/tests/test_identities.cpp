#include <catch2/catch_amalgamated.hpp>

#include "atiyah/identities.hpp"

using namespace atiyah;

TEST_CASE("A4 sum form equals face form") { CHECK(a4_forms_agree()); }

TEST_CASE("volume regrouping identity") { CHECK(volume_regrouping_identity()); }

TEST_CASE("bordered Cayley-Menger equals the expansion") {
  CHECK(bordered_cm_matches_expansion());
}

TEST_CASE("edge-tangential reductions") {
  EdgeTangentialReductions r = edge_tangential_reductions();
  CHECK(r.prod_r);
  CHECK(r.volume);
  CHECK(r.mobius);
  CHECK(r.a4);
  CHECK(r.re_d4);
  CHECK(r.face_d3);
}

TEST_CASE("Lemma 2.7 witness") {
  CHECK(section_2_2_witness_matches());
  CHECK(section_2_2_display_scaling());
  // the witness has only nonnegative coefficients, so the difference is a sum
  // of monomial orbits
  for (auto& [pat, coeff] : section_2_2_witness()) {
    CAPTURE(pat);
    CHECK(coeff > 0);
  }
}

TEST_CASE("strong four-points difference over tangent lengths") {
  CHECK(section_2_3_witness_matches());
  CHECK(section_2_3_muirhead_route());
}

TEST_CASE("Schur identity suite") {
  SchurIdentitySuite s = schur_identity_suite_sym();
  CHECK(s.product_minus_d3);
  CHECK(s.squares_residual);
  CHECK(s.squares_route);
  CHECK(s.squares_linear);
  CHECK(s.weighted_squares);
  CHECK(s.two_alphabet);
  CHECK(s.half_squares);
}

TEST_CASE("Schur power certificates") {
  CHECK(schur_power_cert(1).passed());
  CHECK(schur_power_cert(2).passed());
  CHECK(two_alphabet_h2_cert().passed());
}

TEST_CASE("upright gap decomposition") {
  UprightDecomposition u = upright_gap_decomposition();
  CHECK(u.identity_holds);
  CHECK(upright_lemma_2_4_identity());
  Certificate c = upright_lemma_2_5_cert();
  CAPTURE(c.detail);
  CHECK(c.passed());
  CHECK(c.detail.find("83 ") != std::string::npos);
}

TEST_CASE("trirectangular suite") {
  TrirectangularSuite t = trirectangular_suite();
  CHECK(t.volume);
  CHECK(t.d3_faces);
  CHECK(t.d3_legs);
  CHECK(t.endpoint);
}

TEST_CASE("parallelogram suite") {
  ParallelogramSuite p = parallelogram_suite();
  CHECK(p.planar);
  CHECK(p.diagonal_law);
  CHECK(p.item1);
  CHECK(p.item2);
  CHECK(p.item3);
  CHECK(p.item4);
  CHECK(p.item5);
  CHECK(p.item5_printed_sign_fails);
  CHECK(p.item6);
  CHECK(p.item7);
  CHECK(p.strengthened_c3);
}

TEST_CASE("wedge suite") {
  WedgeSuite w = wedge_suite();
  CHECK(w.volume_factorization);
  CHECK(w.first_formula);
  CHECK(w.second_formula);
  CHECK(w.interchange);
}

TEST_CASE("semiregular suite") {
  SemiregularSuite s = semiregular_suite();
  CHECK(s.volume);
  CHECK(s.a4);
  CHECK(s.weak_gap);
  CHECK(s.strong_gap);
}
