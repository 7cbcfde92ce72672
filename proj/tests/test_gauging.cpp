#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>

#include "tubealg/condensation.hpp"
#include "tubealg/fixtures.hpp"

using namespace tubealg;

TEST_CASE("projective irreps of Z2 with trivial and nontrivial cocycles") {
  FiniteGroup G = FiniteGroup::cyclic(2);
  MatrixXcd eta = MatrixXcd::Ones(2, 2);
  auto irr = projective_irreps({0, 1}, G, eta);
  REQUIRE(irr.irreps.size() == 2);
  CHECK(irr.irreps[0].dim == 1);
  // characters chi(x) = -1 and +1 in canonical order
  CHECK(std::abs(irr.irreps[0].chi[1] + 1.0) < 1e-9);
  CHECK(std::abs(irr.irreps[1].chi[1] - 1.0) < 1e-9);

  // eta(x,x) = e^{-i pi/4}: chi(x) = +- e^{-i pi/8}.
  eta(1, 1) = std::polar(1.0, -M_PI / 4);
  auto irr2 = projective_irreps({0, 1}, G, eta);
  REQUIRE(irr2.irreps.size() == 2);
  std::vector<Cplx> vals = {irr2.irreps[0].chi[1], irr2.irreps[1].chi[1]};
  Cplx want = std::polar(1.0, -M_PI / 8);
  bool found_plus = false, found_minus = false;
  for (Cplx v : vals) {
    if (std::abs(v - want) < 1e-9) found_plus = true;
    if (std::abs(v + want) < 1e-9) found_minus = true;
  }
  CHECK(found_plus);
  CHECK(found_minus);
}

TEST_CASE("a Z2xZ2 cocycle with antisymmetric pairing has one 2-dim projective irrep") {
  FiniteGroup G = group_by_name("z2z2");
  // eta with beta(h,k) = -1 off diagonal on the two generators: the standard
  // Pauli cocycle eta((a1,a2),(b1,b2)) = (-1)^{a2 b1}.
  MatrixXcd eta(4, 4);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b) {
      int a2 = G.components[a][1], b1 = G.components[b][0];
      eta(a, b) = ((a2 * b1) % 2) ? -1.0 : 1.0;
    }
  auto irr = projective_irreps({0, 1, 2, 3}, G, eta);
  REQUIRE(irr.irreps.size() == 1);
  CHECK(irr.irreps[0].dim == 2);
}

TEST_CASE("gauging the EM toric code gives the doubled Ising data") {
  DefectTheory th = defect_spectrum(fixture("em_toric_code"));
  GaugedTheory gt = gauge(th);
  REQUIRE(gt.count() == 9);

  // sigma+ gauges into two blocks via chi(x) = +- e^{-i pi/8}; the e/m orbit
  // merges into one D = 2 block.
  std::vector<int> dims = gt.block_dim;
  std::sort(dims.begin(), dims.end());
  CHECK(dims == std::vector<int>{1, 1, 1, 1, 1, 1, 1, 1, 2});

  ModularData md = gauged_modular(gt);
  ModularData direct = gauged_modular_direct(gt);
  for (int i = 0; i < md.size(); ++i) {
    CHECK(std::abs(md.theta[i] - direct.theta[i]) < 1e-7);
    CHECK(std::abs(md.d[i] - direct.d[i]) < 1e-7);
    for (int j = 0; j < md.size(); ++j) CHECK(std::abs(md.S(i, j) - direct.S(i, j)) < 1e-7);
  }

  // Match against the doubled Ising double computed from scratch.
  auto T = build_tube_algebra(fixture("ising+"));
  auto dec = central_idempotents(*T, kDefaultSeed);
  ModularData ising = modular_data(*T, dec);
  CHECK(match_modular_data(md, ising, 1e-7).has_value());

  // theta_sigma split: the gauged doubles of sigma+ have spins e^{+-i pi/8}.
  int spin8 = 0;
  for (int i = 0; i < md.size(); ++i)
    if (std::abs(md.theta[i] - std::polar(1.0, M_PI / 8)) < 1e-7 ||
        std::abs(md.theta[i] - std::polar(1.0, -M_PI / 8)) < 1e-7)
      ++spin8;
  CHECK(spin8 == 2);
}

TEST_CASE("gauging the trivially graded toric code returns the toric code") {
  // Z2-grading of Vec_Z2 by itself: C_1 = {0}, C_x = {psi}; the defect theory
  // is the Z2 paramagnet picture and gauging returns the toric code.
  FusionCategoryData cat = fixture("toric_code");
  DefectTheory th = defect_spectrum(cat);
  REQUIRE(th.count() == 2);
  GaugedTheory gt = gauge(th);
  REQUIRE(gt.count() == 4);
  ModularData md = gauged_modular(gt);
  auto T = build_tube_algebra(cat);
  ModularData direct = modular_data(*T, central_idempotents(*T, kDefaultSeed));
  CHECK(match_modular_data(md, direct, 1e-7).has_value());
}

TEST_CASE("SPT pipeline: gauging Vec_Z2 with the nontrivial cocycle gives the doubled semion") {
  FusionCategoryData cat = fixture("spt:z2:I");
  DefectTheory th = defect_spectrum(cat);
  GaugedTheory gt = gauge(th);
  REQUIRE(gt.count() == 4);
  ModularData md = gauged_modular(gt);
  std::vector<std::pair<long, long>> spins;
  for (const auto& t : md.theta)
    spins.push_back({std::lround(t.real() * 1e6), std::lround(t.imag() * 1e6)});
  std::sort(spins.begin(), spins.end());
  CHECK(spins == std::vector<std::pair<long, long>>{
                     {0, -1000000}, {0, 1000000}, {1000000, 0}, {1000000, 0}});
  // Direct double of the same category.
  auto T = build_tube_algebra(cat);
  ModularData direct = modular_data(*T, central_idempotents(*T, kDefaultSeed));
  CHECK(match_modular_data(md, direct, 1e-7).has_value());

  // SPT character-sum fusion agrees exactly with Verlinde.
  auto N = spt_fusion(gt);
  CHECK(N == md.fusion);
}

TEST_CASE("SPT character-sum fusion matches Verlinde for S3 and Z2xZ2 cocycles") {
  for (const char* f : {"spt:s3", "spt:z2z2:II", "spt:z2z2:I(1)", "spt:z4:I^2"}) {
    CAPTURE(f);
    DefectTheory th = defect_spectrum(fixture(f));
    GaugedTheory gt = gauge(th);
    ModularData md = gauged_modular(gt);
    auto N = spt_fusion(gt);
    CHECK(N == md.fusion);
    // Matches the direct double.
    auto T = build_tube_algebra(th.cat);
    ModularData direct = modular_data(*T, central_idempotents(*T, kDefaultSeed));
    CHECK(match_modular_data(md, direct, 1e-7).has_value());
  }
}

TEST_CASE("gauged quantum dimensions obey |G| d_mu d_a / |Z_a| and match S") {
  DefectTheory th = defect_spectrum(fixture("z2z2_wII"));
  GaugedTheory gt = gauge(th);
  ModularData md = gauged_modular(gt);
  for (int i = 0; i < md.size(); ++i)
    CHECK(std::abs(md.S(0, i) * md.d_out - gt.qdim[i]) < 1e-8);
}

TEST_CASE("sequential gauging: regrade Vec_Z4 by Z2 then gauge matches D(Vec_Z4)") {
  FusionCategoryData z4 = fixture("vec_z4");
  // Quotient regrading by N = {0, 2}.
  FusionCategoryData regraded = regrade_by_quotient(z4, {0, 2});
  REQUIRE(regraded.grading->group.size() == 2);
  DefectTheory th = defect_spectrum(regraded);
  GaugedTheory gt = gauge(th);
  ModularData md = gauged_modular(gt);
  auto T = build_tube_algebra(z4);
  ModularData direct = modular_data(*T, central_idempotents(*T, kDefaultSeed));
  CHECK(match_modular_data(md, direct, 1e-7).has_value());
}
