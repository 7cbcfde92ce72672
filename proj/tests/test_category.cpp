#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>

#include "tubealg/fixtures.hpp"

using namespace tubealg;

TEST_CASE("all built-in fixtures validate") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    FusionCategoryData cat = fixture(name);
    ValidationReport rep = validate(cat);
    CHECK(rep.valid());
  }
}

TEST_CASE("Ising category data") {
  FusionCategoryData cat = ising(+1);
  int S = cat.label_by_name("sig");
  CHECK(cat.qdim[S] == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  CHECK(std::abs(cat.kappa(S) - 1.0) < 1e-12);
  CHECK(cat.sector_dim_sq(0) == doctest::Approx(2.0));
  CHECK(cat.sector_dim_sq(1) == doctest::Approx(2.0));

  FusionCategoryData neg = ising(-1);
  CHECK(std::abs(neg.kappa(neg.label_by_name("sig")) + 1.0) < 1e-12);
  CHECK(validate(neg).valid());
}

TEST_CASE("a flipped F sign breaks the pentagon at a concrete instance") {
  FusionCategoryData cat = ising(+1);
  int S = cat.label_by_name("sig"), P = cat.label_by_name("psi");
  cat.F_ref(S, P, S, P, S, S) = 1.0;  // flip the sign of F^{sig psi sig}_psi
  ValidationReport rep = validate(cat);
  CHECK(!rep.valid());
  bool pentagon = false;
  for (const auto& v : rep.violations) pentagon |= (v.check == "pentagon");
  CHECK(pentagon);
}

TEST_CASE("vec_g_omega produces the quoted cocycle values") {
  FiniteGroup z2z2 = group_by_name("z2z2");
  FusionCategoryData cat = vec_g_omega(z2z2, cocycle_library(z2z2, "II"));
  // F((1,0),(0,1),(0,1)) = -1 per the type-II formula.
  int a = z2z2.element_by_name("10"), b = z2z2.element_by_name("01");
  CHECK(std::abs(cat.F(a, b, b, a, z2z2.op(a, b), z2z2.op(b, b)) + 1.0) < 1e-12);

  FiniteGroup s3 = group_by_name("s3");
  FusionCategoryData vs3 = vec_g_omega(s3, ThreeCocycle::trivial(s3));
  CHECK(vs3.size() == 6);
  CHECK(validate(vs3).valid());

  FiniteGroup z2 = FiniteGroup::cyclic(2);
  ThreeCocycle c = cocycle_library(z2, "I");
  CHECK(std::abs(c(1, 1, 1) + 1.0) < 1e-12);
  CHECK(std::abs(c(0, 1, 1) - 1.0) < 1e-12);
}

TEST_CASE("shift by a trivial cocycle is the identity; double shift is shift by the square") {
  FusionCategoryData cat = ising(+1);
  FusionCategoryData same = shift_by_3cocycle(cat, ThreeCocycle::trivial(cat.group()));
  for (size_t i = 0; i < cat.fsym.size(); ++i) CHECK(std::abs(cat.fsym[i] - same.fsym[i]) < 1e-15);

  ThreeCocycle a = cocycle_library(cat.group(), "I");
  FusionCategoryData twice = shift_by_3cocycle(shift_by_3cocycle(cat, a), a);
  FusionCategoryData by_sq = shift_by_3cocycle(cat, a.times(a));
  for (size_t i = 0; i < cat.fsym.size(); ++i) CHECK(std::abs(twice.fsym[i] - by_sq.fsym[i]) < 1e-15);
  // shifting ising(+1) by the nontrivial cocycle flips kappa_sigma
  FusionCategoryData once = shift_by_3cocycle(cat, a);
  CHECK(std::abs(once.kappa(once.label_by_name("sig")) + 1.0) < 1e-12);
}

TEST_CASE("regrade_by_quotient") {
  FusionCategoryData z4 = fixture("vec_z4");
  FusionCategoryData reg = regrade_by_quotient(z4, {0, 2});
  REQUIRE(reg.grading.has_value());
  CHECK(reg.grading->group.size() == 2);
  CHECK(reg.sector(0) == 0);
  CHECK(reg.sector(2) == 0);
  CHECK(reg.sector(1) == 1);
  CHECK(reg.sector(3) == 1);
  CHECK(validate(reg).valid());
  // N = G: single-sector grading; N = {1}: unchanged.
  FusionCategoryData all = regrade_by_quotient(z4, {0, 1, 2, 3});
  CHECK(all.grading->group.size() == 1);
  FusionCategoryData none = regrade_by_quotient(z4, {0});
  CHECK(none.grading->group.size() == 4);
  CHECK_THROWS_AS((void)regrade_by_quotient(fixture("vec_s3"), {0, 3}), Error);  // {1,s} not normal
}

TEST_CASE("pivotal data") {
  FusionCategoryData vz2 = fixture("toric_code");
  PivotalData p = pivotal_data(vz2);
  for (int a = 0; a < vz2.size(); ++a)
    for (int b = 0; b < vz2.size(); ++b)
      for (int c = 0; c < vz2.size(); ++c)
        if (vz2.N(a, b, c)) {
          CHECK(std::abs(p.A[(a * 2 + b) * 2 + c] - 1.0) < 1e-12);
          CHECK(std::abs(p.B[(a * 2 + b) * 2 + c] - 1.0) < 1e-12);
        }
  FusionCategoryData is = ising(+1);
  PivotalData q = pivotal_data(is);
  int O = is.label_by_name("0"), P = is.label_by_name("psi"), S = is.label_by_name("sig");
  CHECK(std::abs(q.B[(S * 3 + S) * 3 + O] - 1.0) < 1e-12);  // sqrt(2) F^{sss}_{s00} = 1
  CHECK(std::abs(q.A[(P * 3 + S) * 3 + S] - 1.0) < 1e-12);
}

TEST_CASE("JSON round trip and error paths") {
  for (const auto& fixture_name : fixture_names()) {
    const char* name = fixture_name.c_str();
    CAPTURE(name);
    FusionCategoryData cat = fixture(name);
    std::string text = category_to_json_text(cat);
    FusionCategoryData back = category_from_json_text(text);
    CHECK(back.labels == cat.labels);
    CHECK(back.dual == cat.dual);
    CHECK(back.fusion == cat.fusion);
    for (size_t i = 0; i < cat.fsym.size(); ++i) CHECK(std::abs(back.fsym[i] - cat.fsym[i]) < 1e-12);
    CHECK(category_to_json_text(back) == text);  // save(load(x)) = load(x)
    if (cat.grading) {
      REQUIRE(back.grading.has_value());
      CHECK(back.grading->sector == cat.grading->sector);
    }
  }

  // trivial_F default fills the support with ones.
  std::string tf = R"({"schema_version":1, "labels":["0","x"], "unit":"0",
    "dual":{"0":"0","x":"x"}, "fusion":[["0","0","0"],["0","x","x"],["x","0","x"],["x","x","0"]],
    "trivial_F":true})";
  FusionCategoryData cat = category_from_json_text(tf);
  CHECK(std::abs(cat.F(1, 1, 1, 1, 0, 0) - 1.0) < 1e-15);
  CHECK(validate(cat).valid());

  // non-involutive dual map is a parse error naming the label.
  std::string bad = R"({"schema_version":1, "labels":["0","a","b"], "unit":"0",
    "dual":{"0":"0","a":"b","b":"0"}, "fusion":[], "trivial_F":true})";
  CHECK_THROWS_WITH_AS((void)category_from_json_text(bad),
                       doctest::Contains("not involutive"), Error);

  // unknown fields rejected; wrong schema version flagged.
  CHECK_THROWS_AS((void)category_from_json_text(R"({"schema_version":1,"labels":["0"],"unit":"0",
    "dual":{"0":"0"},"fusion":[["0","0","0"]],"trivial_F":true,"extra":1})"),
                  Error);
  try {
    (void)category_from_json_text(R"({"schema_version":2,"labels":["0"],"unit":"0",
      "dual":{"0":"0"},"fusion":[["0","0","0"]],"trivial_F":true})");
    CHECK(false);
  } catch (const Error& e) {
    CHECK(e.kind == ErrorKind::SchemaVersionMismatch);
  }

  // file round trip
  FusionCategoryData is = fixture("ising+");
  std::string path = "test_ising_roundtrip.json";
  save_category(is, path);
  FusionCategoryData loaded = load_category(path);
  CHECK(loaded.labels == is.labels);
  std::remove(path.c_str());
}

TEST_CASE("qdims recomputed from Perron-Frobenius match stored values") {
  for (const auto& name : fixture_names()) {
    CAPTURE(name);
    FusionCategoryData cat = fixture(name);
    auto pf = perron_frobenius_dims(cat);
    for (int a = 0; a < cat.size(); ++a) CHECK(std::abs(pf[a] - cat.qdim[a]) < 1e-9);
  }
  FusionCategoryData is = ising(+1);
  CHECK(std::abs(perron_frobenius_dims(is)[is.label_by_name("sig")] - std::sqrt(2.0)) < 1e-12);
}

TEST_CASE("trivial sector category of the Ising grading is Vec_Z2") {
  FusionCategoryData c1 = trivial_sector_category(fixture("em_toric_code"));
  CHECK(c1.size() == 2);
  CHECK(validate(c1).valid());
  CHECK(c1.N(1, 1, 0));
}
