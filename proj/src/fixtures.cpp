#include "tubealg/fixtures.hpp"

#include <algorithm>

namespace tubealg {

FiniteGroup group_by_name(const std::string& name) {
  if (name == "z2") return FiniteGroup::cyclic(2);
  if (name == "z3") return FiniteGroup::cyclic(3);
  if (name == "z4") return FiniteGroup::cyclic(4);
  if (name == "z5") return FiniteGroup::cyclic(5);
  if (name == "z6") return FiniteGroup::cyclic(6);
  if (name == "z2z2") {
    FiniteGroup g2 = FiniteGroup::cyclic(2);
    FiniteGroup g = FiniteGroup::product(g2, g2);
    g.names = {"00", "01", "10", "11"};
    return g;
  }
  if (name == "z2z2z2") {
    FiniteGroup g2 = FiniteGroup::cyclic(2);
    FiniteGroup g = FiniteGroup::product(FiniteGroup::product(g2, g2), g2);
    for (int i = 0; i < 8; ++i)
      g.names[i] = std::string() + char('0' + ((i >> 2) & 1)) + char('0' + ((i >> 1) & 1)) +
                   char('0' + (i & 1));
    return g;
  }
  if (name == "s3") return FiniteGroup::symmetric3();
  throw Error(ErrorKind::UnknownFixture, "unknown group '" + name + "'");
}

namespace {

FusionCategoryData toric_code() {
  FiniteGroup g = FiniteGroup::cyclic(2);
  g.names = {"0", "psi"};
  return vec_g_omega(g, ThreeCocycle::trivial(g));
}

FusionCategoryData z2z2_wII() {
  FiniteGroup g = group_by_name("z2z2");
  FusionCategoryData cat = vec_g_omega(g, cocycle_library(g, "II"));
  // Z2-grading {00,11} + {01,10}; the omega_II restriction to the trivial
  // sector is a nontrivial Z2 cocycle class, which drives the doubled-semion
  // condensation.
  Grading gr;
  gr.group = FiniteGroup::cyclic(2, "g");
  gr.group.names = {"1", "x"};
  gr.sector = {0, 1, 1, 0};  // 00, 01, 10, 11
  cat.grading = gr;
  return cat;
}

FusionCategoryData vec_s3_z2graded() {
  FiniteGroup s3 = group_by_name("s3");
  FusionCategoryData cat = vec_g_omega(s3, ThreeCocycle::trivial(s3));
  std::vector<int> n = {s3.element_by_name("1"), s3.element_by_name("r"), s3.element_by_name("rr")};
  return regrade_by_quotient(cat, n);
}

FusionCategoryData parametric(const std::string& name) {
  size_t c1 = name.find(':');
  std::string rest = name.substr(c1 + 1);
  size_t c2 = rest.find(':');
  std::string gname = (c2 == std::string::npos) ? rest : rest.substr(0, c2);
  std::string cname = (c2 == std::string::npos) ? "trivial" : rest.substr(c2 + 1);
  FiniteGroup g = group_by_name(gname);
  return vec_g_omega(g, cocycle_library(g, cname));
}

}  // namespace

FusionCategoryData fixture(const std::string& name) {
  if (name == "toric_code") return toric_code();
  if (name == "ising+" || name == "em_toric_code" || name == "tc_ising+") return ising(+1);
  if (name == "ising-" || name == "tc_ising-") return ising(-1);
  if (name == "tc_z2z2_trivial" || name == "tc_z2z2_twisted" || name == "tc_z2z2_II" ||
      name == "tc_z4_trivial" || name == "tc_z4_twisted")
    return builtin_extension(name);
  if (name == "z2z2_wII") return z2z2_wII();
  if (name == "vec_z4") return parametric("vec:z4");
  if (name == "vec_s3") return parametric("vec:s3");
  if (name == "vec_s3_z2graded") return vec_s3_z2graded();
  if (name == "doubled_semion_input") return parametric("vec:z2:I");
  if (name.rfind("vec:", 0) == 0 || name.rfind("spt:", 0) == 0) return parametric(name);
  throw Error(ErrorKind::UnknownFixture, "unknown fixture '" + name + "'");
}

std::vector<std::string> fixture_names() {
  return {"toric_code",    "ising+",          "ising-",         "em_toric_code",
          "tc_ising+",     "tc_ising-",       "tc_z2z2_trivial", "tc_z2z2_twisted",
          "tc_z2z2_II",    "tc_z4_trivial",   "tc_z4_twisted",  "z2z2_wII",
          "vec_z4",        "vec_s3",          "vec_s3_z2graded", "doubled_semion_input"};
}

}  // namespace tubealg
