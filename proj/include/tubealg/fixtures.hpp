#ifndef TUBEALG_FIXTURES_HPP
#define TUBEALG_FIXTURES_HPP

#include <string>
#include <vector>

#include "tubealg/category.hpp"

namespace tubealg {

// Built-in input categories. Beyond the named entries, two parametric forms
// are accepted: "vec:<group>" / "vec:<group>:<cocycle>" for identity-graded
// group categories (equivalently SPT inputs, alias prefix "spt:"), with
// <group> one of z2, z3, z4, z5, z6, z2z2, z2z2z2, s3.
FusionCategoryData fixture(const std::string& name);

std::vector<std::string> fixture_names();

FiniteGroup group_by_name(const std::string& name);

}  // namespace tubealg

#endif
