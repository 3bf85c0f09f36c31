#pragma once

#include <string>
#include <vector>

#include "racts/group.hpp"

namespace racts {

// Built-in groups addressable by name: Z1..Z12 (cyclic), V4 (Klein four),
// S3 (symmetric on three points), Q8 (quaternion).
FiniteGroup cyclic_group(int n);
FiniteGroup klein_four_group();
FiniteGroup symmetric_group_3();
FiniteGroup quaternion_group_8();

// Throws Error(kUnknownGroup) for names outside the catalog.
FiniteGroup group_by_name(const std::string& name);

std::vector<std::string> catalog_group_names();

// Expands a comma-separated list with "Za..Zb" range syntax, e.g.
// "Z2..Z4,Q8" -> {"Z2","Z3","Z4","Q8"}.
std::vector<std::string> expand_group_list(const std::string& list);

}  // namespace racts
