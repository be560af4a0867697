#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlie/algebra.hpp"

namespace nlie {

struct FixtureInfo {
  std::string name;
  /// Branch the fixture is meant to drive find_codim1 into, if any.
  std::string intended_branch;
  std::string description;
};

std::vector<FixtureInfo> fixture_catalog();

/// Named algebra. "abelian" takes its shape from the arguments; "N5" and "A4"
/// take the field; the rest carry their own field and shape.
NLieAlgebra fixture(std::string_view name, unsigned arity = 3, std::size_t dim = 5,
                    const std::optional<Field>& field = std::nullopt);

}  // namespace nlie
