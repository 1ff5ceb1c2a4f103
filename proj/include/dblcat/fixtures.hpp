#pragma once

#include <string>
#include <vector>

#include "dblcat/category.hpp"
#include "dblcat/double_category.hpp"
#include "dblcat/two_category.hpp"

namespace dblcat {

enum class FixtureKind { DoubleCategory, TwoCategory, Category };

/// Every shipped fixture name, double categories first.
std::vector<std::string> fixture_names();
/// Throws UnknownFixture.
FixtureKind fixture_kind(const std::string& name);

DoubleCategory double_fixture(const std::string& name);
TwoCategory two_fixture(const std::string& name);
Category category_fixture(const std::string& name);

/// Valid double categories and the single-entry corruptions of them.
std::vector<std::string> valid_double_fixtures();
std::vector<std::string> mutant_double_fixtures();
/// The family each mutant is built to break.
std::string mutant_target_family(const std::string& name);

// Building blocks.
Category terminal_category();
Category walking_arrow();
Category walking_iso();
TwoCategory terminal_2category();
/// Monotone maps between P = {0 < 1} and Q = {*}, 2-cells the pointwise order.
TwoCategory pos2();
/// One object, 1-cells Z/2 = {e, s}, each endo-hom of 2-cells Z/3.
TwoCategory cyclic();
/// One object and 1-cell; 2-cells the monoid {one, x, zero} with x·x = zero.
TwoCategory monoid_2category();

}  // namespace dblcat
