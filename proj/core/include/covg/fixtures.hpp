#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "covg/arrangement.hpp"
#include "covg/com.hpp"

namespace covg {

/// Built-in covector fixtures: "figure1" (four lines cut by an ellipse, 13
/// covectors) and "figure1-rectangle" (the same lines cut by a rectangle, 15
/// covectors). Throws Errc::UnknownFixture.
COM fixture(std::string_view name);
std::vector<std::string> fixture_names();

/// The four lines x = 0, 3x - 2y = 0, y = 0, 4x + 3y + 15 = 0 with an open
/// box a < x < b, c < y < d as region.
Arrangement four_lines_in_box(const Rational& a, const Rational& b, const Rational& c, const Rational& d);

/// four_lines_in_box(-3, 4, -2, 2); enumerates to the figure1-rectangle fixture.
Arrangement figure1_rectangle_arrangement();

}  // namespace covg
