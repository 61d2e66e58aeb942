#include "covg/fixtures.hpp"

namespace covg {
namespace {

constexpr const char* kFigure1[] = {"++++", "++0+", "++-+", "0+-+", "-+-+", "-0-+", "---+",
                                    "--0+", "--++", "0-++", "+-++", "+0++", "000+"};
constexpr const char* kRectangleExtra[] = {"---0", "----"};

COM from_strings(std::vector<std::string> rows) {
  std::vector<SignedVector> covectors;
  for (const auto& r : rows) covectors.push_back(SignedVector::parse(r));
  return COM(GroundSet::numbered(4), std::move(covectors));
}

}  // namespace

std::vector<std::string> fixture_names() { return {"figure1", "figure1-rectangle"}; }

COM fixture(std::string_view name) {
  std::vector<std::string> rows(std::begin(kFigure1), std::end(kFigure1));
  if (name == "figure1") return from_strings(rows);
  if (name == "figure1-rectangle") {
    rows.insert(rows.end(), std::begin(kRectangleExtra), std::end(kRectangleExtra));
    return from_strings(rows);
  }
  throw Error(Errc::UnknownFixture, "unknown fixture '" + std::string(name) + "'");
}

Arrangement four_lines_in_box(const Rational& a, const Rational& b, const Rational& c, const Rational& d) {
  Arrangement arr;
  arr.dimension = 2;
  arr.labels = {"1", "2", "3", "4"};
  arr.forms = {
      {{1, 0}, 0},
      {{3, -2}, 0},
      {{0, 1}, 0},
      {{4, 3}, 15},
  };
  arr.region = {
      {{1, 0}, -a},
      {{-1, 0}, b},
      {{0, 1}, -c},
      {{0, -1}, d},
  };
  return arr;
}

Arrangement figure1_rectangle_arrangement() { return four_lines_in_box(-3, 4, -2, 2); }

}  // namespace covg
