#include "doctest.h"

#include "klr/json_io.hpp"

using namespace klr;

namespace {

std::shared_ptr<const CartanData> type(const char* label) {
  return std::make_shared<const CartanData>(CartanData::build(label));
}

}  // namespace

TEST_CASE("integers survive beyond 64 bits") {
  const Integer big("123456789012345678901234567890");
  CHECK(to_json(big).is_string());
  CHECK(integer_from_json(to_json(big)) == big);
  CHECK(to_json(Integer(-7)) == Json(-7));
}

TEST_CASE("series round-trip keeps the window") {
  const LaurentPoly p = LaurentPoly::q(-1) + LaurentPoly(3) * LaurentPoly::q(4);
  CHECK(poly_from_json(to_json(p)) == p);
  const LaurentSeries exact(p);
  CHECK(to_json(exact)["trunc"].is_null());
  CHECK(series_from_json(to_json(exact)) == exact);
  const LaurentSeries cut = geometric_inverse(LaurentPoly(1) - LaurentPoly::q(2), 9);
  const LaurentSeries back = series_from_json(to_json(cut));
  CHECK(back == cut);
  CHECK(back.truncation_degree() == 9);
  // A bare polynomial object is read as an exact series.
  CHECK(series_from_json(Json::parse(R"({"0": 1, "2": 1})")) == LaurentSeries(LaurentPoly(1) + LaurentPoly::q(2)));
}

TEST_CASE("characters, orders and tables round-trip") {
  const auto a1 = type("A1~");
  Character c({a1->delta()});
  c.add(make_word({0, 1}), LaurentSeries(LaurentPoly(1) + LaurentPoly::q(2)));
  c.add(make_word({1, 0}), geometric_inverse(LaurentPoly(1) - LaurentPoly::q(2), 6));
  CHECK(character_from_json(to_json(c)) == c);
  CHECK(to_json(c)["entries"].contains("0,1"));

  const auto order = ConvexPreorder::slope(a1, {{0, 1}});
  const auto o2 = order_from_json(to_json(order));
  CHECK(o2.functionals() == order.functionals());
  CHECK(o2.cartan().label() == "A1~");

  const auto t = build_standard_table(order, 4);
  const auto t2 = table_from_json(Json::parse(to_json(t).dump()), order);
  CHECK(t2.cuspidal == t.cuspidal);
  CHECK(t2.delta_standard == t.delta_standard);
  CHECK(t2.minuscule == t.minuscule);
  CHECK(t2.provenance.at(RootVector{1, 2}).kind == Provenance::Tower);
  CHECK(to_json(t2).dump() == to_json(t).dump());

  const auto a2 = type("A2~");
  CHECK_THROWS_AS(table_from_json(to_json(t), ConvexPreorder::slope(a2, {})), std::invalid_argument);
}

TEST_CASE("external imaginary data feeds the standard characters") {
  const auto a1 = type("A1~");
  const auto order = ConvexPreorder::slope(a1, {{0, 1}});
  auto t = build_standard_table(order, 4);
  const RootPartition pi{KostantPartition{{{a1->delta(), 2}}}, Multipartition{{2}}};
  CHECK_THROWS_AS(proper_standard_character(pi, t), std::out_of_range);
  Json j = to_json(t);
  // Any character of weight 2 delta will do for the plumbing.
  Character fake({2 * a1->delta()});
  fake.add(make_word({0, 1, 0, 1}), LaurentSeries(LaurentPoly(1)));
  j["imaginary"] = Json::array({{{"mu", Multipartition{{2}}},
                                 {"simple", to_json(fake)},
                                 {"standard", {{"numerator", to_json(fake)}, {"power", 2}}}}});
  t = table_from_json(j, order);
  CHECK(proper_standard_character(pi, t) == fake);
  CHECK(standard_fraction(pi, t).power == 2);
}
