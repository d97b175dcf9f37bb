#include <doctest.h>

#include "ptl/render.hpp"
#include "ptl/spec_parse.hpp"

using namespace ptl;
using namespace ptl::arith;
using namespace ptl::cli;

TEST_CASE("curve specs from the grammar") {
    auto m1 = parse_curve_spec("hyp;F3;h=x^5+1");
    auto* h1 = std::get_if<curves::HyperellipticModel>(&m1);
    REQUIRE(h1);
    CHECK(h1->F.order() == 3);
    CHECK(h1->h == poly_from_coeffs({1, 0, 0, 0, 0, 1}));

    auto m2 = parse_curve_spec("add;F3;A=y^3+y;h=x^4");
    auto* a2 = std::get_if<curves::AdditiveCoverModel>(&m2);
    REQUIRE(a2);
    CHECK(a2->A == poly_from_coeffs({0, 1, 0, 1}));
    CHECK(a2->h == poly_from_coeffs({0, 0, 0, 0, 1}));
    CHECK(curves::genus(m2) == 3);

    auto m3 = parse_curve_spec("sup;F11;m=5;a=1,1,1,1,1;b=0,1,2,3,4");
    auto* s3 = std::get_if<curves::SuperellipticModel>(&m3);
    REQUIRE(s3);
    CHECK(s3->m == 5);
    CHECK(s3->branch == std::vector<u64>{0, 1, 2, 3, 4});
    CHECK(curves::genus(m3) == 6);

    // whitespace insignificant, negative coefficients, explicit products
    auto m4 = parse_curve_spec(" hyp ; F5 ; h = 2*x^3 - x + 1 ");
    auto* h4 = std::get_if<curves::HyperellipticModel>(&m4);
    REQUIRE(h4);
    CHECK(h4->h == poly_from_coeffs({1, 4, 0, 2}));

    // extension field literals in the generator t
    auto m5 = parse_curve_spec("hyp;F3^2;h=x^3+t*x+t^2");
    auto* h5 = std::get_if<curves::HyperellipticModel>(&m5);
    REQUIRE(h5);
    Fq F9 = Fq::make(3, 2);
    CHECK(h5->F.order() == 9);
    CHECK(h5->h.coeff(1) == F9.gen());
    CHECK(h5->h.coeff(0) == F9.mul(F9.gen(), F9.gen()));
}

TEST_CASE("parse errors carry byte offsets") {
    auto offset_of = [](const std::string& text) -> std::size_t {
        try {
            parse_curve_spec(text);
        } catch (const Error& e) {
            CHECK(e.code() == errc::parse);
            return e.offset();
        }
        return Error::npos;
    };
    CHECK(offset_of("quux;F3;h=x") == 0);
    CHECK(offset_of("hyp;F3;h=x^") == 11);     // missing exponent
    CHECK(offset_of("hyp;G3;h=x^2") == 4);     // bad field
    CHECK(offset_of("hyp;F3;h=x^2;junk") != Error::npos);
    CHECK(offset_of("hyp;F3;h=t+x") != Error::npos);  // t needs an extension
    CHECK_THROWS_AS(parse_curve_spec("hyp;F4;h=x^3+x"), Error);  // 4 not prime
}

TEST_CASE("polygon notation round trips") {
    using zeta::polygon_from_slopes;
    std::vector<zeta::NewtonPolygon> cases = {
        zeta::ordinary_polygon(3),
        zeta::supersingular_polygon(4),
        polygon_from_slopes({{Rat(1, 4), 4}, {Rat(1, 2), 4}, {Rat(3, 4), 4}}),
        polygon_from_slopes({{Rat(0), 2}, {Rat(1, 3), 3}, {Rat(2, 3), 3}, {Rat(1), 2}}),
        polygon_from_slopes({{Rat(2, 5), 5}, {Rat(3, 5), 5}}),
    };
    for (const auto& np : cases) CHECK(parse_polygon(polygon_str(np)) == np);
    CHECK(polygon_str(cases[2]) == "(1/4,3/4)+ss^2");
    CHECK(parse_polygon("ord^2+ss^4") ==
          polygon_from_slopes({{Rat(0), 2}, {Rat(1, 2), 8}, {Rat(1), 2}}));
    CHECK(parse_polygon("(1/3,2/3)^2+ss") ==
          polygon_from_slopes({{Rat(1, 3), 6}, {Rat(2, 3), 6}, {Rat(1, 2), 2}}));
    CHECK_THROWS_AS(parse_polygon("(1/3,1/3)"), Error);
    CHECK_THROWS_AS(parse_polygon("bogus"), Error);
}
