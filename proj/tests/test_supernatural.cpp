#include "bdk/supernatural.hpp"

#include "bdk/errors.hpp"

#include <doctest.h>

using namespace bdk;

TEST_CASE("sequence to supernatural") {
    // (3, 6, 12, 24, ...) with geometric tail *2: v_2 -> inf, v_3 = 1
    CHECK(to_supernatural(parse_sequence("seq:3,6,12,*2")).to_string() == "2^inf*3");
    CHECK(to_supernatural(parse_sequence("seq:6")).to_string() == "2*3");
    CHECK(to_supernatural(parse_sequence("seq:1,*2")).to_string() == "2^inf");
    CHECK(to_supernatural(parse_sequence("seq:2,6,12")).to_string() == "2^2*3");
}

TEST_CASE("equality and divisibility") {
    const SupernaturalNumber two_inf = parse_supernatural("2^inf");
    CHECK(equals(to_supernatural(parse_sequence("seq:2,4,8,*2")), two_inf));
    CHECK(equals(to_supernatural(parse_sequence("seq:4,16,*4")), two_inf));
    CHECK(divides(parse_supernatural("2"), two_inf));
    CHECK(!divides(two_inf, parse_supernatural("2")));
    CHECK(!equals(parse_supernatural("3*2^inf"), two_inf));
    CHECK(divides(two_inf, parse_supernatural("3*2^inf")));
}

TEST_CASE("divisibility is a partial order") {
    const std::vector<SupernaturalNumber> values = {
        parse_supernatural("1"),          parse_supernatural("2"),
        parse_supernatural("2^inf"),      parse_supernatural("3*2^inf"),
        parse_supernatural("2^inf*3^inf"), parse_supernatural("2^3*3"),
        parse_supernatural("5^2")};
    for (const auto& a : values) {
        CHECK(divides(a, a));
        for (const auto& b : values) {
            if (divides(a, b) && divides(b, a)) CHECK(equals(a, b));
            for (const auto& c : values)
                if (divides(a, b) && divides(b, c)) CHECK(divides(a, c));
        }
    }
}

TEST_CASE("gcd with integers") {
    CHECK(gcd_with_integer(3, parse_supernatural("2^inf")) == 1);
    CHECK(gcd_with_integer(6, parse_supernatural("2*3^inf")) == 6);
    CHECK(gcd_with_integer(2, parse_supernatural("2^inf")) == 2);
    CHECK(gcd_with_integer(12, parse_supernatural("2*3")) == 6);
    const SupernaturalNumber s = parse_supernatural("2^inf*3");
    const Int g = gcd_with_integer(12, s);
    CHECK(g == 12);
    CHECK(divides_integer(g, s));
}

TEST_CASE("integer divisibility") {
    CHECK(divides_integer(8, parse_supernatural("2^inf")));
    CHECK(!divides_integer(6, parse_supernatural("2^inf")));
    CHECK(divides_integer(12, parse_supernatural("3*2^inf")));
    CHECK(divides_integer(1, parse_supernatural("1")));
}

TEST_CASE("every sequence term divides the associated supernatural") {
    for (const std::string& spec : {"seq:3,6,12,*2", "seq:2,6,12", "seq:1,*5", "seq:7"}) {
        const MultiplicativeSequence w = parse_sequence(spec);
        const SupernaturalNumber s = to_supernatural(w);
        for (const Int& term : w.terms) CHECK(divides_integer(term, s));
        if (w.tail_ratio) CHECK(divides_integer(w.terms.back() * *w.tail_ratio * *w.tail_ratio, s));
    }
}

TEST_CASE("scaling") {
    CHECK(scale(parse_supernatural("3*2^inf"), 1, 3).to_string() == "2^inf");
    CHECK(scale(parse_supernatural("2^inf"), 2, 1).to_string() == "2^inf"); // infinity absorbs
    CHECK_THROWS_AS(scale(parse_supernatural("2^inf"), 1, 3), NotDivisible);
    CHECK(scale(parse_supernatural("2^2*3"), 5, 6).to_string() == "2*5");
    // scale(scale(s, a, 1), 1, a) = s
    for (const std::string& spec : {"2^inf", "3*2^inf", "2^2*3", "1"}) {
        const SupernaturalNumber s = parse_supernatural(spec);
        CHECK(equals(scale(scale(s, 12, 1), 1, 12), s));
    }
}

TEST_CASE("canonical parse and print round-trip") {
    for (const std::string& spec : {"1", "2", "2^inf", "2^inf*3", "2^3*3^inf*7", "5*11^2"}) {
        CHECK(parse_supernatural(spec).to_string() == spec);
    }
    // non-canonical inputs normalize
    CHECK(parse_supernatural("3^1*2^inf").to_string() == "2^inf*3");
    CHECK(parse_supernatural("6^inf").to_string() == "2^inf*3^inf");
    CHECK(parse_supernatural("4").to_string() == "2^2");
    CHECK(parse_supernatural("2*2").to_string() == "2^2");
    CHECK(parse_supernatural("12^2*2^inf").to_string() == "2^inf*3^2");
}

TEST_CASE("parse rejections") {
    CHECK_THROWS_AS(parse_supernatural(""), ParseError);
    CHECK_THROWS_AS(parse_supernatural("2^0"), ParseError);     // exponent must be positive
    CHECK_THROWS_AS(parse_supernatural("0*2"), ParseError);     // bases start at 2
    CHECK_THROWS_AS(parse_supernatural("1*2"), ParseError);
    CHECK_THROWS_AS(parse_supernatural("2^"), ParseError);
    CHECK_THROWS_AS(parse_supernatural("seq:3,5"), ParseError); // 3 does not divide 5
    CHECK_THROWS_AS(parse_supernatural("seq:2,*1"), ParseError); // tail ratio must be >= 2
    CHECK_THROWS_AS(parse_supernatural("seq:"), ParseError);
    CHECK_THROWS_AS(parse_supernatural("seq:2,*2,4"), ParseError); // tail must be last
}
