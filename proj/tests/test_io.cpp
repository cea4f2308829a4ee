#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "lpa/io.hpp"
#include "lpa/lattice.hpp"

using namespace lpa;

namespace {

LaurentPoly random_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5), coeff(-9, 9), idx(-3, 3), expo(-2, 2),
        nvars(0, 3), arity(1, 3);
    int ar = arity(rng);
    LaurentPoly p;
    int t = nterms(rng);
    for (int i = 0; i < t; ++i) {
        int c = coeff(rng);
        if (c == 0) c = 7;
        Monomial::Map m;
        int v = nvars(rng);
        for (int j = 0; j < v; ++j) {
            int e = expo(rng);
            if (e == 0) continue;
            VarKey key;
            key.arity = ar;
            for (int d = 0; d < ar; ++d) key.idx[static_cast<std::size_t>(d)] = idx(rng);
            m[key] = e;
        }
        p += LaurentPoly(Monomial(std::move(m)), c);
    }
    return p;
}

}  // namespace

TEST_CASE("parse basics") {
    CHECK(parse_expr("x[3]^2") == LaurentPoly(var1(3), 2));
    CHECK(parse_expr("x[0]^-1 * x[1]") ==
          LaurentPoly(Monomial(Monomial::Map{{var1(0), -1}, {var1(1), 1}}), 1));
    CHECK(parse_expr("0").is_zero());
    CHECK(parse_expr("-x[0] + x[0]").is_zero());
    CHECK(parse_expr("(x[1]+1)^2") == parse_expr("x[1]^2+2*x[1]+1"));
    CHECK(parse_expr(" 2 * x[ 1 , -2 ] ") == LaurentPoly(Monomial(Monomial::Map{{var2(1, -2), 1}}), 2));
    CHECK(parse_expr("x[0]'") == LaurentPoly(VarKey{1, {0, 0, 0}, 1}));
    CHECK(parse_expr("(x[0])^-1 * x[0]") == LaurentPoly(1));
}

TEST_CASE("parse errors carry positions") {
    auto pos = [](const std::string& text) {
        try {
            parse_expr(text);
        } catch (const ParseError& e) {
            return std::pair<std::size_t, std::size_t>{e.line, e.column};
        }
        return std::pair<std::size_t, std::size_t>{0, 0};
    };
    CHECK(pos("x[1") != std::pair<std::size_t, std::size_t>{0, 0});
    CHECK(pos("x[1]+").second == 6);
    CHECK(pos("y[1]") == std::pair<std::size_t, std::size_t>{1, 1});
    CHECK_THROWS_AS(parse_expr("x[1,2,3,4]"), ParseError);
    CHECK_THROWS_AS(parse_expr("(x[0]+1)^-1"), ParseError);
    CHECK_THROWS_AS(parse_expr("x[0] x[1]"), ParseError);
    CHECK_THROWS_AS(parse_expr("x[99999999999]"), ParseError);
}

TEST_CASE("print conventions") {
    CHECK(print_expr(LaurentPoly(0)) == "0");
    CHECK(print_expr(parse_expr("1 - x[0]")) == "-x[0] + 1");
    CHECK(print_expr(parse_expr("x[0]^-1")) == "x[0]^-1");
    CHECK(print_expr(parse_expr("-2*x[0]*x[1]^-2")) == "-2*x[0]*x[1]^-2");
    CHECK(print_var(var3(1, -2, 3)) == "x[1,-2,3]");
    CHECK(pretty_expr(parse_expr("x[1,0,1]*x[0,1,0]")) == "x_0^{1,0} x_1^{0,1}");
}

TEST_CASE("round-trip on 1000 random polynomials") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 1000; ++i) {
        LaurentPoly p = random_poly(rng);
        CHECK(parse_expr(print_expr(p)) == p);
    }
}

TEST_CASE("round-trip on every template polynomial") {
    std::size_t total = 0;
    for (const char* name : {"dbkp", "dbkp-alt", "2d1", "2d2", "somos6", "somos7"}) {
        for (const LaurentPoly& f : make_template(name).layers) {
            CHECK(parse_expr(print_expr(f)) == f);
            ++total;
        }
    }
    CHECK(total == 39);
}

TEST_CASE("seed files round-trip") {
    Seed s = instantiate(make_template("somos6"), Window{0, 0});
    Seed back = parse_seed_text(seed_to_text(s, "somos6"));
    CHECK(back == s);
}

TEST_CASE("seed files can reference templates") {
    Seed direct = instantiate(make_template("2d1"), Window{2, 2});
    Seed from_file = parse_seed_text("name w\ntemplate 2d1\nradius 2\n");
    CHECK(from_file == direct);
}

TEST_CASE("seed file validation errors are positioned") {
    try {
        parse_seed_text("arity 1\nentry x[0] = x[0]+1\n");
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line == 2);
        CHECK(std::string(e.what()).find("LP2") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_seed_text("bogus directive\n"), ParseError);
    CHECK_THROWS_AS(parse_seed_text("arity 1\n"), ParseError);
    CHECK_THROWS_AS(parse_seed_text("template somos6\nentry x[0] = x[1]+1\n"), ParseError);
}

TEST_CASE("frozen flags survive the text form") {
    Seed s = instantiate(make_template("2d1"), Window{2, 2});
    bool has_frozen = false;
    for (const auto& e : s.entries) has_frozen = has_frozen || e.frozen;
    CHECK(has_frozen);
    CHECK(parse_seed_text(seed_to_text(s, "w")) == s);
}
