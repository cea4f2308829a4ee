#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lpa/io.hpp"
#include "lpa/lattice.hpp"
#include "lpa/seed.hpp"

using namespace lpa;

namespace {

LaurentPoly P(const std::string& s) { return parse_expr(s); }

Seed two_cycle() {
    Seed s;
    s.arity = 1;
    s.entries = {{var1(0), P("x[1]+1")}, {var1(1), P("x[0]+1")}};
    return s;
}

}  // namespace

TEST_CASE("validate_seed accepts the built-in seeds") {
    for (const char* name : {"somos6", "somos7"}) {
        Seed s = instantiate(make_template(name), Window{0, 0});
        ValidationReport rep = validate_seed(s);
        CHECK(rep.ok());
        CHECK(rep.uncertified.size() == s.entries.size());
    }
    for (const char* name : {"dbkp", "dbkp-alt", "2d1", "2d2"}) {
        CHECK(validate_seed(instantiate(make_template(name), Window{2, 2})).ok());
    }
}

TEST_CASE("validate_seed flags violations") {
    auto issues_of = [](Seed s) {
        ValidationReport rep = validate_seed(s);
        std::vector<std::string> kinds;
        for (const auto& i : rep.issues) kinds.push_back(i.check);
        return kinds;
    };
    Seed s = two_cycle();
    s.entries[0].exch = P("x[0]*x[1]+1");
    CHECK(issues_of(s) == std::vector<std::string>{"LP2"});

    s = two_cycle();
    s.entries[0].exch = LaurentPoly(0);
    CHECK(issues_of(s) == std::vector<std::string>{"LP1/zero"});

    s = two_cycle();
    s.entries[0].exch = P("2*x[1]+2");
    CHECK(issues_of(s) == std::vector<std::string>{"LP1/content"});

    s = two_cycle();
    s.entries[0].exch = P("x[1]^2+x[1]");
    CHECK(issues_of(s) == std::vector<std::string>{"LP1/variable-divides"});

    s = two_cycle();
    s.entries[0].exch = P("x[1]^2+2*x[1]+1");
    CHECK(issues_of(s) == std::vector<std::string>{"LP1/repeated-factor"});

    s = two_cycle();
    s.entries[0].exch = P("x[1]^-1+1");
    CHECK(issues_of(s) == std::vector<std::string>{"LP1/laurent"});

    s = two_cycle();
    s.entries[1].var = var1(0);
    CHECK(issues_of(s) == std::vector<std::string>{"duplicate"});
}

TEST_CASE("mutation of the classic two-cycle") {
    // {(x0, x1+1), (x1, x0+1)}: mutating at x0 gives x2 = (x1+1)/x0 and
    // the x1 entry becomes x2 + 1 (substitute x0 <- 1/x2, strip x2^-1).
    Seed s = two_cycle();
    auto [m1, t1] = mutate(s, var1(0), var1(2));
    CHECK(m1.entries[0].var == var1(2));
    CHECK(m1.entries[0].exch == P("x[1]+1"));
    CHECK(m1.entries[1].exch == P("x[2]+1"));
    CHECK(t1.new_var_value == P("x[0]^-1*x[1] + x[0]^-1"));
    CHECK(t1.fhat.exponents.empty());
    // Mutating back restores the seed.
    auto [m2, t2] = mutate(m1, var1(2), var1(0));
    CHECK(m2 == s);
}

TEST_CASE("mutation is an involution on somos6") {
    Seed s = instantiate(make_template("somos6"), Window{0, 0});
    for (const auto& e : s.entries) {
        auto [once, t1] = mutate(s, e.var);
        auto [twice, t2] = mutate(once, t1.new_var, e.var);
        CHECK(twice == s);
    }
}

TEST_CASE("normalization on a generic seed") {
    Seed s = two_cycle();
    NormalizedExchange ne = normalize_exchange(s, var1(1));
    CHECK(ne.exponents.empty());
    CHECK(ne.fhat == P("x[0]+1"));
    CHECK_THROWS(normalize_exchange(s, var1(7)));
}

TEST_CASE("frozen entries cannot be mutated") {
    Seed s = two_cycle();
    s.entries[1].frozen = true;
    CHECK_THROWS(mutate(s, var1(1)));
    // ... but are updated when something else mutates.
    auto [m, t] = mutate(s, var1(0), var1(2));
    CHECK(m.entries[1].frozen);
    CHECK(m.entries[1].exch != s.entries[1].exch);
}

TEST_CASE("relabel collisions are rejected") {
    Seed s = two_cycle();
    CHECK_THROWS(mutate(s, var1(0), var1(1)));
}

TEST_CASE("detect_period1 positive and negative") {
    CHECK(detect_period1(instantiate(make_template("somos6"), Window{0, 0})).periodic);
    CHECK(detect_period1(instantiate(make_template("somos7"), Window{0, 0})).periodic);
    CHECK(detect_period1(two_cycle()).periodic);

    Seed bad;
    bad.arity = 1;
    bad.entries = {{var1(0), P("x[1]^2+1")}, {var1(1), P("x[0]+1")}};
    Period1Result res = detect_period1(bad);
    CHECK(!res.periodic);
    CHECK(!res.witness.empty());
}

TEST_CASE("dependence_closure") {
    Seed s = instantiate(make_template("somos6"), Window{0, 0});
    // F_0 = x5 x1 + x2 x4 + x3^2 depends on x1..x5; entries depending on x0
    // are exactly those whose polynomial mentions x0.
    std::vector<std::size_t> dep = dependence_closure(s, var1(0));
    CHECK(dep == std::vector<std::size_t>{1, 2, 3, 4, 5});
}

TEST_CASE("mutation trace records the exchange updates") {
    Seed s = instantiate(make_template("somos6"), Window{0, 0});
    auto [m, t] = mutate(s, var1(0), var1(6));
    CHECK(t.at == var1(0));
    CHECK(t.new_var == var1(6));
    CHECK(t.new_var_value == t.fhat.fhat * LaurentPoly(var1(0), -1));
    CHECK(t.updates.size() == 5);
    for (const auto& u : t.updates) {
        const SeedEntry* e = m.find(u.var);
        REQUIRE(e);
        CHECK(e->exch == u.f_new);
        CHECK(!depends_on(u.f_new, u.var));
        CHECK(depends_on(u.f_new, var1(6)));
    }
}
