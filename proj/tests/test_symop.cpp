#include <doctest.h>

#include "symfb/groups.hpp"
#include "symfb/lattice.hpp"
#include "symfb/symop.hpp"
#include "test_support.hpp"

using namespace symfb;

namespace {

SymOp pg_glide() { return parse_symop("-x,y+1/2", 2); }

} // namespace

TEST_CASE("parse_symop recovers matrix and translation") {
    SymOp glide = pg_glide();
    CHECK(glide.linear()[0][0] == -1);
    CHECK(glide.linear()[0][1] == 0);
    CHECK(glide.linear()[1][0] == 0);
    CHECK(glide.linear()[1][1] == 1);
    CHECK(glide.translation()[0] == Rational(0));
    CHECK(glide.translation()[1] == Rational(1, 2));

    SymOp id3 = parse_symop("x,y,z", 3);
    CHECK(id3.is_identity());

    SymOp hex = parse_symop("y,-x-y,z+2/3", 3);
    CHECK(hex.linear()[0][1] == 1);
    CHECK(hex.linear()[1][0] == -1);
    CHECK(hex.linear()[1][1] == -1);
    CHECK(hex.linear()[2][2] == 1);
    CHECK(hex.translation()[2] == Rational(2, 3));
    // applying the parsed op to symbolic (x,y,z) reproduces the input string
    CHECK(format_symop(hex) == "y,-x-y,z+2/3");
}

TEST_CASE("parse_symop accepts whitespace and normalizes translations") {
    SymOp op = parse_symop("  -x , y + 3/2 ", 2);
    CHECK(op == pg_glide());
    CHECK(parse_symop("1/2+x,y", 2).translation()[0] == Rational(1, 2));
}

TEST_CASE("parse_symop error cases") {
    CHECK_THROWS_AS(parse_symop("x,y", 3), ParseError);           // missing coordinate
    CHECK_THROWS_AS(parse_symop("x,y,z,x", 3), ParseError);       // too many
    CHECK_THROWS_AS(parse_symop("w,x", 2), ParseError);           // bad symbol
    CHECK_THROWS_AS(parse_symop("x,", 2), ParseError);            // empty coordinate
    CHECK_THROWS_AS(parse_symop("x y,y", 2), ParseError);         // missing operator
    CHECK_THROWS_AS(parse_symop("x,z", 2), ParseError);           // axis outside dim
    CHECK_THROWS_AS(parse_symop("x,1/0", 2), ParseError);         // zero denominator
    CHECK_THROWS(parse_symop("x+y+x,y", 2));                      // coefficient 2
    CHECK_THROWS(parse_symop("x+y,x+y", 2));                      // singular matrix
    try {
        parse_symop("x,q", 2);
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 2);
    }
}

TEST_CASE("compose and inverse") {
    SymOp glide = pg_glide();
    // glide o glide: translation (0,1) reduces to (0,0) mod lattice
    CHECK(compose(glide, glide).is_identity());
    SymOp id = SymOp::identity(2);
    CHECK(compose(id, glide) == glide);
    CHECK(compose(glide, inverse(glide)).is_identity());
    CHECK(inverse(id) == id);
    // the pg glide is an involution mod lattice
    CHECK(inverse(glide) == glide);
    CHECK(format_symop(inverse(parse_symop("y,-x,z", 3))) == "-y,x,z");
    CHECK_THROWS(compose(glide, SymOp::identity(3)));
}

TEST_CASE("act_on_point leaves results unwrapped") {
    SymOp glide = pg_glide();
    Vec3d y = act_on_point(glide, {0.2, 0.3, 0});
    CHECK(y[0] == doctest::Approx(-0.2).epsilon(1e-15));
    CHECK(y[1] == doctest::Approx(0.8).epsilon(1e-15));

    Vec3d x{0.37, 0.91, 0};
    Vec3d same = act_on_point(SymOp::identity(2), x);
    CHECK(same[0] == x[0]);
    CHECK(same[1] == x[1]);

    Vec3d rot = act_on_point(parse_symop("y,-x", 2), {1, 0, 0});
    CHECK(rot[0] == 0.0);
    CHECK(rot[1] == -1.0);
}

TEST_CASE("act_on_frequency matches the pg edge-weight rule") {
    SymOp glide = pg_glide();
    auto [t1, r1] = act_on_frequency(glide, {1, 1, 0});
    CHECK(t1 == Freq{-1, 1, 0});
    CHECK(r1 == Rational(1, 2)); // weight -1: omega_2 odd
    auto [t2, r2] = act_on_frequency(glide, {1, 0, 0});
    CHECK(t2 == Freq{-1, 0, 0});
    CHECK(r2 == Rational(0)); // weight +1: omega_2 even
    auto [t3, r3] = act_on_frequency(parse_symop("-y,x", 2), {0, 0, 0});
    CHECK(t3 == Freq{0, 0, 0});
    CHECK(r3 == Rational(0));
}

TEST_CASE("act_on_frequency respects composition") {
    // chaining b then a equals acting with compose(a,b), exponents adding mod 1
    Rng rng(7);
    for (const GroupSpec& spec : GroupDatabase::bundled().all()) {
        if (spec.dim == 3 && spec.number % 13 != 0) continue; // sample the database
        CosetGroup g = expand_group(spec);
        for (int trial = 0; trial < 4; ++trial) {
            const SymOp& a = g.elements[rng.index(g.elements.size())];
            const SymOp& b = g.elements[rng.index(g.elements.size())];
            Freq w{};
            for (int i = 0; i < spec.dim; ++i)
                w[i] = static_cast<int>(rng.index(9)) - 4;
            auto [mid, r_b] = act_on_frequency(b, w);
            auto [end, r_a] = act_on_frequency(a, mid);
            auto [end2, r_ab] = act_on_frequency(compose(a, b), w);
            CHECK(end == end2);
            CHECK((r_a + r_b).mod1() == r_ab);
        }
    }
}

TEST_CASE("linear parts act as Cartesian isometries on class-consistent cells") {
    Rng rng(11);
    for (const GroupSpec& spec : GroupDatabase::bundled().all()) {
        if (spec.dim == 3 && spec.number % 29 != 0) continue;
        CosetGroup g = expand_group(spec);
        LatticeCell cell = reference_cell(spec.bravais);
        for (int trial = 0; trial < 3; ++trial) {
            Vec3d x1 = test::random_frac(rng, spec.dim);
            Vec3d x2 = test::random_frac(rng, spec.dim);
            Vec3d d{};
            for (int i = 0; i < spec.dim; ++i) d[i] = x1[i] - x2[i];
            double base = cell.cart_norm(d);
            for (const SymOp& op : g.elements) {
                Vec3d ad{};
                for (int i = 0; i < spec.dim; ++i) {
                    double s = 0;
                    for (int j = 0; j < spec.dim; ++j) s += op.linear()[i][j] * d[j];
                    ad[i] = s;
                }
                CHECK(cell.cart_norm(ad) == doctest::Approx(base).epsilon(1e-12));
            }
        }
    }
}

TEST_CASE("parse/format round-trip on generated operations") {
    Rng rng(3);
    for (const GroupSpec& spec : GroupDatabase::bundled().all()) {
        for (const SymOp& gen : spec.generators) {
            CHECK(parse_symop(format_symop(gen), spec.dim) == gen);
        }
    }
    (void)rng;
}
