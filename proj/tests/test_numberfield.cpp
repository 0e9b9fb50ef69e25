#include <richline/gap.hpp>
#include <richline/numberfield.hpp>

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

using namespace richline;

namespace {

// Independent oracle for power-basis tables: compute x^i * x^j as a full
// polynomial product and reduce by schoolbook long division, instead of the
// iterated shift-reduce the implementation uses.
std::vector<Int> oracle_reduce_product(const MinimalPolynomial& p, unsigned i,
                                       unsigned j) {
    const unsigned n = p.degree();
    std::vector<Int> prod(i + j + 1, Int(0));
    prod[i + j] = 1;
    for (std::size_t d = prod.size(); d-- > n;) {
        Int lead = prod[d];
        if (lead == 0) {
            continue;
        }
        prod[d] = 0;
        for (unsigned k = 0; k < n; ++k) {
            prod[d - n + k] -= lead * p.coefficients[k];
        }
    }
    prod.resize(n, Int(0));
    return prod;
}

MinimalPolynomial sqrt2_poly() { return {{Int(-2), Int(0), Int(1)}}; }
MinimalPolynomial cbrt2_poly() { return {{Int(-2), Int(0), Int(0), Int(1)}}; }
MinimalPolynomial degree1_poly() { return {{Int(-1), Int(1)}}; }

IntElement elem(std::vector<Int> v) { return IntElement{std::move(v)}; }

RatElement rat_elem(std::vector<Rat> v) { return RatElement{std::move(v)}; }

}  // namespace

TEST_CASE("power basis table for x^2-2") {
    StructureTable t = power_basis_table(sqrt2_poly(), 1.4142135623730951);
    REQUIRE(t.dim() == 2);
    // alpha^2 = 2: c(2,2,.) = (2, 0) in one-based terms.
    CHECK(t.c(1, 1, 0) == 2);
    CHECK(t.c(1, 1, 1) == 0);
    CHECK(t.unity() == elem({1, 0}));
    CHECK(c_lambda(t) == 2);
}

TEST_CASE("power basis table for degree one") {
    StructureTable t = power_basis_table(degree1_poly(), 1.0);
    REQUIRE(t.dim() == 1);
    CHECK(t.c(0, 0, 0) == 1);
    CHECK(t.unity() == elem({1}));
    CHECK(c_lambda(t) == 1);
}

TEST_CASE("power basis table for x^3-2") {
    StructureTable t = power_basis_table(cbrt2_poly(), 1.2599210498948732);
    REQUIRE(t.dim() == 3);
    // alpha^4 = 2 alpha and alpha^3 = 2.
    CHECK(t.c(2, 2, 0) == 0);
    CHECK(t.c(2, 2, 1) == 2);
    CHECK(t.c(2, 2, 2) == 0);
    CHECK(t.c(1, 2, 0) == 2);
    CHECK(t.c(1, 2, 1) == 0);
    CHECK(t.c(1, 2, 2) == 0);
    CHECK(c_lambda(t) == 2);

    SECTION("matches the long-division oracle on every basis product") {
        MinimalPolynomial p = cbrt2_poly();
        for (unsigned i = 0; i < 3; ++i) {
            for (unsigned j = 0; j < 3; ++j) {
                std::vector<Int> expected = oracle_reduce_product(p, i, j);
                for (unsigned k = 0; k < 3; ++k) {
                    CHECK(t.c(i, j, k) == expected[k]);
                }
            }
        }
    }
}

TEST_CASE("power basis rejects bad input") {
    CHECK_THROWS_AS(power_basis_table({{Int(-2), Int(0), Int(3)}}, 1.0),
                    SpecError);  // not monic
    CHECK_THROWS_AS(power_basis_table({{Int(1)}}, 1.0), SpecError);  // deg 0
    CHECK_THROWS_AS(power_basis_table(sqrt2_poly(), 1.5), SpecError);
    CHECK_THROWS_AS(power_basis_table(sqrt2_poly(), 1.414), SpecError);
}

TEST_CASE("validate_table accepts constructed tables") {
    for (const MinimalPolynomial& p :
         {sqrt2_poly(), cbrt2_poly(), degree1_poly()}) {
        double root = p.degree() == 1   ? 1.0
                      : p.degree() == 2 ? std::sqrt(2.0)
                                        : std::cbrt(2.0);
        ValidationReport rep = validate_table(power_basis_table(p, root));
        CHECK(rep.pass());
        CHECK(rep.failures.empty());
    }
}

TEST_CASE("validate_table flags broken symmetry") {
    // c(1,2,1)=5 vs c(2,1,1)=3 in one-based indices, rest zero-ish.
    std::vector<Int> c(8, Int(0));
    auto at = [](unsigned i, unsigned j, unsigned k) {
        return (i * 2 + j) * 2 + k;
    };
    c[at(0, 0, 0)] = 1;
    c[at(0, 1, 0)] = 5;
    c[at(1, 0, 0)] = 3;
    StructureTable t(2, c, elem({1, 0}), {1.0, 2.0});
    ValidationReport rep = validate_table(t);
    CHECK_FALSE(rep.symmetry_ok);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("validate_table flags inconsistent embedding") {
    StructureTable good = power_basis_table(cbrt2_poly(), std::cbrt(2.0));
    std::vector<Int> c;
    for (unsigned i = 0; i < 3; ++i) {
        for (unsigned j = 0; j < 3; ++j) {
            for (unsigned k = 0; k < 3; ++k) {
                c.push_back(good.c(i, j, k));
            }
        }
    }
    const double a = std::cbrt(2.0);
    StructureTable negated(3, c, elem({1, 0, 0}), {1.0, -a, a * a});
    ValidationReport rep = validate_table(negated);
    CHECK(rep.symmetry_ok);
    CHECK(rep.associativity_ok);
    CHECK_FALSE(rep.embedding_ok);
    CHECK_FALSE(rep.pass());
}

TEST_CASE("mul matches hand expansion in Q(sqrt 2)") {
    StructureTable t = power_basis_table(sqrt2_poly(), std::sqrt(2.0));
    CHECK(mul(elem({1, 1}), elem({1, 1}), t) == elem({3, 2}));
    CHECK(mul(t.unity(), elem({7, -3}), t) == elem({7, -3}));
}

TEST_CASE("mul matches reduction oracle in Q(cbrt 2)") {
    StructureTable t = power_basis_table(cbrt2_poly(), std::cbrt(2.0));
    CHECK(mul(elem({0, 1, 0}), elem({0, 0, 1}), t) == elem({2, 0, 0}));
}

TEST_CASE("coordinatewise add, sub, neg") {
    CHECK(add(elem({1, 2}), elem({3, 4})) == elem({4, 6}));
    IntElement x = elem({5, -7});
    CHECK(add(x, neg(x)) == elem({0, 0}));
    CHECK(sub(elem({1, 1}), elem({2, 3})) == elem({-1, -2}));
    RatElement q =
        add(rat_elem({Rat(1) / 2, Rat(1) / 3}), rat_elem({Rat(1) / 2, Rat(2) / 3}));
    CHECK(q == rat_elem({Rat(1), Rat(1)}));
    CHECK_THROWS_AS(add(elem({1}), elem({1, 2})), DimensionError);
}

TEST_CASE("representation matrix") {
    StructureTable t = power_basis_table(sqrt2_poly(), std::sqrt(2.0));

    SECTION("unity maps to the identity") {
        auto m = representation_matrix(to_rational(t.unity()), t);
        CHECK(m[0][0] == 1);
        CHECK(m[0][1] == 0);
        CHECK(m[1][0] == 0);
        CHECK(m[1][1] == 1);
    }

    SECTION("sqrt 2 maps to [[0,2],[1,0]]") {
        auto m = representation_matrix(rat_elem({Rat(0), Rat(1)}), t);
        CHECK(m[0][0] == 0);
        CHECK(m[0][1] == 2);
        CHECK(m[1][0] == 1);
        CHECK(m[1][1] == 0);
    }

    SECTION("matrix action agrees with mul on the half-width-1 box") {
        GapBox box(2, 1);
        box.for_each([&](const std::vector<Int>& xv) {
            RatElement x = to_rational(IntElement{xv});
            auto m = representation_matrix(x, t);
            box.for_each([&](const std::vector<Int>& yv) {
                RatElement y = to_rational(IntElement{yv});
                RatElement via_mul = mul(x, y, t);
                for (unsigned k = 0; k < 2; ++k) {
                    Rat acc = m[k][0] * y.coords[0] + m[k][1] * y.coords[1];
                    CHECK(acc == via_mul.coords[k]);
                }
            });
        });
    }
}

TEST_CASE("invert") {
    StructureTable t = power_basis_table(sqrt2_poly(), std::sqrt(2.0));
    RatElement unity = to_rational(t.unity());

    CHECK(invert(unity, t) == unity);
    // 1/(1+sqrt2) = sqrt2 - 1.
    CHECK(invert(rat_elem({Rat(1), Rat(1)}), t) ==
          rat_elem({Rat(-1), Rat(1)}));
    CHECK_THROWS_AS(invert(rat_elem({Rat(0), Rat(0)}), t), ZeroDivisionError);

    SECTION("round-trips through mul for rational coordinates") {
        RatElement x = rat_elem({Rat(3) / 7, Rat(-2) / 5});
        CHECK(mul(invert(x, t), x, t) == unity);
    }

    SECTION("zero divisor detected in a non-field table") {
        // x^2 - 1 passes the ring axioms but (1+a)(1-a) = 0.
        MinimalPolynomial p{{Int(-1), Int(0), Int(1)}};
        StructureTable broken = power_basis_table(p, 1.0);
        CHECK_THROWS_AS(invert(rat_elem({Rat(1), Rat(1)}), broken),
                        NotAFieldError);
    }
}

TEST_CASE("embed") {
    StructureTable t = power_basis_table(sqrt2_poly(), std::sqrt(2.0));
    CHECK(embed(t.unity(), t) == 1.0);
    CHECK_THAT(embed(elem({1, 1}), t),
               Catch::Matchers::WithinAbs(2.414213562373095, 1e-9));
}

TEST_CASE("algebra laws hold exhaustively on the half-width-1 box") {
    for (const MinimalPolynomial& p :
         {sqrt2_poly(), cbrt2_poly(), degree1_poly()}) {
        double root = p.degree() == 1   ? 1.0
                      : p.degree() == 2 ? std::sqrt(2.0)
                                        : std::cbrt(2.0);
        StructureTable t = power_basis_table(p, root);
        const unsigned n = t.dim();
        GapBox box(n, 1);
        std::vector<IntElement> elems;
        box.for_each(
            [&](const std::vector<Int>& v) { elems.push_back(IntElement{v}); });

        for (const IntElement& x : elems) {
            CHECK(mul(t.unity(), x, t) == x);
            for (const IntElement& y : elems) {
                CHECK(mul(x, y, t) == mul(y, x, t));
            }
        }

        // Associativity and distributivity on a fixed sample of triples.
        for (std::size_t a = 0; a < elems.size(); a += 2) {
            for (std::size_t b = 1; b < elems.size(); b += 3) {
                for (std::size_t c = 0; c < elems.size(); c += 5) {
                    const IntElement& x = elems[a];
                    const IntElement& y = elems[b];
                    const IntElement& z = elems[c];
                    CHECK(mul(mul(x, y, t), z, t) == mul(x, mul(y, z, t), t));
                    CHECK(mul(x, add(y, z), t) ==
                          add(mul(x, y, t), mul(x, z, t)));
                }
            }
        }

        for (const IntElement& x : elems) {
            if (x.is_zero()) {
                continue;
            }
            RatElement xr = to_rational(x);
            CHECK(mul(invert(xr, t), xr, t) == to_rational(t.unity()));
        }
    }
}

TEST_CASE("embedding is multiplicative within 1e-9 on the half-width-2 box") {
    StructureTable t = power_basis_table(cbrt2_poly(), std::cbrt(2.0));
    GapBox box(3, 2);
    std::vector<IntElement> elems;
    box.for_each(
        [&](const std::vector<Int>& v) { elems.push_back(IntElement{v}); });
    for (const IntElement& x : elems) {
        const double ex = embed(x, t);
        for (const IntElement& y : elems) {
            const double direct = ex * embed(y, t);
            const double via_field = embed(mul(x, y, t), t);
            REQUIRE(std::abs(direct - via_field) <=
                    1e-9 * std::max(1.0, std::abs(direct)));
        }
    }
}

TEST_CASE("rational conversions") {
    RatElement q = rat_elem({Rat(4) / 2, Rat(-3)});
    IntElement z = to_integral(q);
    CHECK(z == elem({2, -3}));
    CHECK(to_rational(z) == q);
    CHECK_THROWS(to_integral(rat_elem({Rat(1) / 2})));

    // Canonical storage: gcd-reduced, positive denominator.
    Rat r = make_rat(4, -6);
    CHECK(numerator(r) == -2);
    CHECK(denominator(r) == 3);
}
