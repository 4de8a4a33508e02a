#include "doctest.h"

#include <random>

#include "matroidkl/bigint.hpp"
#include "matroidkl/errors.hpp"
#include "matroidkl/poly.hpp"

using namespace matroidkl;

namespace {

IntPoly random_poly(std::mt19937_64& gen, int max_deg) {
    int deg = static_cast<int>(gen() % (max_deg + 1));
    std::vector<Int> c(deg + 1);
    for (auto& v : c) v = static_cast<int>(gen() % 21) - 10;
    return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("binomial basics") {
    CHECK(binomial(0, 0) == 1);
    CHECK(binomial(5, 2) == 10);
    CHECK(binomial(5, 7) == 0);
    CHECK(binomial(5, -1) == 0);
    CHECK(binomial(52, 26) == Int("495918532948104"));
    for (int n = 0; n <= 20; ++n)
        for (int k = 1; k <= n; ++k)
            CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
}

TEST_CASE("IntPoly arithmetic against evaluation") {
    std::mt19937_64 gen(12345);
    for (int trial = 0; trial < 200; ++trial) {
        IntPoly f = random_poly(gen, 6), g = random_poly(gen, 6);
        for (Int x : {Int(0), Int(1), Int(-1), Int(3), Int(-7)}) {
            CHECK((f + g).eval(x) == f.eval(x) + g.eval(x));
            CHECK((f - g).eval(x) == f.eval(x) - g.eval(x));
            CHECK((f * g).eval(x) == f.eval(x) * g.eval(x));
            CHECK((-f).eval(x) == -f.eval(x));
            CHECK(f.shift(2).eval(x) == f.eval(x) * x * x);
            CHECK(f.scale(5).eval(x) == 5 * f.eval(x));
        }
    }
}

TEST_CASE("IntPoly trims and reports degree") {
    IntPoly z(std::vector<Int>{0, 0, 0});
    CHECK(z.is_zero());
    CHECK(z.degree() == -1);
    IntPoly f(std::vector<Int>{1, 2, 0});
    CHECK(f.degree() == 1);
    CHECK(f.coeff(0) == 1);
    CHECK(f.coeff(5) == 0);
    CHECK(f.text() == "1 + 2t");
}

TEST_CASE("reverse is t^d f(1/t)") {
    IntPoly f(std::vector<Int>{1, 2, 3});
    CHECK(f.reverse(2) == IntPoly(std::vector<Int>{3, 2, 1}));
    CHECK(f.reverse(4) == IntPoly(std::vector<Int>{0, 0, 3, 2, 1}));
    CHECK_THROWS_AS(f.reverse(1), DegreeTooSmall);
    CHECK(IntPoly{}.reverse(3).is_zero());
}

TEST_CASE("palindromicity and unimodality") {
    CHECK(is_palindromic(IntPoly(std::vector<Int>{1, 4, 7, 4, 1}), 4));
    CHECK(is_palindromic(IntPoly(std::vector<Int>{1, 1}), 1));
    CHECK(!is_palindromic(IntPoly(std::vector<Int>{1, 2}), 1));
    CHECK(is_palindromic(IntPoly{}, 3));
    CHECK(is_unimodal(IntPoly(std::vector<Int>{1, 3, 3, 2})));
    CHECK(!is_unimodal(IntPoly(std::vector<Int>{1, 0, 2})));
    CHECK(is_unimodal(IntPoly{}));
    CHECK(coeffwise_leq(IntPoly(std::vector<Int>{1, 2}),
                        IntPoly(std::vector<Int>{1, 3, 1})));
    CHECK(!coeffwise_leq(IntPoly(std::vector<Int>{2}),
                         IntPoly(std::vector<Int>{1, 9})));
    CHECK(nonnegative_coeffs(IntPoly{}));
    CHECK(!nonnegative_coeffs(IntPoly(std::vector<Int>{1, -1, 1})));
}

TEST_CASE("gamma expansion on known palindromes") {
    // t^4 + 4t^3 + 7t^2 + 4t + 1 = (1+t)^4 + 0 t(1+t)^2 + 1 t^2
    GammaVector g = gamma_expand(IntPoly(std::vector<Int>{1, 4, 7, 4, 1}), 4);
    CHECK(g.d == 4);
    CHECK(g.gammas == std::vector<Int>{1, 0, 1});
    CHECK(is_gamma_positive(g));

    GammaVector h = gamma_expand(IntPoly(std::vector<Int>{1, 1, 1}), 2);
    CHECK(h.gammas == std::vector<Int>{1, -1});
    CHECK(!is_gamma_positive(h));

    CHECK_THROWS_AS(gamma_expand(IntPoly(std::vector<Int>{1, 2}), 1),
                    NotPalindromic);
}

TEST_CASE("gamma expand/contract round trip") {
    std::mt19937_64 gen(777);
    for (int trial = 0; trial < 100; ++trial) {
        // build a palindromic polynomial from a random gamma vector
        int d = 2 + static_cast<int>(gen() % 7);
        GammaVector g;
        g.d = d;
        g.gammas.resize(d / 2 + 1);
        for (auto& v : g.gammas) v = static_cast<int>(gen() % 9) - 4;
        IntPoly f = gamma_contract(g);
        CHECK(is_palindromic(f, d));
        GammaVector back = gamma_expand(f, d);
        CHECK(back.d == d);
        CHECK(back.gammas == g.gammas);
    }
}

TEST_CASE("gamma of the zero polynomial") {
    GammaVector g = gamma_expand(IntPoly{}, 4);
    CHECK(g.gammas == std::vector<Int>{0, 0, 0});
    CHECK(gamma_contract(g).is_zero());
}

TEST_CASE("pow_one_plus_t gives binomial rows") {
    IntPoly p = pow_one_plus_t(5);
    for (int i = 0; i <= 5; ++i) CHECK(p.coeff(i) == binomial(5, i));
}

TEST_CASE("BiPoly arithmetic against evaluation") {
    std::mt19937_64 gen(999);
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<std::vector<Int>> a(2 + gen() % 3), b(2 + gen() % 3);
        for (auto& row : a) {
            row.resize(2 + gen() % 3);
            for (auto& v : row) v = static_cast<int>(gen() % 11) - 5;
        }
        for (auto& row : b) {
            row.resize(2 + gen() % 3);
            for (auto& v : row) v = static_cast<int>(gen() % 11) - 5;
        }
        BiPoly f(a), g(b);
        for (Int x : {Int(0), Int(2), Int(-3)})
            for (Int y : {Int(1), Int(-2)}) {
                CHECK((f + g).eval(x, y) == f.eval(x, y) + g.eval(x, y));
                CHECK((f - g).eval(x, y) == f.eval(x, y) - g.eval(x, y));
                CHECK((f * g).eval(x, y) == f.eval(x, y) * g.eval(x, y));
                CHECK(f.eval_y(y).eval(x) == f.eval(x, y));
            }
    }
}
