#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/rational.hpp"
#include "schubert/upoly.hpp"

#include <algorithm>
#include <random>
#include <set>

using namespace schubert;

namespace {

UniPoly x_minus(long r) { return UniPoly{Rational(-r), Rational(1)}; }

Rational rnd_rational(std::mt19937_64& rng, long span, long den) {
    std::uniform_int_distribution<long> num(-span, span), d(1, den);
    Rational q(num(rng), d(rng));
    q.canonicalize();
    return q;
}

}  // namespace

TEST_CASE("rational parsing and canonical form") {
    CHECK(parse_rational("3") == Rational(3));
    CHECK(parse_rational("-6/4") == Rational(-3, 2));
    CHECK(parse_rational("6/4").get_den() == 2);
    CHECK_THROWS_AS(parse_rational("1/0"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("abc"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK(to_string(Rational(-3, 2)) == "-3/2");
    CHECK(binomial(7, 3) == 35);
    CHECK(binomial(3, 7) == 0);
    CHECK(power(Rational(2, 3), 3) == Rational(8, 27));
    CHECK(power(Rational(5), 0) == 1);
}

TEST_CASE("rational sums agree with cross-multiplied integer arithmetic") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> num(-1000000, 1000000), den(1, 100000);
    for (int it = 0; it < 2000; ++it) {
        const long p = num(rng), q = den(rng), r = num(rng), s = den(rng);
        Rational a(p, q), b(r, s);
        a.canonicalize();
        b.canonicalize();
        const Rational sum = a + b;
        // Independent check: sum == (ps + rq)/(qs) as integers, and canonical.
        const Integer n = Integer(p) * s + Integer(r) * q;
        const Integer d = Integer(q) * s;
        CHECK(sum.get_num() * d == n * sum.get_den());
        CHECK(sum.get_den() > 0);
        Integer g;
        mpz_gcd(g.get_mpz_t(), sum.get_num_mpz_t(), sum.get_den_mpz_t());
        CHECK(g == 1);
    }
}

TEST_CASE("univariate basics") {
    const UniPoly p{1, 2, 3};  // 1 + 2x + 3x^2
    CHECK(p.degree() == 2);
    CHECK(p(Rational(2)) == 17);
    CHECK(p.derivative() == UniPoly{2, 6});
    CHECK(UniPoly{}.degree() == -1);
    CHECK(UniPoly{0, 0}.is_zero());
    CHECK(p.shifted(1)(Rational(3)) == p(Rational(4)));
    auto [q, r] = divmod(UniPoly{-1, 0, 1}, x_minus(1));
    CHECK(q == x_minus(-1));
    CHECK(r.is_zero());
    CHECK_THROWS(divmod(p, UniPoly{}));
}

TEST_CASE("gcd examples") {
    CHECK(upoly_gcd(UniPoly{-1, 0, 1}, x_minus(1)) == x_minus(1));
    CHECK(upoly_gcd(UniPoly{1, 0, 1}, UniPoly{0, 1}) == UniPoly::constant(1));
    const UniPoly a = x_minus(2) * x_minus(2) * x_minus(2) * x_minus(-1);
    const UniPoly b = x_minus(2) * x_minus(-3);
    CHECK(upoly_gcd(a, b) == x_minus(2));
    CHECK(upoly_gcd(UniPoly{2, 4}, UniPoly{}) == UniPoly{Rational(1, 2), 1});
}

TEST_CASE("square-freeness") {
    CHECK(is_squarefree(UniPoly{-1, 0, 1}));
    CHECK_FALSE(is_squarefree(x_minus(1) * x_minus(1)));
    CHECK(is_squarefree(UniPoly{0, -1, 0, 0, 0, 1}));
    try {
        is_squarefree(UniPoly{});
        FAIL("expected an error");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("undefined for zero polynomial") != std::string::npos);
    }
}

TEST_CASE("real root counting examples") {
    CHECK(count_real_roots(UniPoly{1, 0, 1}) == 0);
    CHECK(count_real_roots(UniPoly{0, -1, 0, 1}) == 3);
    const UniPoly f = x_minus(1) * x_minus(2) * x_minus(3) * UniPoly{1, 1, 1};
    CHECK(count_real_roots(f) == 3);
    CHECK(count_real_roots(f, {Rational(1), Rational(3)}) == 1);  // open interval
    CHECK(count_real_roots(f, {Rational(0), std::nullopt}) == 3);
    CHECK(count_real_roots(f, {std::nullopt, Rational(2)}) == 1);
    CHECK(count_real_roots(x_minus(1) * x_minus(1)) == 1);
    CHECK_THROWS(count_real_roots(UniPoly{}));
    CHECK_THROWS(count_real_roots(f, {Rational(2), Rational(2)}));
}

TEST_CASE("property: rational roots times a positive-definite factor") {
    std::mt19937_64 rng(11);
    for (int it = 0; it < 300; ++it) {
        std::set<Rational> roots;
        const int m = static_cast<int>(rng() % 7);
        while (static_cast<int>(roots.size()) < m) roots.insert(rnd_rational(rng, 40, 7));
        UniPoly f = UniPoly::from_roots({roots.begin(), roots.end()});
        // (x - a)^2 + b^2 with b != 0 has no real roots.
        const int quads = static_cast<int>(rng() % 3);
        for (int j = 0; j < quads; ++j) {
            const Rational a = rnd_rational(rng, 20, 5);
            Rational b = rnd_rational(rng, 20, 5);
            if (b == 0) b = 1;
            f *= UniPoly{a * a + b * b, -2 * a, 1};
        }
        f *= rnd_rational(rng, 9, 4) == 0 ? Rational(3) : rnd_rational(rng, 9, 4) + 100;
        if (f.degree() <= 0) continue;
        CHECK(count_real_roots(f) == roots.size());
        // Additivity across a non-root split point.
        Rational a = -50, c = 50, b = rnd_rational(rng, 30, 3);
        if (f(b) == 0) b += Rational(1, 1000);
        CHECK(count_real_roots(f, {a, b}) + count_real_roots(f, {b, c}) == count_real_roots(f, {a, c}));
        // Oracle for the split: count the known roots directly.
        const auto inside = std::count_if(roots.begin(), roots.end(), [&](const Rational& r) { return a < r && r < b; });
        CHECK(count_real_roots(f, {a, b}) == static_cast<unsigned>(inside));
    }
}

TEST_CASE("property: f*f is never square-free") {
    std::mt19937_64 rng(3);
    for (int it = 0; it < 200; ++it) {
        std::vector<Rational> c(2 + rng() % 5);
        for (auto& x : c) x = rnd_rational(rng, 10, 3);
        if (c.back() == 0) c.back() = 1;
        const UniPoly f(c);
        CHECK_FALSE(is_squarefree(f * f));
        CHECK(is_squarefree(squarefree_part(f * f)));
    }
}

TEST_CASE("sturm sequence on a high-degree eliminant-like polynomial") {
    // 12 distinct rational roots with large spread.
    std::vector<Rational> roots;
    for (int i = 0; i < 12; ++i) roots.emplace_back(i * i - 30, 7 + i);
    for (auto& r : roots) r.canonicalize();
    const UniPoly f = UniPoly::from_roots(roots) * UniPoly{5, 0, 1};
    CHECK(count_real_roots(f) == 12);
    const auto seq = sturm_sequence(primitive_integer_form(f));
    CHECK(seq.size() == 15);
}
