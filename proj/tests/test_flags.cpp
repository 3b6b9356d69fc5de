#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "schubert/flags.hpp"

#include <random>

using namespace schubert;

namespace {

using RV = RationalVector;

Rational q(long a, long b = 1) {
    Rational r(a, b);
    r.canonicalize();
    return r;
}

RationalMatrix prefix(const FlagMatrix& m, int i) { return RationalMatrix(m.rows.begin(), m.rows.begin() + i); }

FlagMatrix random_full_flag(std::mt19937_64& rng, int n) {
    while (true) {
        FlagMatrix m{n, RationalMatrix(static_cast<std::size_t>(n), RV(static_cast<std::size_t>(n)))};
        for (auto& r : m.rows)
            for (auto& x : r) x = q(static_cast<long>(rng() % 11) - 5, 1 + static_cast<long>(rng() % 3));
        if (rank(m.rows) == static_cast<std::size_t>(n)) return m;
    }
}

}  // namespace

TEST_CASE("moment curve points") {
    CHECK(moment_point(0, 5) == RV{1, 0, 0, 0, 0});
    CHECK(moment_point(1, 4) == RV{1, 1, 1, 1});
    CHECK(moment_point(2, 5) == RV{1, 2, 4, 8, 16});
    CHECK(moment_derivative(2, 1, 4) == RV{0, 1, 4, 12});
    CHECK(moment_derivative(2, 2, 4) == RV{0, 0, 2, 12});
}

TEST_CASE("realize_flag examples") {
    const auto sec = realize_flag(FlagSpec::secant({0, 1, 2}, 5), 3);
    CHECK(sec.rows == RationalMatrix{{1, 0, 0, 0, 0}, {1, 1, 1, 1, 1}, {1, 2, 4, 8, 16}});
    const auto osc = realize_flag(FlagSpec::osculating(Rational(0), 4), 2);
    CHECK(osc.rows == RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}});
    const auto gs = realize_flag(FlagSpec::generalized_secant({{0, 2}, {1, 1}}, 4), 3);
    CHECK(gs.rows == RationalMatrix{{1, 0, 0, 0}, {0, 1, 0, 0}, {1, 1, 1, 1}});
    const auto inf = realize_flag(FlagSpec::osculating(CurvePoint::infinity(), 4), 2);
    CHECK(inf.rows == RationalMatrix{{0, 0, 0, 1}, {0, 0, 1, 0}});
    CHECK_THROWS(realize_flag(FlagSpec::secant({0, 1}, 5), 3));
    CHECK_THROWS(parse_flag_spec("sec:1,inf", 5));
    CHECK_THROWS(FlagSpec::secant({1, 0}, 5));
    CHECK_THROWS(FlagSpec::generalized_secant({{0, 1}, {0, 2}}, 5));
}

TEST_CASE("property: secant flags have full rank") {
    std::mt19937_64 rng(4);
    for (int it = 0; it < 100; ++it) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const int d = 1 + static_cast<int>(rng() % static_cast<unsigned>(n));
        std::set<Rational> pts;
        while (static_cast<int>(pts.size()) < d) pts.insert(q(static_cast<long>(rng() % 41) - 20, 1 + static_cast<long>(rng() % 4)));
        const auto m = realize_flag(FlagSpec::secant({pts.begin(), pts.end()}, n), d);
        CHECK(rank(m.rows) == static_cast<std::size_t>(d));
    }
}

TEST_CASE("flag spec text syntax") {
    const auto s = parse_flag_spec("sec:1/2,3/2,5", 5);
    CHECK(s.kind == FlagSpec::Kind::Secant);
    CHECK(s.points == std::vector<Rational>{q(1, 2), q(3, 2), 5});
    CHECK(parse_flag_spec("osc:inf", 5).anchor.is_infinite());
    CHECK(parse_flag_spec("osc:3", 5).anchor == CurvePoint(Rational(3)));
    const auto g = parse_flag_spec("gsec:0^2,1", 4);
    CHECK(g.anchors == std::vector<Anchor>{{0, 2}, {1, 1}});
    CHECK(parse_flag_spec("cosec:1,2", 3).kind == FlagSpec::Kind::Cosecant);
    for (const char* t : {"sec:1/2,3/2,5", "osc:inf", "osc:-3/4", "gsec:0^2,1", "cosec:1,2"})
        CHECK(parse_flag_spec(t, 5).to_string() == t);
    CHECK_THROWS(parse_flag_spec("sec:1,1", 5));
    CHECK_THROWS(parse_flag_spec("foo:1", 5));
    CHECK_THROWS(parse_flag_spec("1,2", 5));
    CHECK_THROWS(parse_flag_spec("gsec:0^x", 5));
    CHECK(CurvePoint(Rational(100)) < CurvePoint::infinity());
    CHECK(CurvePoint(Rational(-1)) < CurvePoint(Rational(0)));
}

TEST_CASE("dual flags") {
    FlagMatrix id{4, {{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}}};
    const auto d = dual_flag(id);
    for (int i = 1; i <= 4; ++i)
        CHECK(same_row_space(prefix(d, i), prefix(FlagMatrix{4, {{0, 0, 0, 1}, {0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}}}, i)));
    CHECK_THROWS(dual_flag(FlagMatrix{2, {{1, 1}, {2, 2}}}));

    std::mt19937_64 rng(8);
    for (int it = 0; it < 40; ++it) {
        const int n = 2 + static_cast<int>(rng() % 7);
        const auto m = random_full_flag(rng, n);
        const auto dd = dual_flag(dual_flag(m));
        const auto dm = dual_flag(m);
        for (int i = 1; i <= n; ++i) {
            CHECK(same_row_space(prefix(dd, i), prefix(m, i)));
            // Pairing: the first i dual rows kill the first n-i original rows.
            for (int a = 0; a < i; ++a)
                for (int b = 0; b < n - i; ++b) CHECK(dot(dm.rows[static_cast<std::size_t>(a)], m.rows[static_cast<std::size_t>(b)]) == 0);
        }
    }

    // Dual of the osculating flag at 1 in n = 3 starts with the dual curve point at 1.
    const auto osc = realize_flag(FlagSpec::osculating(Rational(1), 3), 3);
    const auto dosc = dual_flag(osc);
    CHECK(same_row_space(prefix(dosc, 1), {dual_curve_point(1, 3)}));
    CHECK(dot(dosc.rows[0], osc.rows[0]) == 0);
    CHECK(dot(dosc.rows[0], osc.rows[1]) == 0);
    CHECK(dot(dosc.rows[1], osc.rows[0]) == 0);
}

TEST_CASE("cosecant normals and dual curve") {
    CHECK(cosecant_normal({1, 2}) == RV{2, -3, 1});
    CHECK(cosecant_normal({0}) == RV{0, 1});
    CHECK(dot(cosecant_normal({1, 2}), moment_point(1, 3)) == 0);
    CHECK_THROWS(cosecant_normal({1, 1}));
    CHECK(dual_curve_point(0, 4) == RV{0, 0, 0, 1});
    CHECK(dual_curve_point(1, 3) == RV{1, -2, 1});

    std::mt19937_64 rng(12);
    for (int it = 0; it < 60; ++it) {
        // Pairing identity, checked at more sample points than the degree.
        const int m = 1 + static_cast<int>(rng() % 6);
        std::set<Rational> s;
        while (static_cast<int>(s.size()) < m) s.insert(q(static_cast<long>(rng() % 31) - 15, 1 + static_cast<long>(rng() % 3)));
        const std::vector<Rational> pts(s.begin(), s.end());
        const auto v = cosecant_normal(pts);
        for (int j = 0; j <= m + 1; ++j) {
            const Rational x = q(j * 7 - 11, 3);
            Rational prod(1);
            for (const auto& p : pts) prod *= x - p;
            CHECK(dot(v, moment_point(x, m + 1)) == prod);
        }
    }
    for (int n = 2; n <= 6; ++n)
        for (int it = 0; it < 5; ++it) {
            const Rational t = q(static_cast<long>(rng() % 21) - 10, 1 + static_cast<long>(rng() % 4));
            const auto p = dual_curve_point(t, n);
            for (int j = 0; j <= n - 2; ++j) CHECK(dot(p, moment_derivative(t, j, n)) == 0);
            CHECK(dot(p, moment_derivative(t, n - 1, n)) != 0);
        }
}

TEST_CASE("cosecant subspaces") {
    const auto a = cosecant_subspace({0}, 2);
    CHECK(a.size() == 1);
    CHECK(dot(a[0], moment_point(0, 2)) == 0);
    const auto b = cosecant_subspace({0, 1}, 4);
    CHECK(b.size() == 2);
    CHECK(rank(b) == 2);
    for (const auto& r : b) {
        CHECK(dot(r, moment_point(0, 4)) == 0);
        CHECK(dot(r, moment_point(1, 4)) == 0);
    }
    // Double annihilator gives back span γ(s).
    for (int n = 2; n <= 6; ++n) {
        const Rational s = q(3, 2);
        const auto ann = cosecant_subspace({s}, n);
        CHECK(same_row_space(nullspace(ann, static_cast<std::size_t>(n)), {moment_point(s, n)}));
    }
    CHECK_THROWS(cosecant_subspace({1, 1}, 4));
    // Cosecant flag: element of dimension i annihilates the first n-i points.
    const auto spec = FlagSpec::cosecant({1, 2, 3}, 4);
    const auto full = realize_flag(spec, 4);
    for (int i = 1; i <= 4; ++i) {
        CHECK(same_row_space(prefix(full, i), flag_subspace(spec, i)));
        for (int j = 0; j < 4 - i; ++j)
            for (const auto& r : flag_subspace(spec, i)) CHECK(dot(r, moment_point(spec.points[static_cast<std::size_t>(j)], 4)) == 0);
    }
    // Only the points that are needed.
    const auto partial = FlagSpec::cosecant({5}, 4);
    CHECK(partial.supports_dimension(3));
    CHECK_FALSE(partial.supports_dimension(2));
    CHECK(flag_subspace(partial, 3).size() == 3);
}

TEST_CASE("wronskians") {
    const UniPoly one = UniPoly::constant(1), t{0, 1};
    CHECK(discrete_wronskian({UniPoly{0, 0, 1}}, 1) == UniPoly{0, 0, 1});
    CHECK(discrete_wronskian({one, t}, q(3, 7)) == UniPoly::constant(q(3, 7)));
    CHECK(discrete_wronskian({t, UniPoly{0, 0, 0, 1}}, 1) == UniPoly{0, 1, 3, 2});
    CHECK_THROWS(discrete_wronskian({t}, 0));
    CHECK(wronskian({one, t}) == one);
    CHECK(wronskian({t, UniPoly{0, 0, 1}}) == UniPoly{0, 0, 1});
    CHECK(wronskian({t, UniPoly{0, 2}}).is_zero());
}

TEST_CASE("property: discrete wronskian degree and vanishing") {
    std::mt19937_64 rng(21);
    for (int n = 2; n <= 6; ++n)
        for (int k = 1; k <= std::min(3, n - 1); ++k)
            for (int it = 0; it < 4; ++it) {
                std::vector<UniPoly> fs;
                for (int i = 0; i < k; ++i) {
                    std::vector<Rational> c(static_cast<std::size_t>(n));
                    for (auto& x : c) x = q(static_cast<long>(rng() % 201) - 100);
                    fs.emplace_back(c);
                }
                CHECK(discrete_wronskian(fs, q(1, 2)).degree() == k * (n - k));

                // Put a polynomial vanishing on t0, t0+h, ..., t0+(k-1)h into the span.
                const Rational t0 = q(static_cast<long>(rng() % 9) - 4), h = q(1 + static_cast<long>(rng() % 3), 2);
                std::vector<Rational> nodes;
                for (int j = 0; j < k; ++j) nodes.push_back(t0 + h * j);
                UniPoly special = UniPoly::from_roots(nodes);
                if (special.degree() < n - 1) special *= UniPoly{q(static_cast<long>(rng() % 5) + 1), 1};
                std::vector<UniPoly> gs = fs;
                gs[0] = special;
                CHECK(discrete_wronskian(gs, h)(t0) == 0);
            }
}
