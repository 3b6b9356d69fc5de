#include "schubert/solver.hpp"

#include "schubert/groebner.hpp"
#include "schubert/linalg.hpp"
#include "schubert/overlap.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

namespace {

std::size_t sz(int v) { return static_cast<std::size_t>(v); }

bool osculates_at(const FlagSpec& f, const CurvePoint& p) { return f.kind == FlagSpec::Kind::Osculating && f.anchor == p; }

// Rows i (0-based) where a condition is imposed, with the flag dimension used.
std::vector<std::pair<int, int>> imposed_rows(const Partition& lambda, int k, int n, MinorStyle style) {
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < k; ++i) {
        if (lambda[i] == 0) break;
        if (style == MinorStyle::Projected && lambda[i] == lambda[i + 1]) continue;
        out.emplace_back(i, n - k + (i + 1) - lambda[i]);
    }
    return out;
}

RationalMatrix complete_rows(RationalMatrix rows, int n) {
    for (int j = 0; j < n && static_cast<int>(rows.size()) < n; ++j) {
        RationalVector e(sz(n));
        e[sz(j)] = 1;
        rows.push_back(e);
        if (rank(rows) != rows.size()) rows.pop_back();
    }
    return rows;
}

FlagSpec explicit_from(const RationalMatrix& rows, int n) { return FlagSpec::explicit_flag(FlagMatrix{n, complete_rows(rows, n)}); }

SolveOutcome failed(std::string why) {
    SolveOutcome o;
    o.failure = std::move(why);
    return o;
}

unsigned degree_of(const SchubertProblem& p) {
    const Integer d = problem_degree(p);
    if (!d.fits_uint_p()) throw std::invalid_argument("problem degree too large");
    return static_cast<unsigned>(d.get_ui());
}

}  // namespace

std::string Chart::to_string() const {
    switch (kind) {
        case ChartKind::Standard: return "standard";
        case ChartKind::OneOsculatingAtInfinity: return "osc-inf:" + std::to_string(infinity_index);
        case ChartKind::TwoOsculating: return "osc-inf-zero:" + std::to_string(infinity_index) + "," + std::to_string(zero_index);
    }
    return "?";
}

std::string to_string(SolveStatus s) {
    switch (s) {
        case SolveStatus::Certified: return "certified";
        case SolveStatus::CertifiedAfterPerturbation: return "certified_after_perturbation";
        case SolveStatus::Failed: return "failed";
    }
    return "?";
}

std::vector<std::vector<int>> chart_pattern(const SchubertProblem& p, const Chart& chart) {
    const int k = p.k, n = p.n;
    std::vector<std::vector<int>> pat(sz(k), std::vector<int>(sz(n), 0));
    if (chart.kind == ChartKind::Standard) {
        for (int r = 0; r < k; ++r) {
            pat[sz(r)][sz(r)] = 1;
            for (int c = k; c < n; ++c) pat[sz(r)][sz(c)] = -1;
        }
        return pat;
    }
    const int nc = static_cast<int>(p.conditions.size());
    if (chart.infinity_index < 0 || chart.infinity_index >= nc) throw std::invalid_argument("chart: condition index out of range");
    const Partition& lambda = p.conditions[sz(chart.infinity_index)];
    Partition mu;
    if (chart.kind == ChartKind::TwoOsculating) {
        if (chart.zero_index < 0 || chart.zero_index >= nc || chart.zero_index == chart.infinity_index)
            throw std::invalid_argument("chart: bad condition index at 0");
        mu = p.conditions[sz(chart.zero_index)];
    }
    // Row r (1-based): 1 in column λ_{k+1-r} + r, free entries up to column n-k+r-μ_r.
    for (int r = 1; r <= k; ++r) {
        const int pivot = lambda[k - r] + r;
        const int bound = n - k + r - mu[r - 1];
        if (pivot > bound) throw std::invalid_argument("chart: the two Schubert cells do not meet");
        pat[sz(r - 1)][sz(pivot - 1)] = 1;
        for (int c = pivot + 1; c <= bound; ++c) pat[sz(r - 1)][sz(c - 1)] = -1;
    }
    return pat;
}

void validate_instance(const Instance& inst) {
    const auto& p = inst.problem;
    make_problem(p.k, p.n, p.conditions);
    if (inst.flags.size() != p.conditions.size()) throw std::invalid_argument("one flag per condition is required");
    for (std::size_t j = 0; j < inst.flags.size(); ++j) {
        const FlagSpec& f = inst.flags[j];
        if (f.n != p.n) throw std::invalid_argument("flag '" + f.to_string() + "' lives in the wrong dimension");
        for (const auto& [i, dim] : imposed_rows(p.conditions[j], p.k, p.n, MinorStyle::Stacked))
            if (!f.supports_dimension(dim))
                throw std::invalid_argument("flag '" + f.to_string() + "' cannot serve condition " + p.conditions[j].to_string());
    }
    configuration_for_instance(p, inst.flags);  // point counts
    if (inst.chart.kind != ChartKind::Standard) {
        chart_pattern(p, inst.chart);
        if (!osculates_at(inst.flags[sz(inst.chart.infinity_index)], CurvePoint::infinity()))
            throw std::invalid_argument("chart: flag of condition " + std::to_string(inst.chart.infinity_index) + " must osculate at inf");
        if (inst.chart.kind == ChartKind::TwoOsculating && !osculates_at(inst.flags[sz(inst.chart.zero_index)], Rational(0)))
            throw std::invalid_argument("chart: flag of condition " + std::to_string(inst.chart.zero_index) + " must osculate at 0");
    }
}

EquationSystem build_equations(const Instance& inst, MinorStyle style) {
    const auto& p = inst.problem;
    const auto pat = chart_pattern(p, inst.chart);
    std::size_t nv = 0;
    for (const auto& row : pat) nv += static_cast<std::size_t>(std::count(row.begin(), row.end(), -1));
    if (nv > kMaxVariables) throw std::invalid_argument("chart has " + std::to_string(nv) + " unknowns, more than supported");

    EquationSystem sys;
    sys.variables = nv;
    sys.chart_matrix = PolyMatrix(sz(p.k), sz(p.n), nv);
    std::size_t next = 0;
    for (int r = 0; r < p.k; ++r)
        for (int c = 0; c < p.n; ++c) {
            const int e = pat[sz(r)][sz(c)];
            sys.chart_matrix(sz(r), sz(c)) = e < 0 ? MultiPoly::variable(nv, next++) : MultiPoly(nv, Rational(e));
        }

    for (std::size_t j = 0; j < p.conditions.size(); ++j) {
        const int idx = static_cast<int>(j);
        if (inst.chart.kind != ChartKind::Standard &&
            (idx == inst.chart.infinity_index || (inst.chart.kind == ChartKind::TwoOsculating && idx == inst.chart.zero_index)))
            continue;  // built into the chart
        for (const auto& [i, f] : imposed_rows(p.conditions[j], p.k, p.n, style)) {
            const RationalMatrix F = flag_subspace(inst.flags[j], f);
            std::vector<MultiPoly> ms;
            if (style == MinorStyle::Projected) {
                const RationalMatrix N = transpose(nullspace(F, sz(p.n)), sz(p.n));
                ms = minors(sys.chart_matrix.times(N), sz(p.k - i));
            } else {
                PolyMatrix stacked = sys.chart_matrix;
                stacked.append_constant_rows(F);
                ms = minors(stacked, sz(p.k + f - i));
            }
            for (auto& m : ms)
                if (!m.is_zero()) sys.generators.push_back(std::move(m));
        }
    }
    return sys;
}

SolveOutcome certify_once(const Instance& inst, MinorStyle style) {
    const unsigned d = degree_of(inst.problem);
    auto fail = [d](std::string why) {
        SolveOutcome o = failed(std::move(why));
        o.degree = d;
        return o;
    };
    EquationSystem sys;
    try {
        sys = build_equations(inst, style);
    } catch (const std::invalid_argument& e) {
        return fail(e.what());
    }
    SolveOutcome out;
    out.degree = d;
    if (sys.variables == 0) {
        for (const auto& g : sys.generators)
            if (!g.is_zero()) return fail("no solution in the chart");
        out.real_count = 1;
        out.status = d == 1 ? SolveStatus::Certified : SolveStatus::Failed;
        if (d != 1) out.failure = "chart has no unknowns";
        return out;
    }
    if (sys.generators.empty()) return fail("no equations: solution set is positive-dimensional");
    QuotientRing qr(sys.generators);
    if (qr.is_trivial()) return fail("no solutions in the chart");
    if (!qr.is_zero_dimensional()) return fail("solution set is positive-dimensional");
    if (qr.dimension() != d)
        return fail("quotient has dimension " + std::to_string(qr.dimension()) + ", expected " + std::to_string(d));
    for (std::size_t v = 0; v < sys.variables; ++v) {
        UniPoly mp = qr.minimal_polynomial(v);
        if (mp.degree() != static_cast<int>(d) || !is_squarefree(mp)) continue;
        out.real_count = count_real_roots(mp);
        out.eliminant_variable = static_cast<int>(v);
        out.eliminant = std::move(mp);
        out.status = SolveStatus::Certified;
        return out;
    }
    return fail("no coordinate separates the solutions");
}

std::optional<std::pair<Instance, Rational>> perturb_instance(const Instance& inst, int round) {
    std::vector<Rational> all;
    bool movable = false;
    for (const auto& f : inst.flags) switch (f.kind) {
            case FlagSpec::Kind::Secant:
            case FlagSpec::Kind::Cosecant:
                all.insert(all.end(), f.points.begin(), f.points.end());
                movable = movable || !f.points.empty();
                break;
            case FlagSpec::Kind::GeneralizedSecant:
                for (const auto& a : f.anchors) all.push_back(a.point);
                movable = true;
                break;
            case FlagSpec::Kind::Osculating:
                if (!f.anchor.is_infinite()) all.push_back(f.anchor.value());
                break;
            case FlagSpec::Kind::Explicit: break;
        }
    if (!movable) return std::nullopt;
    std::sort(all.begin(), all.end());
    all.erase(std::unique(all.begin(), all.end()), all.end());
    Rational gap = 1;
    for (std::size_t i = 1; i < all.size(); ++i)
        if (i == 1 || all[i] - all[i - 1] < gap) gap = all[i] - all[i - 1];
    Rational eps = gap / power(Rational(2), static_cast<unsigned>(20 + round - 1));
    eps.canonicalize();
    auto shift = [&](const Rational& t) {
        const auto j = static_cast<long>(std::lower_bound(all.begin(), all.end(), t) - all.begin()) + 1;
        return Rational(t + eps * j);
    };
    Instance out = inst;
    for (auto& f : out.flags) {
        if (f.kind == FlagSpec::Kind::Secant || f.kind == FlagSpec::Kind::Cosecant)
            for (auto& t : f.points) t = shift(t);
        if (f.kind == FlagSpec::Kind::GeneralizedSecant)
            for (auto& a : f.anchors) a.point = shift(a.point);
    }
    return std::make_pair(std::move(out), eps);
}

SolveOutcome solve_instance(const Instance& inst, const SolveOptions& opts) {
    validate_instance(inst);
    SolveOutcome first = certify_once(inst, opts.style);
    if (first.certified()) return first;
    for (int round = 1; round <= opts.max_perturbation_rounds; ++round) {
        auto moved = perturb_instance(inst, round);
        if (!moved) break;
        SolveOutcome o = certify_once(moved->first, opts.style);
        if (o.certified()) {
            o.status = SolveStatus::CertifiedAfterPerturbation;
            o.perturbation = PerturbationRecord{round, moved->second};
            return o;
        }
    }
    return first;
}

Instance dual_instance(const Instance& inst) {
    validate_instance(inst);
    const int n = inst.problem.n;
    Instance d;
    d.problem = dual_problem(inst.problem);
    for (std::size_t j = 0; j < inst.flags.size(); ++j) {
        const FlagSpec& f = inst.flags[j];
        if (f.kind == FlagSpec::Kind::Secant) {
            d.flags.push_back(FlagSpec::cosecant(f.points, n));
            continue;
        }
        if (f.kind == FlagSpec::Kind::Cosecant) {
            // The dual's prefix elements are spans of the leading cosecant points.
            const int need = relevant_dimension(d.problem.conditions[j], d.problem.k, n);
            std::vector<Rational> lead(f.points.begin(), f.points.begin() + need);
            if (std::is_sorted(lead.begin(), lead.end())) {
                d.flags.push_back(FlagSpec::secant(lead, n));
            } else {
                RationalMatrix rows;
                for (const auto& t : lead) rows.push_back(moment_point(t, n));
                d.flags.push_back(explicit_from(rows, n));
            }
            continue;
        }
        const FlagMatrix full{n, complete_rows(realize_flag(f, f.available_depth()).rows, n)};
        d.flags.push_back(FlagSpec::explicit_flag(dual_flag(full)));
    }
    return d;
}

// --- four secant lines ----------------------------------------------------------

std::string ChordConfiguration::to_string() const {
    std::string s;
    for (const auto& [a, b] : chords) s += "{" + std::to_string(a) + "," + std::to_string(b) + "}";
    return s;
}

ChordConfiguration canonical_chords(std::array<std::pair<int, int>, 4> chords) {
    std::set<int> seen;
    for (const auto& [a, b] : chords) {
        if (a < 1 || a > 8 || b < 1 || b > 8) throw std::invalid_argument("chord endpoints must lie in 1..8");
        seen.insert(a);
        seen.insert(b);
    }
    if (seen.size() != 8) throw std::invalid_argument("chords must pair up the positions 1..8");
    std::optional<ChordConfiguration> best;
    for (int r = 0; r < 8; ++r)
        for (int refl = 0; refl < 2; ++refl) {
            auto map = [&](int x) { return refl ? ((r - x) % 8 + 16) % 8 + 1 : (x - 1 + r) % 8 + 1; };
            ChordConfiguration c;
            for (std::size_t i = 0; i < 4; ++i) {
                int a = map(chords[i].first), b = map(chords[i].second);
                c.chords[i] = {std::min(a, b), std::max(a, b)};
            }
            std::sort(c.chords.begin(), c.chords.end());
            if (!best || c < *best) best = c;
        }
    return *best;
}

std::vector<ChordConfiguration> enumerate_chord_configurations() {
    std::set<ChordConfiguration> found;
    std::array<std::pair<int, int>, 4> cur{};
    std::array<bool, 9> used{};
    auto rec = [&](auto&& self, std::size_t depth) -> void {
        if (depth == 4) {
            found.insert(canonical_chords(cur));
            return;
        }
        int a = 1;
        while (used[sz(a)]) ++a;
        used[sz(a)] = true;
        for (int b = a + 1; b <= 8; ++b) {
            if (used[sz(b)]) continue;
            used[sz(b)] = true;
            cur[depth] = {a, b};
            self(self, depth + 1);
            used[sz(b)] = false;
        }
        used[sz(a)] = false;
    };
    rec(rec, 0);
    return {found.begin(), found.end()};
}

bool has_odd_interval(const ChordConfiguration& config) {
    return std::any_of(config.chords.begin(), config.chords.end(), [](const auto& c) { return (c.second - c.first - 1) % 2 != 0; });
}

Instance four_lines_instance(const std::array<Rational, 8>& points, const ChordConfiguration& config) {
    for (std::size_t i = 1; i < 8; ++i)
        if (!(points[i - 1] < points[i])) throw std::invalid_argument("four lines: points must be strictly increasing");
    Instance inst;
    inst.problem = make_problem(2, 4, std::vector<Partition>(4, Partition{1}));
    for (const auto& [a, b] : config.chords) inst.flags.push_back(FlagSpec::secant({points[sz(a - 1)], points[sz(b - 1)]}, 4));
    return inst;
}

namespace {

// Pluecker coordinates in the order 01, 02, 03, 12, 13, 23.
RationalVector pluecker(const RationalVector& a, const RationalVector& b) {
    RationalVector p;
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j) p.push_back(a[i] * b[j] - a[j] * b[i]);
    return p;
}

Rational pluecker_quadric(const RationalVector& p) { return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]; }

std::optional<SolveOutcome> four_lines_attempt(const std::array<Rational, 8>& pts, const ChordConfiguration& config) {
    RationalMatrix rows;
    for (const auto& [a, b] : config.chords) {
        const RationalVector q = pluecker(moment_point(pts[sz(a - 1)], 4), moment_point(pts[sz(b - 1)], 4));
        // p ∧ q = 0 as a linear form in p.
        rows.push_back({q[5], -q[4], q[3], q[2], -q[1], q[0]});
    }
    const RationalMatrix pencil = nullspace(rows, 6);
    if (pencil.size() != 2) return std::nullopt;
    const Rational A = pluecker_quadric(pencil[0]), C = pluecker_quadric(pencil[1]);
    RationalVector s(6);
    for (std::size_t i = 0; i < 6; ++i) s[i] = pencil[0][i] + pencil[1][i];
    const Rational B = pluecker_quadric(s) - A - C;
    const Rational disc = B * B - 4 * A * C;
    if (disc == 0) return std::nullopt;  // double line or identically zero
    SolveOutcome o;
    o.degree = 2;
    o.real_count = disc > 0 ? 2 : 0;
    o.status = SolveStatus::Certified;
    o.eliminant = UniPoly{C, B, A};
    return o;
}

}  // namespace

SolveOutcome solve_four_lines(const std::array<Rational, 8>& points, const ChordConfiguration& config) {
    four_lines_instance(points, config);  // validation
    if (auto o = four_lines_attempt(points, config)) return *o;
    Rational gap = points[1] - points[0];
    for (std::size_t i = 2; i < 8; ++i) gap = std::min(gap, Rational(points[i] - points[i - 1]));
    for (int round = 1; round <= 3; ++round) {
        Rational eps = gap / power(Rational(2), static_cast<unsigned>(20 + round - 1));
        eps.canonicalize();
        auto moved = points;
        for (std::size_t i = 0; i < 8; ++i) moved[i] += eps * static_cast<long>(i + 1);
        if (auto o = four_lines_attempt(moved, config)) {
            o->status = SolveStatus::CertifiedAfterPerturbation;
            o->perturbation = PerturbationRecord{round, eps};
            return *o;
        }
    }
    SolveOutcome f = failed("degenerate configuration of secant lines");
    f.degree = 2;
    return f;
}

// --- gap family ------------------------------------------------------------------

namespace {

struct GapSetup {
    int m = 0;
    RationalMatrix basis;      // rows: W2 then W1; new coordinates are old · basis⁻¹
    RationalMatrix w3, w4;     // in new coordinates
};

std::optional<GapSetup> gap_setup(const PlaneQuadruple& planes) {
    const int n = planes[0].n;
    if (n < 6 || n % 2 != 0) throw std::invalid_argument("gap: ambient dimension must be even and at least 6");
    const int m = n / 2;
    for (const auto& w : planes) {
        if (w.n != n || w.depth() < m) throw std::invalid_argument("gap: each plane needs " + std::to_string(m) + " rows in dimension " + std::to_string(n));
    }
    auto plane = [&](int i) { return RationalMatrix(planes[sz(i)].rows.begin(), planes[sz(i)].rows.begin() + m); };
    GapSetup s;
    s.m = m;
    s.basis = plane(1);
    for (auto& r : plane(0)) s.basis.push_back(r);
    const auto inv = inverse(s.basis);
    if (!inv) return std::nullopt;
    s.w3 = multiply(plane(2), *inv);
    s.w4 = multiply(plane(3), *inv);
    if (rank(s.w3) != sz(m) || rank(s.w4) != sz(m)) throw std::invalid_argument("gap: planes must have full rank");
    return s;
}

Instance auxiliary_instance(const GapSetup& s) {
    const int n = 2 * s.m;
    Instance inst;
    inst.problem = make_problem(2, n, std::vector<Partition>(4, Partition{s.m - 1}));
    inst.flags = {FlagSpec::osculating(CurvePoint::infinity(), n), FlagSpec::osculating(Rational(0), n), explicit_from(s.w3, n),
                  explicit_from(s.w4, n)};
    inst.chart = Chart::two_osculating(0, 1);
    return inst;
}

// Q[x,y]/J with J = (f(x), (f(x)-f(y))/(x-y)) for square-free monic f of degree
// m. J is radical and vanishes exactly on the ordered pairs of distinct roots;
// {f, Δ} is a Groebner basis for lex y > x, so normal forms have y-degree < m-1
// and x-degree < m.
class PairAlgebra {
public:
    explicit PairAlgebra(UniPoly f) : f_(std::move(f)), m_(f_.degree()), delta_(sz(m_)) {
        for (int b = 0; b < m_; ++b)
            for (int k = b + 1; k <= m_; ++k)
                delta_[sz(b)] += UniPoly::monomial(f_.coeff(static_cast<unsigned>(k)), static_cast<unsigned>(k - 1 - b));
    }

    std::size_t dimension() const { return sz(m_ * (m_ - 1)); }

    // Coefficients by y-degree, reduced.
    std::vector<UniPoly> reduce(std::vector<UniPoly> byy) const {
        for (int dy = static_cast<int>(byy.size()) - 1; dy >= m_ - 1; --dy) {
            const UniPoly c = byy[sz(dy)];
            if (c.is_zero()) continue;
            for (int b = 0; b < m_; ++b) byy[sz(dy - (m_ - 1) + b)] -= c * delta_[sz(b)];
        }
        byy.resize(sz(m_ - 1));
        for (auto& c : byy) c = divmod(c, f_).second;
        return byy;
    }

    using Elem = std::vector<UniPoly>;

    Elem in_x(const UniPoly& p) const { return reduce({p}); }
    Elem in_y(const UniPoly& p) const {
        Elem byy;
        for (const auto& c : p.coeffs()) byy.push_back(UniPoly::constant(c));
        return reduce(std::move(byy));
    }
    Elem zero() const { return Elem(sz(m_ - 1)); }

    Elem mul(const Elem& a, const Elem& b) const {
        Elem prod(a.size() + b.size());
        for (std::size_t i = 0; i < a.size(); ++i)
            if (!a[i].is_zero())
                for (std::size_t j = 0; j < b.size(); ++j) prod[i + j] += a[i] * b[j];
        return reduce(std::move(prod));
    }

    static void add_to(Elem& a, const Elem& b, const Rational& c) {
        for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i] * c;
    }

    // Laplace expansion along the first row.
    Elem det(const std::vector<std::vector<const Elem*>>& m) const {
        const std::size_t n = m.size();
        if (n == 1) return *m[0][0];
        Elem out = zero();
        for (std::size_t c = 0; c < n; ++c) {
            if (is_zero(*m[0][c])) continue;
            std::vector<std::vector<const Elem*>> sub;
            for (std::size_t r = 1; r < n; ++r) {
                std::vector<const Elem*> row;
                for (std::size_t cc = 0; cc < n; ++cc)
                    if (cc != c) row.push_back(m[r][cc]);
                sub.push_back(std::move(row));
            }
            add_to(out, mul(*m[0][c], det(sub)), Rational(c % 2 == 0 ? 1 : -1));
        }
        return out;
    }

    static bool is_zero(const std::vector<UniPoly>& e) {
        return std::all_of(e.begin(), e.end(), [](const UniPoly& c) { return c.is_zero(); });
    }

    RationalVector coordinates(const std::vector<UniPoly>& e) const {
        RationalVector v;
        for (const auto& c : e)
            for (int a = 0; a < m_; ++a) v.push_back(c.coeff(static_cast<unsigned>(a)));
        return v;
    }

    // Minimal polynomial of multiplication by x + y.
    UniPoly minimal_polynomial_of_sum() const {
        std::vector<UniPoly> e(sz(m_ - 1));
        e[0] = UniPoly::constant(1);
        RationalMatrix powers;  // rows: coordinates of (x+y)^t
        while (true) {
            powers.push_back(coordinates(e));
            if (rank(powers) < powers.size()) break;
            std::vector<UniPoly> next(sz(m_));
            for (std::size_t b = 0; b < e.size(); ++b) {
                next[b] += e[b] * UniPoly{0, 1};
                next[b + 1] += e[b];
            }
            e = reduce(std::move(next));
        }
        const RationalMatrix rel = nullspace(transpose(powers, dimension()), powers.size());
        RationalVector c = rel.front();
        const Rational lead = c.back();
        for (auto& x : c) x /= lead;
        return UniPoly(c);
    }

private:
    UniPoly f_;
    int m_;
    std::vector<UniPoly> delta_;
};

struct PairCheck {
    bool verified = false;
    std::optional<unsigned> real_sums;
};

PairCheck verify_pairs(const GapSetup& s, const PlaneQuadruple& planes) {
    PairCheck out;
    const Instance aux = auxiliary_instance(s);
    const EquationSystem sys = build_equations(aux);
    QuotientRing qr(sys.generators);
    if (!qr.is_zero_dimensional() || qr.dimension() != sz(s.m)) return out;
    std::optional<std::vector<UniPoly>> shape;
    UniPoly f;
    for (std::size_t var = 0; var < sys.variables && !shape; ++var) {
        f = qr.minimal_polynomial(var);
        if (f.degree() == s.m && is_squarefree(f)) shape = qr.shape_representation(var);
    }
    if (!shape) return out;
    const int n = 2 * s.m;
    const auto pat = chart_pattern(aux.problem, aux.chart);
    // Chart rows as polynomials in the separating root, mapped back to the original coordinates.
    std::vector<std::vector<UniPoly>> h(2, std::vector<UniPoly>(sz(n)));
    std::size_t next = 0;
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < sz(n); ++c) {
            const int e = pat[r][c];
            h[r][c] = e < 0 ? (*shape)[next++] : UniPoly::constant(Rational(e));
        }
    const PairAlgebra alg(f);
    using Elem = PairAlgebra::Elem;
    // Rows 0,1: the 2-plane at x; rows 2,3: the 2-plane at y.
    std::vector<std::vector<Elem>> sum(4, std::vector<Elem>(sz(n)));
    for (std::size_t r = 0; r < 2; ++r)
        for (std::size_t c = 0; c < sz(n); ++c) {
            UniPoly e;
            for (std::size_t t = 0; t < sz(n); ++t) e += h[r][t] * s.basis[t][c];
            sum[r][c] = alg.in_x(e);
            sum[r + 2][c] = alg.in_y(e);
        }
    auto subsets = [](std::size_t n_, std::size_t k_) {
        std::vector<std::vector<std::size_t>> out_;
        std::vector<std::size_t> cur;
        auto rec = [&](auto&& self, std::size_t start) -> void {
            if (cur.size() == k_) {
                out_.push_back(cur);
                return;
            }
            for (std::size_t i = start; i < n_; ++i) {
                cur.push_back(i);
                self(self, i + 1);
                cur.pop_back();
            }
        };
        rec(rec, 0);
        return out_;
    };
    auto minor = [&](const std::vector<std::vector<Elem>>& mat, const std::vector<std::size_t>& rs, const std::vector<std::size_t>& cs) {
        std::vector<std::vector<const Elem*>> sub;
        for (auto r : rs) {
            std::vector<const Elem*> row;
            for (auto c : cs) row.push_back(&mat[r][c]);
            sub.push_back(std::move(row));
        }
        return alg.det(sub);
    };
    // dim(P_i + P_j ∩ W) >= 2  <=>  rank([rows] · N_W) <= 2.
    for (const auto& w : planes) {
        const RationalMatrix rows(w.rows.begin(), w.rows.begin() + s.m);
        const RationalMatrix N = nullspace(rows, sz(n));
        std::vector<std::vector<Elem>> pn(4, std::vector<Elem>(N.size(), alg.zero()));
        for (std::size_t r = 0; r < 4; ++r)
            for (std::size_t c = 0; c < N.size(); ++c)
                for (std::size_t t = 0; t < sz(n); ++t)
                    if (N[c][t] != 0) PairAlgebra::add_to(pn[r][c], sum[r][t], N[c][t]);
        for (const auto& rs : subsets(4, 3))
            for (const auto& cs : subsets(N.size(), 3))
                if (!PairAlgebra::is_zero(minor(pn, rs, cs))) return out;
    }
    // Each sum must be a 4-plane: the 4-minors generate the unit ideal of the
    // pair algebra, i.e. their multiples span it.
    RationalMatrix images;
    const std::vector<std::size_t> all_rows{0, 1, 2, 3};
    bool independent = false;
    for (const auto& cs : subsets(sz(n), 4)) {
        const Elem e = minor(sum, all_rows, cs);
        if (PairAlgebra::is_zero(e)) continue;
        for (std::size_t b = 0; b + 1 < sz(s.m); ++b)
            for (int a = 0; a < s.m; ++a) {
                Elem mono = alg.zero();
                mono[b] = UniPoly::monomial(1, static_cast<unsigned>(a));
                images.push_back(alg.coordinates(alg.mul(e, mono)));
            }
        images = row_reduce(std::move(images));
        if (images.size() == alg.dimension()) {
            independent = true;
            break;
        }
    }
    if (!independent) return out;
    out.verified = true;
    const UniPoly ms = alg.minimal_polynomial_of_sum();
    if (ms.degree() == s.m * (s.m - 1) / 2 && is_squarefree(ms)) out.real_sums = count_real_roots(ms);
    return out;
}

}  // namespace

GapAuxiliaryResult solve_gap_auxiliary(const PlaneQuadruple& planes) {
    GapAuxiliaryResult res;
    const auto setup = gap_setup(planes);
    if (!setup) {
        res.outcome = failed("first two planes meet");
        return res;
    }
    res.outcome = certify_once(auxiliary_instance(*setup));
    if (res.outcome.certified()) {
        res.r = res.outcome.real_count;
        res.c = (static_cast<unsigned>(setup->m) - res.r) / 2;
    }
    return res;
}

unsigned gap_predicted_count(unsigned r, unsigned c) { return r > 0 ? r * (r - 1) / 2 + c : c; }

bool GapOutcome::verification_agrees() const {
    if (!outcome.certified()) return false;
    if (pairs_verified && !*pairs_verified) return false;
    if (pairs_verified && (!verified_real_sums || *verified_real_sums != outcome.real_count)) return false;
    return true;
}

GapOutcome solve_gap_problem(const PlaneQuadruple& planes, bool verify_direct) {
    GapOutcome g;
    const auto setup = gap_setup(planes);
    const int m = planes[0].n / 2;
    if (!setup) {
        g.outcome = failed("first two planes meet");
        g.outcome.degree = static_cast<unsigned>(m * (m - 1) / 2);
        return g;
    }
    const GapAuxiliaryResult aux = solve_gap_auxiliary(planes);
    g.outcome.degree = static_cast<unsigned>(m * (m - 1) / 2);
    if (!aux.outcome.certified()) {
        g.outcome.failure = "auxiliary problem: " + aux.outcome.failure;
        return g;
    }
    g.r = aux.r;
    g.c = aux.c;
    g.outcome.status = SolveStatus::Certified;
    g.outcome.real_count = gap_predicted_count(aux.r, aux.c);
    g.outcome.eliminant = aux.outcome.eliminant;
    g.outcome.eliminant_variable = aux.outcome.eliminant_variable;
    if (verify_direct) {
        const PairCheck pc = verify_pairs(*setup, planes);
        g.pairs_verified = pc.verified;
        g.verified_real_sums = pc.real_sums;
    }
    return g;
}

bool is_gap_family(const SchubertProblem& p) {
    if (p.k != 4 || p.n % 2 != 0 || p.n < 8 || p.conditions.size() != 4) return false;
    const int m = p.n / 2;
    return std::all_of(p.conditions.begin(), p.conditions.end(), [&](const Partition& c) { return c == Partition{m - 2, m - 2}; });
}

GapOutcome solve_gap_instance(const Instance& inst, bool verify_direct, int max_perturbation_rounds) {
    validate_instance(inst);
    if (!is_gap_family(inst.problem)) throw std::invalid_argument("not a gap-family problem: " + inst.problem.to_string());
    const int m = inst.problem.n / 2;
    auto planes_of = [&](const Instance& in) {
        PlaneQuadruple q;
        for (std::size_t i = 0; i < 4; ++i) q[i] = FlagMatrix{in.problem.n, flag_subspace(in.flags[i], m)};
        return q;
    };
    GapOutcome first = solve_gap_problem(planes_of(inst), verify_direct);
    if (first.outcome.certified()) return first;
    for (int round = 1; round <= max_perturbation_rounds; ++round) {
        auto moved = perturb_instance(inst, round);
        if (!moved) break;
        GapOutcome o = solve_gap_problem(planes_of(moved->first), verify_direct);
        if (o.outcome.certified()) {
            o.outcome.status = SolveStatus::CertifiedAfterPerturbation;
            o.outcome.perturbation = PerturbationRecord{round, moved->second};
            return o;
        }
    }
    return first;
}

}  // namespace schubert
