#include "schubert/flags.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace schubert {

const Rational& CurvePoint::value() const {
    if (!value_) throw std::logic_error("the point at infinity has no rational value");
    return *value_;
}

std::string CurvePoint::to_string() const { return value_ ? schubert::to_string(*value_) : "inf"; }

std::strong_ordering operator<=>(const CurvePoint& a, const CurvePoint& b) {
    if (!a.value_ || !b.value_) return static_cast<bool>(b.value_) <=> static_cast<bool>(a.value_);
    const int c = cmp(*a.value_, *b.value_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
}

namespace {

void require_distinct(const std::vector<Rational>& pts, const char* what) {
    std::set<Rational> seen(pts.begin(), pts.end());
    if (seen.size() != pts.size()) throw std::invalid_argument(std::string(what) + ": repeated points");
}

void require_ambient(int n) {
    if (n < 1) throw std::invalid_argument("ambient dimension must be positive");
}

}  // namespace

FlagSpec FlagSpec::secant(std::vector<Rational> points, int n) {
    require_ambient(n);
    for (std::size_t i = 1; i < points.size(); ++i)
        if (!(points[i - 1] < points[i])) throw std::invalid_argument("secant points must be strictly increasing");
    if (static_cast<int>(points.size()) > n) throw std::invalid_argument("more secant points than the ambient dimension");
    FlagSpec s;
    s.kind = Kind::Secant;
    s.n = n;
    s.points = std::move(points);
    return s;
}

FlagSpec FlagSpec::osculating(CurvePoint at, int n) {
    require_ambient(n);
    FlagSpec s;
    s.kind = Kind::Osculating;
    s.n = n;
    s.anchor = at;
    return s;
}

FlagSpec FlagSpec::generalized_secant(std::vector<Anchor> anchors, int n) {
    require_ambient(n);
    std::vector<Rational> pts;
    int total = 0;
    for (const auto& a : anchors) {
        if (a.order < 1) throw std::invalid_argument("anchor order must be positive");
        pts.push_back(a.point);
        total += a.order;
    }
    require_distinct(pts, "generalized secant");
    if (total > n) throw std::invalid_argument("anchor orders exceed the ambient dimension");
    FlagSpec s;
    s.kind = Kind::GeneralizedSecant;
    s.n = n;
    s.anchors = std::move(anchors);
    return s;
}

FlagSpec FlagSpec::cosecant(std::vector<Rational> points, int n) {
    require_ambient(n);
    require_distinct(points, "cosecant");
    if (static_cast<int>(points.size()) > n - 1) throw std::invalid_argument("a cosecant flag uses at most n-1 points");
    FlagSpec s;
    s.kind = Kind::Cosecant;
    s.n = n;
    s.points = std::move(points);
    return s;
}

FlagSpec FlagSpec::explicit_flag(FlagMatrix m) {
    require_ambient(m.n);
    for (const auto& r : m.rows)
        if (static_cast<int>(r.size()) != m.n) throw std::invalid_argument("flag matrix row has wrong length");
    if (rank(m.rows) != m.rows.size()) throw std::invalid_argument("flag matrix is rank deficient");
    FlagSpec s;
    s.kind = Kind::Explicit;
    s.n = m.n;
    s.matrix = std::move(m);
    return s;
}

int FlagSpec::available_depth() const {
    switch (kind) {
        case Kind::Secant: return static_cast<int>(points.size());
        case Kind::Osculating: return n;
        case Kind::GeneralizedSecant: {
            int t = 0;
            for (const auto& a : anchors) t += a.order;
            return t;
        }
        case Kind::Cosecant: return static_cast<int>(points.size()) == n - 1 ? n : 0;
        case Kind::Explicit: return matrix.depth();
    }
    return 0;
}

bool FlagSpec::supports_dimension(int dim) const {
    if (dim < 0 || dim > n) return false;
    if (kind == Kind::Cosecant) return n - dim <= static_cast<int>(points.size());
    return dim <= available_depth();
}

std::string FlagSpec::to_string() const {
    auto join = [](const std::vector<Rational>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + schubert::to_string(v[i]);
        return s;
    };
    switch (kind) {
        case Kind::Secant: return "sec:" + join(points);
        case Kind::Osculating: return "osc:" + anchor.to_string();
        case Kind::GeneralizedSecant: {
            std::string s = "gsec:";
            for (std::size_t i = 0; i < anchors.size(); ++i) {
                s += (i ? "," : "") + schubert::to_string(anchors[i].point);
                if (anchors[i].order != 1) s += "^" + std::to_string(anchors[i].order);
            }
            return s;
        }
        case Kind::Cosecant: return "cosec:" + join(points);
        case Kind::Explicit: return "explicit";
    }
    return {};
}

FlagSpec parse_flag_spec(std::string_view text, int n) {
    const auto colon = text.find(':');
    if (colon == std::string_view::npos) throw std::invalid_argument("flag spec needs a 'kind:' prefix: '" + std::string(text) + "'");
    const std::string_view kind = text.substr(0, colon);
    const std::string_view body = text.substr(colon + 1);
    std::vector<std::string_view> items;
    for (std::size_t start = 0;;) {
        const auto comma = body.find(',', start);
        items.push_back(body.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    auto rationals = [&] {
        std::vector<Rational> v;
        for (auto it : items) v.push_back(parse_rational(it));
        return v;
    };
    if (kind == "sec") {
        auto pts = rationals();
        std::sort(pts.begin(), pts.end());
        require_distinct(pts, "secant");
        return FlagSpec::secant(std::move(pts), n);
    }
    if (kind == "cosec") return FlagSpec::cosecant(rationals(), n);
    if (kind == "osc") {
        if (items.size() != 1) throw std::invalid_argument("osc takes exactly one point");
        if (items[0] == "inf") return FlagSpec::osculating(CurvePoint::infinity(), n);
        return FlagSpec::osculating(parse_rational(items[0]), n);
    }
    if (kind == "gsec") {
        std::vector<Anchor> anchors;
        for (auto it : items) {
            Anchor a;
            if (const auto caret = it.find('^'); caret != std::string_view::npos) {
                a.point = parse_rational(it.substr(0, caret));
                const std::string ord(it.substr(caret + 1));
                if (ord.empty() || ord.find_first_not_of("0123456789") != std::string::npos)
                    throw std::invalid_argument("malformed anchor order '" + ord + "'");
                a.order = std::stoi(ord);
            } else {
                a.point = parse_rational(it);
            }
            anchors.push_back(a);
        }
        return FlagSpec::generalized_secant(std::move(anchors), n);
    }
    throw std::invalid_argument("unknown flag kind '" + std::string(kind) + "'");
}

RationalVector moment_point(const Rational& t, int n) {
    RationalVector v(static_cast<std::size_t>(n));
    Rational p(1);
    for (auto& x : v) {
        x = p;
        p *= t;
    }
    return v;
}

RationalVector moment_derivative(const Rational& t, int j, int n) {
    // d^j/dt^j t^e = e!/(e-j)! t^{e-j}
    RationalVector v(static_cast<std::size_t>(n));
    for (int e = j; e < n; ++e) {
        Integer falling(1);
        for (int q = 0; q < j; ++q) falling *= e - q;
        v[static_cast<std::size_t>(e)] = Rational(falling) * power(t, static_cast<unsigned>(e - j));
    }
    return v;
}

FlagMatrix realize_flag(const FlagSpec& spec, int depth) {
    if (depth < 0 || depth > spec.n) throw std::invalid_argument("flag depth out of range");
    if (depth > spec.available_depth())
        throw std::invalid_argument("flag spec '" + spec.to_string() + "' provides fewer than " + std::to_string(depth) + " subspaces");
    FlagMatrix m{spec.n, {}};
    const int n = spec.n;
    switch (spec.kind) {
        case FlagSpec::Kind::Secant:
            for (int i = 0; i < depth; ++i) m.rows.push_back(moment_point(spec.points[static_cast<std::size_t>(i)], n));
            break;
        case FlagSpec::Kind::Osculating:
            for (int j = 0; j < depth; ++j) {
                if (spec.anchor.is_infinite()) {
                    RationalVector e(static_cast<std::size_t>(n));
                    e[static_cast<std::size_t>(n - 1 - j)] = 1;
                    m.rows.push_back(std::move(e));
                } else {
                    m.rows.push_back(moment_derivative(spec.anchor.value(), j, n));
                }
            }
            break;
        case FlagSpec::Kind::GeneralizedSecant:
            for (const auto& a : spec.anchors)
                for (int j = 0; j < a.order && m.depth() < depth; ++j) m.rows.push_back(moment_derivative(a.point, j, n));
            break;
        case FlagSpec::Kind::Cosecant:
            for (int i = 1; i <= depth; ++i) {
                const std::vector<Rational> first(spec.points.begin(), spec.points.begin() + (n - i));
                m.rows.push_back(RationalVector(static_cast<std::size_t>(n)));
                const auto c = UniPoly::from_roots(first).coeffs();
                std::copy(c.begin(), c.end(), m.rows.back().begin());
            }
            break;
        case FlagSpec::Kind::Explicit:
            m.rows.assign(spec.matrix.rows.begin(), spec.matrix.rows.begin() + depth);
            break;
    }
    return m;
}

RationalMatrix flag_subspace(const FlagSpec& spec, int dim) {
    if (!spec.supports_dimension(dim))
        throw std::invalid_argument("flag spec '" + spec.to_string() + "' has no " + std::to_string(dim) + "-dimensional element");
    if (spec.kind == FlagSpec::Kind::Cosecant) {
        const std::vector<Rational> first(spec.points.begin(), spec.points.begin() + (spec.n - dim));
        if (first.empty()) {
            RationalMatrix id(static_cast<std::size_t>(spec.n), RationalVector(static_cast<std::size_t>(spec.n)));
            for (int i = 0; i < spec.n; ++i) id[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
            return id;
        }
        return cosecant_subspace(first, spec.n);
    }
    return realize_flag(spec, dim).rows;
}

FlagMatrix dual_flag(const FlagMatrix& m) {
    const auto n = static_cast<std::size_t>(m.n);
    if (m.rows.size() != n) throw std::invalid_argument("dual_flag needs a full n x n flag");
    const auto inv = inverse(m.rows);
    if (!inv) throw std::invalid_argument("dual_flag: flag matrix is rank deficient");
    // Column c_j of m^{-1} pairs to δ_ij with row i; rows 1..n-i are
    // annihilated by c_{n-i+1}, ..., c_n.
    FlagMatrix d{m.n, {}};
    for (std::size_t i = 0; i < n; ++i) {
        RationalVector col(n);
        for (std::size_t r = 0; r < n; ++r) col[r] = (*inv)[r][n - 1 - i];
        d.rows.push_back(std::move(col));
    }
    return d;
}

RationalVector cosecant_normal(const std::vector<Rational>& points) {
    require_distinct(points, "cosecant_normal");
    const auto c = UniPoly::from_roots(points).coeffs();
    return RationalVector(c.begin(), c.end());
}

RationalVector dual_curve_point(const Rational& t, int n) {
    RationalVector v(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) {
        v[static_cast<std::size_t>(j)] = Rational(binomial(static_cast<unsigned long>(n - 1), static_cast<unsigned long>(j))) *
                                         power(-t, static_cast<unsigned>(n - 1 - j));
    }
    return v;
}

RationalMatrix cosecant_subspace(const std::vector<Rational>& points, int n) {
    require_distinct(points, "cosecant_subspace");
    const int k = static_cast<int>(points.size());
    if (k >= n) throw std::invalid_argument("cosecant_subspace needs fewer than n points");
    const UniPoly base = UniPoly::from_roots(points);
    RationalMatrix out;
    for (int l = 0; l < n - k; ++l) {
        RationalVector row(static_cast<std::size_t>(n));
        const auto c = (base * UniPoly::monomial(1, static_cast<unsigned>(l))).coeffs();
        std::copy(c.begin(), c.end(), row.begin());
        out.push_back(std::move(row));
    }
    return out;
}

namespace {

UniPoly poly_det(const std::vector<std::vector<UniPoly>>& a, std::size_t row, unsigned used) {
    const std::size_t n = a.size();
    if (row == n) return UniPoly::constant(1);
    UniPoly acc;
    int sign = 1;
    for (std::size_t c = 0; c < n; ++c) {
        if (used & (1u << c)) continue;
        if (!a[row][c].is_zero()) {
            UniPoly t = a[row][c] * poly_det(a, row + 1, used | (1u << c));
            acc += sign > 0 ? t : -t;
        }
        sign = -sign;
    }
    return acc;
}

}  // namespace

UniPoly discrete_wronskian(const std::vector<UniPoly>& fs, const Rational& h) {
    if (fs.empty()) throw std::invalid_argument("discrete_wronskian needs at least one polynomial");
    if (h == 0) throw std::invalid_argument("discrete_wronskian: step h = 0 is degenerate; use wronskian");
    const std::size_t k = fs.size();
    std::vector<std::vector<UniPoly>> a(k, std::vector<UniPoly>(k));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) a[i][j] = fs[i].shifted(h * static_cast<long>(j));
    return poly_det(a, 0, 0);
}

UniPoly wronskian(const std::vector<UniPoly>& fs) {
    if (fs.empty()) throw std::invalid_argument("wronskian needs at least one polynomial");
    const std::size_t k = fs.size();
    std::vector<std::vector<UniPoly>> a(k, std::vector<UniPoly>(k));
    for (std::size_t i = 0; i < k; ++i) {
        UniPoly d = fs[i];
        for (std::size_t j = 0; j < k; ++j) {
            a[i][j] = d;
            d = d.derivative();
        }
    }
    return poly_det(a, 0, 0);
}

}  // namespace schubert
