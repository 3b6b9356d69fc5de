#include "schubert/upoly.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace schubert {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly::UniPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly(std::vector<Rational>{c}); }

UniPoly UniPoly::monomial(const Rational& c, unsigned degree) {
    std::vector<Rational> v(degree + 1);
    v[degree] = c;
    return UniPoly(std::move(v));
}

UniPoly UniPoly::from_roots(const std::vector<Rational>& roots) {
    UniPoly p = constant(1);
    for (const auto& r : roots) p *= UniPoly{-r, 1};
    return p;
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational UniPoly::operator()(const Rational& x) const {
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

UniPoly UniPoly::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Rational> d(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) d[i - 1] = coeffs_[i] * static_cast<unsigned long>(i);
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return {};
    UniPoly r = *this;
    const Rational lc = leading();
    for (auto& c : r.coeffs_) c /= lc;
    return r;
}

UniPoly UniPoly::shifted(const Rational& h) const {
    // Horner in the polynomial ring: p(x+h) = (...(a_d (x+h) + a_{d-1})(x+h) ...)
    UniPoly acc;
    const UniPoly lin{h, 1};
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc *= lin;
        acc += constant(*it);
    }
    return acc;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
    for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& o) {
    if (is_zero() || o.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    std::vector<Rational> r(coeffs_.size() + o.coeffs_.size() - 1);
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) r[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    coeffs_ = std::move(r);
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& c) {
    if (c == 0) {
        coeffs_.clear();
        return *this;
    }
    for (auto& x : coeffs_) x *= c;
    return *this;
}

std::string UniPoly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Rational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        Rational a = abs(c);
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const bool unit = (a == 1);
        if (!unit || i == 0) os << a.get_str();
        if (i > 0) {
            if (!unit) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
    if (a.degree() < b.degree()) return {UniPoly{}, a};
    std::vector<Rational> rem = a.coeffs();
    std::vector<Rational> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1));
    const auto& bc = b.coeffs();
    const Rational& lb = b.leading();
    for (int i = a.degree() - b.degree(); i >= 0; --i) {
        const auto top = static_cast<std::size_t>(i + b.degree());
        if (rem[top] == 0) continue;
        Rational q = rem[top] / lb;
        quo[static_cast<std::size_t>(i)] = q;
        for (std::size_t j = 0; j < bc.size(); ++j) rem[static_cast<std::size_t>(i) + j] -= q * bc[j];
    }
    return {UniPoly(std::move(quo)), UniPoly(std::move(rem))};
}

// --- integer polynomial kernels ------------------------------------------

namespace {

using ZPoly = std::vector<Integer>;

void ztrim(ZPoly& p) {
    while (!p.empty() && p.back() == 0) p.pop_back();
}

Integer zcontent(const ZPoly& p) {
    Integer g(0);
    for (const auto& c : p) {
        if (c == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

void zmake_primitive(ZPoly& p) {
    const Integer g = zcontent(p);
    if (g > 1)
        for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

// r = m * a - q * b with deg r < deg b for some integer m != 0 and polynomial q;
// `positive` reports the sign of m.
ZPoly zpseudo_rem(ZPoly a, const ZPoly& b, bool& positive) {
    positive = true;
    const int db = static_cast<int>(b.size()) - 1;
    const Integer& lb = b.back();
    Integer g, mb, ma;
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const Integer& la = a.back();
        mpz_gcd(g.get_mpz_t(), la.get_mpz_t(), lb.get_mpz_t());
        mpz_divexact(mb.get_mpz_t(), lb.get_mpz_t(), g.get_mpz_t());
        mpz_divexact(ma.get_mpz_t(), la.get_mpz_t(), g.get_mpz_t());
        if (mb < 0) positive = !positive;
        for (auto& c : a) c *= mb;
        for (std::size_t j = 0; j < b.size(); ++j) a[static_cast<std::size_t>(shift) + j] -= ma * b[j];
        ztrim(a);
    }
    return a;
}

int zsign_at(const ZPoly& p, const Rational& x) {
    Rational acc(0);
    for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + Rational(*it);
    return sgn(acc);
}

ZPoly to_zpoly(const UniPoly& f) {
    Integer l(1);
    for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    ZPoly p;
    p.reserve(f.coeffs().size());
    for (const auto& c : f.coeffs()) p.push_back(Integer(c * l));
    zmake_primitive(p);
    if (!p.empty() && p.back() < 0)
        for (auto& c : p) c = -c;
    return p;
}

UniPoly from_zpoly(const ZPoly& p) {
    std::vector<Rational> c(p.begin(), p.end());
    return UniPoly(std::move(c));
}

ZPoly zderivative(const ZPoly& p) {
    ZPoly d;
    for (std::size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * static_cast<unsigned long>(i));
    ztrim(d);
    return d;
}

ZPoly zgcd(ZPoly a, ZPoly b) {
    ztrim(a);
    ztrim(b);
    if (a.size() < b.size()) std::swap(a, b);
    zmake_primitive(a);
    zmake_primitive(b);
    while (!b.empty()) {
        bool pos = true;
        ZPoly r = zpseudo_rem(std::move(a), b, pos);
        zmake_primitive(r);
        a = std::move(b);
        b = std::move(r);
    }
    if (!a.empty() && a.back() < 0)
        for (auto& c : a) c = -c;
    return a;
}

int sign_variations(const std::vector<int>& signs) {
    int v = 0, last = 0;
    for (int s : signs) {
        if (s == 0) continue;
        if (last != 0 && s != last) ++v;
        last = s;
    }
    return v;
}

}  // namespace

std::vector<Integer> primitive_integer_form(const UniPoly& f) { return to_zpoly(f); }

UniPoly upoly_gcd(const UniPoly& f, const UniPoly& g) {
    if (f.is_zero() && g.is_zero()) return {};
    if (g.is_zero()) return f.monic();
    if (f.is_zero()) return g.monic();
    return from_zpoly(zgcd(to_zpoly(f), to_zpoly(g))).monic();
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("is_squarefree: undefined for zero polynomial");
    if (f.degree() <= 0) return true;
    return upoly_gcd(f, f.derivative()).degree() == 0;
}

UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw std::domain_error("squarefree_part: undefined for zero polynomial");
    if (f.degree() <= 0) return UniPoly::constant(1);
    const UniPoly g = upoly_gcd(f, f.derivative());
    return divmod(f, g).first.monic();
}

std::vector<std::vector<Integer>> sturm_sequence(const std::vector<Integer>& p) {
    std::vector<ZPoly> seq;
    ZPoly a = p;
    ztrim(a);
    if (a.empty()) throw std::domain_error("sturm_sequence: zero polynomial");
    seq.push_back(a);
    ZPoly b = zderivative(a);
    if (b.empty()) return seq;
    zmake_primitive(b);
    seq.push_back(b);
    while (seq.back().size() > 1) {
        bool positive = true;
        ZPoly r = zpseudo_rem(seq[seq.size() - 2], seq.back(), positive);
        if (r.empty()) break;
        zmake_primitive(r);
        // The chain needs -rem up to a positive factor.
        if (positive)
            for (auto& c : r) c = -c;
        seq.push_back(std::move(r));
    }
    return seq;
}

unsigned count_real_roots(const UniPoly& f, const RealInterval& range) {
    if (f.is_zero()) throw std::domain_error("count_real_roots: zero polynomial");
    if (range.lo && range.hi && *range.lo >= *range.hi) throw std::invalid_argument("count_real_roots: empty interval");
    if (f.degree() == 0) return 0;
    const ZPoly p = to_zpoly(squarefree_part(f));
    const auto seq = sturm_sequence(p);

    auto variations_at = [&](const std::optional<Rational>& x, int side) {
        std::vector<int> s;
        s.reserve(seq.size());
        for (const auto& q : seq) {
            if (x) {
                s.push_back(zsign_at(q, *x));
            } else {
                const int lead = sgn(q.back());
                const bool odd = (q.size() - 1) % 2 == 1;
                s.push_back(side > 0 ? lead : (odd ? -lead : lead));
            }
        }
        return sign_variations(s);
    };
    // V(-inf) - V(x) counts roots in (-inf, x]; subtract a root sitting at hi.
    const int v_lo = variations_at(range.lo, -1);
    const int v_hi = variations_at(range.hi, +1);
    int count = v_lo - v_hi;
    if (range.hi && zsign_at(p, *range.hi) == 0) --count;
    return static_cast<unsigned>(count);
}

}  // namespace schubert
