#include "schubert/groebner.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <utility>

namespace schubert {

namespace {

struct Term {
    Monomial m;
    Integer c;
};

using Terms = std::vector<Term>;

class Order {
public:
    Order(TermOrder order, std::size_t nvars) : order_(order), nvars_(nvars) {}

    // > 0 iff a > b.
    int compare(const Monomial& a, const Monomial& b) const {
        if (order_.kind == TermOrderKind::Grevlex) return Monomial::compare_grevlex(a, b, nvars_);
        const std::size_t k = order_.kept;
        const unsigned da = a.degree() - a[k], db = b.degree() - b[k];
        if (da != db) return da > db ? 1 : -1;
        for (std::size_t i = nvars_; i-- > 0;) {
            if (i == k) continue;
            if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
        }
        if (a[k] != b[k]) return a[k] > b[k] ? 1 : -1;
        return 0;
    }

    std::size_t nvars() const { return nvars_; }

private:
    TermOrder order_;
    std::size_t nvars_;
};

struct Poly {
    Terms terms;  // strictly decreasing in the active order
    unsigned sugar = 0;

    const Monomial& lm() const { return terms.front().m; }
    const Integer& lc() const { return terms.front().c; }
};

Integer content(const Terms& t) {
    Integer g(0);
    for (const auto& term : t) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), term.c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

// Divides out the content and makes the leading coefficient positive; returns the
// rational factor f with (new terms) = f * (old terms).
Rational make_primitive(Terms& t) {
    if (t.empty()) return Rational(1);
    Integer g = content(t);
    if (t.front().c < 0) g = -g;
    if (g != 1)
        for (auto& term : t) mpz_divexact(term.c.get_mpz_t(), term.c.get_mpz_t(), g.get_mpz_t());
    Rational f(Integer(1), g);
    f.canonicalize();
    return f;
}

Terms from_multipoly(const MultiPoly& p, const Order& ord) {
    Integer l(1);
    for (const auto& [m, c] : p.terms()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
    Terms t;
    t.reserve(p.size());
    for (const auto& [m, c] : p.terms()) t.push_back({m, Integer(c * l)});
    std::sort(t.begin(), t.end(), [&](const Term& a, const Term& b) { return ord.compare(a.m, b.m) > 0; });
    make_primitive(t);
    return t;
}

MultiPoly to_multipoly_monic(const Terms& t, std::size_t nvars) {
    MultiPoly p(nvars);
    if (t.empty()) return p;
    const Integer& lc = t.front().c;
    for (const auto& term : t) {
        Rational c(term.c, lc);
        c.canonicalize();
        p.add_term(term.m, c);
    }
    return p;
}

// out = a * p[from..] - c * mult * g[1..]; both inputs sorted decreasing.
void combine(Terms& out, const Terms& p, std::size_t from, const Integer& a, const Integer& c, const Monomial& mult,
             const Terms& g, const Order& ord) {
    out.clear();
    out.reserve(p.size() - from + g.size());
    std::size_t i = from, j = 1;
    Integer tmp;
    while (i < p.size() || j < g.size()) {
        int cmp;
        Monomial gm;
        if (j < g.size()) gm = g[j].m * mult;
        if (i >= p.size()) cmp = -1;
        else if (j >= g.size()) cmp = 1;
        else cmp = ord.compare(p[i].m, gm);
        if (cmp > 0) {
            out.push_back({p[i].m, p[i].c * a});
            ++i;
        } else if (cmp < 0) {
            out.push_back({gm, -(g[j].c * c)});
            ++j;
        } else {
            tmp = p[i].c * a - g[j].c * c;
            if (tmp != 0) out.push_back({gm, tmp});
            ++i;
            ++j;
        }
    }
}

class Reducer {
public:
    Reducer(const Order& ord) : ord_(ord) {}

    void set_basis(std::vector<const Poly*> basis) { basis_ = std::move(basis); }

    const Poly* find(const Monomial& m, const Poly* exclude = nullptr) const {
        const Poly* best = nullptr;
        for (const Poly* g : basis_) {
            if (g == exclude || !g->lm().divides(m)) continue;
            if (!best || g->terms.size() < best->terms.size()) best = g;
        }
        return best;
    }

    // Full reduction. Returns r with r = factor * p (mod the basis), r primitive.
    Terms reduce(Terms p, Rational* factor = nullptr, const Poly* exclude = nullptr, bool keep_lead = false) const {
        Rational f(1);
        Terms done;
        Terms work = std::move(p), next;
        std::size_t pos = 0;
        unsigned steps = 0;
        Integer g, a, c;
        if (keep_lead && !work.empty()) {
            done.push_back(std::move(work.front()));
            pos = 1;
        }
        while (pos < work.size()) {
            const Term& lead = work[pos];
            const Poly* red = find(lead.m, exclude);
            if (!red) {
                done.push_back(std::move(work[pos]));
                ++pos;
                continue;
            }
            mpz_gcd(g.get_mpz_t(), red->lc().get_mpz_t(), lead.c.get_mpz_t());
            mpz_divexact(a.get_mpz_t(), red->lc().get_mpz_t(), g.get_mpz_t());
            mpz_divexact(c.get_mpz_t(), lead.c.get_mpz_t(), g.get_mpz_t());
            if (a < 0) {
                a = -a;
                c = -c;
            }
            const Monomial mult = lead.m.quotient(red->lm());
            combine(next, work, pos + 1, a, c, mult, red->terms, ord_);
            std::swap(work, next);
            pos = 0;
            if (a != 1) {
                for (auto& t : done) t.c *= a;
                f *= a;
            }
            if (++steps % 16 == 0) {
                // Keep coefficient growth in check.
                Integer cg = content(done);
                for (const auto& t : work) {
                    if (cg == 1) break;
                    mpz_gcd(cg.get_mpz_t(), cg.get_mpz_t(), t.c.get_mpz_t());
                }
                if (cg > 1) {
                    for (auto& t : done) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), cg.get_mpz_t());
                    for (auto& t : work) mpz_divexact(t.c.get_mpz_t(), t.c.get_mpz_t(), cg.get_mpz_t());
                    f /= cg;
                }
            }
        }
        f *= make_primitive(done);
        if (factor) *factor = f;
        return done;
    }

private:
    const Order& ord_;
    std::vector<const Poly*> basis_;
};

struct Pair {
    std::size_t i, j;
    Monomial lcm;
    unsigned sugar;
};

class Buchberger {
public:
    Buchberger(std::size_t nvars, TermOrder order) : ord_(order, nvars), reducer_(ord_) {}

    void run(const std::vector<MultiPoly>& gens) {
        std::vector<Poly> inputs;
        for (const auto& g : gens) {
            if (g.num_variables() != ord_.nvars()) throw std::invalid_argument("generators have mixed variable counts");
            Terms t = from_multipoly(g, ord_);
            if (t.empty()) continue;
            inputs.push_back({std::move(t), static_cast<unsigned>(g.total_degree())});
        }
        std::stable_sort(inputs.begin(), inputs.end(), [](const Poly& a, const Poly& b) { return a.sugar < b.sugar; });
        for (auto& in : inputs) {
            refresh_reducer();
            Terms r = reducer_.reduce(std::move(in.terms));
            if (r.empty()) continue;
            add(Poly{std::move(r), in.sugar});
            if (is_unit()) return;
        }
        while (!pairs_.empty()) {
            auto best = std::min_element(pairs_.begin(), pairs_.end(), [&](const Pair& a, const Pair& b) {
                if (a.sugar != b.sugar) return a.sugar < b.sugar;
                return ord_.compare(a.lcm, b.lcm) < 0;
            });
            Pair p = *best;
            *best = pairs_.back();
            pairs_.pop_back();
            Terms s = spoly(polys_[p.i], polys_[p.j], p.lcm);
            refresh_reducer();
            Terms r = reducer_.reduce(std::move(s));
            if (r.empty()) continue;
            add(Poly{std::move(r), p.sugar});
            if (is_unit()) return;
        }
    }

    // Minimal, tail-reduced basis with primitive positive-lead elements.
    std::vector<Poly> reduced_basis() {
        if (is_unit()) {
            Poly one;
            one.terms.push_back({Monomial{}, Integer(1)});
            return {one};
        }
        std::vector<Poly> out;
        for (std::size_t idx : active_) out.push_back(polys_[idx]);
        std::sort(out.begin(), out.end(), [&](const Poly& a, const Poly& b) { return ord_.compare(a.lm(), b.lm()) < 0; });
        std::vector<const Poly*> ptrs;
        for (const auto& p : out) ptrs.push_back(&p);
        Reducer red(ord_);
        red.set_basis(ptrs);
        std::vector<Poly> reduced;
        for (const auto& p : out) reduced.push_back({red.reduce(p.terms, nullptr, &p, true), p.sugar});
        return reduced;
    }

    const Order& order() const { return ord_; }

private:
    bool is_unit() const { return unit_; }

    void refresh_reducer() {
        std::vector<const Poly*> basis;
        basis.reserve(active_.size());
        for (std::size_t idx : active_) basis.push_back(&polys_[idx]);
        reducer_.set_basis(std::move(basis));
    }

    Terms spoly(const Poly& f, const Poly& g, const Monomial& lcm) const {
        Integer d, a, b;
        mpz_gcd(d.get_mpz_t(), f.lc().get_mpz_t(), g.lc().get_mpz_t());
        mpz_divexact(a.get_mpz_t(), g.lc().get_mpz_t(), d.get_mpz_t());
        mpz_divexact(b.get_mpz_t(), f.lc().get_mpz_t(), d.get_mpz_t());
        // a * (lcm / lm f) * f - b * (lcm / lm g) * g
        const Monomial mf = lcm.quotient(f.lm());
        const Monomial mg = lcm.quotient(g.lm());
        Terms fm;
        fm.reserve(f.terms.size());
        for (const auto& t : f.terms) fm.push_back({t.m * mf, t.c});
        Terms out;
        combine(out, fm, 1, a, b, mg, g.terms, ord_);
        make_primitive(out);
        return out;
    }

    void add(Poly h) {
        if (h.lm().is_one()) unit_ = true;
        polys_.push_back(std::move(h));
        const std::size_t hi = polys_.size() - 1;
        const Poly& hp = polys_[hi];
        const Monomial& hl = hp.lm();

        auto make_pair = [&](std::size_t gi) {
            const Poly& g = polys_[gi];
            Monomial l = hl.lcm(g.lm());
            const unsigned s1 = hp.sugar + l.degree() - hl.degree();
            const unsigned s2 = g.sugar + l.degree() - g.lm().degree();
            return Pair{gi, hi, l, std::max(s1, s2)};
        };

        std::vector<Pair> c;
        for (std::size_t gi : active_) c.push_back(make_pair(gi));
        std::vector<Pair> d;
        for (std::size_t k = 0; k < c.size(); ++k) {
            const Pair& p = c[k];
            bool keep = hl.coprime(polys_[p.i].lm());
            if (!keep) {
                keep = true;
                for (std::size_t q = k + 1; q < c.size() && keep; ++q)
                    if (c[q].lcm.divides(p.lcm)) keep = false;
                for (std::size_t q = 0; q < d.size() && keep; ++q)
                    if (d[q].lcm.divides(p.lcm)) keep = false;
            }
            if (keep) d.push_back(p);
        }
        std::vector<Pair> kept;
        for (const auto& p : pairs_) {
            const Monomial& l = p.lcm;
            if (!hl.divides(l)) {
                kept.push_back(p);
                continue;
            }
            const Monomial l1 = polys_[p.i].lm().lcm(hl);
            const Monomial l2 = polys_[p.j].lm().lcm(hl);
            if (l1 == l || l2 == l) kept.push_back(p);
        }
        for (const auto& p : d)
            if (!hl.coprime(polys_[p.i].lm())) kept.push_back(p);
        pairs_ = std::move(kept);

        std::vector<std::size_t> active;
        for (std::size_t gi : active_)
            if (!hl.divides(polys_[gi].lm())) active.push_back(gi);
        active.push_back(hi);
        active_ = std::move(active);
    }

    Order ord_;
    Reducer reducer_;
    std::vector<Poly> polys_;
    std::vector<std::size_t> active_;
    std::vector<Pair> pairs_;
    bool unit_ = false;
};

using RVec = std::vector<Rational>;

}  // namespace

std::vector<MultiPoly> groebner_basis(const std::vector<MultiPoly>& generators, TermOrder order) {
    if (generators.empty()) return {};
    const std::size_t n = generators.front().num_variables();
    Buchberger bb(n, order);
    bb.run(generators);
    std::vector<MultiPoly> out;
    for (const auto& p : bb.reduced_basis())
        if (!p.terms.empty()) out.push_back(to_multipoly_monic(p.terms, n));
    return out;
}

// --- quotient ring -----------------------------------------------------------

struct QuotientRing::Impl {
    std::size_t nvars = 0;
    Order order{TermOrder{}, 0};
    std::vector<Poly> basis;
    bool trivial = false;
    bool zero_dim = false;
    std::vector<Monomial> standard;  // increasing in grevlex
    std::map<Monomial, std::size_t> index;

    bool is_standard(const Monomial& m) const {
        for (const auto& g : basis)
            if (g.lm().divides(m)) return false;
        return true;
    }

    void enumerate_standard() {
        // Finite iff every variable has a pure power among the leading monomials.
        for (std::size_t v = 0; v < nvars; ++v) {
            bool found = false;
            for (const auto& g : basis) {
                const Monomial& m = g.lm();
                if (m.degree() > 0 && m[v] == m.degree()) found = true;
            }
            if (!found) return;
        }
        zero_dim = true;
        std::vector<Monomial> frontier{Monomial{}};
        std::map<Monomial, bool> seen;
        seen[Monomial{}] = true;
        while (!frontier.empty()) {
            std::vector<Monomial> next;
            for (const auto& m : frontier) {
                standard.push_back(m);
                for (std::size_t v = 0; v < nvars; ++v) {
                    Monomial mv = m * Monomial::variable(v);
                    if (seen.count(mv)) continue;
                    seen[mv] = true;
                    if (is_standard(mv)) next.push_back(mv);
                }
            }
            frontier = std::move(next);
        }
        std::sort(standard.begin(), standard.end(),
                  [&](const Monomial& a, const Monomial& b) { return order.compare(a, b) < 0; });
        for (std::size_t i = 0; i < standard.size(); ++i) index[standard[i]] = i;
    }

    // Normal form of a single monomial as a dense vector over the standard basis.
    RVec normal_form(const Monomial& m) const {
        RVec v(standard.size());
        auto it = index.find(m);
        if (it != index.end()) {
            v[it->second] = 1;
            return v;
        }
        std::vector<const Poly*> ptrs;
        for (const auto& g : basis) ptrs.push_back(&g);
        Reducer red(order);
        red.set_basis(ptrs);
        Rational factor;
        Terms t{{m, Integer(1)}};
        Terms r = red.reduce(std::move(t), &factor);
        for (const auto& term : r) v[index.at(term.m)] = Rational(term.c) / factor;
        return v;
    }

    std::vector<RVec> multiplication_matrix(std::size_t var) const {
        // columns[j] = coordinates of x_var * standard[j]
        std::vector<RVec> cols;
        cols.reserve(standard.size());
        const Monomial x = Monomial::variable(var);
        for (const auto& b : standard) cols.push_back(normal_form(b * x));
        return cols;
    }

    struct Krylov {
        // Echelonized vectors w_j = sum_i comb_j[i] v_i with pivot positions.
        std::vector<RVec> w, comb;
        std::vector<std::size_t> pivot;
        std::vector<Rational> relation;  // monic minimal polynomial coefficients
    };

    Krylov krylov(std::size_t var) const {
        const std::size_t dim = standard.size();
        const auto mat = multiplication_matrix(var);
        Krylov k;
        RVec v(dim);
        v[index.at(Monomial{})] = 1;
        for (std::size_t step = 0; step <= dim; ++step) {
            RVec w = v;
            RVec comb(step + 1);
            comb[step] = 1;
            for (std::size_t j = 0; j < k.w.size(); ++j) {
                const Rational& wp = w[k.pivot[j]];
                if (wp == 0) continue;
                const Rational f = wp / k.w[j][k.pivot[j]];
                for (std::size_t i = 0; i < dim; ++i)
                    if (k.w[j][i] != 0) w[i] -= f * k.w[j][i];
                for (std::size_t i = 0; i < k.comb[j].size(); ++i) comb[i] -= f * k.comb[j][i];
            }
            auto nz = std::find_if(w.begin(), w.end(), [](const Rational& q) { return q != 0; });
            if (nz == w.end()) {
                k.relation = std::move(comb);
                return k;
            }
            k.pivot.push_back(static_cast<std::size_t>(nz - w.begin()));
            k.w.push_back(std::move(w));
            k.comb.push_back(std::move(comb));
            // v <- M v
            RVec nv(dim);
            for (std::size_t j = 0; j < dim; ++j) {
                if (v[j] == 0) continue;
                for (std::size_t i = 0; i < dim; ++i)
                    if (mat[j][i] != 0) nv[i] += mat[j][i] * v[j];
            }
            v = std::move(nv);
        }
        throw std::logic_error("Krylov sequence did not terminate");
    }
};

QuotientRing::QuotientRing(const std::vector<MultiPoly>& generators) : impl_(std::make_unique<Impl>()) {
    if (generators.empty()) throw std::invalid_argument("QuotientRing: no generators");
    impl_->nvars = generators.front().num_variables();
    impl_->order = Order(TermOrder{}, impl_->nvars);
    Buchberger bb(impl_->nvars, TermOrder{});
    bb.run(generators);
    impl_->basis = bb.reduced_basis();
    impl_->trivial = impl_->basis.size() == 1 && impl_->basis.front().lm().is_one();
    if (impl_->trivial) {
        impl_->zero_dim = true;
        return;
    }
    impl_->enumerate_standard();
}

QuotientRing::~QuotientRing() = default;
QuotientRing::QuotientRing(QuotientRing&&) noexcept = default;
QuotientRing& QuotientRing::operator=(QuotientRing&&) noexcept = default;

std::size_t QuotientRing::num_variables() const { return impl_->nvars; }
bool QuotientRing::is_zero_dimensional() const { return impl_->zero_dim; }
bool QuotientRing::is_trivial() const { return impl_->trivial; }

std::size_t QuotientRing::dimension() const {
    if (!impl_->zero_dim) throw std::logic_error("QuotientRing::dimension: ideal is not zero-dimensional");
    return impl_->standard.size();
}

UniPoly QuotientRing::minimal_polynomial(std::size_t var) const {
    if (var >= impl_->nvars) throw std::out_of_range("variable index out of range");
    if (!impl_->zero_dim) throw std::logic_error("QuotientRing::minimal_polynomial: ideal is not zero-dimensional");
    if (impl_->trivial) return UniPoly::constant(1);
    return UniPoly(impl_->krylov(var).relation);
}

std::optional<std::vector<UniPoly>> QuotientRing::shape_representation(std::size_t var) const {
    if (!impl_->zero_dim || impl_->trivial) return std::nullopt;
    const auto k = impl_->krylov(var);
    const std::size_t dim = impl_->standard.size();
    if (k.relation.size() != dim + 1) return std::nullopt;
    std::vector<UniPoly> out;
    for (std::size_t j = 0; j < impl_->nvars; ++j) {
        RVec w = impl_->normal_form(Monomial::variable(j));
        RVec comb(dim);
        for (std::size_t q = 0; q < k.w.size(); ++q) {
            const Rational& wp = w[k.pivot[q]];
            if (wp == 0) continue;
            const Rational f = wp / k.w[q][k.pivot[q]];
            for (std::size_t i = 0; i < dim; ++i)
                if (k.w[q][i] != 0) w[i] -= f * k.w[q][i];
            for (std::size_t i = 0; i < k.comb[q].size(); ++i) comb[i] += f * k.comb[q][i];
        }
        out.emplace_back(std::move(comb));
    }
    return out;
}

std::vector<MultiPoly> QuotientRing::basis() const {
    std::vector<MultiPoly> out;
    for (const auto& p : impl_->basis) out.push_back(to_multipoly_monic(p.terms, impl_->nvars));
    return out;
}

// --- elimination ---------------------------------------------------------------

Eliminant eliminate_to_univariate(const std::vector<MultiPoly>& generators, std::size_t keep) {
    if (generators.empty()) throw std::invalid_argument("eliminate_to_univariate: no generators");
    const std::size_t n = generators.front().num_variables();
    for (const auto& g : generators)
        if (g.num_variables() != n) throw std::invalid_argument("eliminate_to_univariate: mixed variable counts");
    if (keep >= n) throw std::out_of_range("eliminate_to_univariate: kept variable out of range");

    QuotientRing ring(generators);
    if (ring.is_zero_dimensional()) return {ring.minimal_polynomial(keep).monic(), {}};

    // Positive-dimensional: a block-order basis still exposes I ∩ Q[x_keep].
    const auto gb = groebner_basis(generators, TermOrder{TermOrderKind::EliminateAllBut, keep});
    for (const auto& g : gb)
        if (g.only_uses(keep)) return {g.to_univariate(keep).monic(), {}};
    return {std::nullopt, "not zero-dimensional in kept variable"};
}

}  // namespace schubert
