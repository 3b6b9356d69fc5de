#include "schubert/harness.hpp"

#include "schubert/overlap.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace schubert {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// mt19937_64 output is fixed by the standard; the bounded draws and shuffles
// are done here so results do not depend on the library's distributions.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : gen_(seed) {}

    std::uint64_t below(std::uint64_t n) {
        const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
        std::uint64_t v;
        do v = gen_();
        while (v >= limit);
        return v % n;
    }

    long between(long lo, long hi) { return lo + static_cast<long>(below(static_cast<std::uint64_t>(hi - lo) + 1)); }

    template <class T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
    }

private:
    std::mt19937_64 gen_;
};

long ceil_div(const Rational& q) {
    mpz_class r;
    mpz_cdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

long floor_div(const Rational& q) {
    mpz_class r;
    mpz_fdiv_q(r.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
    return r.get_si();
}

// Distinct integers in [lo, hi], skipping 0 when asked, in draw order.
std::vector<long> draw_distinct(Rng& rng, std::size_t count, long lo, long hi, bool skip_zero) {
    std::set<long> seen;
    std::vector<long> out;
    while (out.size() < count) {
        const long v = rng.between(lo, hi);
        if (skip_zero && v == 0) continue;
        if (seen.insert(v).second) out.push_back(v);
    }
    return out;
}

struct Layout {
    std::vector<std::size_t> osc;     // osculating conditions (∞ first)
    std::vector<std::size_t> secant;  // everything else
    std::vector<std::size_t> need;    // points per condition
    std::size_t total = 0;
    long ilo = 0, ihi = 0;
};

Layout layout(const ExperimentConfig& c) {
    Layout l;
    l.osc = osculating_conditions(c);
    for (std::size_t j = 0; j < c.problem.conditions.size(); ++j) {
        const bool is_osc = std::find(l.osc.begin(), l.osc.end(), j) != l.osc.end();
        l.need.push_back(is_osc ? 0 : static_cast<std::size_t>(relevant_dimension(c.problem.conditions[j], c.problem.k, c.problem.n)));
        if (!is_osc) {
            l.secant.push_back(j);
            l.total += l.need.back();
        }
    }
    l.ilo = ceil_div(c.point_lo * c.denominator);
    l.ihi = floor_div(c.point_hi * c.denominator);
    return l;
}

Instance assemble(const ExperimentConfig& c, const Layout& l, const std::vector<std::vector<long>>& points) {
    Instance inst;
    inst.problem = c.problem;
    const int n = c.problem.n;
    for (std::size_t j = 0; j < c.problem.conditions.size(); ++j) {
        if (!l.osc.empty() && j == l.osc[0]) {
            inst.flags.push_back(FlagSpec::osculating(CurvePoint::infinity(), n));
        } else if (l.osc.size() > 1 && j == l.osc[1]) {
            inst.flags.push_back(FlagSpec::osculating(Rational(0), n));
        } else {
            std::vector<long> mine = points[j];
            std::sort(mine.begin(), mine.end());
            std::vector<Rational> pts;
            for (long v : mine) {
                Rational r(v, c.denominator);
                r.canonicalize();
                pts.push_back(r);
            }
            inst.flags.push_back(FlagSpec::secant(pts, n));
        }
    }
    if (l.osc.size() == 1) inst.chart = Chart::one_osculating(static_cast<int>(l.osc[0]));
    if (l.osc.size() == 2) inst.chart = Chart::two_osculating(static_cast<int>(l.osc[0]), static_cast<int>(l.osc[1]));
    return inst;
}

Instance shuffled_instance(const ExperimentConfig& c, const Layout& l, Rng& rng) {
    auto pts = draw_distinct(rng, l.total, l.ilo, l.ihi, l.osc.size() > 1);
    rng.shuffle(pts);
    std::vector<std::vector<long>> by(c.problem.conditions.size());
    std::size_t at = 0;
    for (std::size_t j : l.secant) {
        by[j].assign(pts.begin() + static_cast<long>(at), pts.begin() + static_cast<long>(at + l.need[j]));
        at += l.need[j];
    }
    return assemble(c, l, by);
}

Instance disjoint_instance(const ExperimentConfig& c, const Layout& l, Rng& rng) {
    // Blocks in random order along the line; with an anchor at 0 it is one more
    // block, and ∞ closes the circle.
    constexpr std::size_t kZero = static_cast<std::size_t>(-1);
    std::vector<std::size_t> order = l.secant;
    if (l.osc.size() > 1) order.push_back(kZero);
    rng.shuffle(order);
    std::size_t below_zero = 0;
    bool before = true;
    for (std::size_t j : order) {
        if (j == kZero) before = false;
        else if (before && l.osc.size() > 1) below_zero += l.need[j];
    }
    std::vector<long> pts;
    if (l.osc.size() > 1) {
        pts = draw_distinct(rng, below_zero, l.ilo, -1, false);
        const auto above = draw_distinct(rng, l.total - below_zero, 1, l.ihi, false);
        pts.insert(pts.end(), above.begin(), above.end());
    } else {
        pts = draw_distinct(rng, l.total, l.ilo, l.ihi, false);
    }
    std::sort(pts.begin(), pts.end());
    std::vector<std::vector<long>> by(c.problem.conditions.size());
    std::size_t at = 0;
    for (std::size_t j : order) {
        if (j == kZero) continue;
        by[j].assign(pts.begin() + static_cast<long>(at), pts.begin() + static_cast<long>(at + l.need[j]));
        at += l.need[j];
    }
    return assemble(c, l, by);
}

struct InstanceResult {
    bool ok = false;
    unsigned real = 0, overlap = 0;
    std::string reason;
};

InstanceResult run_one(const ExperimentConfig& c, std::size_t index) {
    InstanceResult r;
    try {
        const Instance inst = generate_instance(c, index);
        r.overlap = overlap_for_instance(inst.problem, inst.flags);
        SolveOutcome o;
        if (is_gap_family(inst.problem)) {
            const GapOutcome g = solve_gap_instance(inst, c.verify_gap);
            o = g.outcome;
            if (o.certified() && c.verify_gap && !g.verification_agrees()) {
                r.reason = "gap verification disagrees";
                return r;
            }
        } else {
            o = solve_instance(inst);
        }
        if (!o.certified()) {
            r.reason = o.failure;
            return r;
        }
        r.ok = true;
        r.real = o.real_count;
    } catch (const std::exception& e) {
        r.reason = e.what();
    }
    return r;
}

}  // namespace

SamplingMode SamplingMode::parse(std::string_view text) {
    if (text == "disjoint") return {SamplingKind::DisjointIntervals, 0};
    if (text == "shuffle") return {SamplingKind::UniformShuffle, 0};
    if (text.substr(0, 8) == "overlap=") {
        const std::string num(text.substr(8));
        if (num.empty() || num.find_first_not_of("0123456789") != std::string::npos)
            throw std::invalid_argument("bad overlap target in '" + std::string(text) + "'");
        return {SamplingKind::TargetOverlap, static_cast<unsigned>(std::stoul(num))};
    }
    throw std::invalid_argument("unknown sampling mode '" + std::string(text) + "' (disjoint, shuffle, overlap=K)");
}

std::string SamplingMode::to_string() const {
    switch (kind) {
        case SamplingKind::DisjointIntervals: return "disjoint";
        case SamplingKind::UniformShuffle: return "shuffle";
        case SamplingKind::TargetOverlap: return "overlap=" + std::to_string(target);
    }
    return "?";
}

void validate_config(const ExperimentConfig& c) {
    make_problem(c.problem.k, c.problem.n, c.problem.conditions);
    if (c.computation_type < 1 || c.computation_type > 3) throw std::invalid_argument("computation type must be 1, 2 or 3");
    if (static_cast<std::size_t>(c.computation_type - 1) > c.problem.conditions.size())
        throw std::invalid_argument("more osculating flags than conditions");
    if (c.instance_count == 0) throw std::invalid_argument("instance count must be positive");
    if (c.worker_count == 0) throw std::invalid_argument("worker count must be positive");
    if (c.denominator <= 0) throw std::invalid_argument("denominator must be positive");
    if (!(c.point_lo < c.point_hi)) throw std::invalid_argument("empty point range");
    const Layout l = layout(c);
    if (c.computation_type == 3 && !(l.ilo < 0 && l.ihi > 0)) throw std::invalid_argument("computation type 3 needs 0 inside the point range");
    const long available = l.ihi - l.ilo + 1 - (c.computation_type == 3 ? 1 : 0);
    if (available < static_cast<long>(l.total)) throw std::invalid_argument("point range too small for " + std::to_string(l.total) + " distinct points");
    if (c.computation_type == 3 && c.mode.kind == SamplingKind::DisjointIntervals && (-l.ilo < static_cast<long>(l.total) || l.ihi < static_cast<long>(l.total)))
        throw std::invalid_argument("point range too small on one side of 0");
    if (c.computation_type >= 2) {
        Instance probe = assemble(c, l, std::vector<std::vector<long>>(c.problem.conditions.size()));
        chart_pattern(probe.problem, probe.chart);
    }
}

std::vector<std::size_t> osculating_conditions(const ExperimentConfig& c) {
    std::vector<std::size_t> idx(c.problem.conditions.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](std::size_t a, std::size_t b) { return c.problem.conditions[a].size() > c.problem.conditions[b].size(); });
    idx.resize(static_cast<std::size_t>(std::max(0, c.computation_type - 1)));
    return idx;
}

std::uint64_t instance_seed(std::uint64_t seed, std::size_t index) { return splitmix64(seed ^ static_cast<std::uint64_t>(index)); }

Instance generate_instance(const ExperimentConfig& c, std::size_t index) {
    validate_config(c);
    const Layout l = layout(c);
    Rng rng(instance_seed(c.seed, index));
    switch (c.mode.kind) {
        case SamplingKind::DisjointIntervals: return disjoint_instance(c, l, rng);
        case SamplingKind::UniformShuffle: return shuffled_instance(c, l, rng);
        case SamplingKind::TargetOverlap:
            for (unsigned attempt = 0; attempt < c.rejection_budget; ++attempt) {
                Instance inst = shuffled_instance(c, l, rng);
                if (overlap_for_instance(inst.problem, inst.flags) == c.mode.target) return inst;
            }
            throw std::runtime_error("overlap " + std::to_string(c.mode.target) + " not reached within the rejection budget of " +
                                     std::to_string(c.rejection_budget) + " samples");
    }
    throw std::logic_error("unreachable");
}

std::size_t FrequencyTable::certified() const {
    std::size_t s = 0;
    for (const auto& [key, count] : cells) s += count;
    return s;
}

FrequencyTable run_experiment(const ExperimentConfig& c) {
    validate_config(c);
    const auto start = std::chrono::steady_clock::now();
    std::vector<InstanceResult> results(c.instance_count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < c.instance_count; i = next++) results[i] = run_one(c, c.first_index + i);
    };
    const unsigned workers = static_cast<unsigned>(std::min<std::size_t>(c.worker_count, c.instance_count));
    if (workers <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }

    FrequencyTable t;
    t.problem = c.problem.to_string();
    t.degree = static_cast<unsigned>(problem_degree(c.problem).get_ui());
    t.computation_type = c.computation_type;
    t.instance_count = c.instance_count;
    for (const auto& r : results) {
        if (r.ok) {
            ++t.cells[{r.real, r.overlap}];
        } else {
            ++t.failures;
            ++t.failure_reasons[r.reason];
        }
    }
    const double wall = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    t.runs.push_back({c.mode.to_string(), c.seed, c.first_index, c.instance_count, wall});
    return t;
}

FrequencyTable merge_tables(const FrequencyTable& a, const FrequencyTable& b) {
    if (a.problem.empty() && a.instance_count == 0) return b;
    if (b.problem.empty() && b.instance_count == 0) return a;
    if (a.problem != b.problem || a.computation_type != b.computation_type)
        throw std::invalid_argument("cannot merge tables of '" + a.problem + "' (type " + std::to_string(a.computation_type) + ") and '" +
                                    b.problem + "' (type " + std::to_string(b.computation_type) + ")");
    FrequencyTable t = a;
    for (const auto& [key, count] : b.cells) t.cells[key] += count;
    t.instance_count += b.instance_count;
    t.failures += b.failures;
    for (const auto& [why, count] : b.failure_reasons) t.failure_reasons[why] += count;
    t.runs.insert(t.runs.end(), b.runs.begin(), b.runs.end());
    return t;
}

std::string export_table(const FrequencyTable& t, TableFormat f) {
    if (f == TableFormat::Csv) {
        std::string out = "real_solutions,overlap,count\n";
        for (const auto& [key, count] : t.cells)
            out += std::to_string(key.first) + "," + std::to_string(key.second) + "," + std::to_string(count) + "\n";
        return out;
    }
    nlohmann::json j;
    j["problem"] = t.problem;
    j["degree"] = t.degree;
    j["computation_type"] = t.computation_type;
    j["instance_count"] = t.instance_count;
    j["failures"] = t.failures;
    j["failure_reasons"] = t.failure_reasons;
    j["cells"] = nlohmann::json::array();
    for (const auto& [key, count] : t.cells) j["cells"].push_back({{"real_solutions", key.first}, {"overlap", key.second}, {"count", count}});
    j["runs"] = nlohmann::json::array();
    for (const auto& r : t.runs)
        j["runs"].push_back({{"sampling", r.sampling},
                             {"seed", r.seed},
                             {"first_index", r.first_index},
                             {"instance_count", r.instance_count},
                             {"wall_seconds", r.wall_seconds}});
    return j.dump(2) + "\n";
}

FrequencyTable parse_table(std::string_view text, TableFormat f) {
    FrequencyTable t;
    if (f == TableFormat::Csv) {
        std::istringstream in{std::string(text)};
        std::string line;
        if (!std::getline(in, line) || line != "real_solutions,overlap,count") throw std::invalid_argument("CSV table: bad header");
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            unsigned real = 0, overlap = 0;
            std::size_t count = 0;
            char c1 = 0, c2 = 0;
            std::istringstream row(line);
            if (!(row >> real >> c1 >> overlap >> c2 >> count) || c1 != ',' || c2 != ',' || !row.eof())
                throw std::invalid_argument("CSV table: bad row '" + line + "'");
            t.cells[{real, overlap}] += count;
            t.instance_count += count;
        }
        return t;
    }
    try {
        const auto j = nlohmann::json::parse(text);
        t.problem = j.at("problem").get<std::string>();
        t.degree = j.at("degree").get<unsigned>();
        t.computation_type = j.at("computation_type").get<int>();
        t.instance_count = j.at("instance_count").get<std::size_t>();
        t.failures = j.at("failures").get<std::size_t>();
        t.failure_reasons = j.at("failure_reasons").get<std::map<std::string, std::size_t>>();
        for (const auto& cell : j.at("cells"))
            t.cells[{cell.at("real_solutions").get<unsigned>(), cell.at("overlap").get<unsigned>()}] = cell.at("count").get<std::size_t>();
        for (const auto& r : j.at("runs"))
            t.runs.push_back({r.at("sampling").get<std::string>(), r.at("seed").get<std::uint64_t>(), r.at("first_index").get<std::size_t>(),
                              r.at("instance_count").get<std::size_t>(), r.at("wall_seconds").get<double>()});
    } catch (const nlohmann::json::exception& e) {
        throw std::invalid_argument(std::string("JSON table: ") + e.what());
    }
    return t;
}

}  // namespace schubert
