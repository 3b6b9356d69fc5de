#include "schubert/overlap.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace schubert {

unsigned overlap_number(const PointConfiguration& c) {
    struct Entry {
        CurvePoint p;
        std::size_t group;
        int mult;
    };
    std::vector<Entry> all;
    for (std::size_t g = 0; g < c.size(); ++g) {
        if (c[g].empty()) throw std::invalid_argument("overlap: empty point group");
        for (const auto& wp : c[g]) {
            if (wp.multiplicity < 1) throw std::invalid_argument("overlap: multiplicity must be positive");
            all.push_back({wp.point, g, wp.multiplicity});
        }
    }
    std::sort(all.begin(), all.end(), [](const Entry& a, const Entry& b) { return a.p < b.p; });
    for (std::size_t i = 1; i < all.size(); ++i)
        if (all[i].p == all[i - 1].p) throw std::invalid_argument("overlap: coincident points at " + all[i].p.to_string());
    if (c.size() < 2) return 0;

    const std::size_t n = all.size();
    unsigned best = std::numeric_limits<unsigned>::max();
    // Opening the circle in the gap after all[cut]: position of all[i] is (i - cut - 1) mod n.
    for (std::size_t cut = 0; cut < n; ++cut) {
        std::vector<std::size_t> lo(c.size(), n), hi(c.size(), 0);
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t pos = (i + n - cut - 1) % n;
            lo[all[i].group] = std::min(lo[all[i].group], pos);
            hi[all[i].group] = std::max(hi[all[i].group], pos);
        }
        unsigned total = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t pos = (i + n - cut - 1) % n;
            for (std::size_t g = 0; g < c.size(); ++g)
                if (g != all[i].group && lo[g] < pos && pos < hi[g]) total += static_cast<unsigned>(all[i].mult);
        }
        best = std::min(best, total);
    }
    return best;
}

PointConfiguration configuration_for_instance(const SchubertProblem& problem, const std::vector<FlagSpec>& flags) {
    if (flags.size() != problem.conditions.size()) throw std::invalid_argument("one flag per condition is required");
    PointConfiguration cfg;
    for (std::size_t i = 0; i < flags.size(); ++i) {
        const FlagSpec& f = flags[i];
        const int rel = relevant_dimension(problem.conditions[i], problem.k, problem.n);
        PointGroup g;
        switch (f.kind) {
            case FlagSpec::Kind::Secant:
            case FlagSpec::Kind::Cosecant:
                for (const auto& p : f.points) g.push_back({p, 1});
                break;
            case FlagSpec::Kind::Osculating: g.push_back({f.anchor, rel}); break;
            case FlagSpec::Kind::GeneralizedSecant:
                for (const auto& a : f.anchors) g.push_back({a.point, a.order});
                break;
            case FlagSpec::Kind::Explicit: break;
        }
        if (f.kind == FlagSpec::Kind::Secant || f.kind == FlagSpec::Kind::GeneralizedSecant) {
            int count = 0;
            for (const auto& wp : g) count += wp.multiplicity;
            if (count != rel)
                throw std::invalid_argument("flag '" + f.to_string() + "' has " + std::to_string(count) + " points, condition " +
                                            problem.conditions[i].to_string() + " needs " + std::to_string(rel));
        }
        if (!g.empty()) cfg.push_back(std::move(g));
    }
    return cfg;
}

unsigned overlap_for_instance(const SchubertProblem& problem, const std::vector<FlagSpec>& flags) {
    return overlap_number(configuration_for_instance(problem, flags));
}

}  // namespace schubert
