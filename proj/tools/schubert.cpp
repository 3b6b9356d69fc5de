// Command-line front end: solve, fourlines, gap, experiment.

#include "schubert/harness.hpp"
#include "schubert/overlap.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>

using namespace schubert;
using nlohmann::json;

namespace {

Chart parse_chart(const std::string& text) {
    if (text == "standard") return Chart::standard();
    auto index = [&](const std::string& s) {
        std::size_t used = 0;
        const int v = std::stoi(s, &used);
        if (used != s.size() || v < 0) throw std::invalid_argument("bad chart '" + text + "'");
        return v;
    };
    if (text.rfind("osc-inf-zero:", 0) == 0) {
        const std::string rest = text.substr(13);
        const auto comma = rest.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad chart '" + text + "'");
        return Chart::two_osculating(index(rest.substr(0, comma)), index(rest.substr(comma + 1)));
    }
    if (text.rfind("osc-inf:", 0) == 0) return Chart::one_osculating(index(text.substr(8)));
    throw std::invalid_argument("unknown chart '" + text + "' (standard, osc-inf:I, osc-inf-zero:I,J)");
}

// "1,2 3,4 5,6 7,8" or "{1,2}{3,4}{5,6}{7,8}".
ChordConfiguration parse_pairing(std::string text) {
    for (char& ch : text)
        if (ch == '{' || ch == '}' || ch == ';') ch = ' ';
    std::istringstream in(text);
    ChordConfiguration c;
    std::string tok;
    std::size_t i = 0;
    while (in >> tok) {
        if (i == 4) throw std::invalid_argument("pairing has more than four chords");
        const auto comma = tok.find(',');
        if (comma == std::string::npos) throw std::invalid_argument("bad chord '" + tok + "'");
        c.chords[i++] = {std::stoi(tok.substr(0, comma)), std::stoi(tok.substr(comma + 1))};
    }
    if (i != 4) throw std::invalid_argument("pairing needs four chords");
    canonical_chords(c.chords);  // validates
    return c;
}

std::vector<Rational> parse_points(const std::string& text) {
    std::vector<Rational> out;
    std::istringstream in(text);
    std::string tok;
    while (std::getline(in, tok, ',')) out.push_back(parse_rational(tok));
    return out;
}

json record(const Instance& inst, const SolveOutcome& o, std::optional<std::uint64_t> seed) {
    json j;
    j["problem"] = inst.problem.to_string();
    j["chart"] = inst.chart.to_string();
    j["overlap"] = overlap_for_instance(inst.problem, inst.flags);
    j["real_count"] = o.certified() ? json(o.real_count) : json(nullptr);
    j["degree"] = problem_degree(inst.problem).get_ui();
    j["status"] = to_string(o.status);
    j["seed"] = seed ? json(*seed) : json(nullptr);
    if (!o.certified()) j["failure"] = o.failure;
    if (o.perturbation) j["perturbation_rounds"] = o.perturbation->rounds;
    return j;
}

unsigned workers_from_env(unsigned fallback) {
    const char* env = std::getenv("SCHUBERT_WORKERS");
    if (!env || !*env) return fallback;
    char* end = nullptr;
    const unsigned long v = std::strtoul(env, &end, 10);
    if (*end != '\0' || v == 0) throw std::invalid_argument("SCHUBERT_WORKERS must be a positive integer");
    return static_cast<unsigned>(v);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Real Schubert calculus experiments in exact arithmetic"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file; keys as the long options, in a [subcommand] section");

    // solve
    auto* solve = app.add_subcommand("solve", "Count real solutions of one instance");
    std::string problem_text, chart_text = "standard", style_text = "projected";
    std::vector<std::string> flag_texts;
    int rounds = 3;
    solve->add_option("--problem", problem_text, "e.g. \"2 5 1^6\"")->required();
    solve->add_option("--flag", flag_texts, "one flag spec per condition, e.g. sec:1,2,3 osc:inf")->required();
    solve->add_option("--chart", chart_text, "standard | osc-inf:I | osc-inf-zero:I,J")->capture_default_str();
    solve->add_option("--style", style_text, "projected | stacked")->check(CLI::IsMember({"projected", "stacked"}))->capture_default_str();
    solve->add_option("--rounds", rounds, "perturbation rounds")->capture_default_str();

    // fourlines
    auto* four = app.add_subcommand("fourlines", "Lines meeting four secant lines of the twisted cubic");
    std::string points_text, pairing_text;
    four->add_option("--points", points_text, "eight comma-separated rationals, cyclic positions 1..8")->required();
    four->add_option("--pairing", pairing_text, "e.g. \"1,2 3,4 5,6 7,8\"")->required();

    // gap
    auto* gap = app.add_subcommand("gap", "(n-2,n-2)^4 on G(4,2n) through the auxiliary problem");
    int gap_n = 4;
    std::vector<std::string> gap_flags;
    std::optional<std::uint64_t> gap_seed;
    bool gap_verify = false;
    gap->add_option("--n", gap_n, "n >= 3")->capture_default_str();
    gap->add_option("--flag", gap_flags, "four flag specs on C^{2n}");
    gap->add_option("--seed", gap_seed, "draw a UniformShuffle secant instance instead");
    gap->add_flag("--verify", gap_verify, "check the sums of solution pairs directly");

    // experiment
    auto* exp = app.add_subcommand("experiment", "Seeded batch of random instances -> frequency table");
    std::string exp_problem, mode_text = "disjoint", out_path;
    int type = 1;
    std::size_t count = 100, first = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1, budget = 10000;
    long denominator = 64;
    std::string lo_text = "-8", hi_text = "8";
    bool verify_gap = false;
    exp->add_option("--problem", exp_problem, "e.g. \"3 7 1^4 3,1^2\"")->required();
    exp->add_option("--type", type, "1, 2 or 3")->check(CLI::Range(1, 3))->capture_default_str();
    exp->add_option("--mode", mode_text, "disjoint | shuffle | overlap=K")->capture_default_str();
    exp->add_option("--count", count)->capture_default_str();
    exp->add_option("--first-index", first)->capture_default_str();
    exp->add_option("--seed", seed)->capture_default_str();
    exp->add_option("--workers", workers, "overridden by SCHUBERT_WORKERS")->capture_default_str();
    exp->add_option("--lo", lo_text)->capture_default_str();
    exp->add_option("--hi", hi_text)->capture_default_str();
    exp->add_option("--denominator", denominator)->capture_default_str();
    exp->add_option("--budget", budget, "rejection budget for overlap=K")->capture_default_str();
    exp->add_flag("--verify-gap", verify_gap);
    exp->add_option("--out", out_path, "table.csv or table.json (CSV on stdout if omitted)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (*solve) {
            Instance inst;
            inst.problem = parse_problem(problem_text);
            for (const auto& f : flag_texts) inst.flags.push_back(parse_flag_spec(f, inst.problem.n));
            inst.chart = parse_chart(chart_text);
            SolveOptions opts;
            opts.style = style_text == "stacked" ? MinorStyle::Stacked : MinorStyle::Projected;
            opts.max_perturbation_rounds = rounds;
            std::cout << record(inst, solve_instance(inst, opts), std::nullopt).dump() << "\n";
        } else if (*four) {
            const auto pts = parse_points(points_text);
            if (pts.size() != 8) throw std::invalid_argument("need exactly eight points");
            std::array<Rational, 8> arr;
            std::copy(pts.begin(), pts.end(), arr.begin());
            const auto config = parse_pairing(pairing_text);
            const Instance inst = four_lines_instance(arr, config);
            json j = record(inst, solve_four_lines(arr, config), std::nullopt);
            j["configuration"] = canonical_chords(config.chords).to_string();
            j["odd_interval"] = has_odd_interval(config);
            std::cout << j.dump() << "\n";
        } else if (*gap) {
            const std::string sq = std::to_string(gap_n - 2) + "," + std::to_string(gap_n - 2);
            const SchubertProblem p = parse_problem("4 " + std::to_string(2 * gap_n) + " " + sq + "^4");
            Instance inst;
            if (gap_seed) {
                if (!gap_flags.empty()) throw std::invalid_argument("give either --flag or --seed, not both");
                ExperimentConfig c;
                c.problem = p;
                c.mode = SamplingMode::parse("shuffle");
                c.seed = *gap_seed;
                inst = generate_instance(c, 0);
            } else {
                if (gap_flags.size() != 4) throw std::invalid_argument("need four --flag specs or --seed");
                inst.problem = p;
                for (const auto& f : gap_flags) inst.flags.push_back(parse_flag_spec(f, p.n));
            }
            const GapOutcome g = solve_gap_instance(inst, gap_verify);
            json j = record(inst, g.outcome, gap_seed);
            j["r"] = g.r;
            j["c"] = g.c;
            if (g.pairs_verified) j["pairs_verified"] = *g.pairs_verified;
            if (g.verified_real_sums) j["verified_real_sums"] = *g.verified_real_sums;
            std::cout << j.dump() << "\n";
        } else if (*exp) {
            ExperimentConfig c;
            c.problem = parse_problem(exp_problem);
            c.computation_type = type;
            c.mode = SamplingMode::parse(mode_text);
            c.instance_count = count;
            c.first_index = first;
            c.seed = seed;
            c.point_lo = parse_rational(lo_text);
            c.point_hi = parse_rational(hi_text);
            c.denominator = denominator;
            c.worker_count = workers_from_env(workers);
            c.rejection_budget = budget;
            c.verify_gap = verify_gap;
            const FrequencyTable t = run_experiment(c);
            if (out_path.empty()) {
                std::cout << export_table(t, TableFormat::Csv);
            } else {
                const bool as_json = out_path.size() >= 5 && out_path.substr(out_path.size() - 5) == ".json";
                std::ofstream out(out_path, std::ios::binary);
                if (!out) throw std::runtime_error("cannot write " + out_path);
                out << export_table(t, as_json ? TableFormat::Json : TableFormat::Csv);
                json j{{"problem", t.problem}, {"type", t.computation_type}, {"mode", c.mode.to_string()}, {"seed", c.seed},
                       {"instances", t.instance_count}, {"certified", t.certified()}, {"failures", t.failures}, {"out", out_path}};
                std::cout << j.dump() << "\n";
            }
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
