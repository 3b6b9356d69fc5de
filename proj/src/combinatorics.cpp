#include "schubert/combinatorics.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <sstream>
#include <stdexcept>

namespace schubert {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0) throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1]) throw std::invalid_argument("partition parts must be weakly decreasing");
    }
}

int Partition::size() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
}

bool Partition::fits_in_box(int rows, int cols) const { return length() <= rows && (empty() || parts_[0] <= cols); }

std::string Partition::to_string() const {
    if (parts_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ',';
        s += std::to_string(parts_[i]);
    }
    return s;
}

namespace {

int parse_int(std::string_view s, const char* what) {
    int v = 0;
    const auto* end = s.data() + s.size();
    auto [p, ec] = std::from_chars(s.data(), end, v);
    if (ec != std::errc{} || p != end || s.empty()) throw std::invalid_argument(std::string("malformed ") + what + ": '" + std::string(s) + "'");
    return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
    std::vector<std::string_view> out;
    std::size_t start = 0;
    while (true) {
        const auto pos = s.find(sep, start);
        out.push_back(s.substr(start, pos == std::string_view::npos ? std::string_view::npos : pos - start));
        if (pos == std::string_view::npos) break;
        start = pos + 1;
    }
    return out;
}

}  // namespace

Partition parse_partition(std::string_view text) {
    if (text.empty() || text == "0") return {};
    std::vector<int> parts;
    for (auto tok : split(text, ',')) parts.push_back(parse_int(tok, "partition"));
    return Partition(std::move(parts));
}

std::string SchubertProblem::to_string() const {
    std::ostringstream os;
    os << "G(" << k << "," << n << ")";
    for (std::size_t i = 0; i < conditions.size();) {
        std::size_t j = i;
        while (j < conditions.size() && conditions[j] == conditions[i]) ++j;
        os << ' ' << conditions[i].to_string();
        if (j - i > 1) os << '^' << (j - i);
        i = j;
    }
    return os.str();
}

SchubertProblem make_problem(int k, int n, std::vector<Partition> conditions) {
    if (k <= 0 || n <= k) throw std::invalid_argument("need 0 < k < n");
    int total = 0;
    for (const auto& c : conditions) {
        if (c.empty()) throw std::invalid_argument("empty partition imposes no condition");
        if (!c.fits_in_box(k, n - k))
            throw std::invalid_argument("condition " + c.to_string() + " does not fit in the " + std::to_string(k) + "x" +
                                        std::to_string(n - k) + " box");
        total += c.size();
    }
    if (total != k * (n - k))
        throw std::invalid_argument("codimensions sum to " + std::to_string(total) + ", expected " + std::to_string(k * (n - k)));
    return SchubertProblem{k, n, std::move(conditions)};
}

SchubertProblem parse_problem(std::string_view text) {
    std::istringstream is{std::string(text)};
    std::vector<std::string> words;
    for (std::string w; is >> w;) words.push_back(w);
    if (words.size() < 3) throw std::invalid_argument("problem needs 'k n conditions...'");
    const int k = parse_int(words[0], "k");
    const int n = parse_int(words[1], "n");
    std::vector<Partition> conds;
    for (std::size_t i = 2; i < words.size(); ++i) {
        std::string_view w = words[i];
        int reps = 1;
        if (const auto caret = w.find('^'); caret != std::string_view::npos) {
            reps = parse_int(w.substr(caret + 1), "repetition");
            if (reps <= 0) throw std::invalid_argument("repetition count must be positive");
            w = w.substr(0, caret);
        }
        const Partition p = parse_partition(w);
        for (int r = 0; r < reps; ++r) conds.push_back(p);
    }
    return make_problem(k, n, std::move(conds));
}

// --- Littlewood-Richardson ---------------------------------------------------

namespace {

using Shape = std::vector<int>;  // fixed length = number of rows

struct LRSearch {
    const Partition& mu;
    int rows, cols;
    std::vector<std::vector<int>> fill;  // fill[r]: labels in row r, left to right, of the skew part
    Shape cur;
    std::map<Shape, Integer>* out;

    bool lattice() const {
        std::vector<int> count(static_cast<std::size_t>(mu.length()) + 1, 0);
        for (int r = 0; r < rows; ++r) {
            const auto& row = fill[static_cast<std::size_t>(r)];
            for (auto it = row.rbegin(); it != row.rend(); ++it) {
                const int l = *it;
                ++count[static_cast<std::size_t>(l)];
                if (l > 1 && count[static_cast<std::size_t>(l)] > count[static_cast<std::size_t>(l - 1)]) return false;
            }
        }
        return true;
    }

    // Place `left` boxes labelled `label` as a horizontal strip, rows from `r` on.
    void strip(int label, int r, int left, const Shape& before) {
        if (left == 0) {
            next_label(label + 1);
            return;
        }
        if (r >= rows) return;
        const int limit = std::min(cols, r == 0 ? cols : before[static_cast<std::size_t>(r - 1)]);
        const int room = limit - cur[static_cast<std::size_t>(r)];
        // Label `label` can only sit in row >= label-1 in an LR tableau.
        const int maxhere = (r >= label - 1) ? std::min(room, left) : 0;
        for (int a = maxhere; a >= 0; --a) {
            if (r > 0 && cur[static_cast<std::size_t>(r)] + a > cur[static_cast<std::size_t>(r - 1)]) continue;
            auto& row = fill[static_cast<std::size_t>(r)];
            cur[static_cast<std::size_t>(r)] += a;
            row.insert(row.end(), static_cast<std::size_t>(a), label);
            strip(label, r + 1, left - a, before);
            row.resize(row.size() - static_cast<std::size_t>(a));
            cur[static_cast<std::size_t>(r)] -= a;
        }
    }

    void next_label(int label) {
        if (label > mu.length()) {
            if (lattice()) (*out)[cur] += 1;
            return;
        }
        const Shape before = cur;
        strip(label, 0, mu[label - 1], before);
    }
};

Shape to_shape(const Partition& p, int rows) {
    Shape s(static_cast<std::size_t>(rows), 0);
    for (int i = 0; i < p.length(); ++i) s[static_cast<std::size_t>(i)] = p[i];
    return s;
}

// s_λ · s_μ restricted to partitions inside the rows x cols box.
std::map<Shape, Integer> lr_product(const Shape& lambda, const Partition& mu, int rows, int cols) {
    std::map<Shape, Integer> out;
    if (mu.length() > rows) return out;
    LRSearch s{mu, rows, cols, std::vector<std::vector<int>>(static_cast<std::size_t>(rows)), lambda, &out};
    s.next_label(1);
    return out;
}

}  // namespace

Integer lr_coefficient(const Partition& lambda, const Partition& mu, const Partition& nu) {
    const int rows = std::max({lambda.length(), mu.length(), nu.length(), 1});
    const int cols = std::max({lambda[0], mu[0], nu[0], 1});
    if (nu.size() != lambda.size() + mu.size()) return 0;
    const auto prod = lr_product(to_shape(lambda, rows), mu, rows, cols);
    auto it = prod.find(to_shape(nu, rows));
    return it == prod.end() ? Integer(0) : it->second;
}

Integer problem_degree(const SchubertProblem& p) {
    const SchubertProblem v = make_problem(p.k, p.n, p.conditions);
    const int rows = v.k, cols = v.n - v.k;
    std::map<Shape, Integer> cls{{Shape(static_cast<std::size_t>(rows), 0), Integer(1)}};
    for (const auto& c : v.conditions) {
        std::map<Shape, Integer> next;
        for (const auto& [shape, coeff] : cls)
            for (const auto& [nu, mult] : lr_product(shape, c, rows, cols)) next[nu] += coeff * mult;
        cls = std::move(next);
    }
    auto it = cls.find(Shape(static_cast<std::size_t>(rows), cols));
    return it == cls.end() ? Integer(0) : it->second;
}

Integer schubert_number(int k, int n) {
    if (k <= 0 || n <= k) throw std::invalid_argument("need 0 < k < n");
    Integer num, den(1);
    mpz_fac_ui(num.get_mpz_t(), static_cast<unsigned long>(k * (n - k)));
    for (int i = 1; i < k; ++i) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
        num *= f;
    }
    for (int i = n - k; i < n; ++i) {
        Integer f;
        mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(i));
        den *= f;
    }
    return num / den;
}

Partition conjugate_partition(const Partition& lambda) {
    std::vector<int> c(static_cast<std::size_t>(lambda[0]), 0);
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = 0; j < lambda[i]; ++j) ++c[static_cast<std::size_t>(j)];
    return Partition(std::move(c));
}

int relevant_dimension(const Partition& lambda, int k, int n) {
    if (lambda.empty()) throw std::invalid_argument("the empty partition imposes no condition");
    if (!lambda.fits_in_box(k, n - k)) throw std::invalid_argument("partition does not fit in the box");
    const int i = lambda.length();
    return n - k + i - lambda[i - 1];
}

SchubertProblem dual_problem(const SchubertProblem& p) {
    std::vector<Partition> conds;
    conds.reserve(p.conditions.size());
    for (const auto& c : p.conditions) conds.push_back(conjugate_partition(c));
    return make_problem(p.n - p.k, p.n, std::move(conds));
}

}  // namespace schubert
