#include "edgesub/counting.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>
#include <unordered_map>

#include "edgesub/errors.hpp"
#include "edgesub/homcount.hpp"
#include "edgesub/invariants.hpp"

namespace edgesub {

namespace {

// Calls fn for every k-combination of {0,...,m-1} in lexicographic order.
template <class Fn>
void for_each_combination(int m, int k, Fn&& fn) {
    if (k < 0 || k > m) return;
    std::vector<int> pick(k);
    std::iota(pick.begin(), pick.end(), 0);
    for (;;) {
        fn(const_cast<const std::vector<int>&>(pick));
        if (k == 0) return;
        int i = k - 1;
        while (i >= 0 && pick[i] == m - k + i) --i;
        if (i < 0) return;
        ++pick[i];
        for (int j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
}

void check_subset_budget(long m, int k, const Budgets& budgets, const char* what) {
    Int total = binomial(m, k);
    if (total > budgets.subset_budget)
        throw capacity_error(std::string(what) + ": C(" + std::to_string(m) + "," +
                             std::to_string(k) + ") = " + total.str() + " exceeds budget " +
                             std::to_string(budgets.subset_budget));
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t n) {
    // Rejection sampling keeps the draw exactly uniform.
    std::uint64_t rem = (std::numeric_limits<std::uint64_t>::max() % n + 1) % n;
    std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - rem;
    std::uint64_t x;
    do {
        x = rng();
    } while (x > limit);
    return x % n;
}

}  // namespace

Int run_count_query(const CountQuery& q, const Budgets& budgets) {
    PropertySpec phi = builtin_property(q.property);
    if (q.mode == CountQuery::Mode::via_subs)
        return count_exact_via_subs(phi, q.k, q.host, budgets);
    return count_exact_bruteforce(phi, q.k, q.host, budgets);
}

Int count_exact_bruteforce(const PropertySpec& phi, int k, const Graph& g,
                           const Budgets& budgets) {
    if (k < 0) throw usage_error("count: k must be >= 0");
    if (k > g.edge_count()) return 0;
    check_subset_budget(g.edge_count(), k, budgets, "count_exact_bruteforce");
    Int count = 0;
    for_each_combination(g.edge_count(), k, [&](const std::vector<int>& pick) {
        if (evaluate(phi, induced_by_edges(g, pick), budgets)) ++count;
    });
    return count;
}

Int count_exact_via_subs(const PropertySpec& phi, int k, const Graph& g,
                         const Budgets& budgets) {
    if (k < 0) throw usage_error("count: k must be >= 0");
    Int count = 0;
    for (const Graph& h : enumerate_phi_k(phi, k, budgets)) count += count_subs(h, g, budgets);
    return count;
}

Int count_colourful(const PropertySpec& phi, const Graph& h, const HColouredGraph& g,
                    const Budgets& budgets) {
    if (g.pattern() != h) throw usage_error("count_colourful: pattern mismatch");
    auto classes = g.edge_colour_classes();
    Int space = 1;
    for (const auto& cls : classes) {
        if (cls.empty()) return 0;
        space *= static_cast<long>(cls.size());
    }
    if (space > budgets.subset_budget)
        throw capacity_error("count_colourful: " + space.str() + " colourful subsets exceed budget");

    Int count = 0;
    std::vector<int> chosen(classes.size());
    auto dfs = [&](auto&& self, size_t colour) -> void {
        if (colour == classes.size()) {
            if (evaluate(phi, induced_by_edges(g.graph(), chosen), budgets)) ++count;
            return;
        }
        for (int e : classes[colour]) {
            chosen[colour] = e;
            self(self, colour + 1);
        }
    };
    dfs(dfs, 0);
    return count;
}

std::vector<int> uniform_k_subset(long m, int k, std::uint64_t seed) {
    if (k < 0 || k > m) throw usage_error("uniform_k_subset: need 0 <= k <= m");
    std::mt19937_64 rng(seed);
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    for (int i = 0; i < k; ++i) {
        std::uint64_t j = i + uniform_below(rng, static_cast<std::uint64_t>(m - i));
        std::swap(idx[i], idx[j]);
    }
    std::vector<int> out(idx.begin(), idx.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

long ramsey_upper_bound(int k) {
    if (k < 1) throw usage_error("ramsey_upper_bound: k must be >= 1");
    if (k > 32) throw capacity_error("ramsey_upper_bound: k too large");
    Int r = binomial(2 * k - 2, k - 1);
    return r.convert_to<long>();
}

Int fptras_sample_count(int k, double eps, double delta) {
    if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1))
        throw usage_error("fptras: eps and delta must lie in (0,1)");
    Int reach = binomial(ramsey_upper_bound(k), k);
    double scaled = reach.convert_to<double>() * 3.0 * std::log(2.0 / delta) / (eps * eps);
    double t = std::ceil(scaled);
    if (!(t < 9.0e18)) throw capacity_error("fptras: sample count overflows");
    return Int(static_cast<long long>(t));
}

namespace {

std::uint64_t subset_key(const std::vector<int>& sorted_pick) {
    std::uint64_t key = 0;
    for (int e : sorted_pick) key = (key << 16) | static_cast<std::uint64_t>(e);
    return key;
}

}  // namespace

EstimateResult fptras_estimate(const PropertySpec& phi, int k, const Graph& g, double eps,
                               double delta, std::uint64_t seed, const Budgets& budgets) {
    if (!phi.matching_threshold || !phi.star_threshold)
        throw usage_error("fptras: property " + phi.name +
                          " does not declare both the matching and the star criterion");
    if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1))
        throw usage_error("fptras: eps and delta must lie in (0,1)");
    if (k < 1) throw usage_error("fptras: k must be >= 1");

    EstimateResult out;
    out.eps = eps;
    out.delta = delta;
    out.seed = seed;

    // From this size on the property holds on matchings and stars; the
    // sampling analysis additionally needs k >= 4.
    const int c = std::max({*phi.matching_threshold, *phi.star_threshold, 4});
    const long m = g.edge_count();
    if (k < c || m <= ramsey_upper_bound(k)) {
        out.exact_path = true;
        out.samples = 0;
        out.estimate = Rat(count_exact_bruteforce(phi, k, g, budgets));
        return out;
    }

    Int t = fptras_sample_count(k, eps, delta);
    if (t > budgets.fptras_sample_budget)
        throw capacity_error("fptras: " + t.str() + " samples exceed budget " +
                             std::to_string(budgets.fptras_sample_budget));
    out.samples = t;

    const bool use_memo = k <= 4 && m < (1 << 16) && binomial(m, k) <= budgets.fptras_memo_cap;
    std::unordered_map<std::uint64_t, bool> memo;

    std::mt19937_64 rng(seed);
    std::vector<int> idx(m);
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<int> pick(k);
    Int hits = 0;
    const long long draws = t.convert_to<long long>();
    for (long long i = 0; i < draws; ++i) {
        for (int j = 0; j < k; ++j) {
            std::uint64_t r = j + uniform_below(rng, static_cast<std::uint64_t>(m - j));
            std::swap(idx[j], idx[r]);
        }
        pick.assign(idx.begin(), idx.begin() + k);
        std::sort(pick.begin(), pick.end());
        bool sat;
        if (use_memo) {
            auto key = subset_key(pick);
            auto it = memo.find(key);
            if (it == memo.end()) {
                sat = evaluate(phi, induced_by_edges(g, pick), budgets);
                memo.emplace(key, sat);
            } else {
                sat = it->second;
            }
        } else {
            sat = evaluate(phi, induced_by_edges(g, pick), budgets);
        }
        if (sat) ++hits;
    }
    out.estimate = Rat(hits * binomial(m, k), t);
    return out;
}

EstimateResult fptras_via_subs(const PropertySpec& phi, int k, const Graph& g, double eps,
                               double delta, std::uint64_t seed, const Budgets& budgets) {
    if (!(eps > 0 && eps < 1) || !(delta > 0 && delta < 1))
        throw usage_error("fptras: eps and delta must lie in (0,1)");
    auto classes = enumerate_phi_k(phi, k, budgets);
    EstimateResult out;
    out.eps = eps;
    out.delta = delta;
    out.seed = seed;
    out.exact_path = true;
    out.samples = 0;
    if (classes.empty()) {
        out.estimate = 0;
        return out;
    }
    // Aggregation bookkeeping: each per-class estimate gets failure budget
    // delta / |Phi_k|, so the union bound keeps the total at delta. The
    // per-class backend is the exact subgraph counter, which satisfies any
    // (eps, delta') guarantee trivially.
    const double per_term_delta = delta / static_cast<double>(classes.size());
    if (!(per_term_delta > 0)) throw usage_error("fptras: delta underflow");
    Rat total = 0;
    for (const Graph& h : classes) {
        Int term = count_subs(h, g, budgets);
        total += Rat(term);
    }
    out.estimate = total;
    return out;
}

DecisionResult decide_exists_explain(const PropertySpec& phi, int k, const Graph& g,
                                     const Budgets& budgets) {
    if (k < 1) throw usage_error("decide: k must be >= 1");
    if (!phi.matching_threshold && !phi.star_threshold && !phi.treewidth_bound)
        throw usage_error("decide: property " + phi.name +
                          " declares no matching/star criterion and no treewidth bound");

    if (phi.matching_threshold && k >= *phi.matching_threshold) {
        if (max_matching_size(g) >= k) return {true, DecisionPath::matching_win};
    }
    if (phi.star_threshold && k >= *phi.star_threshold) {
        if (graph_invariants(g).max_degree >= k) return {true, DecisionPath::star_win};
    }
    for (const Graph& h : enumerate_phi_k(phi, k, budgets))
        if (embedding_exists(h, g, budgets)) return {true, DecisionPath::generate_and_test};
    return {false, DecisionPath::generate_and_test};
}

bool decide_exists(const PropertySpec& phi, int k, const Graph& g, const Budgets& budgets) {
    return decide_exists_explain(phi, k, g, budgets).exists;
}

}  // namespace edgesub
