#include "edgesub/tutte.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "edgesub/errors.hpp"

namespace edgesub {

namespace {

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

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
    bool unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return false;
        parent[b] = a;
        return true;
    }
};

void check_budget(long m, int k, const Budgets& budgets, const char* what) {
    Int total = binomial(m, k);
    if (total > budgets.subset_budget)
        throw capacity_error(std::string(what) + ": C(" + std::to_string(m) + "," +
                             std::to_string(k) + ") exceeds the subset budget");
}

Int rat_to_int(const Rat& r, const char* what) {
    if (boost::multiprecision::denominator(r) != 1)
        throw std::logic_error(std::string(what) + ": expected an integer value");
    return boost::multiprecision::numerator(r);
}

// T^k over multigraph edges (loops allowed); shared by the public simple-
// graph entry point and the x=1 / y=1 delegation inside delcon.
Rat tutte_k_brute_multi(const MultiGraph& g, int k, const RationalPoint& p,
                        const Budgets& budgets) {
    const int m = g.edge_count();
    const int n = g.vertex_count();
    if (k < 0 || k > m) return Rat(0);
    check_budget(m, k, budgets, "tutte brute force");
    const long k_all = g.component_count();
    const Rat xm1 = p.x - 1;
    const Rat ym1 = p.y - 1;
    Rat total = 0;
    for_each_combination(m, k, [&](const std::vector<int>& pick) {
        long ka = components_of_subset(g, pick);
        long e1 = ka - k_all;
        long e2 = ka + k - n;
        if (e1 < 0 || e2 < 0)
            throw std::logic_error("tutte: negative exponent, component count broken");
        total += rat_pow(xm1, e1) * rat_pow(ym1, e2);
    });
    return total;
}

}  // namespace

long components_of_subset(const Graph& g, const std::vector<int>& edge_ids) {
    UnionFind uf(g.vertex_count());
    long comps = g.vertex_count();
    for (int id : edge_ids) {
        auto [u, v] = g.edge(id);
        if (uf.unite(u, v)) --comps;
    }
    return comps;
}

long components_of_subset(const MultiGraph& g, const std::vector<int>& edge_positions) {
    UnionFind uf(g.vertex_count());
    long comps = g.vertex_count();
    for (int pos : edge_positions) {
        const auto& e = g.edges()[pos];
        if (e.u != e.v && uf.unite(e.u, e.v)) --comps;
    }
    return comps;
}

TutteValue tutte_k_bruteforce(const Graph& g, int k, const RationalPoint& p,
                              const Budgets& budgets) {
    return {tutte_k_brute_multi(MultiGraph(g), k, p, budgets), TutteMethod::brute};
}

Rat modified_tutte_k_bruteforce(const MultiGraph& g, int k, const RationalPoint& p,
                                const Budgets& budgets) {
    const int m = g.edge_count();
    if (k < 0 || k > m) return Rat(0);
    check_budget(m, k, budgets, "modified tutte brute force");
    const Rat xm1 = p.x - 1;
    const Rat ym1 = p.y - 1;
    Rat total = 0;
    for_each_combination(m, k, [&](const std::vector<int>& pick) {
        long ka = components_of_subset(g, pick);
        total += rat_pow(xm1, ka) * rat_pow(ym1, ka + k);
    });
    return total;
}

namespace {

Rat modified_delcon(const MultiGraph& g, int k, const Rat& xm1, const Rat& ym1,
                    long long& nodes_left) {
    if (k < 0) return Rat(0);
    if (k > g.edge_count()) return Rat(0);
    if (--nodes_left < 0) throw capacity_error("tutte delcon: node budget exceeded");
    if (g.edge_count() == 0) {
        // Single empty-subset term: (x-1)^n (y-1)^n.
        if (k != 0) return Rat(0);
        return rat_pow(xm1, g.vertex_count()) * rat_pow(ym1, g.vertex_count());
    }
    // Prefer a non-loop edge with maximal endpoint-degree sum.
    std::vector<int> deg(g.vertex_count(), 0);
    for (const auto& e : g.edges()) {
        ++deg[e.u];
        ++deg[e.v];
    }
    int best = -1;
    long best_score = -1;
    for (int pos = 0; pos < g.edge_count(); ++pos) {
        if (g.is_loop(pos)) continue;
        long score = deg[g.edges()[pos].u] + deg[g.edges()[pos].v];
        if (score > best_score) {
            best_score = score;
            best = pos;
        }
    }
    if (best < 0) {
        // Loops only: contracting a loop equals deleting it, with the edge
        // still counted in the subset size.
        MultiGraph rest = g.delete_edge(0);
        return modified_delcon(rest, k, xm1, ym1, nodes_left) +
               ym1 * modified_delcon(rest, k - 1, xm1, ym1, nodes_left);
    }
    return modified_delcon(g.delete_edge(best), k, xm1, ym1, nodes_left) +
           ym1 * modified_delcon(g.contract_edge(best), k - 1, xm1, ym1, nodes_left);
}

}  // namespace

TutteValue tutte_k_delcon(const MultiGraph& g, int k, const RationalPoint& p,
                          const Budgets& budgets) {
    if (p.x == 1 || p.y == 1) {
        // The conversion factor (x-1)^k(E) (y-1)^#V vanishes here.
        return {tutte_k_brute_multi(g, k, p, budgets), TutteMethod::brute};
    }
    long long nodes = budgets.subset_budget;
    Rat modified = modified_delcon(g, k, p.x - 1, p.y - 1, nodes);
    Rat scale = rat_pow(p.x - 1, g.component_count()) * rat_pow(p.y - 1, g.vertex_count());
    return {modified / scale, TutteMethod::delcon};
}

Rat classical_tutte(const Graph& g, const RationalPoint& p, const Budgets& budgets) {
    const int m = g.edge_count();
    if (m > 30 || (Int(1) << m) > budgets.subset_budget)
        throw capacity_error("classical tutte: 2^m subsets exceed budget");
    const long k_all = g.component_count();
    const int n = g.vertex_count();
    Rat total = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<int> pick;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) pick.push_back(e);
        long ka = components_of_subset(g, pick);
        total += rat_pow(p.x - 1, ka - k_all) *
                 rat_pow(p.y - 1, ka + static_cast<long>(pick.size()) - n);
    }
    return total;
}

Rat classical_modified_tutte(const MultiGraph& g, const RationalPoint& p,
                             const Budgets& budgets) {
    const int m = g.edge_count();
    if (m > 30 || (Int(1) << m) > budgets.subset_budget)
        throw capacity_error("classical modified tutte: 2^m subsets exceed budget");
    Rat total = 0;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<int> pick;
        for (int e = 0; e < m; ++e)
            if ((mask >> e) & 1) pick.push_back(e);
        long ka = components_of_subset(g, pick);
        total += rat_pow(p.x - 1, ka) * rat_pow(p.y - 1, ka + static_cast<long>(pick.size()));
    }
    return total;
}

bool aggregation_identity_check(const Graph& g, int k, const RationalPoint& p,
                                const Budgets& budgets) {
    const int m = g.edge_count();
    MultiGraph mg(g);
    Rat lhs = 0;
    for (int l = 0; l <= k; ++l)
        lhs += Rat(binomial(m - l, k - l)) * modified_tutte_k_bruteforce(mg, l, p, budgets);
    Rat rhs = 0;
    for_each_combination(m, k, [&](const std::vector<int>& pick) {
        rhs += classical_modified_tutte(MultiGraph(spanning_subgraph(g, pick)), p, budgets);
    });
    return lhs == rhs;
}

SpecialPointCounts special_point_counters(const Graph& g, int k, std::optional<long> c,
                                          const Budgets& budgets) {
    if (k < 0) throw usage_error("special points: k must be >= 0");
    if (c && *c < 2) throw usage_error("special points: colour count must be >= 2");
    const int m = g.edge_count();
    const long k_all = g.component_count();
    SpecialPointCounts out;

    out.k_forests = rat_to_int(tutte_k_bruteforce(g, k, {Rat(2), Rat(1)}, budgets).value,
                               "k-forests");

    if (c) {
        // Proper c-colourings of (V, A) aggregate over the modified values
        // at (1-c, 0).
        Rat total = 0;
        const RationalPoint p{Rat(1 - *c), Rat(0)};
        MultiGraph mg(g);
        for (int l = 0; l <= k; ++l)
            total += Rat(binomial(m - l, k - l)) * modified_tutte_k_bruteforce(mg, l, p, budgets);
        out.chromatic_pairs = rat_to_int(total, "chromatic pairs");
    }

    {
        Rat total = 0;
        const RationalPoint p{Rat(2), Rat(0)};
        for (int l = 0; l <= k; ++l)
            total += Rat(binomial(m - l, k - l)) * tutte_k_bruteforce(g, l, p, budgets).value;
        out.acyclic_orientation_pairs = rat_to_int(total, "acyclic orientation pairs");
    }

    {
        Rat t02 = tutte_k_bruteforce(g, k, {Rat(0), Rat(2)}, budgets).value;
        Rat sign = (k_all % 2 == 0) ? Rat(1) : Rat(-1);
        out.even_component_subsets =
            rat_to_int((Rat(binomial(m, k)) + sign * t02) / 2, "even component subsets");
    }
    {
        Rat t20 = tutte_k_bruteforce(g, k, {Rat(2), Rat(0)}, budgets).value;
        out.even_betti_subsets =
            rat_to_int((Rat(binomial(m, k)) + t20) / 2, "even betti subsets");
    }
    return out;
}

TutteValue tutte_x1_line(const Graph& g, int k, const Rat& y, const Budgets& budgets) {
    // A nonzero term needs k edges spanning every component, which forces
    // at most 2k non-isolated vertices (isolated ones are spanned by the
    // empty set and never matter).
    int covered = 0;
    for (int d : g.degrees())
        if (d > 0) ++covered;
    if (covered > 2 * k) return {Rat(0), TutteMethod::closed_form};
    return tutte_k_bruteforce(g, k, {Rat(1), y}, budgets);
}

Rat hat_tutte_k_bruteforce(const Graph& g, int k, const RationalPoint& p,
                           const Budgets& budgets) {
    if (p.x == 1) throw usage_error("hat tutte: x must differ from 1");
    const int m = g.edge_count();
    if (k < 0 || k > m) return Rat(0);
    check_budget(m, k, budgets, "hat tutte brute force");
    Rat total = 0;
    for_each_combination(m, k, [&](const std::vector<int>& pick) {
        Graph stripped = induced_by_edges(g, pick);
        long e = stripped.component_count() - stripped.vertex_count();  // = k(A) - #V(G)
        total += rat_pow(p.x - 1, e) * rat_pow(p.y - 1, e + k);
    });
    return total;
}

PointClassification classify_point(const RationalPoint& p) {
    PointClassification out;
    const Rat z = (p.x - 1) * (p.y - 1);
    out.exact.facet = "tutte-point";
    if (p.x == 1 && p.y == 1) {
        out.exact.tag = ComplexityTag::polynomial;
        out.exact.citation = "Thm 1.9: x = y = 1";
    } else if (z == 1) {
        out.exact.tag = ComplexityTag::polynomial;
        out.exact.citation = "Thm 1.9: hyperbola (x-1)(y-1) = 1 (Lemma 7.5)";
    } else if (p.x == 1) {
        out.exact.tag = ComplexityTag::sharp_p_hard_fpt;
        out.exact.citation = "Thm 1.9: x = 1, y != 1 (Lemma 7.4)";
    } else {
        out.exact.tag = ComplexityTag::sharp_w1_hard;
        out.exact.citation = "Thm 1.9: outside x = 1 and the hyperbola";
    }

    out.approx.facet = "tutte-point";
    if (z >= 0 && z <= 1) {
        if (p.x != 1 || p.y == 1) {
            out.approx.tag = ComplexityTag::fpras;
            out.approx.citation = "Thm 1.10: 0 <= (x-1)(y-1) <= 1 with x != 1 or y = 1";
        } else {
            out.approx.tag = ComplexityTag::fptras;
            out.approx.citation = "Thm 1.10: x = 1 branch of the region";
        }
    } else {
        out.approx.tag = ComplexityTag::open;
        out.approx.citation = "Thm 1.10: approximation outside the region is open";
    }
    return out;
}

std::optional<std::string> point_interpretation(const RationalPoint& p) {
    if (p.x == 2 && p.y == 1) return "k-forests";
    if (p.x == 2 && p.y == 0) return "acyclic-orientation pairs / Betti parity (aggregated)";
    if (p.x == 0 && p.y == 2) return "component parity";
    if (p.x == 1 && p.y == 1) return "k-edge spanning forests";
    return std::nullopt;
}

}  // namespace edgesub
