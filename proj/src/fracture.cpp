#include "edgesub/fracture.hpp"

#include <algorithm>
#include <cstdio>
#include <map>

#include "edgesub/errors.hpp"

namespace edgesub {

long Fracture::total_blocks() const {
    long total = 0;
    for (const auto& part : blocks) total += static_cast<long>(part.size());
    return total;
}

Fracture bottom_fracture(const Graph& h) {
    Fracture f;
    f.blocks.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v)
        for (int e : h.incident_edges(v)) f.blocks[v].push_back({e});
    return f;
}

Fracture top_fracture(const Graph& h) {
    Fracture f;
    f.blocks.resize(h.vertex_count());
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto inc = h.incident_edges(v);
        if (!inc.empty()) f.blocks[v].push_back(std::move(inc));
    }
    return f;
}

void validate_fracture(const Graph& h, const Fracture& f) {
    if (static_cast<int>(f.blocks.size()) != h.vertex_count())
        throw usage_error("fracture: vertex count mismatch with base graph");
    for (int v = 0; v < h.vertex_count(); ++v) {
        std::vector<int> all;
        for (const auto& block : f.blocks[v]) {
            if (block.empty()) throw usage_error("fracture: empty block");
            all.insert(all.end(), block.begin(), block.end());
        }
        std::sort(all.begin(), all.end());
        if (std::adjacent_find(all.begin(), all.end()) != all.end())
            throw usage_error("fracture: repeated edge in a vertex partition");
        if (all != h.incident_edges(v))
            throw usage_error("fracture: blocks at vertex " + std::to_string(v) +
                              " do not partition its incident edges");
    }
}

namespace {

// Per-vertex map edge id -> block index.
std::vector<std::map<int, int>> block_index_maps(const Fracture& f) {
    std::vector<std::map<int, int>> out(f.blocks.size());
    for (size_t v = 0; v < f.blocks.size(); ++v)
        for (size_t b = 0; b < f.blocks[v].size(); ++b)
            for (int e : f.blocks[v][b]) out[v][e] = static_cast<int>(b);
    return out;
}

}  // namespace

bool refines(const Graph& h, const Fracture& s, const Fracture& r) {
    validate_fracture(h, s);
    validate_fracture(h, r);
    auto rmap = block_index_maps(r);
    for (int v = 0; v < h.vertex_count(); ++v) {
        for (const auto& block : s.blocks[v]) {
            int target = rmap[v].at(block.front());
            for (int e : block)
                if (rmap[v].at(e) != target) return false;
        }
    }
    return true;
}

Int mobius(const Graph& h, const Fracture& s, const Fracture& r) {
    validate_fracture(h, s);
    validate_fracture(h, r);
    auto smap = block_index_maps(s);
    Int out = 1;
    for (int v = 0; v < h.vertex_count(); ++v) {
        for (const auto& block : r.blocks[v]) {
            // Count the s-blocks inside this r-block, verifying refinement.
            std::vector<int> inner;
            for (int e : block) inner.push_back(smap[v].at(e));
            std::sort(inner.begin(), inner.end());
            inner.erase(std::unique(inner.begin(), inner.end()), inner.end());
            long nb = static_cast<long>(inner.size());
            long covered = 0;
            for (int sb : inner) covered += static_cast<long>(s.blocks[v][sb].size());
            if (covered != static_cast<long>(block.size()))
                throw usage_error("mobius: first fracture does not refine the second");
            Int factor = factorial(nb - 1);
            if ((nb - 1) % 2 == 1) factor = -factor;
            out *= factor;
        }
    }
    return out;
}

namespace {

Int bell_number(int n) {
    // Bell triangle.
    std::vector<std::vector<Int>> tri{{1}};
    for (int i = 1; i <= n; ++i) {
        std::vector<Int> row{tri.back().back()};
        for (int j = 0; j < i; ++j) row.push_back(row.back() + tri.back()[j]);
        tri.push_back(std::move(row));
    }
    return tri[n][0];
}

// All partitions of {0,...,d-1} as restricted-growth strings, lexicographic.
void rgs_partitions(int d, std::vector<std::vector<int>>& out) {
    std::vector<int> digits(d, 0);
    if (d == 0) {
        out.push_back({});
        return;
    }
    for (;;) {
        out.push_back(digits);
        int i = d - 1;
        for (; i >= 1; --i) {
            int maxPrefix = *std::max_element(digits.begin(), digits.begin() + i);
            if (digits[i] <= maxPrefix) {
                ++digits[i];
                std::fill(digits.begin() + i + 1, digits.end(), 0);
                break;
            }
        }
        if (i == 0) break;
    }
}

std::vector<std::vector<int>> rgs_to_blocks(const std::vector<int>& digits,
                                            const std::vector<int>& incident) {
    int blocks = digits.empty() ? 0 : *std::max_element(digits.begin(), digits.end()) + 1;
    std::vector<std::vector<int>> out(blocks);
    for (size_t i = 0; i < digits.size(); ++i) out[digits[i]].push_back(incident[i]);
    return out;
}

}  // namespace

Int count_fractures(const Graph& h) {
    Int total = 1;
    for (int d : h.degrees()) total *= bell_number(d);
    return total;
}

void for_each_fracture(const Graph& h, const std::function<void(const Fracture&)>& fn,
                       const Budgets& budgets) {
    for (const auto& f : enumerate_fractures(h, budgets)) fn(f);
}

std::vector<Fracture> enumerate_fractures(const Graph& h, const Budgets& budgets) {
    Int total = count_fractures(h);
    if (total > budgets.fracture_budget)
        throw capacity_error("fracture enumeration: lattice has " + total.str() +
                             " elements, budget is " + std::to_string(budgets.fracture_budget));

    const int n = h.vertex_count();
    std::vector<std::vector<std::vector<std::vector<int>>>> perVertex(n);
    for (int v = 0; v < n; ++v) {
        auto incident = h.incident_edges(v);
        std::vector<std::vector<int>> rgs;
        rgs_partitions(static_cast<int>(incident.size()), rgs);
        for (const auto& digits : rgs) perVertex[v].push_back(rgs_to_blocks(digits, incident));
    }

    std::vector<Fracture> out;
    std::vector<size_t> pick(n, 0);
    for (;;) {
        Fracture f;
        f.blocks.resize(n);
        for (int v = 0; v < n; ++v) f.blocks[v] = perVertex[v][pick[v]];
        out.push_back(std::move(f));
        int v = n - 1;
        for (; v >= 0; --v) {
            if (++pick[v] < perVertex[v].size()) break;
            pick[v] = 0;
        }
        if (v < 0) break;
    }

    std::vector<std::pair<std::string, size_t>> keyed;
    keyed.reserve(out.size());
    for (size_t i = 0; i < out.size(); ++i) keyed.emplace_back(fracture_order_key(h, out[i]), i);
    std::sort(keyed.begin(), keyed.end());
    std::vector<Fracture> sorted;
    sorted.reserve(out.size());
    for (const auto& [key, i] : keyed) sorted.push_back(std::move(out[i]));
    return sorted;
}

std::string fracture_order_key(const Graph& h, const Fracture& f) {
    // Decreasing total block count first (so the all-singleton fracture is
    // first and the one-block-per-vertex fracture last), then the
    // restricted-growth encodings.
    long maxBlocks = 0;
    for (int d : h.degrees()) maxBlocks += d;
    long slack = maxBlocks - f.total_blocks();
    char head[16];
    std::snprintf(head, sizeof(head), "%08ld", slack);

    std::string digits;
    for (int v = 0; v < h.vertex_count(); ++v) {
        auto incident = h.incident_edges(v);
        std::map<int, int> blockOf;
        for (size_t b = 0; b < f.blocks[v].size(); ++b)
            for (int e : f.blocks[v][b]) blockOf[e] = static_cast<int>(b);
        for (int e : incident) digits.push_back(static_cast<char>('0' + blockOf.at(e)));
        digits.push_back('|');
    }
    return std::string(head) + ":" + digits;
}

}  // namespace edgesub
