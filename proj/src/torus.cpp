#include "edgesub/torus.hpp"

#include <algorithm>

#include "edgesub/errors.hpp"
#include "edgesub/family.hpp"

namespace edgesub {

TorusGeometry TorusGeometry::make(long ell) {
    if (ell < 3) throw usage_error("torus geometry: side length must be >= 3");
    TorusGeometry geo;
    geo.ell = ell;
    geo.graph = generate_family(GraphFamilySpec::torus(ell));
    geo.edge_at.resize(geo.graph.vertex_count());
    for (long i = 0; i < ell; ++i) {
        for (long j = 0; j < ell; ++j) {
            int v = geo.vertex(i, j);
            auto at = [&](long di, long dj) {
                int w = geo.vertex(i + di, j + dj);
                int id = geo.graph.edge_id(v, w);
                if (id < 0) throw std::logic_error("torus geometry: missing edge");
                return id;
            };
            geo.edge_at[v][static_cast<int>(TorusDir::up)] = at(0, 1);
            geo.edge_at[v][static_cast<int>(TorusDir::down)] = at(0, -1);
            geo.edge_at[v][static_cast<int>(TorusDir::left)] = at(-1, 0);
            geo.edge_at[v][static_cast<int>(TorusDir::right)] = at(1, 0);
        }
    }
    return geo;
}

int TorusGeometry::vertex(long i, long j) const {
    i = ((i % ell) + ell) % ell;
    j = ((j % ell) + ell) % ell;
    return static_cast<int>(i * ell + j);
}

int TorusGeometry::direction_of(int v, int edge_id) const {
    for (int d = 0; d < 4; ++d)
        if (edge_at[v][d] == edge_id) return d;
    return -1;
}

Fracture torus_shift_act(const TorusGeometry& geo, long di, long dj, const Fracture& rho) {
    validate_fracture(geo.graph, rho);
    const long l = geo.ell;
    Fracture out;
    out.blocks.resize(geo.graph.vertex_count());
    for (long i = 0; i < l; ++i) {
        for (long j = 0; j < l; ++j) {
            int src = geo.vertex(i, j);
            int dst = geo.vertex(i + di, j + dj);
            std::vector<std::vector<int>> blocks;
            for (const auto& block : rho.blocks[src]) {
                std::vector<int> moved;
                for (int e : block) {
                    int d = geo.direction_of(src, e);
                    if (d < 0) throw usage_error("torus shift: fracture does not fit the torus");
                    moved.push_back(geo.edge_at[dst][d]);
                }
                std::sort(moved.begin(), moved.end());
                blocks.push_back(std::move(moved));
            }
            std::sort(blocks.begin(), blocks.end());
            out.blocks[dst] = std::move(blocks);
        }
    }
    return out;
}

std::string to_string(TorusFixedPointType t) {
    switch (t) {
        case TorusFixedPointType::matching: return "matching";
        case TorusFixedPointType::matching_and_cycles: return "matching-and-cycles";
        case TorusFixedPointType::wedge_packing: return "wedge-packing";
        case TorusFixedPointType::cycle_packing_i: return "cycle-packing-i";
        case TorusFixedPointType::cycle_packing_ii: return "cycle-packing-ii";
        case TorusFixedPointType::sun_packing: return "sun-packing";
        case TorusFixedPointType::torus: return "torus";
    }
    return "?";
}

namespace {

using Part = std::vector<std::vector<TorusDir>>;

TorusFixedPointType classify_partition(const Part& part) {
    std::vector<size_t> sizes;
    for (const auto& b : part) sizes.push_back(b.size());
    std::sort(sizes.begin(), sizes.end(), std::greater<>());

    auto has_block = [&](std::vector<TorusDir> want) {
        std::sort(want.begin(), want.end());
        for (auto b : part) {
            std::sort(b.begin(), b.end());
            if (b == want) return true;
        }
        return false;
    };
    const bool axis_ud = has_block({TorusDir::up, TorusDir::down});
    const bool axis_lr = has_block({TorusDir::left, TorusDir::right});

    if (sizes == std::vector<size_t>{1, 1, 1, 1}) return TorusFixedPointType::matching;
    if (sizes == std::vector<size_t>{2, 1, 1})
        return (axis_ud || axis_lr) ? TorusFixedPointType::matching_and_cycles
                                    : TorusFixedPointType::wedge_packing;
    if (sizes == std::vector<size_t>{2, 2})
        return (axis_ud && axis_lr) ? TorusFixedPointType::cycle_packing_i
                                    : TorusFixedPointType::cycle_packing_ii;
    if (sizes == std::vector<size_t>{3, 1}) return TorusFixedPointType::sun_packing;
    return TorusFixedPointType::torus;
}

}  // namespace

std::vector<std::pair<Fracture, TorusFixedPointType>> torus_fixed_points(long ell) {
    if (ell < 3) throw usage_error("torus fixed points: side length must be >= 3");
    TorusGeometry geo = TorusGeometry::make(ell);

    // The 15 partitions of the four directions, one uniform fracture each.
    const TorusDir dirs[4] = {TorusDir::up, TorusDir::down, TorusDir::left, TorusDir::right};
    std::vector<Part> parts;
    std::vector<int> digits(4, 0);
    for (;;) {
        int blocks = *std::max_element(digits.begin(), digits.end()) + 1;
        Part p(blocks);
        for (int i = 0; i < 4; ++i) p[digits[i]].push_back(dirs[i]);
        parts.push_back(std::move(p));
        int i = 3;
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

    std::vector<std::pair<Fracture, TorusFixedPointType>> out;
    for (const auto& part : parts) {
        Fracture f;
        f.blocks.resize(geo.graph.vertex_count());
        for (int v = 0; v < geo.graph.vertex_count(); ++v) {
            std::vector<std::vector<int>> blocks;
            for (const auto& dblock : part) {
                std::vector<int> ids;
                for (TorusDir d : dblock) ids.push_back(geo.edge_at[v][static_cast<int>(d)]);
                std::sort(ids.begin(), ids.end());
                blocks.push_back(std::move(ids));
            }
            std::sort(blocks.begin(), blocks.end());
            f.blocks[v] = std::move(blocks);
        }
        out.emplace_back(std::move(f), classify_partition(part));
    }
    return out;
}

Graph torus_fixed_point_model(TorusFixedPointType type, long ell) {
    using S = GraphFamilySpec;
    switch (type) {
        case TorusFixedPointType::matching:
            return generate_family(S::matching(2 * ell * ell));
        case TorusFixedPointType::matching_and_cycles:
            return generate_family(
                S::join({S::matching(ell * ell), S::scaled(ell, S::cycle(ell))}));
        case TorusFixedPointType::wedge_packing:
            return generate_family(S::scaled(ell * ell, S::path(2)));
        case TorusFixedPointType::cycle_packing_i:
            return generate_family(S::scaled(2 * ell, S::cycle(ell)));
        case TorusFixedPointType::cycle_packing_ii:
            return generate_family(S::scaled(ell, S::cycle(2 * ell)));
        case TorusFixedPointType::sun_packing:
            return generate_family(S::scaled(ell, S::sun(ell)));
        case TorusFixedPointType::torus:
            return generate_family(S::torus(ell));
    }
    throw usage_error("torus fixed point model: unknown type");
}

}  // namespace edgesub
