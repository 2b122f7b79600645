#include "edgesub/family.hpp"

#include <sstream>

#include "edgesub/errors.hpp"

namespace edgesub {

using Kind = GraphFamilySpec::Kind;

GraphFamilySpec GraphFamilySpec::matching(long k) { return {Kind::matching, k, 0, {}}; }
GraphFamilySpec GraphFamilySpec::path(long k) { return {Kind::path, k, 0, {}}; }
GraphFamilySpec GraphFamilySpec::cycle(long k) { return {Kind::cycle, k, 0, {}}; }
GraphFamilySpec GraphFamilySpec::star(long k) { return {Kind::star, k, 0, {}}; }
GraphFamilySpec GraphFamilySpec::biclique(long l, long r) { return {Kind::biclique, l, r, {}}; }
GraphFamilySpec GraphFamilySpec::complete(long n) { return {Kind::complete, n, 0, {}}; }
GraphFamilySpec GraphFamilySpec::sun(long l) { return {Kind::sun, l, 0, {}}; }
GraphFamilySpec GraphFamilySpec::torus(long l) { return {Kind::torus, l, 0, {}}; }
GraphFamilySpec GraphFamilySpec::grid(long k) { return {Kind::grid, k, 0, {}}; }

GraphFamilySpec GraphFamilySpec::scaled(long copies, GraphFamilySpec inner) {
    GraphFamilySpec s{Kind::scaled, copies, 0, {}};
    s.parts.push_back(std::move(inner));
    return s;
}

GraphFamilySpec GraphFamilySpec::join(std::vector<GraphFamilySpec> parts) {
    GraphFamilySpec s{Kind::disjoint_union, 0, 0, std::move(parts)};
    return s;
}

std::string GraphFamilySpec::describe() const {
    std::ostringstream out;
    switch (kind) {
        case Kind::matching: out << "m" << a; break;
        case Kind::path: out << "p" << a; break;
        case Kind::cycle: out << "c" << a; break;
        case Kind::star: out << "star" << a; break;
        case Kind::biclique: out << "biclique:" << a << "," << b; break;
        case Kind::complete: out << "k" << a; break;
        case Kind::sun: out << "s" << a; break;
        case Kind::torus: out << "torus:" << a; break;
        case Kind::grid: out << "grid:" << a; break;
        case Kind::scaled:
            out << a << "x" << parts.front().describe();
            break;
        case Kind::disjoint_union: {
            for (size_t i = 0; i < parts.size(); ++i) {
                if (i) out << "+";
                out << parts[i].describe();
            }
            break;
        }
    }
    return out.str();
}

namespace {

void require(bool ok, const std::string& msg) {
    if (!ok) throw usage_error("family: " + msg);
}

}  // namespace

Graph generate_family(const GraphFamilySpec& spec) {
    std::vector<std::pair<int, int>> edges;
    switch (spec.kind) {
        case Kind::matching: {
            require(spec.a >= 0, "matching size must be >= 0");
            for (long i = 0; i < spec.a; ++i)
                edges.emplace_back(static_cast<int>(2 * i), static_cast<int>(2 * i + 1));
            return Graph(static_cast<int>(2 * spec.a), std::move(edges));
        }
        case Kind::path: {
            require(spec.a >= 0, "path length must be >= 0");
            for (long i = 0; i < spec.a; ++i)
                edges.emplace_back(static_cast<int>(i), static_cast<int>(i + 1));
            return Graph(static_cast<int>(spec.a + (spec.a > 0 ? 1 : 0)), std::move(edges));
        }
        case Kind::cycle: {
            require(spec.a >= 3, "cycle needs length >= 3");
            for (long i = 0; i < spec.a; ++i)
                edges.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % spec.a));
            return Graph(static_cast<int>(spec.a), std::move(edges));
        }
        case Kind::star: {
            require(spec.a >= 1, "star needs >= 1 leaf");
            for (long i = 1; i <= spec.a; ++i) edges.emplace_back(0, static_cast<int>(i));
            return Graph(static_cast<int>(spec.a + 1), std::move(edges));
        }
        case Kind::biclique: {
            require(spec.a >= 1 && spec.b >= 1, "biclique sides must be >= 1");
            for (long i = 0; i < spec.a; ++i)
                for (long j = 0; j < spec.b; ++j)
                    edges.emplace_back(static_cast<int>(i), static_cast<int>(spec.a + j));
            return Graph(static_cast<int>(spec.a + spec.b), std::move(edges));
        }
        case Kind::complete: {
            require(spec.a >= 1, "complete graph needs >= 1 vertex");
            for (long i = 0; i < spec.a; ++i)
                for (long j = i + 1; j < spec.a; ++j)
                    edges.emplace_back(static_cast<int>(i), static_cast<int>(j));
            return Graph(static_cast<int>(spec.a), std::move(edges));
        }
        case Kind::sun: {
            require(spec.a >= 3, "sun needs cycle length >= 3");
            for (long i = 0; i < spec.a; ++i) {
                edges.emplace_back(static_cast<int>(i), static_cast<int>((i + 1) % spec.a));
                edges.emplace_back(static_cast<int>(i), static_cast<int>(spec.a + i));
            }
            return Graph(static_cast<int>(2 * spec.a), std::move(edges));
        }
        case Kind::torus: {
            require(spec.a >= 3, "torus needs side length >= 3");
            const long l = spec.a;
            auto id = [&](long i, long j) { return static_cast<int>(i * l + j); };
            for (long i = 0; i < l; ++i)
                for (long j = 0; j < l; ++j) {
                    edges.emplace_back(id(i, j), id((i + 1) % l, j));
                    edges.emplace_back(id(i, j), id(i, (j + 1) % l));
                }
            return Graph(static_cast<int>(l * l), std::move(edges));
        }
        case Kind::grid: {
            require(spec.a >= 1, "grid needs side length >= 1");
            const long k = spec.a;
            auto id = [&](long i, long j) { return static_cast<int>(i * k + j); };
            for (long i = 0; i < k; ++i)
                for (long j = 0; j < k; ++j) {
                    if (i + 1 < k) edges.emplace_back(id(i, j), id(i + 1, j));
                    if (j + 1 < k) edges.emplace_back(id(i, j), id(i, j + 1));
                }
            return Graph(static_cast<int>(k * k), std::move(edges));
        }
        case Kind::scaled: {
            require(spec.a >= 0, "copy count must be >= 0");
            require(spec.parts.size() == 1, "scaled spec needs exactly one inner spec");
            Graph inner = generate_family(spec.parts.front());
            Graph out(0, {});
            for (long i = 0; i < spec.a; ++i) out = disjoint_union(out, inner);
            return out;
        }
        case Kind::disjoint_union: {
            Graph out(0, {});
            for (const auto& part : spec.parts) out = disjoint_union(out, generate_family(part));
            return out;
        }
    }
    throw usage_error("family: unknown kind");
}

namespace {

GraphFamilySpec parse_term(const std::string& term) {
    auto starts_with = [&](const std::string& p) {
        return term.size() > p.size() && term.compare(0, p.size(), p) == 0;
    };
    auto num_after = [&](size_t pos) -> long {
        if (pos >= term.size()) throw parse_error("family spec: missing number in \"" + term + "\"");
        size_t used = 0;
        long v = 0;
        try {
            v = std::stol(term.substr(pos), &used);
        } catch (const std::exception&) {
            throw parse_error("family spec: bad number in \"" + term + "\"");
        }
        if (used != term.size() - pos)
            throw parse_error("family spec: trailing characters in \"" + term + "\"");
        return v;
    };

    // scaled copies: "<n>x<spec>"
    size_t x = term.find('x');
    if (x != std::string::npos && x > 0 &&
        term.find_first_not_of("0123456789", 0) == x) {
        long copies = std::stol(term.substr(0, x));
        return GraphFamilySpec::scaled(copies, parse_term(term.substr(x + 1)));
    }

    if (starts_with("torus:")) return GraphFamilySpec::torus(num_after(6));
    if (starts_with("grid:")) return GraphFamilySpec::grid(num_after(5));
    if (starts_with("star")) return GraphFamilySpec::star(num_after(4));
    if (starts_with("biclique:")) {
        size_t comma = term.find(',', 9);
        if (comma == std::string::npos)
            throw parse_error("family spec: biclique needs \"biclique:l,r\"");
        try {
            long l = std::stol(term.substr(9, comma - 9));
            long r = std::stol(term.substr(comma + 1));
            return GraphFamilySpec::biclique(l, r);
        } catch (const std::exception&) {
            throw parse_error("family spec: bad biclique parameters in \"" + term + "\"");
        }
    }
    if (term.size() >= 2) {
        switch (term[0]) {
            case 'm': return GraphFamilySpec::matching(num_after(1));
            case 'p': return GraphFamilySpec::path(num_after(1));
            case 'c': return GraphFamilySpec::cycle(num_after(1));
            case 'k': return GraphFamilySpec::complete(num_after(1));
            case 's': return GraphFamilySpec::sun(num_after(1));
            case 't': return GraphFamilySpec::torus(num_after(1));
            case 'g': return GraphFamilySpec::grid(num_after(1));
            default: break;
        }
    }
    throw parse_error("family spec: cannot parse \"" + term + "\"");
}

}  // namespace

GraphFamilySpec parse_family_spec(const std::string& text) {
    std::vector<GraphFamilySpec> terms;
    std::string current;
    std::istringstream in(text);
    while (std::getline(in, current, '+')) {
        if (current.empty()) throw parse_error("family spec: empty term in \"" + text + "\"");
        terms.push_back(parse_term(current));
    }
    if (terms.empty()) throw parse_error("family spec: empty");
    if (terms.size() == 1) return terms.front();
    return GraphFamilySpec::join(std::move(terms));
}

}  // namespace edgesub
