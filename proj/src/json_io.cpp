#include "edgesub/json_io.hpp"

#include "edgesub/errors.hpp"

namespace edgesub {

using nlohmann::json;

json fracture_to_json(const Fracture& f) {
    json out = json::array();
    for (const auto& part : f.blocks) {
        json vertex = json::array();
        for (const auto& block : part) vertex.push_back(block);
        out.push_back(vertex);
    }
    return out;
}

Fracture fracture_from_json(const json& j) {
    if (!j.is_array()) throw parse_error("fracture JSON: expected an array per vertex");
    Fracture f;
    for (const auto& vertex : j) {
        if (!vertex.is_array()) throw parse_error("fracture JSON: expected block arrays");
        std::vector<std::vector<int>> part;
        for (const auto& block : vertex) {
            std::vector<int> ids = block.get<std::vector<int>>();
            std::sort(ids.begin(), ids.end());
            part.push_back(std::move(ids));
        }
        std::sort(part.begin(), part.end());
        f.blocks.push_back(std::move(part));
    }
    return f;
}

namespace {

json int_to_json(const Int& v) {
    if (v >= std::numeric_limits<std::int64_t>::min() &&
        v <= std::numeric_limits<std::int64_t>::max())
        return v.convert_to<std::int64_t>();
    return v.str();
}

}  // namespace

json to_json(const Verdict& v) {
    return json{{"facet", v.facet}, {"tag", to_string(v.tag)}, {"citation", v.citation}};
}

json to_json(const CoefficientTable& t) {
    json entries = json::array();
    for (size_t i = 0; i < t.order.size(); ++i)
        entries.push_back(json{{"fracture", fracture_to_json(t.order[i])},
                               {"value", int_to_json(t.values[i])}});
    return json{{"property", t.property},
                {"base_vertices", t.h.vertex_count()},
                {"base_edges", t.h.edges()},
                {"entries", entries}};
}

json to_json(const MonotonicityMatrix& m) {
    json order = json::array();
    for (const auto& f : m.order) order.push_back(fracture_to_json(f));
    json cells = json::array();
    for (const auto& row : m.cells)
        for (const auto& v : row) cells.push_back(int_to_json(v));
    return json{{"base_vertices", m.h.vertex_count()},
                {"base_edges", m.h.edges()},
                {"fracture_order", order},
                {"cells_row_major", cells}};
}

json to_json(const EstimateResult& r) {
    return json{{"estimate", rat_to_string(r.estimate)},
                {"eps", r.eps},
                {"delta", r.delta},
                {"samples", int_to_json(r.samples)},
                {"seed", r.seed},
                {"exact_path", r.exact_path}};
}

json classification_grid_json(const std::vector<Rat>& xs, const std::vector<Rat>& ys) {
    json points = json::array();
    for (const Rat& y : ys) {
        for (const Rat& x : xs) {
            PointClassification c = classify_point({x, y});
            points.push_back(json{{"x", rat_to_string(x)},
                                  {"y", rat_to_string(y)},
                                  {"exact", to_string(c.exact.tag)},
                                  {"approx", to_string(c.approx.tag)}});
        }
    }
    return json{{"points", points}};
}

std::string rat_to_string(const Rat& r) {
    return boost::multiprecision::numerator(r).str() + "/" +
           boost::multiprecision::denominator(r).str();
}

Rat rat_from_string(const std::string& s) {
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rat(Int(s));
        Int num(s.substr(0, slash));
        Int den(s.substr(slash + 1));
        if (den == 0) throw parse_error("rational: zero denominator in \"" + s + "\"");
        return Rat(num, den);
    } catch (const std::runtime_error&) {
        throw;
    } catch (const std::exception&) {
        throw parse_error("rational: cannot parse \"" + s + "\"");
    }
}

}  // namespace edgesub
