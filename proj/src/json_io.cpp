#include "gridtri/json_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace gridtri {

std::string to_json(const Triangulation& t) {
    std::ostringstream os;
    os << "{\"m\":" << t.grid.m << ",\"n\":" << t.grid.n << ",\"triangles\":[";
    bool first_tri = true;
    for (const auto& tr : t.triangles) {
        if (!first_tri) os << ",";
        first_tri = false;
        os << "[";
        for (int i = 0; i < 3; ++i) {
            if (i) os << ",";
            os << "[" << tr.v[i].x << "," << tr.v[i].y << "]";
        }
        os << "]";
    }
    os << "]}\n";
    return os.str();
}

Triangulation triangulation_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("triangulation JSON: ") + e.what());
    }
    if (!j.is_object() || !j.contains("m") || !j.contains("n") || !j.contains("triangles"))
        throw std::invalid_argument("triangulation JSON: expected {m, n, triangles}");
    GridSpec g(j["m"].get<int>(), j["n"].get<int>());
    std::vector<Triangle> tris;
    for (const auto& jt : j["triangles"]) {
        if (!jt.is_array() || jt.size() != 3)
            throw std::invalid_argument("triangulation JSON: triangle must have 3 vertices");
        LatticePoint p[3];
        for (int i = 0; i < 3; ++i) {
            if (!jt[i].is_array() || jt[i].size() != 2)
                throw std::invalid_argument("triangulation JSON: vertex must be [x,y]");
            p[i] = LatticePoint{jt[i][0].get<int>(), jt[i][1].get<int>()};
        }
        tris.emplace_back(p[0], p[1], p[2]);
    }
    return Triangulation::from_triangles(g, std::move(tris));
}

Triangulation read_triangulation_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::stringstream ss;
    ss << in.rdbuf();
    return triangulation_from_json(ss.str());
}

void write_triangulation_file(const Triangulation& t, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << to_json(t);
}

}  // namespace gridtri
