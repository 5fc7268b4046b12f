#include "critgraph/graph_io.hpp"

#include <fstream>
#include <sstream>

namespace critgraph {

nlohmann::json graph_to_json(const Graph& g) {
    nlohmann::json edges = nlohmann::json::array();
    for (const Edge& e : g.edges()) {
        edges.push_back({e.u, e.v});
    }
    return nlohmann::json{{"n", g.n()}, {"edges", edges}};
}

Graph graph_from_json(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("n") || !j.contains("edges")) {
        throw std::invalid_argument("graph JSON must be {\"n\":..., \"edges\":[...]}");
    }
    int n = j.at("n").get<int>();
    std::vector<Edge> edges;
    for (const auto& pair : j.at("edges")) {
        if (!pair.is_array() || pair.size() != 2) {
            throw std::invalid_argument("graph JSON edge must be a pair");
        }
        edges.push_back(make_edge(pair[0].get<int>(), pair[1].get<int>()));
    }
    return Graph(n, std::move(edges));
}

void write_dimacs(std::ostream& os, const Graph& g) {
    os << "p edge " << g.n() << " " << g.m() << "\n";
    for (const Edge& e : g.edges()) {
        os << "e " << e.u + 1 << " " << e.v + 1 << "\n";
    }
}

Graph read_dimacs(std::istream& is) {
    int n = -1;
    long declared_m = -1;
    std::vector<Edge> edges;
    std::string line;
    while (std::getline(is, line)) {
        if (line.empty() || line[0] == 'c') continue;
        std::istringstream ss(line);
        char tag;
        ss >> tag;
        if (tag == 'p') {
            std::string format;
            ss >> format >> n >> declared_m;
            if (!ss || format != "edge") {
                throw std::invalid_argument("bad DIMACS problem line: " + line);
            }
        } else if (tag == 'e') {
            int a, b;
            ss >> a >> b;
            if (!ss) throw std::invalid_argument("bad DIMACS edge line: " + line);
            if (n < 0) throw std::invalid_argument("DIMACS edge before problem line");
            edges.push_back(make_edge(a - 1, b - 1));
        }
    }
    if (n < 0) throw std::invalid_argument("DIMACS input has no problem line");
    if (declared_m != static_cast<long>(edges.size())) {
        throw std::invalid_argument("DIMACS edge count mismatch: declared " +
                                    std::to_string(declared_m) + ", found " +
                                    std::to_string(edges.size()));
    }
    return Graph(n, std::move(edges));
}

namespace {

bool has_suffix(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() &&
           s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

Graph load_graph_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    if (has_suffix(path, ".col") || has_suffix(path, ".dimacs")) {
        return read_dimacs(in);
    }
    nlohmann::json j;
    in >> j;
    return graph_from_json(j);
}

void save_graph_file(const std::string& path, const Graph& g) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    if (has_suffix(path, ".col") || has_suffix(path, ".dimacs")) {
        write_dimacs(out, g);
    } else {
        out << graph_to_json(g).dump(2) << "\n";
    }
}

}  // namespace critgraph
