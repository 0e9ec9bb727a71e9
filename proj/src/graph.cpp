#include "gthick/graph.hpp"

#include "gthick/errors.hpp"

namespace gthick {

void Graph::add_edge(VertexId u, VertexId v) {
    if (u == v)
        throw ParameterOutOfRangeError("loops are not allowed (vertex " +
                                       std::to_string(u) + ")");
    vertices_.insert(u);
    vertices_.insert(v);
    edges_.insert(make_edge(u, v));
}

void Graph::remove_vertex(VertexId v) {
    vertices_.erase(v);
    for (auto it = edges_.begin(); it != edges_.end();) {
        if (it->first == v || it->second == v)
            it = edges_.erase(it);
        else
            ++it;
    }
}

void Graph::remove_edge(VertexId u, VertexId v) {
    edges_.erase(make_edge(u, v));
}

std::vector<VertexId> Graph::neighbors(VertexId v) const {
    std::vector<VertexId> result;
    for (const Edge& e : edges_) {
        if (e.first == v) result.push_back(e.second);
        if (e.second == v) result.push_back(e.first);
    }
    return result;
}

size_t Graph::degree(VertexId v) const { return neighbors(v).size(); }

Graph Graph::path(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i + 1 < n; ++i) g.add_edge(i, i + 1);
    return g;
}

Graph Graph::cycle(int n) {
    Graph g = path(n);
    if (n >= 3) g.add_edge(n - 1, 0);
    return g;
}

Graph Graph::complete(int n) {
    Graph g;
    for (int i = 0; i < n; ++i) g.add_vertex(i);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) g.add_edge(i, j);
    return g;
}

Graph Graph::star(int leaves) {
    Graph g;
    g.add_vertex(0);
    for (int i = 1; i <= leaves; ++i) g.add_edge(0, i);
    return g;
}

}  // namespace gthick
