#pragma once

#include <set>
#include <utility>
#include <vector>

namespace gthick {

using VertexId = int;

// Unordered pair stored with the smaller id first.
using Edge = std::pair<VertexId, VertexId>;

inline Edge make_edge(VertexId u, VertexId v) {
    return u < v ? Edge{u, v} : Edge{v, u};
}

// Simple undirected graph over stable integer vertex ids.
class Graph {
public:
    Graph() = default;

    void add_vertex(VertexId v) { vertices_.insert(v); }
    void add_edge(VertexId u, VertexId v);
    void remove_vertex(VertexId v);
    void remove_edge(VertexId u, VertexId v);

    bool has_vertex(VertexId v) const { return vertices_.count(v) > 0; }
    bool has_edge(VertexId u, VertexId v) const {
        return edges_.count(make_edge(u, v)) > 0;
    }

    size_t vertex_count() const { return vertices_.size(); }
    size_t edge_count() const { return edges_.size(); }

    const std::set<VertexId>& vertices() const { return vertices_; }
    const std::set<Edge>& edges() const { return edges_; }

    std::vector<VertexId> neighbors(VertexId v) const;
    size_t degree(VertexId v) const;

    bool operator==(const Graph& o) const = default;

    // Convenience factories used all over the tests.
    static Graph path(int n);
    static Graph cycle(int n);
    static Graph complete(int n);
    static Graph star(int leaves);

private:
    std::set<VertexId> vertices_;
    std::set<Edge> edges_;
};

}  // namespace gthick
