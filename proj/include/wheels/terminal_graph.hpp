#pragma once

#include <algorithm>
#include <string_view>
#include <utility>
#include <vector>

#include "wheels/error.hpp"
#include "wheels/graph.hpp"

namespace wheels {

/// A graph together with a distinguished terminal sequence S. In ordered mode
/// the sequence is the clockwise boundary order; unordered mode treats S as a set.
class TerminalGraph {
public:
    TerminalGraph() = default;

    TerminalGraph(Graph g, std::vector<Vertex> terminals, bool ordered = true)
        : graph_(std::move(g)), terminals_(std::move(terminals)), ordered_(ordered) {
        VertexSet seen;
        for (const auto& t : terminals_) {
            if (!graph_.contains(t)) throw input_error("terminal '" + t + "' is not a vertex of the graph");
            if (!seen.insert(t).second) throw input_error("terminal '" + t + "' listed twice");
        }
    }

    const Graph& graph() const { return graph_; }
    const std::vector<Vertex>& terminals() const { return terminals_; }
    bool ordered() const { return ordered_; }

    VertexSet terminal_set() const { return VertexSet(terminals_.begin(), terminals_.end()); }
    bool is_terminal(std::string_view v) const {
        return std::find(terminals_.begin(), terminals_.end(), v) != terminals_.end();
    }

    /// Vertices not in S.
    std::vector<Vertex> interior() const {
        std::vector<Vertex> out;
        for (const auto& v : graph_.vertices()) {
            if (!is_terminal(v)) out.push_back(v);
        }
        return out;
    }

    TerminalGraph with_order(bool ordered) const { return TerminalGraph(graph_, terminals_, ordered); }

private:
    Graph graph_;
    std::vector<Vertex> terminals_;
    bool ordered_ = true;
};

}  // namespace wheels
