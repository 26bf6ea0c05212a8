#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "comfykit/error.hpp"
#include "comfykit/literal.hpp"

namespace comfykit {

/// Positive integer identifier, unique within one workflow.
using NodeId = std::int64_t;

/// Reference to an output slot of another node.
struct LinkRef {
    NodeId source = 0;
    std::size_t output_index = 0;

    bool operator==(const LinkRef&) const = default;
};

using InputValue = std::variant<Literal, LinkRef>;

inline bool is_link(const InputValue& v) { return std::holds_alternative<LinkRef>(v); }

/// One node of a workflow: class name plus its named inputs in insertion
/// order. Input names are unique; an input is either a literal or a link.
class NodeInstance {
public:
    NodeInstance() = default;
    explicit NodeInstance(std::string class_name) : class_name_(std::move(class_name)) {}

    const std::string& class_name() const { return class_name_; }

    void set_input(const std::string& name, InputValue value) {
        for (auto& [n, v] : inputs_) {
            if (n == name) {
                v = std::move(value);
                return;
            }
        }
        inputs_.emplace_back(name, std::move(value));
    }

    const InputValue* find_input(const std::string& name) const {
        for (const auto& [n, v] : inputs_) {
            if (n == name) return &v;
        }
        return nullptr;
    }

    bool remove_input(const std::string& name) {
        auto it = std::find_if(inputs_.begin(), inputs_.end(),
                               [&](const auto& p) { return p.first == name; });
        if (it == inputs_.end()) return false;
        inputs_.erase(it);
        return true;
    }

    const std::vector<std::pair<std::string, InputValue>>& inputs() const { return inputs_; }

private:
    std::string class_name_;
    std::vector<std::pair<std::string, InputValue>> inputs_;
};

/// Workflow DAG: node id -> node instance. The map keeps ids in ascending
/// order, which the canonical serializers rely on.
class WorkflowGraph {
public:
    void add_node(NodeId id, NodeInstance node) {
        if (id < 1) throw Error(errc::node_key, "node id must be >= 1, got " + std::to_string(id));
        auto [it, inserted] = nodes_.emplace(id, std::move(node));
        if (!inserted) throw Error(errc::duplicate_node_key, "duplicate node id " + std::to_string(id));
    }

    bool has_node(NodeId id) const { return nodes_.count(id) > 0; }

    const NodeInstance& node(NodeId id) const {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) throw Error(errc::node_key, "no node with id " + std::to_string(id));
        return it->second;
    }

    NodeInstance& node_mut(NodeId id) {
        auto it = nodes_.find(id);
        if (it == nodes_.end()) throw Error(errc::node_key, "no node with id " + std::to_string(id));
        return it->second;
    }

    const std::map<NodeId, NodeInstance>& nodes() const { return nodes_; }
    std::size_t size() const { return nodes_.size(); }
    bool empty() const { return nodes_.empty(); }

private:
    std::map<NodeId, NodeInstance> nodes_;
};

/// Deterministic topological order: every node after all its link sources,
/// ties broken by ascending node id. Links to absent nodes impose no
/// ordering (validation reports them separately).
inline std::vector<NodeId> topo_order(const WorkflowGraph& graph) {
    std::map<NodeId, std::size_t> indegree;
    std::map<NodeId, std::vector<NodeId>> successors;
    for (const auto& [id, node] : graph.nodes()) indegree[id] = 0;
    for (const auto& [id, node] : graph.nodes()) {
        for (const auto& [name, value] : node.inputs()) {
            if (const auto* link = std::get_if<LinkRef>(&value)) {
                if (!graph.has_node(link->source) || link->source == 0) continue;
                successors[link->source].push_back(id);
                ++indegree[id];
            }
        }
    }

    std::priority_queue<NodeId, std::vector<NodeId>, std::greater<>> ready;
    for (const auto& [id, deg] : indegree) {
        if (deg == 0) ready.push(id);
    }

    std::vector<NodeId> order;
    order.reserve(graph.size());
    while (!ready.empty()) {
        NodeId id = ready.top();
        ready.pop();
        order.push_back(id);
        for (NodeId succ : successors[id]) {
            if (--indegree[succ] == 0) ready.push(succ);
        }
    }

    if (order.size() != graph.size()) {
        // Walk predecessors within the leftover set until one repeats; that
        // node is on a cycle, which reads better than an arbitrary leftover.
        std::set<NodeId> leftover;
        for (const auto& [id, deg] : indegree) {
            if (deg > 0) leftover.insert(id);
        }
        NodeId probe = *leftover.begin();
        std::set<NodeId> seen;
        while (seen.insert(probe).second) {
            for (const auto& [name, value] : graph.node(probe).inputs()) {
                if (const auto* link = std::get_if<LinkRef>(&value)) {
                    if (leftover.count(link->source)) {
                        probe = link->source;
                        break;
                    }
                }
            }
        }
        throw Error(errc::cycle, "cycle detected through node " + std::to_string(probe));
    }
    return order;
}

inline bool graph_has_cycle(const WorkflowGraph& graph) {
    try {
        topo_order(graph);
        return false;
    } catch (const Error& e) {
        if (e.code() == errc::cycle) return true;
        throw;
    }
}

/// Structural equality: same node ids, and per node the same class and the
/// same name -> value mapping. Input order is irrelevant (the canonical
/// emitters reorder inputs, so round-trips compare as maps).
inline bool graph_equal(const WorkflowGraph& a, const WorkflowGraph& b) {
    if (a.size() != b.size()) return false;
    auto ita = a.nodes().begin();
    auto itb = b.nodes().begin();
    for (; ita != a.nodes().end(); ++ita, ++itb) {
        if (ita->first != itb->first) return false;
        const NodeInstance& na = ita->second;
        const NodeInstance& nb = itb->second;
        if (na.class_name() != nb.class_name()) return false;
        if (na.inputs().size() != nb.inputs().size()) return false;
        auto sorted = [](const NodeInstance& n) {
            std::vector<std::pair<std::string, InputValue>> v(n.inputs().begin(), n.inputs().end());
            std::sort(v.begin(), v.end(),
                      [](const auto& x, const auto& y) { return x.first < y.first; });
            return v;
        };
        if (sorted(na) != sorted(nb)) return false;
    }
    return true;
}

}  // namespace comfykit
