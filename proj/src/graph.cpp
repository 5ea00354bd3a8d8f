#include "apichain/graph.hpp"

#include <algorithm>
#include <set>
#include <sstream>

using json = nlohmann::json;

namespace apichain {

namespace {

// Attributes an API can hand onward: its declared outputs plus the element
// fields of record-list outputs.
void collect_produced(const std::vector<AttributeSpec>& attrs, LinkPolicy policy,
                      std::set<std::string>& out) {
    for (const auto& a : attrs) {
        if (policy == LinkPolicy::RawIntersection || a.linkable) out.insert(a.name);
        if (!a.element.empty()) collect_produced(a.element, policy, out);
    }
}

}  // namespace

const CouplingEdge* ApiGraph::find_edge(const std::string& from, const std::string& to) const {
    for (const auto& e : edges)
        if (e.from == from && e.to == to) return &e;
    return nullptr;
}

std::vector<std::string> coupling_attributes(const ApiSpec& from, const ApiSpec& to,
                                             LinkPolicy policy) {
    std::set<std::string> produced;
    collect_produced(from.outputs, policy, produced);
    std::vector<std::string> shared;
    for (const auto& input : to.inputs) {
        if (produced.count(input.name)) shared.push_back(input.name);
    }
    std::sort(shared.begin(), shared.end());
    return shared;
}

ApiGraph build_graph(const ApiLibrary& lib, LinkPolicy policy) {
    ApiGraph g;
    for (const auto& api : lib.apis) {
        g.nodes.push_back(api.name);
        g.indegree[api.name] = 0;
    }
    for (const auto& from : lib.apis) {
        for (const auto& to : lib.apis) {
            auto shared = coupling_attributes(from, to, policy);
            if (shared.empty()) continue;
            g.edges.push_back({from.name, to.name, std::move(shared)});
            g.indegree[to.name] += 1;
        }
    }
    return g;
}

std::vector<std::string> entry_apis(const ApiGraph& g) {
    std::vector<std::string> entries;
    for (const auto& node : g.nodes) {
        auto it = g.indegree.find(node);
        if (it != g.indegree.end() && it->second == 0) entries.push_back(node);
    }
    return entries;
}

json graph_to_json(const ApiGraph& g) {
    json doc;
    doc["nodes"] = g.nodes;
    json edges = json::array();
    for (const auto& e : g.edges) {
        edges.push_back({{"from", e.from}, {"to", e.to}, {"attributes", e.attributes}});
    }
    doc["edges"] = edges;
    json indeg = json::object();
    for (const auto& [node, count] : g.indegree) indeg[node] = count;
    doc["indegree"] = indeg;
    doc["entry"] = entry_apis(g);
    return doc;
}

std::string graph_to_dot(const ApiGraph& g) {
    std::ostringstream out;
    out << "digraph api_graph {\n";
    for (const auto& node : g.nodes) out << "  \"" << node << "\";\n";
    for (const auto& e : g.edges) {
        out << "  \"" << e.from << "\" -> \"" << e.to << "\" [label=\"";
        for (size_t i = 0; i < e.attributes.size(); ++i) {
            if (i) out << ", ";
            out << e.attributes[i];
        }
        out << "\"];\n";
    }
    out << "}\n";
    return out.str();
}

}  // namespace apichain
