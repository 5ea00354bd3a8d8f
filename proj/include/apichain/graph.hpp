#pragma once

#include "apichain/registry.hpp"

#include <map>
#include <string>
#include <vector>

namespace apichain {

/// Which shared attributes may carry a dependency between two APIs.
///
/// LinkableOnly admits linkable (entity id) attributes; this keeps search
/// APIs at zero indegree, since text attributes such as `name` flow back out
/// of lookup APIs. RawIntersection admits every shared attribute name and is
/// kept selectable for experimentation.
enum class LinkPolicy { LinkableOnly, RawIntersection };

/// Directed dependency: `attributes` can be produced by `from` and consumed
/// as input parameters by `to`.
struct CouplingEdge {
    std::string from;
    std::string to;
    std::vector<std::string> attributes;  // sorted, nonempty
};

struct ApiGraph {
    std::vector<std::string> nodes;  // library order
    std::vector<CouplingEdge> edges;
    std::map<std::string, int> indegree;

    const CouplingEdge* find_edge(const std::string& from, const std::string& to) const;
};

/// Attributes of `from` usable as input parameters of `to` under the policy.
/// Nested element attributes of list-shaped outputs count as produced
/// attributes (an author list yields person ids).
std::vector<std::string> coupling_attributes(const ApiSpec& from, const ApiSpec& to,
                                             LinkPolicy policy);

/// Build the dependency graph: one edge per ordered API pair with a nonempty
/// coupling attribute set. Self-loops permitted. Deterministic edge order
/// (library order of `from`, then of `to`).
ApiGraph build_graph(const ApiLibrary& lib, LinkPolicy policy = LinkPolicy::LinkableOnly);

/// Nodes with zero indegree; the only permitted solution entry points.
std::vector<std::string> entry_apis(const ApiGraph& g);

nlohmann::json graph_to_json(const ApiGraph& g);
std::string graph_to_dot(const ApiGraph& g);

}  // namespace apichain
