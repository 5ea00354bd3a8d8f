#pragma once

#include "apichain/graph.hpp"
#include "apichain/registry.hpp"

#include <memory>
#include <string>
#include <vector>

namespace apichain {

/// An ordered API calling sequence with the attribute chosen for each hop.
struct Solution {
    std::vector<std::string> steps;      // length J >= 1
    std::vector<std::string> hop_links;  // length J - 1

    bool operator==(const Solution& other) const {
        return steps == other.steps && hop_links == other.hop_links;
    }
    bool operator<(const Solution& other) const {
        if (steps != other.steps) return steps < other.steps;
        return hop_links < other.hop_links;
    }

    std::string arrow_text() const;  // "a -> b -> c"
};

enum class Provenance { Enumerated, Manual };

enum class InsertOutcome { Inserted, RejectedEquivalent, ReplacedLonger };

/// Decides whether two solutions obtain the same information; used to keep
/// only the most concise representative of each equivalence class.
class EquivalenceJudge {
public:
    virtual ~EquivalenceJudge() = default;
    virtual bool equivalent(const Solution& a, const Solution& b, const ApiLibrary& lib) = 0;
};

/// Structural default: equivalent iff the entry APIs accept the same input
/// attribute set and the terminal API is the same (hence the same reachable
/// output attributes). Deterministic, no model access needed.
class StructuralJudge : public EquivalenceJudge {
public:
    bool equivalent(const Solution& a, const Solution& b, const ApiLibrary& lib) override;
};

struct SolutionLibrary {
    std::vector<Solution> solutions;
    std::vector<Provenance> provenance;  // parallel to solutions
    int max_hops = 0;

    bool contains_steps(const std::vector<std::string>& steps) const;
    const Solution* find_by_steps(const std::vector<std::string>& steps) const;
};

/// Number of APIs in the sequence (J). One-hop means one API call.
inline int hop_count(const Solution& s) { return static_cast<int>(s.steps.size()); }

/// Every path of 1..max_hops APIs starting at an entry node, expanded to one
/// Solution per choice of hop attribute. Node revisits are allowed; the hop
/// limit is the only bound. Output is sorted (steps, then links).
std::vector<Solution> enumerate_solutions(const ApiGraph& g, int max_hops);

/// True iff the solution starts at a zero-indegree node and every hop link is
/// licensed by a graph edge. Throws on API names absent from the graph.
bool is_valid(const Solution& s, const ApiGraph& g);

/// Conciseness-preserving insert: a new solution is rejected when an equally
/// short or shorter equivalent is already stored, and replaces any stored
/// longer equivalents. Judge failures propagate with the library unchanged.
InsertOutcome insert_concise(SolutionLibrary& lib, const Solution& s, EquivalenceJudge& judge,
                             const ApiLibrary& api_lib,
                             Provenance provenance = Provenance::Enumerated);

/// enumerate + insert_concise over the whole traversal.
SolutionLibrary build_concise_library(const ApiGraph& g, const ApiLibrary& api_lib, int max_hops,
                                      EquivalenceJudge& judge);

nlohmann::json solution_to_json(const Solution& s);
Solution solution_from_json(const nlohmann::json& doc);
nlohmann::json solution_library_to_json(const SolutionLibrary& lib);
SolutionLibrary solution_library_from_json(const nlohmann::json& doc);

}  // namespace apichain
