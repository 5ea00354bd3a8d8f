#include "apichain/solutions.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

using json = nlohmann::json;

namespace apichain {

std::string Solution::arrow_text() const {
    std::ostringstream out;
    for (size_t i = 0; i < steps.size(); ++i) {
        if (i) out << " -> ";
        out << steps[i];
    }
    return out.str();
}

bool StructuralJudge::equivalent(const Solution& a, const Solution& b, const ApiLibrary& lib) {
    if (a.steps.empty() || b.steps.empty()) return false;
    if (a.steps.back() != b.steps.back()) return false;
    std::set<std::string> inputs_a;
    std::set<std::string> inputs_b;
    for (const auto& attr : lib.at(a.steps.front()).inputs) inputs_a.insert(attr.name);
    for (const auto& attr : lib.at(b.steps.front()).inputs) inputs_b.insert(attr.name);
    return inputs_a == inputs_b;
}

bool SolutionLibrary::contains_steps(const std::vector<std::string>& steps) const {
    return find_by_steps(steps) != nullptr;
}

const Solution* SolutionLibrary::find_by_steps(const std::vector<std::string>& steps) const {
    for (const auto& s : solutions)
        if (s.steps == steps) return &s;
    return nullptr;
}

namespace {

void extend(const ApiGraph& g, Solution& current, int max_hops, std::vector<Solution>& out) {
    out.push_back(current);
    if (static_cast<int>(current.steps.size()) >= max_hops) return;
    const std::string& last = current.steps.back();
    for (const auto& edge : g.edges) {
        if (edge.from != last) continue;
        for (const auto& attr : edge.attributes) {
            current.steps.push_back(edge.to);
            current.hop_links.push_back(attr);
            extend(g, current, max_hops, out);
            current.steps.pop_back();
            current.hop_links.pop_back();
        }
    }
}

}  // namespace

std::vector<Solution> enumerate_solutions(const ApiGraph& g, int max_hops) {
    if (max_hops < 1) throw std::invalid_argument("hop limit must be positive");
    std::vector<Solution> out;
    for (const auto& entry : entry_apis(g)) {
        Solution seed;
        seed.steps.push_back(entry);
        extend(g, seed, max_hops, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_valid(const Solution& s, const ApiGraph& g) {
    if (s.steps.empty()) return false;
    for (const auto& step : s.steps) {
        if (std::find(g.nodes.begin(), g.nodes.end(), step) == g.nodes.end())
            throw std::invalid_argument("unknown API '" + step + "' in solution");
    }
    if (s.hop_links.size() + 1 != s.steps.size()) return false;
    auto it = g.indegree.find(s.steps.front());
    if (it == g.indegree.end() || it->second != 0) return false;
    for (size_t i = 0; i + 1 < s.steps.size(); ++i) {
        const CouplingEdge* edge = g.find_edge(s.steps[i], s.steps[i + 1]);
        if (!edge) return false;
        const auto& attrs = edge->attributes;
        if (std::find(attrs.begin(), attrs.end(), s.hop_links[i]) == attrs.end()) return false;
    }
    return true;
}

InsertOutcome insert_concise(SolutionLibrary& lib, const Solution& s, EquivalenceJudge& judge,
                             const ApiLibrary& api_lib, Provenance provenance) {
    // Judge every stored solution first so a judge failure leaves the
    // library untouched.
    std::vector<size_t> equivalent_idx;
    for (size_t i = 0; i < lib.solutions.size(); ++i) {
        if (judge.equivalent(lib.solutions[i], s, api_lib)) equivalent_idx.push_back(i);
    }
    for (size_t i : equivalent_idx) {
        if (lib.solutions[i].steps.size() <= s.steps.size()) return InsertOutcome::RejectedEquivalent;
    }
    const bool replaced = !equivalent_idx.empty();
    for (auto it = equivalent_idx.rbegin(); it != equivalent_idx.rend(); ++it) {
        lib.solutions.erase(lib.solutions.begin() + static_cast<long>(*it));
        lib.provenance.erase(lib.provenance.begin() + static_cast<long>(*it));
    }
    lib.solutions.push_back(s);
    lib.provenance.push_back(provenance);
    return replaced ? InsertOutcome::ReplacedLonger : InsertOutcome::Inserted;
}

SolutionLibrary build_concise_library(const ApiGraph& g, const ApiLibrary& api_lib, int max_hops,
                                      EquivalenceJudge& judge) {
    SolutionLibrary lib;
    lib.max_hops = max_hops;
    for (const auto& s : enumerate_solutions(g, max_hops)) {
        insert_concise(lib, s, judge, api_lib);
    }
    return lib;
}

json solution_to_json(const Solution& s) {
    return json{{"steps", s.steps}, {"hop_links", s.hop_links}};
}

Solution solution_from_json(const json& doc) {
    Solution s;
    s.steps = doc.at("steps").get<std::vector<std::string>>();
    s.hop_links = doc.value("hop_links", std::vector<std::string>{});
    return s;
}

json solution_library_to_json(const SolutionLibrary& lib) {
    json doc;
    doc["max_hops"] = lib.max_hops;
    json arr = json::array();
    for (size_t i = 0; i < lib.solutions.size(); ++i) {
        json node = solution_to_json(lib.solutions[i]);
        node["provenance"] = lib.provenance[i] == Provenance::Manual ? "manual" : "enumerated";
        arr.push_back(node);
    }
    doc["solutions"] = arr;
    return doc;
}

SolutionLibrary solution_library_from_json(const json& doc) {
    SolutionLibrary lib;
    lib.max_hops = doc.value("max_hops", 0);
    for (const auto& node : doc.at("solutions")) {
        lib.solutions.push_back(solution_from_json(node));
        lib.provenance.push_back(node.value("provenance", "enumerated") == "manual"
                                     ? Provenance::Manual
                                     : Provenance::Enumerated);
    }
    return lib;
}

}  // namespace apichain
