#pragma once

#include "apichain/plan.hpp"
#include "apichain/registry.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace apichain {

/// Static kind of an expression: a primitive attribute kind, a record with a
/// known field table, a list of some element kind, or Unknown (error
/// recovery; Unknown never cascades into further findings).
struct Kind {
    enum class Tag { Unknown, Prim, Record, List };

    Tag tag = Tag::Unknown;
    AttrKind prim = AttrKind::Text;
    std::shared_ptr<const std::map<std::string, Kind>> fields;  // Record
    std::shared_ptr<const Kind> elem;                           // List

    static Kind unknown() { return Kind{}; }
    static Kind primitive(AttrKind k) {
        Kind kind;
        kind.tag = Tag::Prim;
        kind.prim = k;
        return kind;
    }
    static Kind record(std::map<std::string, Kind> table) {
        Kind kind;
        kind.tag = Tag::Record;
        kind.fields = std::make_shared<const std::map<std::string, Kind>>(std::move(table));
        return kind;
    }
    static Kind list(Kind element) {
        Kind kind;
        kind.tag = Tag::List;
        kind.elem = std::make_shared<const Kind>(std::move(element));
        return kind;
    }

    bool is_list() const { return tag == Tag::List; }
    bool is_unknown() const { return tag == Tag::Unknown; }
    std::string name() const;
};

struct CheckFinding {
    int line = 0;
    std::string message;
};

/// A plan attached to the findings and per-variable kinds its check produced.
/// Execution requires ok().
struct TypedPlan {
    Plan plan;
    std::vector<CheckFinding> findings;
    std::map<std::string, Kind> var_kinds;

    bool ok() const { return findings.empty(); }
};

/// Static validation against a library: unknown APIs, missing or unknown call
/// arguments, kind mismatches, unbound or shadowed variables, field accesses
/// outside the declared attribute set, list operations over non-lists and
/// foreach nesting beyond two levels. All violations are reported, not just
/// the first.
TypedPlan check_plan(const Plan& plan, const ApiLibrary& lib);

/// Kind an API call result carries, derived from its output declarations.
Kind api_result_kind(const ApiSpec& api);

}  // namespace apichain
