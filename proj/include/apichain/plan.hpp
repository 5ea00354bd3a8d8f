#pragma once

#include "apichain/registry.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace apichain {

enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

const char* cmp_op_text(CmpOp op);

/// A value reference: an int/string literal, or a variable followed by a
/// chain of accessors (`pubs[0].title`, `best.{title, num_citation}`).
struct Expr {
    enum class Base { Var, IntLit, StrLit };

    struct Accessor {
        enum class Kind { Field, Index, Project };
        Kind kind = Kind::Field;
        std::string field;
        std::int64_t index = 0;
        std::vector<std::string> fields;  // Project: record projection

        bool operator==(const Accessor&) const = default;
    };

    Base base = Base::Var;
    std::string var;
    std::int64_t int_value = 0;
    std::string str_value;
    std::vector<Accessor> path;  // only on Var base

    bool operator==(const Expr&) const = default;

    static Expr variable(std::string name) {
        Expr e;
        e.base = Base::Var;
        e.var = std::move(name);
        return e;
    }
    static Expr int_lit(std::int64_t v) {
        Expr e;
        e.base = Base::IntLit;
        e.int_value = v;
        return e;
    }
    static Expr str_lit(std::string v) {
        Expr e;
        e.base = Base::StrLit;
        e.str_value = std::move(v);
        return e;
    }

    Expr& field(std::string name) {
        Accessor a;
        a.kind = Accessor::Kind::Field;
        a.field = std::move(name);
        path.push_back(std::move(a));
        return *this;
    }
    Expr& index(std::int64_t i) {
        Accessor a;
        a.kind = Accessor::Kind::Index;
        a.index = i;
        path.push_back(std::move(a));
        return *this;
    }
    Expr& project(std::vector<std::string> fields) {
        Accessor a;
        a.kind = Accessor::Kind::Project;
        a.fields = std::move(fields);
        path.push_back(std::move(a));
        return *this;
    }
};

struct Step;

struct CallStep {
    std::string api;
    std::vector<std::pair<std::string, Expr>> args;
    bool operator==(const CallStep&) const = default;
};

struct ForEachStep {
    std::string var;
    Expr over;
    std::vector<Step> body;
    Expr yield;
    bool operator==(const ForEachStep&) const;
};

struct FilterStep {
    Expr over;
    std::string field;
    CmpOp op = CmpOp::Eq;
    Expr literal;
    bool operator==(const FilterStep&) const = default;
};

struct SortByStep {
    Expr over;
    std::string field;
    bool ascending = true;
    bool operator==(const SortByStep&) const = default;
};

struct ArgBestStep {
    Expr over;
    std::string field;
    bool maximize = true;
    bool operator==(const ArgBestStep&) const = default;
};

struct TakeStep {
    Expr over;
    std::int64_t count = 0;
    bool operator==(const TakeStep&) const = default;
};

struct SelectStep {
    Expr from;
    bool operator==(const SelectStep&) const = default;
};

struct Step {
    std::string bind;
    int line = 0;  // 1-based source line; 0 for synthesized steps
    std::variant<CallStep, ForEachStep, FilterStep, SortByStep, ArgBestStep, TakeStep, SelectStep>
        node;

    bool operator==(const Step& other) const { return bind == other.bind && node == other.node; }
};

inline bool ForEachStep::operator==(const ForEachStep& other) const {
    return var == other.var && over == other.over && body == other.body && yield == other.yield;
}

/// A typed plan: declared free inputs, a step list and a result expression.
struct Plan {
    std::vector<std::pair<std::string, AttrKind>> params;
    std::vector<Step> body;
    Expr result;

    bool operator==(const Plan& other) const {
        return params == other.params && body == other.body && result == other.result;
    }
};

struct PlanParseError : std::runtime_error {
    int line;
    int column;
    PlanParseError(const std::string& message, int line_, int column_)
        : std::runtime_error("line " + std::to_string(line_) + ":" + std::to_string(column_) +
                             ": " + message),
          line(line_),
          column(column_) {}
};

/// Parse plan source. parse_plan(serialize_plan(p)) == p for every plan.
Plan parse_plan(const std::string& text);

/// Canonical text: one step per line, two-space indent inside foreach bodies.
/// Structurally equal plans serialize to byte-identical text.
std::string serialize_plan(const Plan& plan);

std::string serialize_expr(const Expr& expr);

nlohmann::json plan_to_json(const Plan& plan);
Plan plan_from_json(const nlohmann::json& doc);

}  // namespace apichain
