#include "apichain/plan_check.hpp"

#include <set>
#include <sstream>

namespace apichain {

std::string Kind::name() const {
    switch (tag) {
        case Tag::Unknown: return "unknown";
        case Tag::Prim: return attr_kind_name(prim);
        case Tag::Record: return "record";
        case Tag::List: return "list of " + (elem ? elem->name() : std::string("unknown"));
    }
    return "unknown";
}

namespace {

Kind attr_value_kind(const AttributeSpec& attr) {
    switch (attr.kind) {
        case AttrKind::List: {
            if (attr.element.empty()) return Kind::list(Kind::primitive(AttrKind::Text));
            std::map<std::string, Kind> table;
            for (const auto& e : attr.element) table.emplace(e.name, attr_value_kind(e));
            return Kind::list(Kind::record(std::move(table)));
        }
        default:
            return Kind::primitive(attr.kind);
    }
}

class Checker {
public:
    Checker(const ApiLibrary& lib, TypedPlan& out) : lib_(lib), out_(out) {}

    void run(const Plan& plan) {
        std::map<std::string, Kind> env;
        for (const auto& [name, kind] : plan.params) {
            if (env.count(name)) report(0, "duplicate parameter '" + name + "'");
            env[name] = kind == AttrKind::List ? Kind::list(Kind::unknown())
                                               : Kind::primitive(kind);
        }
        check_steps(plan.body, env, 0);
        eval(plan.result, env, 0);
        for (const auto& [name, kind] : plan.params) {
            if (!used_.count(name)) report(0, "parameter '" + name + "' is never used");
        }
        out_.var_kinds = env;
    }

private:
    void report(int line, const std::string& message) {
        out_.findings.push_back({line, message});
    }

    void bind(std::map<std::string, Kind>& env, const std::string& name, Kind kind, int line) {
        if (env.count(name)) report(line, "variable '" + name + "' is already defined");
        env[name] = std::move(kind);
    }

    Kind eval(const Expr& expr, const std::map<std::string, Kind>& env, int line) {
        switch (expr.base) {
            case Expr::Base::IntLit: return Kind::primitive(AttrKind::Scalar);
            case Expr::Base::StrLit: return Kind::primitive(AttrKind::Text);
            case Expr::Base::Var: break;
        }
        Kind kind;
        auto it = env.find(expr.var);
        if (it == env.end()) {
            report(line, "variable '" + expr.var + "' is not defined");
            kind = Kind::unknown();
        } else {
            used_.insert(expr.var);
            kind = it->second;
        }
        for (const auto& acc : expr.path) {
            switch (acc.kind) {
                case Expr::Accessor::Kind::Field: {
                    if (kind.is_unknown()) break;
                    if (kind.tag != Kind::Tag::Record) {
                        report(line, "'." + acc.field + "' applied to " + kind.name());
                        kind = Kind::unknown();
                        break;
                    }
                    auto field = kind.fields->find(acc.field);
                    if (field == kind.fields->end()) {
                        report(line, "record has no attribute '" + acc.field + "'");
                        kind = Kind::unknown();
                    } else {
                        kind = field->second;
                    }
                    break;
                }
                case Expr::Accessor::Kind::Index: {
                    if (kind.is_unknown()) break;
                    if (!kind.is_list()) {
                        report(line, "index applied to " + kind.name());
                        kind = Kind::unknown();
                    } else {
                        kind = *kind.elem;
                    }
                    break;
                }
                case Expr::Accessor::Kind::Project: {
                    if (kind.is_unknown()) break;
                    if (kind.tag != Kind::Tag::Record) {
                        report(line, "projection applied to " + kind.name());
                        kind = Kind::unknown();
                        break;
                    }
                    std::map<std::string, Kind> table;
                    for (const auto& f : acc.fields) {
                        auto field = kind.fields->find(f);
                        if (field == kind.fields->end()) {
                            report(line, "record has no attribute '" + f + "'");
                            table.emplace(f, Kind::unknown());
                        } else {
                            table.emplace(f, field->second);
                        }
                    }
                    kind = Kind::record(std::move(table));
                    break;
                }
            }
        }
        return kind;
    }

    // Element kind of a list expression, with a finding when it is not a list.
    Kind element_kind(const Expr& over, const std::map<std::string, Kind>& env, int line,
                      const char* what) {
        Kind kind = eval(over, env, line);
        if (kind.is_unknown()) return Kind::unknown();
        if (!kind.is_list()) {
            report(line, std::string(what) + " requires a list, got " + kind.name());
            return Kind::unknown();
        }
        return *kind.elem;
    }

    void check_list_field(const Kind& elem, const std::string& field, int line, const char* what,
                          bool numeric) {
        if (elem.is_unknown()) return;
        if (elem.tag != Kind::Tag::Record) {
            report(line, std::string(what) + " needs a list of records to read '" + field + "'");
            return;
        }
        auto it = elem.fields->find(field);
        if (it == elem.fields->end()) {
            report(line, std::string(what) + " field '" + field + "' is not a declared attribute");
            return;
        }
        if (numeric && it->second.tag == Kind::Tag::Prim &&
            it->second.prim != AttrKind::Scalar) {
            report(line, std::string(what) + " field '" + field + "' is not numeric");
        }
    }

    void check_steps(const std::vector<Step>& steps, std::map<std::string, Kind>& env, int depth) {
        for (const auto& step : steps) {
            const int line = step.line;
            if (const auto* call = std::get_if<CallStep>(&step.node)) {
                const ApiSpec* api = lib_.find(call->api);
                std::set<std::string> given;
                for (const auto& [name, expr] : call->args) {
                    Kind kind = eval(expr, env, line);
                    if (!given.insert(name).second)
                        report(line, "duplicate argument '" + name + "'");
                    if (!api) continue;
                    const AttributeSpec* input = api->find_input(name);
                    if (!input) {
                        report(line, "API " + call->api + " has no input '" + name + "'");
                        continue;
                    }
                    if (kind.tag == Kind::Tag::Prim && input->kind != AttrKind::List &&
                        kind.prim != input->kind) {
                        // Text search keys accept any primitive rendering; ids must be ids.
                        if (input->kind == AttrKind::EntityId || kind.prim == AttrKind::EntityId) {
                            report(line, "argument '" + name + "' expects " +
                                             attr_kind_name(input->kind) + ", got " +
                                             attr_kind_name(kind.prim));
                        }
                    }
                    if (kind.tag == Kind::Tag::Record || kind.tag == Kind::Tag::List) {
                        report(line, "argument '" + name + "' must be a primitive value");
                    }
                }
                if (!api) {
                    report(line, "unknown API '" + call->api + "'");
                    bind(env, step.bind, Kind::unknown(), line);
                    continue;
                }
                if (api->inputs.size() == 1) {
                    if (!given.count(api->inputs.front().name))
                        report(line, "API " + call->api + " requires input '" +
                                         api->inputs.front().name + "'");
                } else if (given.empty()) {
                    report(line, "API " + call->api + " requires at least one input");
                }
                bind(env, step.bind, api_result_kind(*api), line);
            } else if (const auto* each = std::get_if<ForEachStep>(&step.node)) {
                if (depth >= 2) report(line, "foreach nesting deeper than 2 is not allowed");
                Kind elem = element_kind(each->over, env, line, "foreach");
                std::map<std::string, Kind> inner = env;
                if (inner.count(each->var))
                    report(line, "loop variable '" + each->var + "' shadows an existing variable");
                inner[each->var] = elem;
                check_steps(each->body, inner, depth + 1);
                Kind yielded = eval(each->yield, inner, line);
                bind(env, step.bind, Kind::list(std::move(yielded)), line);
            } else if (const auto* filter = std::get_if<FilterStep>(&step.node)) {
                Kind elem = element_kind(filter->over, env, line, "filter");
                const bool ordering = filter->op != CmpOp::Eq && filter->op != CmpOp::Ne;
                check_list_field(elem, filter->field, line, "filter", ordering);
                bind(env, step.bind, Kind::list(std::move(elem)), line);
            } else if (const auto* sort = std::get_if<SortByStep>(&step.node)) {
                Kind elem = element_kind(sort->over, env, line, "sort");
                check_list_field(elem, sort->field, line, "sort", true);
                bind(env, step.bind, Kind::list(std::move(elem)), line);
            } else if (const auto* best = std::get_if<ArgBestStep>(&step.node)) {
                const char* what = best->maximize ? "argmax" : "argmin";
                Kind elem = element_kind(best->over, env, line, what);
                check_list_field(elem, best->field, line, what, true);
                bind(env, step.bind, std::move(elem), line);
            } else if (const auto* take = std::get_if<TakeStep>(&step.node)) {
                Kind elem = element_kind(take->over, env, line, "take");
                bind(env, step.bind, Kind::list(std::move(elem)), line);
            } else {
                const auto& select = std::get<SelectStep>(step.node);
                bind(env, step.bind, eval(select.from, env, line), line);
            }
        }
    }

    const ApiLibrary& lib_;
    TypedPlan& out_;
    std::set<std::string> used_;
};

}  // namespace

Kind api_result_kind(const ApiSpec& api) {
    std::map<std::string, Kind> table;
    for (const auto& attr : api.outputs) table.emplace(attr.name, attr_value_kind(attr));
    Kind record = Kind::record(std::move(table));
    return api.returns_list ? Kind::list(std::move(record)) : record;
}

TypedPlan check_plan(const Plan& plan, const ApiLibrary& lib) {
    TypedPlan out;
    out.plan = plan;
    Checker checker(lib, out);
    checker.run(plan);
    return out;
}

}  // namespace apichain
