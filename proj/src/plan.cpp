#include "apichain/plan.hpp"

#include <cctype>
#include <sstream>

using json = nlohmann::json;

namespace apichain {

const char* cmp_op_text(CmpOp op) {
    switch (op) {
        case CmpOp::Eq: return "==";
        case CmpOp::Ne: return "!=";
        case CmpOp::Lt: return "<";
        case CmpOp::Le: return "<=";
        case CmpOp::Gt: return ">";
        case CmpOp::Ge: return ">=";
    }
    return "==";
}

namespace {

CmpOp cmp_op_from_text(const std::string& text, int line, int col) {
    if (text == "==") return CmpOp::Eq;
    if (text == "!=") return CmpOp::Ne;
    if (text == "<") return CmpOp::Lt;
    if (text == "<=") return CmpOp::Le;
    if (text == ">") return CmpOp::Gt;
    if (text == ">=") return CmpOp::Ge;
    throw PlanParseError("unknown comparison operator '" + text + "'", line, col);
}

struct Token {
    enum class Type { Ident, Int, Str, Punct, End };
    Type type = Type::End;
    std::string text;
    std::int64_t int_value = 0;
    int col = 0;
};

bool is_reserved(const std::string& word) {
    static const char* kReserved[] = {"plan",   "let",  "call", "foreach", "in",
                                      "yield",  "filter", "by", "argmax",  "argmin",
                                      "sort",   "asc",  "desc", "take",    "return"};
    for (const char* r : kReserved)
        if (word == r) return true;
    return false;
}

std::vector<Token> lex_line(const std::string& line, int line_no) {
    std::vector<Token> tokens;
    size_t i = 0;
    auto col = [&] { return static_cast<int>(i) + 1; };
    while (i < line.size()) {
        const char c = line[i];
        if (std::isspace(static_cast<unsigned char>(c))) {
            ++i;
            continue;
        }
        if (c == '#') break;  // comment to end of line
        if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
            Token t;
            t.type = Token::Type::Ident;
            t.col = col();
            size_t start = i;
            while (i < line.size() && (std::isalnum(static_cast<unsigned char>(line[i])) ||
                                       line[i] == '_')) {
                ++i;
            }
            t.text = line.substr(start, i - start);
            tokens.push_back(std::move(t));
            continue;
        }
        if (std::isdigit(static_cast<unsigned char>(c)) ||
            (c == '-' && i + 1 < line.size() &&
             std::isdigit(static_cast<unsigned char>(line[i + 1])))) {
            Token t;
            t.type = Token::Type::Int;
            t.col = col();
            size_t start = i;
            if (line[i] == '-') ++i;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) ++i;
            t.text = line.substr(start, i - start);
            t.int_value = std::stoll(t.text);
            tokens.push_back(std::move(t));
            continue;
        }
        if (c == '"') {
            Token t;
            t.type = Token::Type::Str;
            t.col = col();
            ++i;
            std::string value;
            bool closed = false;
            while (i < line.size()) {
                if (line[i] == '\\' && i + 1 < line.size()) {
                    const char esc = line[i + 1];
                    if (esc == '"' || esc == '\\') {
                        value.push_back(esc);
                        i += 2;
                        continue;
                    }
                    throw PlanParseError("unknown escape in string literal", line_no, col());
                }
                if (line[i] == '"') {
                    closed = true;
                    ++i;
                    break;
                }
                value.push_back(line[i]);
                ++i;
            }
            if (!closed) throw PlanParseError("unterminated string literal", line_no, t.col);
            t.text = value;
            tokens.push_back(std::move(t));
            continue;
        }
        // two-character operators first
        if ((c == '<' || c == '>' || c == '=' || c == '!') && i + 1 < line.size() &&
            line[i + 1] == '=') {
            Token t;
            t.type = Token::Type::Punct;
            t.col = col();
            t.text = std::string(1, c) + "=";
            tokens.push_back(std::move(t));
            i += 2;
            continue;
        }
        if (std::string("()[]{},=.<>:").find(c) != std::string::npos) {
            Token t;
            t.type = Token::Type::Punct;
            t.col = col();
            t.text = std::string(1, c);
            tokens.push_back(std::move(t));
            ++i;
            continue;
        }
        throw PlanParseError(std::string("unexpected character '") + c + "'", line_no, col());
    }
    Token end;
    end.type = Token::Type::End;
    end.col = static_cast<int>(line.size()) + 1;
    tokens.push_back(end);
    return tokens;
}

// Cursor over one line's tokens.
class Cursor {
public:
    Cursor(const std::vector<Token>& tokens, int line) : tokens_(tokens), line_(line) {}

    const Token& peek() const { return tokens_[pos_]; }
    bool at_end() const { return peek().type == Token::Type::End; }
    const Token& next() { return tokens_[pos_++]; }

    bool accept_punct(const std::string& p) {
        if (peek().type == Token::Type::Punct && peek().text == p) {
            ++pos_;
            return true;
        }
        return false;
    }
    bool accept_ident(const std::string& word) {
        if (peek().type == Token::Type::Ident && peek().text == word) {
            ++pos_;
            return true;
        }
        return false;
    }
    void expect_punct(const std::string& p, const std::string& what) {
        if (!accept_punct(p))
            throw PlanParseError("expected '" + p + "' " + what, line_, peek().col);
    }
    std::string expect_ident(const std::string& what) {
        if (peek().type != Token::Type::Ident)
            throw PlanParseError("expected " + what, line_, peek().col);
        return next().text;
    }
    std::string expect_name(const std::string& what) {
        const int col = peek().col;
        std::string word = expect_ident(what);
        if (is_reserved(word))
            throw PlanParseError("reserved word '" + word + "' cannot be used as " + what, line_,
                                 col);
        return word;
    }
    std::int64_t expect_int(const std::string& what) {
        if (peek().type != Token::Type::Int)
            throw PlanParseError("expected " + what, line_, peek().col);
        return next().int_value;
    }
    void expect_end() {
        if (!at_end())
            throw PlanParseError("unexpected trailing input '" + peek().text + "'", line_,
                                 peek().col);
    }
    int line() const { return line_; }

private:
    const std::vector<Token>& tokens_;
    size_t pos_ = 0;
    int line_;
};

Expr parse_expr(Cursor& cur) {
    Expr expr;
    const Token& t = cur.peek();
    if (t.type == Token::Type::Int) {
        expr = Expr::int_lit(cur.next().int_value);
        return expr;
    }
    if (t.type == Token::Type::Str) {
        expr = Expr::str_lit(cur.next().text);
        return expr;
    }
    if (t.type != Token::Type::Ident)
        throw PlanParseError("expected an expression", cur.line(), t.col);
    if (is_reserved(t.text))
        throw PlanParseError("reserved word '" + t.text + "' cannot start an expression",
                             cur.line(), t.col);
    expr = Expr::variable(cur.next().text);
    for (;;) {
        if (cur.accept_punct(".")) {
            if (cur.accept_punct("{")) {
                Expr::Accessor acc;
                acc.kind = Expr::Accessor::Kind::Project;
                acc.fields.push_back(cur.expect_ident("field name in projection"));
                while (cur.accept_punct(",")) {
                    acc.fields.push_back(cur.expect_ident("field name in projection"));
                }
                cur.expect_punct("}", "to close projection");
                expr.path.push_back(std::move(acc));
                continue;
            }
            Expr::Accessor acc;
            acc.kind = Expr::Accessor::Kind::Field;
            acc.field = cur.expect_ident("field name after '.'");
            expr.path.push_back(std::move(acc));
            continue;
        }
        if (cur.accept_punct("[")) {
            Expr::Accessor acc;
            acc.kind = Expr::Accessor::Kind::Index;
            acc.index = cur.expect_int("index in '[ ]'");
            cur.expect_punct("]", "to close index");
            expr.path.push_back(std::move(acc));
            continue;
        }
        break;
    }
    return expr;
}

Expr parse_literal(Cursor& cur) {
    const Token& t = cur.peek();
    if (t.type == Token::Type::Int) return Expr::int_lit(cur.next().int_value);
    if (t.type == Token::Type::Str) return Expr::str_lit(cur.next().text);
    throw PlanParseError("expected an int or string literal", cur.line(), t.col);
}

struct LineSource {
    std::vector<std::pair<int, std::vector<Token>>> lines;  // (line number, tokens)
    size_t pos = 0;

    bool at_end() const { return pos >= lines.size(); }
    Cursor cursor() { return Cursor(lines[pos].second, lines[pos].first); }
    void advance() { ++pos; }
    int current_line() const {
        return at_end() ? (lines.empty() ? 1 : lines.back().first) : lines[pos].first;
    }
};

Step parse_step(LineSource& src);

std::vector<Step> parse_foreach_body(LineSource& src, Expr& yield_out) {
    std::vector<Step> body;
    while (!src.at_end()) {
        Cursor cur = src.cursor();
        if (cur.accept_ident("yield")) {
            yield_out = parse_expr(cur);
            cur.expect_end();
            src.advance();
            // closing brace line
            if (src.at_end())
                throw PlanParseError("expected '}' to close foreach", src.current_line(), 1);
            Cursor closing = src.cursor();
            closing.expect_punct("}", "to close foreach");
            closing.expect_end();
            src.advance();
            return body;
        }
        body.push_back(parse_step(src));
    }
    throw PlanParseError("foreach body must end with a yield", src.current_line(), 1);
}

Step parse_step(LineSource& src) {
    Cursor cur = src.cursor();
    const int line_no = cur.line();
    if (!cur.accept_ident("let"))
        throw PlanParseError("expected a 'let' step or 'return'", line_no, cur.peek().col);
    Step step;
    step.line = line_no;
    step.bind = cur.expect_name("variable name after 'let'");
    cur.expect_punct("=", "after variable name");

    if (cur.accept_ident("call")) {
        CallStep call;
        call.api = cur.expect_ident("API name after 'call'");
        cur.expect_punct("(", "after API name");
        if (!cur.accept_punct(")")) {
            for (;;) {
                std::string arg = cur.expect_ident("argument name");
                cur.expect_punct("=", "after argument name");
                call.args.emplace_back(arg, parse_expr(cur));
                if (cur.accept_punct(",")) continue;
                cur.expect_punct(")", "to close call arguments");
                break;
            }
        }
        cur.expect_end();
        src.advance();
        step.node = std::move(call);
        return step;
    }
    if (cur.accept_ident("foreach")) {
        ForEachStep each;
        each.var = cur.expect_name("loop variable after 'foreach'");
        if (!cur.accept_ident("in"))
            throw PlanParseError("expected 'in' after loop variable", line_no, cur.peek().col);
        each.over = parse_expr(cur);
        cur.expect_punct("{", "to open foreach body");
        cur.expect_end();
        src.advance();
        each.body = parse_foreach_body(src, each.yield);
        step.node = std::move(each);
        return step;
    }
    if (cur.accept_ident("filter")) {
        FilterStep filter;
        filter.over = parse_expr(cur);
        if (!cur.accept_ident("by"))
            throw PlanParseError("expected 'by' in filter", line_no, cur.peek().col);
        filter.field = cur.expect_ident("field name in filter");
        if (cur.peek().type != Token::Type::Punct)
            throw PlanParseError("expected comparison operator", line_no, cur.peek().col);
        filter.op = cmp_op_from_text(cur.next().text, line_no, cur.peek().col);
        filter.literal = parse_literal(cur);
        cur.expect_end();
        src.advance();
        step.node = std::move(filter);
        return step;
    }
    if (cur.peek().type == Token::Type::Ident &&
        (cur.peek().text == "argmax" || cur.peek().text == "argmin")) {
        ArgBestStep best;
        best.maximize = cur.next().text == "argmax";
        best.over = parse_expr(cur);
        if (!cur.accept_ident("by"))
            throw PlanParseError("expected 'by' in argmax/argmin", line_no, cur.peek().col);
        best.field = cur.expect_ident("field name in argmax/argmin");
        cur.expect_end();
        src.advance();
        step.node = std::move(best);
        return step;
    }
    if (cur.accept_ident("sort")) {
        SortByStep sort;
        sort.over = parse_expr(cur);
        if (!cur.accept_ident("by"))
            throw PlanParseError("expected 'by' in sort", line_no, cur.peek().col);
        sort.field = cur.expect_ident("field name in sort");
        if (cur.accept_ident("asc")) {
            sort.ascending = true;
        } else if (cur.accept_ident("desc")) {
            sort.ascending = false;
        } else {
            throw PlanParseError("expected 'asc' or 'desc'", line_no, cur.peek().col);
        }
        cur.expect_end();
        src.advance();
        step.node = std::move(sort);
        return step;
    }
    if (cur.accept_ident("take")) {
        TakeStep take;
        take.over = parse_expr(cur);
        take.count = cur.expect_int("count in take");
        if (take.count < 0)
            throw PlanParseError("take count must be non-negative", line_no, cur.peek().col);
        cur.expect_end();
        src.advance();
        step.node = std::move(take);
        return step;
    }
    // plain select of an expression
    SelectStep select;
    select.from = parse_expr(cur);
    cur.expect_end();
    src.advance();
    step.node = std::move(select);
    return step;
}

}  // namespace

Plan parse_plan(const std::string& text) {
    LineSource src;
    {
        std::istringstream in(text);
        std::string raw;
        int line_no = 0;
        while (std::getline(in, raw)) {
            ++line_no;
            auto tokens = lex_line(raw, line_no);
            if (tokens.size() == 1) continue;  // blank or comment-only line
            src.lines.emplace_back(line_no, std::move(tokens));
        }
    }
    if (src.lines.empty()) throw PlanParseError("plan must declare params and result", 1, 1);

    Plan plan;
    {
        Cursor cur = src.cursor();
        if (!cur.accept_ident("plan"))
            throw PlanParseError("plan must start with a 'plan(...)' header", cur.line(),
                                 cur.peek().col);
        cur.expect_punct("(", "after 'plan'");
        if (!cur.accept_punct(")")) {
            for (;;) {
                std::string name = cur.expect_name("parameter name");
                cur.expect_punct(":", "after parameter name");
                std::string kind = cur.expect_ident("parameter kind");
                AttrKind parsed;
                try {
                    parsed = attr_kind_from_name(kind);
                } catch (const RegistryError&) {
                    throw PlanParseError("unknown parameter kind '" + kind + "'", cur.line(),
                                         cur.peek().col);
                }
                plan.params.emplace_back(name, parsed);
                if (cur.accept_punct(",")) continue;
                cur.expect_punct(")", "to close the parameter list");
                break;
            }
        }
        cur.expect_end();
        src.advance();
    }

    bool saw_return = false;
    while (!src.at_end()) {
        Cursor cur = src.cursor();
        if (cur.accept_ident("return")) {
            plan.result = parse_expr(cur);
            cur.expect_end();
            src.advance();
            saw_return = true;
            if (!src.at_end()) {
                Cursor extra = src.cursor();
                throw PlanParseError("nothing may follow the return line", extra.line(),
                                     extra.peek().col);
            }
            break;
        }
        plan.body.push_back(parse_step(src));
    }
    if (!saw_return)
        throw PlanParseError("plan must declare params and result", src.current_line(), 1);
    return plan;
}

namespace {

void serialize_step(const Step& step, int depth, std::ostringstream& out);

std::string indent(int depth) { return std::string(static_cast<size_t>(depth) * 2, ' '); }

std::string quote(const std::string& s) {
    std::string out = "\"";
    for (char c : s) {
        if (c == '"' || c == '\\') out.push_back('\\');
        out.push_back(c);
    }
    out.push_back('"');
    return out;
}

}  // namespace

std::string serialize_expr(const Expr& expr) {
    switch (expr.base) {
        case Expr::Base::IntLit: return std::to_string(expr.int_value);
        case Expr::Base::StrLit: return quote(expr.str_value);
        case Expr::Base::Var: break;
    }
    std::string out = expr.var;
    for (const auto& acc : expr.path) {
        switch (acc.kind) {
            case Expr::Accessor::Kind::Field:
                out += "." + acc.field;
                break;
            case Expr::Accessor::Kind::Index:
                out += "[" + std::to_string(acc.index) + "]";
                break;
            case Expr::Accessor::Kind::Project: {
                out += ".{";
                for (size_t i = 0; i < acc.fields.size(); ++i) {
                    if (i) out += ", ";
                    out += acc.fields[i];
                }
                out += "}";
                break;
            }
        }
    }
    return out;
}

namespace {

void serialize_step(const Step& step, int depth, std::ostringstream& out) {
    out << indent(depth) << "let " << step.bind << " = ";
    if (const auto* call = std::get_if<CallStep>(&step.node)) {
        out << "call " << call->api << "(";
        for (size_t i = 0; i < call->args.size(); ++i) {
            if (i) out << ", ";
            out << call->args[i].first << "=" << serialize_expr(call->args[i].second);
        }
        out << ")\n";
        return;
    }
    if (const auto* each = std::get_if<ForEachStep>(&step.node)) {
        out << "foreach " << each->var << " in " << serialize_expr(each->over) << " {\n";
        for (const auto& inner : each->body) serialize_step(inner, depth + 1, out);
        out << indent(depth + 1) << "yield " << serialize_expr(each->yield) << "\n";
        out << indent(depth) << "}\n";
        return;
    }
    if (const auto* filter = std::get_if<FilterStep>(&step.node)) {
        out << "filter " << serialize_expr(filter->over) << " by " << filter->field << " "
            << cmp_op_text(filter->op) << " " << serialize_expr(filter->literal) << "\n";
        return;
    }
    if (const auto* sort = std::get_if<SortByStep>(&step.node)) {
        out << "sort " << serialize_expr(sort->over) << " by " << sort->field << " "
            << (sort->ascending ? "asc" : "desc") << "\n";
        return;
    }
    if (const auto* best = std::get_if<ArgBestStep>(&step.node)) {
        out << (best->maximize ? "argmax " : "argmin ") << serialize_expr(best->over) << " by "
            << best->field << "\n";
        return;
    }
    if (const auto* take = std::get_if<TakeStep>(&step.node)) {
        out << "take " << serialize_expr(take->over) << " " << take->count << "\n";
        return;
    }
    const auto& select = std::get<SelectStep>(step.node);
    out << serialize_expr(select.from) << "\n";
}

}  // namespace

std::string serialize_plan(const Plan& plan) {
    std::ostringstream out;
    out << "plan(";
    for (size_t i = 0; i < plan.params.size(); ++i) {
        if (i) out << ", ";
        out << plan.params[i].first << ": " << attr_kind_name(plan.params[i].second);
    }
    out << ")\n";
    for (const auto& step : plan.body) serialize_step(step, 0, out);
    out << "return " << serialize_expr(plan.result) << "\n";
    return out.str();
}

namespace {

json expr_to_json(const Expr& expr) {
    json doc;
    switch (expr.base) {
        case Expr::Base::IntLit:
            doc["int"] = expr.int_value;
            return doc;
        case Expr::Base::StrLit:
            doc["str"] = expr.str_value;
            return doc;
        case Expr::Base::Var:
            break;
    }
    doc["var"] = expr.var;
    if (!expr.path.empty()) {
        json path = json::array();
        for (const auto& acc : expr.path) {
            switch (acc.kind) {
                case Expr::Accessor::Kind::Field:
                    path.push_back({{"field", acc.field}});
                    break;
                case Expr::Accessor::Kind::Index:
                    path.push_back({{"index", acc.index}});
                    break;
                case Expr::Accessor::Kind::Project:
                    path.push_back({{"project", acc.fields}});
                    break;
            }
        }
        doc["path"] = path;
    }
    return doc;
}

Expr expr_from_json(const json& doc) {
    if (doc.contains("int")) return Expr::int_lit(doc["int"].get<std::int64_t>());
    if (doc.contains("str")) return Expr::str_lit(doc["str"].get<std::string>());
    Expr expr = Expr::variable(doc.at("var").get<std::string>());
    for (const auto& node : doc.value("path", json::array())) {
        if (node.contains("field")) {
            expr.field(node["field"].get<std::string>());
        } else if (node.contains("index")) {
            expr.index(node["index"].get<std::int64_t>());
        } else {
            expr.project(node.at("project").get<std::vector<std::string>>());
        }
    }
    return expr;
}

json step_to_json(const Step& step);

json steps_to_json(const std::vector<Step>& steps) {
    json arr = json::array();
    for (const auto& s : steps) arr.push_back(step_to_json(s));
    return arr;
}

json step_to_json(const Step& step) {
    json doc;
    doc["bind"] = step.bind;
    if (const auto* call = std::get_if<CallStep>(&step.node)) {
        doc["op"] = "call";
        doc["api"] = call->api;
        json args = json::array();
        for (const auto& [name, expr] : call->args)
            args.push_back({{"name", name}, {"value", expr_to_json(expr)}});
        doc["args"] = args;
    } else if (const auto* each = std::get_if<ForEachStep>(&step.node)) {
        doc["op"] = "foreach";
        doc["varname"] = each->var;
        doc["over"] = expr_to_json(each->over);
        doc["body"] = steps_to_json(each->body);
        doc["yield"] = expr_to_json(each->yield);
    } else if (const auto* filter = std::get_if<FilterStep>(&step.node)) {
        doc["op"] = "filter";
        doc["over"] = expr_to_json(filter->over);
        doc["field"] = filter->field;
        doc["cmp"] = cmp_op_text(filter->op);
        doc["literal"] = expr_to_json(filter->literal);
    } else if (const auto* sort = std::get_if<SortByStep>(&step.node)) {
        doc["op"] = "sort";
        doc["over"] = expr_to_json(sort->over);
        doc["field"] = sort->field;
        doc["ascending"] = sort->ascending;
    } else if (const auto* best = std::get_if<ArgBestStep>(&step.node)) {
        doc["op"] = best->maximize ? "argmax" : "argmin";
        doc["over"] = expr_to_json(best->over);
        doc["field"] = best->field;
    } else if (const auto* take = std::get_if<TakeStep>(&step.node)) {
        doc["op"] = "take";
        doc["over"] = expr_to_json(take->over);
        doc["count"] = take->count;
    } else {
        const auto& select = std::get<SelectStep>(step.node);
        doc["op"] = "select";
        doc["from"] = expr_to_json(select.from);
    }
    return doc;
}

Step step_from_json(const json& doc);

std::vector<Step> steps_from_json(const json& arr) {
    std::vector<Step> steps;
    for (const auto& node : arr) steps.push_back(step_from_json(node));
    return steps;
}

Step step_from_json(const json& doc) {
    Step step;
    step.bind = doc.at("bind").get<std::string>();
    const std::string op = doc.at("op").get<std::string>();
    if (op == "call") {
        CallStep call;
        call.api = doc.at("api").get<std::string>();
        for (const auto& node : doc.value("args", json::array()))
            call.args.emplace_back(node.at("name").get<std::string>(),
                                   expr_from_json(node.at("value")));
        step.node = std::move(call);
    } else if (op == "foreach") {
        ForEachStep each;
        each.var = doc.at("varname").get<std::string>();
        each.over = expr_from_json(doc.at("over"));
        each.body = steps_from_json(doc.value("body", json::array()));
        each.yield = expr_from_json(doc.at("yield"));
        step.node = std::move(each);
    } else if (op == "filter") {
        FilterStep filter;
        filter.over = expr_from_json(doc.at("over"));
        filter.field = doc.at("field").get<std::string>();
        filter.op = cmp_op_from_text(doc.at("cmp").get<std::string>(), 0, 0);
        filter.literal = expr_from_json(doc.at("literal"));
        step.node = std::move(filter);
    } else if (op == "sort") {
        SortByStep sort;
        sort.over = expr_from_json(doc.at("over"));
        sort.field = doc.at("field").get<std::string>();
        sort.ascending = doc.value("ascending", true);
        step.node = std::move(sort);
    } else if (op == "argmax" || op == "argmin") {
        ArgBestStep best;
        best.over = expr_from_json(doc.at("over"));
        best.field = doc.at("field").get<std::string>();
        best.maximize = op == "argmax";
        step.node = std::move(best);
    } else if (op == "take") {
        TakeStep take;
        take.over = expr_from_json(doc.at("over"));
        take.count = doc.at("count").get<std::int64_t>();
        step.node = std::move(take);
    } else if (op == "select") {
        SelectStep select;
        select.from = expr_from_json(doc.at("from"));
        step.node = std::move(select);
    } else {
        throw std::runtime_error("unknown plan step op '" + op + "'");
    }
    return step;
}

}  // namespace

json plan_to_json(const Plan& plan) {
    json doc;
    json params = json::array();
    for (const auto& [name, kind] : plan.params)
        params.push_back({{"name", name}, {"kind", attr_kind_name(kind)}});
    doc["params"] = params;
    doc["body"] = steps_to_json(plan.body);
    doc["result"] = expr_to_json(plan.result);
    return doc;
}

Plan plan_from_json(const json& doc) {
    Plan plan;
    for (const auto& node : doc.value("params", json::array()))
        plan.params.emplace_back(node.at("name").get<std::string>(),
                                 attr_kind_from_name(node.at("kind").get<std::string>()));
    plan.body = steps_from_json(doc.value("body", json::array()));
    plan.result = expr_from_json(doc.at("result"));
    return plan;
}

}  // namespace apichain
