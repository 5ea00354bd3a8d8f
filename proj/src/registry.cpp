#include "apichain/registry.hpp"

#include <algorithm>
#include <fstream>
#include <set>
#include <sstream>

using json = nlohmann::json;

namespace apichain {

std::string attr_kind_name(AttrKind k) {
    switch (k) {
        case AttrKind::EntityId: return "entity_id";
        case AttrKind::Scalar: return "scalar";
        case AttrKind::Text: return "text";
        case AttrKind::List: return "list";
    }
    return "text";
}

AttrKind attr_kind_from_name(const std::string& name) {
    if (name == "entity_id") return AttrKind::EntityId;
    if (name == "scalar") return AttrKind::Scalar;
    if (name == "text") return AttrKind::Text;
    if (name == "list") return AttrKind::List;
    throw RegistryError("unknown attribute kind '" + name + "'");
}

const AttributeSpec* ApiSpec::find_input(const std::string& attr) const {
    for (const auto& a : inputs)
        if (a.name == attr) return &a;
    return nullptr;
}

const AttributeSpec* ApiSpec::find_output(const std::string& attr) const {
    for (const auto& a : outputs)
        if (a.name == attr) return &a;
    return nullptr;
}

Selector ApiSpec::effective_selector() const {
    return select.value_or(Selector{});
}

const ApiSpec* ApiLibrary::find(const std::string& name) const {
    for (const auto& a : apis)
        if (a.name == name) return &a;
    return nullptr;
}

const ApiSpec& ApiLibrary::at(const std::string& name) const {
    const ApiSpec* spec = find(name);
    if (!spec) throw RegistryError("unknown API '" + name + "'");
    return *spec;
}

namespace {

void reject_unknown_keys(const json& obj, const std::set<std::string>& known,
                         const std::string& where) {
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        if (!known.count(it.key())) {
            throw RegistryError("unknown field '" + it.key() + "' in " + where);
        }
    }
}

std::string selector_mode_name(Selector::Mode m) {
    switch (m) {
        case Selector::Mode::First: return "first";
        case Selector::Mode::ArgMax: return "argmax";
        case Selector::Mode::ArgMin: return "argmin";
        case Selector::Mode::Each: return "each";
    }
    return "first";
}

Selector parse_selector(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw RegistryError("select must be an object in " + where);
    reject_unknown_keys(obj, {"mode", "by"}, where + ".select");
    Selector sel;
    const std::string mode = obj.value("mode", "first");
    if (mode == "first") {
        sel.mode = Selector::Mode::First;
    } else if (mode == "argmax") {
        sel.mode = Selector::Mode::ArgMax;
    } else if (mode == "argmin") {
        sel.mode = Selector::Mode::ArgMin;
    } else if (mode == "each") {
        sel.mode = Selector::Mode::Each;
    } else {
        throw RegistryError("unknown select mode '" + mode + "' in " + where);
    }
    sel.by = obj.value("by", "");
    if ((sel.mode == Selector::Mode::ArgMax || sel.mode == Selector::Mode::ArgMin) &&
        sel.by.empty()) {
        throw RegistryError("select mode '" + mode + "' requires 'by' in " + where);
    }
    return sel;
}

AttributeSpec parse_attribute(const json& obj, const std::string& where) {
    if (!obj.is_object()) throw RegistryError("attribute must be an object in " + where);
    reject_unknown_keys(obj, {"name", "kind", "linkable", "description", "element", "select"},
                        where);
    AttributeSpec attr;
    if (!obj.contains("name") || !obj["name"].is_string() || obj["name"].get<std::string>().empty())
        throw RegistryError("attribute in " + where + " needs a nonempty name");
    attr.name = obj["name"].get<std::string>();
    attr.kind = attr_kind_from_name(obj.value("kind", "text"));
    attr.linkable = obj.value("linkable", false);
    attr.description = obj.value("description", "");
    const std::string here = where + "." + attr.name;
    if (obj.contains("element")) {
        if (attr.kind != AttrKind::List)
            throw RegistryError("element fields on non-list attribute in " + here);
        for (const auto& e : obj["element"])
            attr.element.push_back(parse_attribute(e, here + ".element"));
    }
    if (obj.contains("select")) attr.select = parse_selector(obj["select"], here);
    return attr;
}

void check_selector_target(const Selector& sel, const std::vector<AttributeSpec>& fields,
                           const std::string& where) {
    if (sel.by.empty()) return;
    for (const auto& f : fields)
        if (f.name == sel.by) return;
    throw RegistryError("select.by references undeclared attribute '" + sel.by + "' in " + where);
}

void append_attr_json(json& arr, const AttributeSpec& attr);

json selector_to_json(const Selector& sel) {
    json obj;
    obj["mode"] = selector_mode_name(sel.mode);
    if (!sel.by.empty()) obj["by"] = sel.by;
    return obj;
}

json attr_to_json(const AttributeSpec& attr) {
    json obj;
    obj["name"] = attr.name;
    obj["kind"] = attr_kind_name(attr.kind);
    obj["linkable"] = attr.linkable;
    obj["description"] = attr.description;
    if (!attr.element.empty()) {
        json arr = json::array();
        for (const auto& e : attr.element) arr.push_back(attr_to_json(e));
        obj["element"] = arr;
    }
    if (attr.select) obj["select"] = selector_to_json(*attr.select);
    return obj;
}

void find_duplicate_names(const std::vector<AttributeSpec>& attrs, const std::string& api,
                          const std::string& side, ValidationReport& report) {
    std::set<std::string> seen;
    for (const auto& a : attrs) {
        if (!seen.insert(a.name).second) {
            report.findings.push_back(
                {api, a.name, "duplicate " + side + " attribute name", "rename one of them"});
        }
    }
}

void check_attr_invariants(const AttributeSpec& a, const std::string& api,
                           ValidationReport& report) {
    if (a.kind == AttrKind::EntityId && !a.linkable) {
        report.findings.push_back({api, a.name, "entity_id attribute is not linkable",
                                   "entity ids are always linkable; set linkable=true"});
    }
    for (const auto& e : a.element) check_attr_invariants(e, api, report);
}

}  // namespace

ApiLibrary load_registry(const std::string& document) {
    json doc;
    try {
        doc = json::parse(document);
    } catch (const json::parse_error& ex) {
        throw RegistryError(std::string("registry parse error: ") + ex.what());
    }
    if (!doc.is_object()) throw RegistryError("registry document must be a JSON object");
    reject_unknown_keys(doc, {"version", "apis"}, "registry");
    ApiLibrary lib;
    lib.version = doc.value("version", "");
    if (!doc.contains("apis") || !doc["apis"].is_array())
        throw RegistryError("registry needs an 'apis' array");
    if (doc["apis"].empty()) throw RegistryError("library must contain at least one API");
    std::set<std::string> names;
    for (const auto& node : doc["apis"]) {
        if (!node.is_object()) throw RegistryError("api entry must be an object");
        reject_unknown_keys(node, {"name", "description", "returns_list", "inputs", "outputs", "select"},
                            "api");
        ApiSpec api;
        if (!node.contains("name") || !node["name"].is_string() ||
            node["name"].get<std::string>().empty())
            throw RegistryError("api entry needs a nonempty name");
        api.name = node["name"].get<std::string>();
        if (!names.insert(api.name).second)
            throw RegistryError("duplicate API name '" + api.name + "'");
        api.description = node.value("description", "");
        api.returns_list = node.value("returns_list", false);
        for (const auto& a : node.value("inputs", json::array()))
            api.inputs.push_back(parse_attribute(a, api.name + ".inputs"));
        for (const auto& a : node.value("outputs", json::array()))
            api.outputs.push_back(parse_attribute(a, api.name + ".outputs"));
        if (node.contains("select")) {
            api.select = parse_selector(node["select"], api.name);
            check_selector_target(*api.select, api.outputs, api.name);
        }
        for (const auto& a : api.outputs) {
            if (a.select) check_selector_target(*a.select, a.element, api.name + "." + a.name);
        }
        lib.apis.push_back(std::move(api));
    }
    return lib;
}

ApiLibrary load_registry_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw RegistryError("cannot open registry file '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return load_registry(buf.str());
}

nlohmann::json registry_to_json(const ApiLibrary& lib) {
    json doc;
    doc["version"] = lib.version;
    json apis = json::array();
    for (const auto& api : lib.apis) {
        json node;
        node["name"] = api.name;
        node["description"] = api.description;
        node["returns_list"] = api.returns_list;
        json inputs = json::array();
        for (const auto& a : api.inputs) inputs.push_back(attr_to_json(a));
        json outputs = json::array();
        for (const auto& a : api.outputs) outputs.push_back(attr_to_json(a));
        node["inputs"] = inputs;
        node["outputs"] = outputs;
        if (api.select) node["select"] = selector_to_json(*api.select);
        apis.push_back(node);
    }
    doc["apis"] = apis;
    return doc;
}

std::string serialize_registry(const ApiLibrary& lib) {
    return registry_to_json(lib).dump(2) + "\n";
}

ValidationReport validate_library(const ApiLibrary& lib) {
    ValidationReport report;
    if (lib.apis.empty()) {
        report.findings.push_back({"", "", "library must contain at least one API", ""});
        return report;
    }
    for (const auto& api : lib.apis) {
        if (api.inputs.empty())
            report.findings.push_back({api.name, "", "API has no inputs", "declare at least one input"});
        if (api.outputs.empty())
            report.findings.push_back({api.name, "", "API has no outputs", "declare at least one output"});
        find_duplicate_names(api.inputs, api.name, "input", report);
        find_duplicate_names(api.outputs, api.name, "output", report);
        for (const auto& a : api.inputs) check_attr_invariants(a, api.name, report);
        for (const auto& a : api.outputs) check_attr_invariants(a, api.name, report);
    }
    return report;
}

std::string describe_api(const ApiLibrary& lib, const std::string& name) {
    const ApiSpec& api = lib.at(name);
    std::ostringstream out;
    out << "API: " << api.name << "\n";
    out << "Description: " << api.description << "\n";
    out << "Returns: " << (api.returns_list ? "list of records" : "single record") << "\n";
    out << "Inputs:\n";
    for (const auto& a : api.inputs) {
        out << "  - " << a.name << " (" << attr_kind_name(a.kind)
            << (a.linkable ? ", linkable" : "") << "): " << a.description << "\n";
    }
    out << "Outputs:\n";
    for (const auto& a : api.outputs) {
        out << "  - " << a.name << " (" << attr_kind_name(a.kind)
            << (a.linkable ? ", linkable" : "") << "): " << a.description << "\n";
        for (const auto& e : a.element) {
            out << "      . " << e.name << " (" << attr_kind_name(e.kind)
                << (e.linkable ? ", linkable" : "") << "): " << e.description << "\n";
        }
    }
    return out.str();
}

namespace {

AttributeSpec attr(std::string name, AttrKind kind, bool linkable, std::string description) {
    AttributeSpec a;
    a.name = std::move(name);
    a.kind = kind;
    a.linkable = linkable;
    a.description = std::move(description);
    return a;
}

}  // namespace

ApiLibrary default_registry() {
    ApiLibrary lib;
    lib.version = "1";

    {
        ApiSpec api;
        api.name = "searchPerson";
        api.description =
            "Search scholars by exact name, organization or research interest. "
            "Any one of the inputs may be supplied.";
        api.returns_list = true;
        api.select = Selector{Selector::Mode::First, ""};
        api.inputs = {
            attr("name", AttrKind::Text, false, "Full name of the scholar."),
            attr("organization", AttrKind::Text, false, "Affiliation to search within."),
            attr("interest", AttrKind::Text, false, "A research interest keyword."),
        };
        api.outputs = {
            attr("person_id", AttrKind::EntityId, true, "Stable scholar identifier."),
            attr("name", AttrKind::Text, false, "Full name of the scholar."),
            attr("organization", AttrKind::Text, false, "Current affiliation."),
        };
        lib.apis.push_back(api);
    }
    {
        ApiSpec api;
        api.name = "getPersonBasicInfo";
        api.description = "Profile record of one scholar.";
        api.inputs = {attr("person_id", AttrKind::EntityId, true, "Scholar identifier.")};
        api.outputs = {
            attr("name", AttrKind::Text, false, "Full name of the scholar."),
            attr("organization", AttrKind::Text, false, "Current affiliation."),
            attr("bio", AttrKind::Text, false, "Short biography."),
            attr("education_experience", AttrKind::Text, false,
                 "Degrees held and the awarding institutions."),
            attr("interest", AttrKind::List, false, "Research interest keywords."),
        };
        lib.apis.push_back(api);
    }
    {
        ApiSpec api;
        api.name = "getPersonPubs";
        api.description = "All publications authored by a scholar, with citation counts.";
        api.returns_list = true;
        api.select = Selector{Selector::Mode::ArgMax, "num_citation"};
        api.inputs = {attr("person_id", AttrKind::EntityId, true, "Scholar identifier.")};
        api.outputs = {
            attr("pub_id", AttrKind::EntityId, true, "Stable publication identifier."),
            attr("title", AttrKind::Text, false, "Full title of the publication."),
            attr("num_citation", AttrKind::Scalar, false, "Citation count."),
            attr("year", AttrKind::Scalar, false, "Publication year."),
        };
        lib.apis.push_back(api);
    }
    {
        ApiSpec api;
        api.name = "searchPublication";
        api.description = "Search publications whose title contains the given text.";
        api.returns_list = true;
        api.select = Selector{Selector::Mode::First, ""};
        api.inputs = {attr("publication_info", AttrKind::Text, false,
                           "Title text of the publication to look up.")};
        api.outputs = {
            attr("pub_id", AttrKind::EntityId, true, "Stable publication identifier."),
            attr("title", AttrKind::Text, false, "Full title of the publication."),
        };
        lib.apis.push_back(api);
    }
    {
        ApiSpec api;
        api.name = "getPublication";
        api.description = "Full record of one publication, including its author list.";
        api.inputs = {attr("pub_id", AttrKind::EntityId, true, "Publication identifier.")};
        AttributeSpec authors =
            attr("authors", AttrKind::List, false, "Authors in byline order; first author first.");
        authors.element = {
            attr("person_id", AttrKind::EntityId, true, "Scholar identifier."),
            attr("name", AttrKind::Text, false, "Author name."),
        };
        authors.select = Selector{Selector::Mode::First, ""};
        api.outputs = {
            attr("title", AttrKind::Text, false, "Full title of the publication."),
            attr("num_citation", AttrKind::Scalar, false, "Citation count."),
            attr("year", AttrKind::Scalar, false, "Publication year."),
            authors,
        };
        lib.apis.push_back(api);
    }
    {
        // Extension beyond the search/lookup core: enables self-loop paths
        // (coauthor-of-coauthor traversals).
        ApiSpec api;
        api.name = "getCoauthors";
        api.description = "Distinct coauthors of a scholar, ordered by identifier.";
        api.returns_list = true;
        api.select = Selector{Selector::Mode::Each, ""};
        api.inputs = {attr("person_id", AttrKind::EntityId, true, "Scholar identifier.")};
        api.outputs = {
            attr("person_id", AttrKind::EntityId, true, "Coauthor identifier."),
            attr("name", AttrKind::Text, false, "Coauthor name."),
        };
        lib.apis.push_back(api);
    }
    return lib;
}

}  // namespace apichain
