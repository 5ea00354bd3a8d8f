#pragma once

#include <nlohmann/json.hpp>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace apichain {

/// Value kind of an input parameter or returned attribute.
enum class AttrKind { EntityId, Scalar, Text, List };

std::string attr_kind_name(AttrKind k);
AttrKind attr_kind_from_name(const std::string& name);

/// How to pick one element out of a list-shaped result when a plan has to
/// continue from it (or answer a single-valued question about it).
///
/// `First` keeps the first element (search APIs return exact matches ordered
/// by id, so the first one is the match). `ArgMax`/`ArgMin` select by a named
/// numeric field. `Each` means the list is traversed element-wise.
struct Selector {
    enum class Mode { First, ArgMax, ArgMin, Each };
    Mode mode = Mode::First;
    std::string by;  // field name for ArgMax/ArgMin
};

struct AttributeSpec {
    std::string name;
    AttrKind kind = AttrKind::Text;
    bool linkable = false;
    std::string description;
    // For kind == List whose elements are records: the element fields.
    // Empty for lists of plain text values.
    std::vector<AttributeSpec> element;
    std::optional<Selector> select;
};

struct ApiSpec {
    std::string name;
    std::string description;
    bool returns_list = false;
    std::vector<AttributeSpec> inputs;
    std::vector<AttributeSpec> outputs;
    std::optional<Selector> select;

    const AttributeSpec* find_input(const std::string& attr) const;
    const AttributeSpec* find_output(const std::string& attr) const;

    /// Selector applied to this API's list result; defaults to First.
    Selector effective_selector() const;
};

/// The declarative API library. Immutable after load; safe to share.
struct ApiLibrary {
    std::string version;
    std::vector<ApiSpec> apis;

    const ApiSpec* find(const std::string& name) const;
    const ApiSpec& at(const std::string& name) const;
};

struct RegistryError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ValidationFinding {
    std::string api;
    std::string attribute;  // may be empty
    std::string message;
    std::string hint;  // may be empty
};

struct ValidationReport {
    std::vector<ValidationFinding> findings;
    bool ok() const { return findings.empty(); }
};

/// Parse a registry document. Rejects unknown fields, duplicate API names and
/// selector references to undeclared attributes. Document order is preserved.
ApiLibrary load_registry(const std::string& document);
ApiLibrary load_registry_file(const std::string& path);

/// Canonical serialization; load_registry(serialize_registry(lib)) == lib.
std::string serialize_registry(const ApiLibrary& lib);
nlohmann::json registry_to_json(const ApiLibrary& lib);

/// Check every ApiSpec invariant. Findings are data, never exceptions.
ValidationReport validate_library(const ApiLibrary& lib);

/// Deterministic human-readable description of one API. Byte-stable.
std::string describe_api(const ApiLibrary& lib, const std::string& name);

/// The built-in scholarly registry: two search entry points plus four
/// record-lookup APIs over scholars and publications.
ApiLibrary default_registry();

}  // namespace apichain
