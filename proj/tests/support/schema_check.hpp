#pragma once

// Just enough of JSON Schema draft-07 to validate the documents the CLI
// emits against the files in schemas/: type, enum, const, properties,
// required, additionalProperties, items, minItems/maxItems, minimum,
// pattern, and local $ref into #/definitions.  Returns the first violation
// as "path: message", or an empty string when the instance validates.

#include <optional>
#include <regex>
#include <string>

#include <nlohmann/json.hpp>

namespace testsupport {

namespace schema_detail {

inline bool matches_type(const nlohmann::json& value, const std::string& type) {
    if (type == "object") return value.is_object();
    if (type == "array") return value.is_array();
    if (type == "string") return value.is_string();
    if (type == "integer") return value.is_number_integer() || value.is_number_unsigned();
    if (type == "number") return value.is_number();
    if (type == "boolean") return value.is_boolean();
    if (type == "null") return value.is_null();
    return false;
}

inline std::string check(const nlohmann::json& schema, const nlohmann::json& value,
                         const nlohmann::json& root, const std::string& path) {
    if (schema.contains("$ref")) {
        const std::string ref = schema.at("$ref").get<std::string>();
        const std::string prefix = "#/definitions/";
        if (ref.rfind(prefix, 0) != 0) return path + ": unsupported $ref " + ref;
        return check(root.at("definitions").at(ref.substr(prefix.size())), value, root, path);
    }
    if (schema.contains("type")) {
        const auto& type = schema.at("type");
        bool ok = false;
        if (type.is_string()) {
            ok = matches_type(value, type.get<std::string>());
        } else {
            for (const auto& t : type) ok = ok || matches_type(value, t.get<std::string>());
        }
        if (!ok) return path + ": wrong type, got " + std::string(value.type_name());
    }
    if (schema.contains("enum")) {
        bool ok = false;
        for (const auto& candidate : schema.at("enum")) ok = ok || candidate == value;
        if (!ok) return path + ": not in enum";
    }
    if (schema.contains("const") && !(schema.at("const") == value))
        return path + ": does not match const";
    if (schema.contains("pattern") && value.is_string()) {
        const std::regex re(schema.at("pattern").get<std::string>());
        if (!std::regex_search(value.get<std::string>(), re))
            return path + ": pattern mismatch on \"" + value.get<std::string>() + "\"";
    }
    if (schema.contains("minimum") && value.is_number() &&
        value.get<double>() < schema.at("minimum").get<double>())
        return path + ": below minimum";
    if (value.is_object()) {
        if (schema.contains("required"))
            for (const auto& key : schema.at("required"))
                if (!value.contains(key.get<std::string>()))
                    return path + ": missing required key " + key.get<std::string>();
        const auto* props = schema.contains("properties") ? &schema.at("properties") : nullptr;
        for (const auto& [key, member] : value.items()) {
            if (props && props->contains(key)) {
                if (auto err = check(props->at(key), member, root, path + "/" + key);
                    !err.empty())
                    return err;
            } else if (schema.contains("additionalProperties") &&
                       schema.at("additionalProperties") == false) {
                return path + ": unexpected key " + key;
            }
        }
    }
    if (value.is_array()) {
        if (schema.contains("minItems") && value.size() < schema.at("minItems").get<std::size_t>())
            return path + ": too few items";
        if (schema.contains("maxItems") && value.size() > schema.at("maxItems").get<std::size_t>())
            return path + ": too many items";
        if (schema.contains("items")) {
            for (std::size_t index = 0; index < value.size(); ++index) {
                if (auto err = check(schema.at("items"), value.at(index), root,
                                     path + "/" + std::to_string(index));
                    !err.empty())
                    return err;
            }
        }
    }
    return {};
}

}  // namespace schema_detail

/// Empty string on success, "path: reason" for the first violation.
inline std::string schema_violation(const nlohmann::json& schema, const nlohmann::json& value) {
    return schema_detail::check(schema, value, schema, "#");
}

}  // namespace testsupport
