#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include <json.hpp>

#include "anon/error.hpp"
#include "anon/hash.hpp"
#include "anon/profile.hpp"

namespace anon {

using Json = nlohmann::ordered_json;

/// What a transformation did to one record; serialized under "transform".
struct TransformAnnotation {
    std::string variant;
    std::uint64_t spec_digest = 0;
    std::size_t renames = 0;
    /// Indexed by IdentifierClass (Variable, MethodDefinition, MethodInvocation).
    std::array<std::size_t, 3> renames_by_class{};
    bool skipped = false;
    std::string skip_reason;
    std::size_t random_fallbacks = 0;
};

/// One function or method sample. Fields the library does not model are kept
/// in `extra` and written back unchanged.
struct DatasetRecord {
    std::string id;
    std::string language;
    std::string code;
    std::optional<std::string> docstring;
    std::optional<std::string> clone_group;
    Json extra = Json::object();
    std::optional<TransformAnnotation> transform;

    std::optional<Language> parsed_language() const { return parse_language(language); }
};

namespace detail {

inline std::string required_string(const Json& obj, const char* key, std::size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end()) throw DataError(std::string("missing field '") + key + "'", line_no);
    if (!it->is_string()) throw DataError(std::string("field '") + key + "' must be a string", line_no);
    return it->get<std::string>();
}

inline std::optional<std::string> optional_text(const Json& obj, const char* key, std::size_t line_no) {
    auto it = obj.find(key);
    if (it == obj.end() || it->is_null()) return std::nullopt;
    if (it->is_string()) return it->get<std::string>();
    if (it->is_number_integer()) return std::to_string(it->get<long long>());
    throw DataError(std::string("field '") + key + "' must be a string", line_no);
}

}  // namespace detail

/// Parses one line of a record file. `default_language` fills in records that
/// carry no "language" field.
inline DatasetRecord parse_record(std::string_view line, std::size_t line_no,
                                  const std::optional<std::string>& default_language = std::nullopt) {
    Json obj;
    try {
        obj = Json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
        throw DataError(std::string("malformed record: ") + e.what(), line_no);
    }
    if (!obj.is_object()) throw DataError("record must be an object", line_no);

    DatasetRecord r;
    r.id = detail::required_string(obj, "id", line_no);
    if (obj.contains("language") || !default_language) r.language = detail::required_string(obj, "language", line_no);
    else r.language = *default_language;
    r.code = detail::required_string(obj, "code", line_no);
    r.docstring = detail::optional_text(obj, "docstring", line_no);
    r.clone_group = detail::optional_text(obj, "clone_group", line_no);
    for (auto it = obj.begin(); it != obj.end(); ++it) {
        const auto& key = it.key();
        if (key == "id" || key == "language" || key == "code" || key == "docstring" || key == "clone_group")
            continue;
        r.extra[key] = it.value();
    }
    return r;
}

inline Json to_json(const DatasetRecord& r) {
    Json obj = Json::object();
    obj["id"] = r.id;
    obj["language"] = r.language;
    obj["code"] = r.code;
    if (r.docstring) obj["docstring"] = *r.docstring;
    if (r.clone_group) obj["clone_group"] = *r.clone_group;
    for (auto it = r.extra.begin(); it != r.extra.end(); ++it) {
        if (r.transform && (it.key() == "variant" || it.key() == "transform")) continue;
        obj[it.key()] = it.value();
    }
    if (r.transform) {
        const auto& t = *r.transform;
        obj["variant"] = t.variant;
        Json ann = Json::object();
        ann["spec"] = hex64(t.spec_digest);
        ann["renames"] = t.renames;
        ann["renames_by_class"] = {{"variable", t.renames_by_class[0]},
                                   {"method_definition", t.renames_by_class[1]},
                                   {"method_invocation", t.renames_by_class[2]}};
        ann["skipped"] = t.skipped;
        if (t.skipped) ann["skip_reason"] = t.skip_reason;
        if (t.random_fallbacks) ann["random_fallbacks"] = t.random_fallbacks;
        obj["transform"] = std::move(ann);
    }
    return obj;
}

/// One line, no trailing newline. Invalid UTF-8 in the code is replaced
/// rather than rejected, so pass-through records always serialize.
inline std::string serialize_record(const DatasetRecord& r) {
    return to_json(r).dump(-1, ' ', false, nlohmann::json::error_handler_t::replace);
}

}  // namespace anon
