#pragma once

// Canonical corpus file: UTF-8, one JSON record per line,
//   {"id": str, "dataset": str, "language": "zh"|"en", "text": str,
//    "entities": [{"start": int, "end": int, "type": str, "text": str}]}
// The entity "text" field is redundant and validated against the span slice;
// it catches offset-unit bugs at ingestion. Schema files are
//   {"name": str, "language": str, "types": [{"name", "definition"}]}.

#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "bioner/core.hpp"
#include "bioner/errors.hpp"

namespace bioner {

using json = nlohmann::json;
using ordered_json = nlohmann::ordered_json;

namespace detail {

inline const json& require_field(const json& j, const char* key,
                                 std::size_t line) {
  auto it = j.find(key);
  if (it == j.end()) {
    throw ParseError(line, std::string("missing field '") + key + "'");
  }
  return *it;
}

inline std::string require_string(const json& j, const char* key,
                                  std::size_t line) {
  const json& v = require_field(j, key, line);
  if (!v.is_string()) {
    throw ParseError(line, std::string("field '") + key + "' must be a string");
  }
  return v.get<std::string>();
}

inline std::size_t require_offset(const json& j, const char* key,
                                  std::size_t line) {
  const json& v = require_field(j, key, line);
  if (!v.is_number_integer() || v.get<long long>() < 0) {
    throw ParseError(line, std::string("field '") + key +
                               "' must be a non-negative integer");
  }
  return static_cast<std::size_t>(v.get<long long>());
}

}  // namespace detail

inline Sentence sentence_from_json(const json& rec, std::size_t line = 0) {
  if (!rec.is_object()) throw ParseError(line, "record is not an object");
  Sentence s;
  s.id = detail::require_string(rec, "id", line);
  s.dataset = detail::require_string(rec, "dataset", line);
  s.language = language_from_string(detail::require_string(rec, "language", line));
  s.text = detail::require_string(rec, "text", line);
  const json& ents = detail::require_field(rec, "entities", line);
  if (!ents.is_array()) throw ParseError(line, "'entities' must be an array");
  for (const json& ej : ents) {
    if (!ej.is_object()) throw ParseError(line, "entity is not an object");
    EntitySpan e;
    e.start = detail::require_offset(ej, "start", line);
    e.end = detail::require_offset(ej, "end", line);
    e.etype = detail::require_string(ej, "type", line);
    e.text = detail::require_string(ej, "text", line);
    s.entities.push_back(std::move(e));
  }
  return s;
}

inline ordered_json sentence_to_json(const Sentence& s) {
  ordered_json rec;
  rec["id"] = s.id;
  rec["dataset"] = s.dataset;
  rec["language"] = to_string(s.language);
  rec["text"] = s.text;
  ordered_json ents = ordered_json::array();
  for (const EntitySpan& e : s.entities) {
    ordered_json ej;
    ej["start"] = e.start;
    ej["end"] = e.end;
    ej["type"] = e.etype;
    ej["text"] = e.text;
    ents.push_back(std::move(ej));
  }
  rec["entities"] = std::move(ents);
  return rec;
}

struct LoadResult {
  std::vector<Sentence> sentences;
  std::size_t skipped = 0;
  std::vector<std::string> diagnostics;  // one entry per skipped record
};

inline std::string violation_summary(const std::vector<Violation>& vs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < vs.size(); ++i) {
    if (i) os << "; ";
    os << vs[i].message;
  }
  return os.str();
}

// Loads the canonical corpus. Strict mode throws on the first bad record;
// lenient mode skips bad records and reports them in the result.
inline LoadResult load_corpus(const std::filesystem::path& path,
                              const std::map<std::string, DatasetSchema>& schemas,
                              bool strict = true) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open corpus file " + path.string());
  LoadResult result;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    try {
      json rec = json::parse(line, nullptr, false);
      if (rec.is_discarded()) throw ParseError(lineno, "invalid JSON");
      Sentence s = sentence_from_json(rec, lineno);
      utf8_decode(s.text);  // strict UTF-8 check
      auto it = schemas.find(s.dataset);
      if (it == schemas.end()) throw SchemaNotFound(s.dataset);
      auto violations = validate_sentence(s, it->second);
      if (!violations.empty()) {
        throw ValidationError(lineno, violation_summary(violations));
      }
      result.sentences.push_back(std::move(s));
    } catch (const Error& e) {
      if (strict) throw;
      ++result.skipped;
      result.diagnostics.push_back("line " + std::to_string(lineno) + ": " +
                                   e.what());
    }
  }
  return result;
}

inline void write_corpus(const std::vector<Sentence>& sentences,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const Sentence& s : sentences) {
    out << sentence_to_json(s).dump() << '\n';
  }
  if (!out) throw IoError("write failed for " + path.string());
}

inline DatasetSchema schema_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("schema file is not a JSON object");
  DatasetSchema schema;
  schema.name = detail::require_string(j, "name", 0);
  schema.language = language_from_string(detail::require_string(j, "language", 0));
  const json& types = detail::require_field(j, "types", 0);
  if (!types.is_array() || types.empty()) {
    throw ParseError("schema 'types' must be a non-empty array");
  }
  for (const json& tj : types) {
    TypeDef d;
    d.name = detail::require_string(tj, "name", 0);
    d.definition = detail::require_string(tj, "definition", 0);
    if (d.name.empty() || d.name.find(':') != std::string::npos) {
      throw ParseError("type name '" + d.name +
                       "' must be non-empty and contain no ':'");
    }
    if (schema.has_type(d.name)) {
      throw ParseError("duplicate type name '" + d.name + "'");
    }
    schema.types.push_back(std::move(d));
  }
  return schema;
}

inline ordered_json schema_to_json(const DatasetSchema& schema) {
  ordered_json j;
  j["name"] = schema.name;
  j["language"] = to_string(schema.language);
  ordered_json types = ordered_json::array();
  for (const TypeDef& d : schema.types) {
    ordered_json tj;
    tj["name"] = d.name;
    tj["definition"] = d.definition;
    types.push_back(std::move(tj));
  }
  j["types"] = std::move(types);
  return j;
}

inline DatasetSchema load_schema(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open schema file " + path.string());
  json j = json::parse(in, nullptr, false);
  if (j.is_discarded()) {
    throw ParseError("schema file " + path.string() + " is not valid JSON");
  }
  return schema_from_json(j);
}

inline void write_schema(const DatasetSchema& schema,
                         const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out << schema_to_json(schema).dump(2) << '\n';
}

// Loads every *.json in a directory, keyed by schema name.
inline std::map<std::string, DatasetSchema> load_schema_dir(
    const std::filesystem::path& dir) {
  if (!std::filesystem::is_directory(dir)) {
    throw IoError("schema directory " + dir.string() + " does not exist");
  }
  std::map<std::string, DatasetSchema> out;
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".json") {
      files.push_back(entry.path());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) {
    DatasetSchema s = load_schema(f);
    if (out.count(s.name)) {
      throw ParseError("duplicate schema name '" + s.name + "' in " +
                       f.string());
    }
    out.emplace(s.name, std::move(s));
  }
  return out;
}

}  // namespace bioner
