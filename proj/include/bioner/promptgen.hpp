#pragma once

// Instruction prompt rendering and assembly of the mixed bilingual
// fine-tuning corpus. Templates are plain text with three placeholders
// (<Dataset-Name>, <Type-Definitions>, <Sentence>), each required exactly
// once; substitution is purely textual.

#include <filesystem>
#include <fstream>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "bioner/codec.hpp"
#include "bioner/core.hpp"
#include "bioner/corpus_io.hpp"
#include "bioner/errors.hpp"
#include "bioner/random.hpp"

namespace bioner {

inline constexpr std::string_view kPlaceholderDataset = "<Dataset-Name>";
inline constexpr std::string_view kPlaceholderTypes = "<Type-Definitions>";
inline constexpr std::string_view kPlaceholderSentence = "<Sentence>";

struct PromptTemplate {
  std::string preamble;
  Strategy strategy = Strategy::symbolic;
};

namespace promptgen_detail {

inline std::size_t count_occurrences(std::string_view hay,
                                     std::string_view needle) {
  std::size_t n = 0;
  for (std::size_t pos = hay.find(needle); pos != std::string_view::npos;
       pos = hay.find(needle, pos + needle.size())) {
    ++n;
  }
  return n;
}

inline void require_once(std::string_view preamble, std::string_view ph) {
  const std::size_t n = count_occurrences(preamble, ph);
  if (n != 1) {
    throw MissingPlaceholder("template must contain " + std::string(ph) +
                             " exactly once (found " + std::to_string(n) +
                             ")");
  }
}

inline void replace_once(std::string& s, std::string_view ph,
                         std::string_view value) {
  const std::size_t pos = s.find(ph);
  s.replace(pos, ph.size(), value);
}

}  // namespace promptgen_detail

inline PromptTemplate make_template(std::string preamble, Strategy strategy) {
  promptgen_detail::require_once(preamble, kPlaceholderDataset);
  promptgen_detail::require_once(preamble, kPlaceholderTypes);
  promptgen_detail::require_once(preamble, kPlaceholderSentence);
  return {std::move(preamble), strategy};
}

// Built-in per-strategy templates: expert role, the dataset's type
// definitions, the output format contract, then the sentence.
inline PromptTemplate default_template(Strategy strategy) {
  std::string format;
  switch (strategy) {
    case Strategy::json:
      format =
          "Answer with a JSON array only. Each element must be an object "
          "with the keys \"start_idx\", \"end_idx\", \"type\" and \"entity\", "
          "where the indices count Unicode characters from 0 and the end "
          "index is exclusive. Output [] if the sentence contains no "
          "entities.";
      break;
    case Strategy::html:
      format =
          "Answer by repeating the sentence exactly, wrapping every entity "
          "mention in <type:mention> before it and </type:mention> after it. "
          "Tags of nested entities nest. Escape any literal '\\', '<' or '>' "
          "character with a leading backslash.";
      break;
    case Strategy::symbolic:
      format =
          "Answer with one line per entity type, in the order the types are "
          "defined above. Each line starts with the type name followed by "
          "\": \" and then the sentence repeated exactly, with every mention "
          "of that type enclosed in '[' and ']'. Escape any literal '\\', "
          "'[' or ']' character with a leading backslash.";
      break;
  }
  std::string preamble =
      "You are an expert in biomedical named entity recognition.\n"
      "Dataset: <Dataset-Name>\n"
      "Entity type definitions:\n<Type-Definitions>\n" +
      format +
      "\nSentence: <Sentence>";
  return make_template(std::move(preamble), strategy);
}

inline PromptTemplate load_template(const std::filesystem::path& path,
                                    Strategy strategy) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open template file " + path.string());
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
    text.pop_back();
  }
  return make_template(std::move(text), strategy);
}

inline std::string render_prompt(const Sentence& s, const DatasetSchema& schema,
                                 const PromptTemplate& tmpl) {
  promptgen_detail::require_once(tmpl.preamble, kPlaceholderDataset);
  promptgen_detail::require_once(tmpl.preamble, kPlaceholderTypes);
  promptgen_detail::require_once(tmpl.preamble, kPlaceholderSentence);
  std::string defs;
  for (const TypeDef& td : schema.types) {
    if (!defs.empty()) defs.push_back('\n');
    defs += td.name + ": " + td.definition;
  }
  std::string out = tmpl.preamble;
  promptgen_detail::replace_once(out, kPlaceholderDataset, schema.name);
  promptgen_detail::replace_once(out, kPlaceholderTypes, defs);
  promptgen_detail::replace_once(out, kPlaceholderSentence, s.text);
  return out;
}

struct TrainingRecord {
  std::string instruction;
  std::string output;
  std::string dataset;
  Language language = Language::en;
  std::string id;

  bool operator==(const TrainingRecord&) const = default;
};

inline TrainingRecord build_training_record(const Sentence& s,
                                            const DatasetSchema& schema,
                                            const PromptTemplate& tmpl,
                                            Strategy strategy) {
  const TaggedText tagged = encode(strategy, s, schema);
  const DecodeOutcome back = decode(tagged, schema, s);
  std::vector<EntitySpan> gold = s.entities;
  std::sort(gold.begin(), gold.end());
  gold.erase(std::unique(gold.begin(), gold.end()), gold.end());
  if (back.failed || back.entities != gold) {
    throw Error("round trip check failed for sentence '" + s.id +
                "': encoded output does not decode back to the gold set");
  }
  return {render_prompt(s, schema, tmpl), tagged.payload, s.dataset,
          s.language, s.id};
}

// Pools all corpora, shuffles each language bucket, then alternates zh/en
// (zh first) until one bucket runs out.
inline std::vector<Sentence> mix_datasets(
    const std::map<std::string, std::vector<Sentence>>& corpora,
    std::uint64_t seed) {
  std::vector<Sentence> zh, en;
  for (const auto& [name, sentences] : corpora) {
    for (const Sentence& s : sentences) {
      (s.language == Language::zh ? zh : en).push_back(s);
    }
  }
  Rng rng(seed);
  seeded_shuffle(zh, rng);
  seeded_shuffle(en, rng);
  std::vector<Sentence> out;
  out.reserve(zh.size() + en.size());
  std::size_t i = 0, j = 0;
  while (i < zh.size() || j < en.size()) {
    if (i < zh.size()) out.push_back(std::move(zh[i++]));
    if (j < en.size()) out.push_back(std::move(en[j++]));
  }
  return out;
}

inline void emit_finetune_file(const std::vector<TrainingRecord>& records,
                               const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  for (const TrainingRecord& r : records) {
    ordered_json meta;
    meta["dataset"] = r.dataset;
    meta["language"] = to_string(r.language);
    meta["id"] = r.id;
    ordered_json rec;
    rec["instruction"] = r.instruction;
    rec["output"] = r.output;
    rec["meta"] = std::move(meta);
    out << rec.dump() << '\n';
  }
  if (!out) throw IoError("write to " + path.string() + " failed");
}

inline std::vector<TrainingRecord> load_finetune_file(
    const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::vector<TrainingRecord> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      throw ParseError(lineno, "invalid JSON record");
    }
    const json& meta = detail::require_field(rec, "meta", lineno);
    TrainingRecord r;
    r.instruction = detail::require_string(rec, "instruction", lineno);
    r.output = detail::require_string(rec, "output", lineno);
    r.dataset = detail::require_string(meta, "dataset", lineno);
    r.language = language_from_string(
        detail::require_string(meta, "language", lineno));
    r.id = detail::require_string(meta, "id", lineno);
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace bioner
