// Command-line front end: validate / build-prompts / infer / decode /
// evaluate / gen-selector-data / select. Every stage reads the files the
// previous stage wrote, all randomness hangs off --seed, and deterministic
// backends make reruns byte-identical.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "bioner/codec.hpp"
#include "bioner/core.hpp"
#include "bioner/corpus_io.hpp"
#include "bioner/errors.hpp"
#include "bioner/eval.hpp"
#include "bioner/http_backend.hpp"
#include "bioner/inference.hpp"
#include "bioner/promptgen.hpp"
#include "bioner/selector.hpp"

namespace {

using bioner::json;
using bioner::ordered_json;
using SentenceKey = std::pair<std::string, std::string>;  // dataset, id

struct CorpusArgs {
  std::vector<std::string> corpus_files;
  std::string schema_dir;
};

void add_corpus_args(CLI::App* cmd, CorpusArgs& args) {
  cmd->add_option("--corpus", args.corpus_files, "corpus JSONL file(s)")
      ->required()
      ->check(CLI::ExistingFile);
  cmd->add_option("--schemas", args.schema_dir, "directory of schema JSON files")
      ->required()
      ->check(CLI::ExistingDirectory);
}

std::vector<bioner::Sentence> load_corpora(
    const CorpusArgs& args,
    const std::map<std::string, bioner::DatasetSchema>& schemas) {
  std::vector<bioner::Sentence> out;
  for (const std::string& f : args.corpus_files) {
    auto r = bioner::load_corpus(f, schemas, /*strict=*/true);
    for (auto& s : r.sentences) out.push_back(std::move(s));
  }
  return out;
}

std::map<SentenceKey, const bioner::Sentence*> index_corpus(
    const std::vector<bioner::Sentence>& sentences) {
  std::map<SentenceKey, const bioner::Sentence*> out;
  for (const bioner::Sentence& s : sentences) {
    if (!out.emplace(SentenceKey{s.dataset, s.id}, &s).second) {
      throw bioner::Error("duplicate sentence key " + s.dataset + "/" + s.id);
    }
  }
  return out;
}

// Predictions use the corpus record layout but may carry types outside the
// schema (a model can hallucinate one), so only structure is checked.
std::vector<bioner::Sentence> load_predictions(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw bioner::IoError("cannot open predictions file " + path);
  std::vector<bioner::Sentence> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded()) throw bioner::ParseError(lineno, "invalid JSON");
    bioner::Sentence s = bioner::sentence_from_json(rec, lineno);
    const std::u32string text = bioner::utf8_decode(s.text);
    for (const bioner::EntitySpan& e : s.entities) {
      if (e.start >= e.end || e.end > text.size()) {
        throw bioner::ValidationError(
            lineno, "entity (" + std::to_string(e.start) + "," +
                        std::to_string(e.end) + ") out of range");
      }
    }
    out.push_back(std::move(s));
  }
  return out;
}

bioner::PromptTemplate resolve_template(const std::string& path,
                                        bioner::Strategy strategy) {
  if (path.empty()) return bioner::default_template(strategy);
  return bioner::load_template(path, strategy);
}

struct BackendArgs {
  std::string kind = "wire";
  std::string endpoint;
  std::string model;
  std::string auth_env = "LLM_API_KEY";
  double temperature = 0;
  std::size_t parallelism = 1;
  std::size_t retries = 3;
  std::size_t backoff_ms = 50;
  std::size_t timeout_sec = 120;
  std::size_t max_output_chars = 65536;
  double noise_rate = 0.02;
  std::uint64_t seed = 0;
};

void add_backend_args(CLI::App* cmd, BackendArgs& args,
                      const std::vector<std::string>& kinds) {
  cmd->add_option("--backend", args.kind, "backend kind")
      ->check(CLI::IsMember(kinds))
      ->required();
  cmd->add_option("--endpoint", args.endpoint, "wire endpoint URL");
  cmd->add_option("--model", args.model, "wire model name");
  cmd->add_option("--auth-env", args.auth_env,
                  "environment variable holding the API token");
  cmd->add_option("--temperature", args.temperature, "sampling temperature");
  cmd->add_option("--parallelism", args.parallelism, "max in-flight requests")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--retries", args.retries, "retries per failed request");
  cmd->add_option("--backoff-ms", args.backoff_ms, "initial retry backoff");
  cmd->add_option("--timeout", args.timeout_sec, "request timeout, seconds");
  cmd->add_option("--max-output-chars", args.max_output_chars,
                  "generation length cap")
      ->check(CLI::PositiveNumber);
  cmd->add_option("--noise-rate", args.noise_rate,
                  "character noise rate (perturb backend)");
  cmd->add_option("--seed", args.seed, "noise seed (perturb backend)");
}

std::unique_ptr<bioner::Backend> make_backend(
    const BackendArgs& args, const std::vector<bioner::Sentence>& corpus,
    const std::map<std::string, bioner::DatasetSchema>& schemas,
    bioner::Strategy strategy, const bioner::PromptTemplate& tmpl,
    std::unique_ptr<bioner::Backend>& inner_keepalive) {
  if (args.kind == "wire") {
    if (args.endpoint.empty()) {
      throw CLI::ValidationError("--endpoint is required for --backend wire");
    }
    return std::make_unique<bioner::WireBackend>(bioner::WireConfig{
        args.endpoint, args.model, args.auth_env, args.timeout_sec});
  }
  if (args.kind == "echo") return std::make_unique<bioner::EchoBackend>();
  if (args.kind == "echo-gold") {
    return std::make_unique<bioner::EchoGoldBackend>(corpus, schemas, strategy,
                                                     tmpl);
  }
  // perturb: echo-gold wrapped in seeded character noise
  inner_keepalive = std::make_unique<bioner::EchoGoldBackend>(corpus, schemas,
                                                              strategy, tmpl);
  return std::make_unique<bioner::PerturbingBackend>(*inner_keepalive,
                                                     args.seed,
                                                     args.noise_rate);
}

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw bioner::IoError("cannot open " + path + " for writing");
  return out;
}

// ------------------------------------------------------------- validate ----

int cmd_validate(const CorpusArgs& args) {
  const auto schemas = bioner::load_schema_dir(args.schema_dir);
  std::size_t ok = 0, bad = 0;
  for (const std::string& f : args.corpus_files) {
    const auto r = bioner::load_corpus(f, schemas, /*strict=*/false);
    for (const std::string& d : r.diagnostics) {
      std::cout << f << ": " << d << "\n";
    }
    ok += r.sentences.size();
    bad += r.skipped;
  }
  std::cout << ok << " sentence(s) valid, " << bad << " rejected\n";
  return bad == 0 ? 0 : 1;
}

// -------------------------------------------------------- build-prompts ----

int cmd_build_prompts(const CorpusArgs& args, const std::string& template_path,
                      bioner::Strategy strategy, bool mix, std::uint64_t seed,
                      const std::string& out_path) {
  const auto schemas = bioner::load_schema_dir(args.schema_dir);
  const auto tmpl = resolve_template(template_path, strategy);

  std::map<std::string, std::vector<bioner::Sentence>> by_dataset;
  std::vector<bioner::Sentence> in_order;
  for (const std::string& f : args.corpus_files) {
    auto r = bioner::load_corpus(f, schemas, /*strict=*/true);
    for (auto& s : r.sentences) {
      if (mix) {
        by_dataset[s.dataset].push_back(std::move(s));
      } else {
        in_order.push_back(std::move(s));
      }
    }
  }
  const std::vector<bioner::Sentence> order =
      mix ? bioner::mix_datasets(by_dataset, seed) : std::move(in_order);

  std::vector<bioner::TrainingRecord> records;
  std::size_t skipped = 0;
  for (const bioner::Sentence& s : order) {
    try {
      records.push_back(bioner::build_training_record(s, schemas.at(s.dataset),
                                                      tmpl, strategy));
    } catch (const bioner::OverlapUnserializable& e) {
      ++skipped;
      std::cerr << "skipped " << s.dataset << "/" << s.id << ": " << e.what()
                << "\n";
    }
  }
  bioner::emit_finetune_file(records, out_path);
  std::cout << "wrote " << records.size() << " record(s) to " << out_path
            << " (" << skipped << " unserializable)\n";
  return 0;
}

// ---------------------------------------------------------------- infer ----

int cmd_infer(const CorpusArgs& args, const std::string& template_path,
              bioner::Strategy strategy, const BackendArgs& backend_args,
              const std::string& out_path) {
  const auto schemas = bioner::load_schema_dir(args.schema_dir);
  const auto tmpl = resolve_template(template_path, strategy);
  const auto sentences = load_corpora(args, schemas);
  index_corpus(sentences);  // reject duplicate keys up front

  std::unique_ptr<bioner::Backend> keepalive;
  auto backend = make_backend(backend_args, sentences, schemas, strategy, tmpl,
                              keepalive);

  std::vector<bioner::GenerationRequest> requests;
  requests.reserve(sentences.size());
  for (const bioner::Sentence& s : sentences) {
    bioner::GenerationRequest req;
    req.prompt = bioner::render_prompt(s, schemas.at(s.dataset), tmpl);
    req.max_output_chars = backend_args.max_output_chars;
    req.temperature = backend_args.temperature;
    req.id = s.dataset + "/" + s.id;
    requests.push_back(std::move(req));
  }
  const auto results = bioner::run_batch(
      requests, *backend,
      {backend_args.parallelism, backend_args.retries, backend_args.backoff_ms});

  auto out = open_out(out_path);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    ordered_json rec;
    rec["dataset"] = sentences[i].dataset;
    rec["id"] = sentences[i].id;
    rec["strategy"] = to_string(strategy);
    if (results[i].ok()) {
      rec["payload"] = results[i].output;
    } else {
      rec["error"] = to_string(*results[i].error);
      rec["detail"] = results[i].error_detail;
      ++failed;
    }
    rec["attempts"] = results[i].attempts;
    out << rec.dump() << '\n';
  }
  std::cout << "generated " << (results.size() - failed) << "/"
            << results.size() << " payload(s) with backend " << backend->name()
            << " -> " << out_path << "\n";
  return 0;
}

// --------------------------------------------------------------- decode ----

int cmd_decode(const std::string& raw_path, const CorpusArgs& args,
               bioner::Strategy strategy, const std::string& out_path) {
  const auto schemas = bioner::load_schema_dir(args.schema_dir);
  const auto sentences = load_corpora(args, schemas);
  const auto by_key = index_corpus(sentences);

  std::ifstream in(raw_path, std::ios::binary);
  if (!in) throw bioner::IoError("cannot open raw outputs file " + raw_path);

  std::vector<bioner::Sentence> predictions;
  std::map<SentenceKey, bool> seen;
  std::size_t failed_payloads = 0, failed_slots = 0, repairs = 0, dropped = 0;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    json rec = json::parse(line, nullptr, false);
    if (rec.is_discarded() || !rec.is_object()) {
      throw bioner::ParseError(lineno, "invalid JSON");
    }
    const std::string dataset = bioner::detail::require_string(rec, "dataset", lineno);
    const std::string id = bioner::detail::require_string(rec, "id", lineno);
    const auto rec_strategy = bioner::strategy_from_string(
        bioner::detail::require_string(rec, "strategy", lineno));
    if (rec_strategy != strategy) {
      throw bioner::ValidationError(
          lineno, "record strategy does not match --strategy");
    }
    const auto it = by_key.find(SentenceKey{dataset, id});
    if (it == by_key.end()) {
      throw bioner::UnknownSentence("raw outputs line " +
                                    std::to_string(lineno) + ": " + dataset +
                                    "/" + id + " not in corpus");
    }
    if (!seen.emplace(SentenceKey{dataset, id}, true).second) {
      throw bioner::ValidationError(lineno, "duplicate record for " + dataset +
                                                "/" + id);
    }
    const bioner::Sentence& source = *it->second;
    bioner::Sentence pred = source;
    pred.entities.clear();
    if (rec.contains("payload")) {
      bioner::TaggedText tagged{strategy,
                                rec["payload"].get<std::string>(), dataset};
      const auto outcome =
          bioner::decode(tagged, schemas.at(dataset), source);
      if (outcome.failed) ++failed_payloads;
      repairs += outcome.count(bioner::DiagSeverity::repair);
      dropped += outcome.count(bioner::DiagSeverity::dropped);
      pred.entities = outcome.entities;
    } else {
      ++failed_slots;  // inference error: empty prediction set
    }
    predictions.push_back(std::move(pred));
  }
  bioner::write_corpus(predictions, out_path);
  std::cout << "decoded " << predictions.size() << " sentence(s) -> "
            << out_path << " (payload failures " << failed_payloads
            << ", inference failures " << failed_slots << ", repairs "
            << repairs << ", dropped " << dropped << ")\n";
  return 0;
}

// ------------------------------------------------------------- evaluate ----

int cmd_evaluate(const std::string& pred_path, const CorpusArgs& args,
                 const std::string& machine_out) {
  const auto schemas = bioner::load_schema_dir(args.schema_dir);
  const auto gold = load_corpora(args, schemas);
  const auto gold_by_key = index_corpus(gold);

  const auto preds = load_predictions(pred_path);
  std::map<SentenceKey, const bioner::Sentence*> pred_by_key;
  for (const bioner::Sentence& p : preds) {
    const SentenceKey key{p.dataset, p.id};
    if (!gold_by_key.count(key)) {
      throw bioner::UnknownSentence("prediction for unknown sentence " +
                                    p.dataset + "/" + p.id);
    }
    if (!pred_by_key.emplace(key, &p).second) {
      throw bioner::ValidationError(0, "duplicate prediction for " + p.dataset +
                                           "/" + p.id);
    }
  }

  bioner::EvalAccumulator acc;
  std::size_t without_prediction = 0;
  for (const bioner::Sentence& g : gold) {
    const auto it = pred_by_key.find(SentenceKey{g.dataset, g.id});
    static const std::vector<bioner::EntitySpan> kEmpty;
    const auto& pred_entities =
        it == pred_by_key.end() ? kEmpty : it->second->entities;
    if (it == pred_by_key.end()) ++without_prediction;

    const auto m = bioner::match_entities(pred_entities, g.entities);
    // conservation identities, checked on every run
    std::size_t gold_consumed = 0;
    for (const auto& e : m.errors) gold_consumed += e.gold.has_value();
    if (m.true_positives.size() + m.errors.size() != pred_entities.size() ||
        m.true_positives.size() + gold_consumed + m.missed.size() !=
            g.entities.size()) {
      throw bioner::Error("matching conservation violated on " + g.dataset +
                          "/" + g.id);
    }
    acc.add(m);
    acc.add_deviation(bioner::boundary_deviation_histogram(m, g));
  }
  const auto report = acc.report();
  std::cout << bioner::render_report(report, bioner::ReportFormat::text);
  if (without_prediction > 0) {
    std::cout << "note: " << without_prediction
              << " gold sentence(s) had no prediction record\n";
  }
  if (!machine_out.empty()) {
    auto out = open_out(machine_out);
    out << bioner::render_report(report, bioner::ReportFormat::machine);
  }
  return 0;
}

// ---------------------------------------------------- gen-selector-data ----

int cmd_gen_selector(const CorpusArgs& args, std::size_t total,
                     double neg_ratio, std::uint64_t seed,
                     const std::string& out_path) {
  const auto schemas = bioner::load_schema_dir(args.schema_dir);
  const auto sentences = load_corpora(args, schemas);
  const auto samples =
      bioner::gen_selector_dataset(sentences, schemas, seed, total, neg_ratio);
  bioner::emit_selector_file(samples, out_path);
  std::size_t pos = 0;
  for (const auto& s : samples) pos += s.label;
  std::cout << "wrote " << samples.size() << " sample(s) (" << pos
            << " positive, " << samples.size() - pos << " negative) to "
            << out_path << "\n";
  return 0;
}

// --------------------------------------------------------------- select ----

int cmd_select(const std::string& pred_path, const CorpusArgs& args,
               const BackendArgs& backend_args, double threshold,
               double constant_score, const std::string& out_path,
               const std::string& audit_path) {
  const auto schemas = bioner::load_schema_dir(args.schema_dir);
  const auto gold = load_corpora(args, schemas);
  const auto gold_by_key = index_corpus(gold);
  const auto preds = load_predictions(pred_path);

  std::unique_ptr<bioner::Backend> wire;
  std::unique_ptr<bioner::SelectorBackend> backend;
  if (backend_args.kind == "gold-oracle") {
    backend = std::make_unique<bioner::GoldOracleScoreBackend>(gold);
  } else if (backend_args.kind == "constant") {
    backend = std::make_unique<bioner::ConstantScoreBackend>(constant_score);
  } else {
    if (backend_args.endpoint.empty()) {
      throw CLI::ValidationError("--endpoint is required for --backend wire");
    }
    wire = std::make_unique<bioner::WireBackend>(
        bioner::WireConfig{backend_args.endpoint, backend_args.model,
                           backend_args.auth_env, backend_args.timeout_sec});
    backend = std::make_unique<bioner::WireScoreBackend>(*wire);
  }

  std::vector<bioner::Sentence> filtered;
  std::ofstream audit;
  if (!audit_path.empty()) audit = open_out(audit_path);
  std::size_t kept_total = 0, seen_total = 0, failures = 0;
  for (const bioner::Sentence& p : preds) {
    const auto it = gold_by_key.find(SentenceKey{p.dataset, p.id});
    if (it == gold_by_key.end()) {
      throw bioner::UnknownSentence("prediction for unknown sentence " +
                                    p.dataset + "/" + p.id);
    }
    const auto result =
        bioner::filter_predictions(*it->second, p.entities, *backend, threshold,
                                   backend_args.parallelism);
    bioner::Sentence f = p;
    f.entities = result.kept;
    filtered.push_back(std::move(f));
    kept_total += result.kept.size();
    seen_total += p.entities.size();
    for (const auto& a : result.audit) {
      failures += a.backend_failed;
      if (!audit_path.empty()) {
        ordered_json rec;
        rec["dataset"] = p.dataset;
        rec["id"] = p.id;
        rec["start"] = a.entity.start;
        rec["end"] = a.entity.end;
        rec["type"] = a.entity.etype;
        rec["score"] = a.score;
        rec["kept"] = a.kept;
        rec["backend_failed"] = a.backend_failed;
        audit << rec.dump() << '\n';
      }
    }
  }
  bioner::write_corpus(filtered, out_path);
  std::cout << "kept " << kept_total << "/" << seen_total
            << " prediction(s) -> " << out_path;
  if (failures > 0) {
    std::cout << " (" << failures << " backend failure(s), kept fail-open)";
  }
  std::cout << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generative biomedical NER toolkit"};
  app.require_subcommand(1);
  app.set_config("--config", "", "read options from a config file");

  const auto strategy_opt = [&](CLI::App* cmd, std::string& target) {
    cmd->add_option("--strategy", target, "tagging format")
        ->check(CLI::IsMember({"json", "html", "symbolic"}));
  };

  int rc = 0;
  const auto run = [&](auto&& fn) {
    return [&rc, fn]() { rc = fn(); };
  };

  // validate
  auto* validate = app.add_subcommand("validate", "check corpus files");
  auto validate_args = std::make_shared<CorpusArgs>();
  add_corpus_args(validate, *validate_args);
  validate->callback(run([validate_args] { return cmd_validate(*validate_args); }));

  // build-prompts
  auto* build = app.add_subcommand("build-prompts",
                                   "emit the instruction-tuning file");
  auto build_args = std::make_shared<CorpusArgs>();
  auto build_template = std::make_shared<std::string>();
  auto build_strategy = std::make_shared<std::string>("symbolic");
  auto build_mix = std::make_shared<bool>(false);
  auto build_seed = std::make_shared<std::uint64_t>(0);
  auto build_out = std::make_shared<std::string>();
  add_corpus_args(build, *build_args);
  build->add_option("--template", *build_template, "prompt template file");
  strategy_opt(build, *build_strategy);
  build->add_flag("--mix", *build_mix, "shuffle and alternate languages");
  build->add_option("--seed", *build_seed, "mixing seed");
  build->add_option("--out", *build_out, "output file")->required();
  build->callback(run([=] {
    return cmd_build_prompts(*build_args, *build_template,
                             bioner::strategy_from_string(*build_strategy),
                             *build_mix, *build_seed, *build_out);
  }));

  // infer
  auto* infer = app.add_subcommand("infer", "run a backend over the corpus");
  auto infer_args = std::make_shared<CorpusArgs>();
  auto infer_template = std::make_shared<std::string>();
  auto infer_strategy = std::make_shared<std::string>("symbolic");
  auto infer_backend = std::make_shared<BackendArgs>();
  auto infer_out = std::make_shared<std::string>();
  add_corpus_args(infer, *infer_args);
  infer->add_option("--template", *infer_template, "prompt template file");
  strategy_opt(infer, *infer_strategy);
  add_backend_args(infer, *infer_backend,
                   {"wire", "echo", "echo-gold", "perturb"});
  infer->add_option("--out", *infer_out, "raw outputs file")->required();
  infer->callback(run([=] {
    return cmd_infer(*infer_args, *infer_template,
                     bioner::strategy_from_string(*infer_strategy),
                     *infer_backend, *infer_out);
  }));

  // decode
  auto* decode = app.add_subcommand("decode", "raw payloads -> predictions");
  auto decode_raw = std::make_shared<std::string>();
  auto decode_args = std::make_shared<CorpusArgs>();
  auto decode_strategy = std::make_shared<std::string>("symbolic");
  auto decode_out = std::make_shared<std::string>();
  decode->add_option("--raw", *decode_raw, "raw outputs file")
      ->required()
      ->check(CLI::ExistingFile);
  add_corpus_args(decode, *decode_args);
  strategy_opt(decode, *decode_strategy);
  decode->add_option("--out", *decode_out, "predictions file")->required();
  decode->callback(run([=] {
    return cmd_decode(*decode_raw, *decode_args,
                      bioner::strategy_from_string(*decode_strategy),
                      *decode_out);
  }));

  // evaluate
  auto* evaluate = app.add_subcommand("evaluate", "score predictions");
  auto eval_pred = std::make_shared<std::string>();
  auto eval_args = std::make_shared<CorpusArgs>();
  auto eval_machine = std::make_shared<std::string>();
  evaluate->add_option("--pred", *eval_pred, "predictions file")
      ->required()
      ->check(CLI::ExistingFile);
  add_corpus_args(evaluate, *eval_args);
  evaluate->add_option("--machine-out", *eval_machine,
                       "write the machine-readable report here");
  evaluate->callback(run(
      [=] { return cmd_evaluate(*eval_pred, *eval_args, *eval_machine); }));

  // gen-selector-data
  auto* gensel = app.add_subcommand("gen-selector-data",
                                    "build contrastive selector samples");
  auto gensel_args = std::make_shared<CorpusArgs>();
  auto gensel_total = std::make_shared<std::size_t>(10000);
  auto gensel_ratio = std::make_shared<double>(0.5);
  auto gensel_seed = std::make_shared<std::uint64_t>(0);
  auto gensel_out = std::make_shared<std::string>();
  add_corpus_args(gensel, *gensel_args);
  gensel->add_option("--total", *gensel_total, "sample count");
  gensel->add_option("--neg-ratio", *gensel_ratio, "negative fraction")
      ->check(CLI::Range(0.0, 1.0));
  gensel->add_option("--seed", *gensel_seed, "sampling seed");
  gensel->add_option("--out", *gensel_out, "selector sample file")->required();
  gensel->callback(run([=] {
    return cmd_gen_selector(*gensel_args, *gensel_total, *gensel_ratio,
                            *gensel_seed, *gensel_out);
  }));

  // select
  auto* select = app.add_subcommand("select", "filter predictions");
  auto select_pred = std::make_shared<std::string>();
  auto select_args = std::make_shared<CorpusArgs>();
  auto select_backend = std::make_shared<BackendArgs>();
  auto select_threshold = std::make_shared<double>(0.5);
  auto select_constant = std::make_shared<double>(1.0);
  auto select_out = std::make_shared<std::string>();
  auto select_audit = std::make_shared<std::string>();
  select->add_option("--pred", *select_pred, "predictions file")
      ->required()
      ->check(CLI::ExistingFile);
  add_corpus_args(select, *select_args);
  add_backend_args(select, *select_backend, {"wire", "gold-oracle", "constant"});
  select->add_option("--threshold", *select_threshold, "keep score >= this")
      ->check(CLI::Range(0.0, 1.0));
  select->add_option("--constant-score", *select_constant,
                     "score for --backend constant");
  select->add_option("--out", *select_out, "filtered predictions file")
      ->required();
  select->add_option("--audit", *select_audit, "per-candidate score file");
  select->callback(run([=] {
    return cmd_select(*select_pred, *select_args, *select_backend,
                      *select_threshold, *select_constant, *select_out,
                      *select_audit);
  }));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const bioner::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return rc;
}
