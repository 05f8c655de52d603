#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <map>
#include <sstream>

#include "bioner/selector.hpp"
#include "support/gen.hpp"

using namespace bioner;

namespace {

Sentence simple_sentence(std::string id, std::string text,
                         std::vector<std::tuple<std::size_t, std::size_t,
                                                std::string>> ents,
                         std::string dataset = "genes-en",
                         Language lang = Language::en) {
  Sentence s;
  s.id = std::move(id);
  s.dataset = std::move(dataset);
  s.language = lang;
  s.text = std::move(text);
  const std::u32string t = s.text32();
  for (auto& [a, b, ty] : ents) s.entities.push_back(make_span(t, a, b, ty));
  return s;
}

bool is_gold_of(const Sentence& s, const EntitySpan& cand) {
  for (const EntitySpan& g : s.entities) {
    if (g == cand) return true;
  }
  return false;
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct ScriptedScoreBackend final : Backend {
  std::string reply;
  GenerationRequest last;
  std::string generate(const GenerationRequest& req) override {
    last = req;
    return reply;
  }
  std::string name() const override { return "scripted"; }
};

struct ThrowingScoreBackend final : SelectorBackend {
  double score(const std::string&) override {
    throw std::runtime_error("selector fell over");
  }
  std::string name() const override { return "throwing"; }
};

}  // namespace

TEST_CASE("mark_candidate wraps the span in marker tokens") {
  SECTION("whole short sentence") {
    const Sentence s = simple_sentence("m-1", "AB", {{0, 2, "Protein"}});
    const MarkedCandidate mc = mark_candidate(s, s.entities[0]);
    CHECK(mc.marked_text == "⟨e⟩AB⟨/e⟩");
    CHECK(mc.selector_input == "Protein | ⟨e⟩AB⟨/e⟩");
    CHECK(mc.sentence_id == "m-1");
    CHECK(mc.candidate == s.entities[0]);
  }
  SECTION("mid-sentence splice") {
    const Sentence s = testgen::nested_fixture();
    const MarkedCandidate mc = mark_candidate(s, s.entities[2]);
    CHECK(mc.marked_text ==
          "IL-5 promoter/enhancer-⟨e⟩luciferase⟨/e⟩ gene construct");
    CHECK(mc.selector_input ==
          "Protein | IL-5 promoter/enhancer-⟨e⟩luciferase⟨/e⟩ gene construct");
  }
  SECTION("offsets are code points, not bytes") {
    const Sentence s =
        simple_sentence("m-2", "患者服用药物", {{4, 6, "药物"}}, "clinic-zh",
                        Language::zh);
    const MarkedCandidate mc = mark_candidate(s, s.entities[0]);
    CHECK(mc.marked_text == "患者服用⟨e⟩药物⟨/e⟩");
  }
  SECTION("custom marker pair") {
    const Sentence s = simple_sentence("m-3", "IL-5 binds", {{0, 4, "Protein"}});
    const MarkedCandidate mc = mark_candidate(s, s.entities[0], "«", "»");
    CHECK(mc.marked_text == "«IL-5» binds");
  }
  SECTION("collision with the sentence text is refused") {
    const Sentence s =
        simple_sentence("m-4", "weird ⟨e⟩ token", {{0, 5, "Protein"}});
    CHECK_THROWS_AS(mark_candidate(s, s.entities[0]), MarkerCollision);
    // a different marker pair sidesteps the collision
    CHECK(mark_candidate(s, s.entities[0], "«", "»").marked_text ==
          "«weird» ⟨e⟩ token");
  }
  SECTION("bad spans and bad markers are refused") {
    const Sentence s = simple_sentence("m-5", "IL-5 binds", {});
    CHECK_THROWS_AS(mark_candidate(s, EntitySpan{0, 99, "Protein", ""}),
                    Error);
    CHECK_THROWS_AS(mark_candidate(s, EntitySpan{3, 3, "Protein", ""}), Error);
    CHECK_THROWS_AS(mark_candidate(s, EntitySpan{4, 2, "Protein", ""}), Error);
    CHECK_THROWS_AS(
        mark_candidate(s, EntitySpan{0, 4, "Protein", ""}, "", "⟩"), Error);
  }
  SECTION("removing the markers restores the sentence") {
    Rng rng(71);
    const std::u32string open = utf8_decode(kMarkerOpen);
    const std::u32string close = utf8_decode(kMarkerClose);
    int checked = 0;
    for (std::uint64_t n = 0; checked < 100; ++n) {
      const Sentence s = testgen::random_sentence(rng, n);
      if (s.entities.empty()) continue;
      const EntitySpan& e = s.entities[bounded_rand(rng, s.entities.size())];
      std::u32string marked = utf8_decode(mark_candidate(s, e).marked_text);
      const std::size_t at_open = marked.find(open);
      REQUIRE(at_open == e.start);
      marked.erase(at_open, open.size());
      const std::size_t at_close = marked.find(close, at_open);
      REQUIRE(at_close == e.end);
      marked.erase(at_close, close.size());
      REQUIRE(utf8_encode(marked) == s.text);
      ++checked;
    }
  }
}

TEST_CASE("shifted_span moves one boundary by whole tokens") {
  const Sentence s = testgen::nested_fixture();
  const EntitySpan anchor = s.entities[2];  // Protein (23,33) "luciferase"

  SECTION("start one token left") {
    const auto cand = selector_detail::shifted_span(s, anchor, true, -1);
    REQUIRE(cand.has_value());
    CHECK(cand->start == 22);
    CHECK(cand->end == 33);
    CHECK(cand->etype == "Protein");
    CHECK(cand->text == "-luciferase");
  }
  SECTION("start two tokens left") {
    const auto cand = selector_detail::shifted_span(s, anchor, true, -2);
    REQUIRE(cand.has_value());
    CHECK(cand->start == 14);
    CHECK(cand->text == "enhancer-luciferase");
  }
  SECTION("end one token right") {
    const auto cand = selector_detail::shifted_span(s, anchor, false, 1);
    REQUIRE(cand.has_value());
    CHECK(cand->start == 23);
    CHECK(cand->end == 38);
    CHECK(cand->text == "luciferase gene");
  }
  SECTION("running off the token array is rejected") {
    const EntitySpan head = s.entities[1];  // Protein (0,4) tokens 0..2
    CHECK_FALSE(selector_detail::shifted_span(s, head, true, -1).has_value());
    const EntitySpan tail = make_span(s.text32(), 39, 48, "DNA");
    CHECK_FALSE(selector_detail::shifted_span(s, tail, false, 2).has_value());
  }
  SECTION("collapsing to an empty span is rejected") {
    // start jumps past the end of the anchor
    CHECK_FALSE(selector_detail::shifted_span(s, anchor, true, 1).has_value());
  }
}

TEST_CASE("selector dataset generation") {
  Rng seed_rng(72);
  std::vector<Sentence> corpus;
  for (std::uint64_t n = 0; n < 40; ++n) {
    corpus.push_back(testgen::random_sentence(seed_rng, n));
  }
  corpus.push_back(testgen::nested_fixture());
  const auto schemas = testgen::schemas();

  std::map<std::string, const Sentence*> by_id;
  for (const Sentence& s : corpus) by_id[s.id] = &s;

  const auto samples = gen_selector_dataset(corpus, schemas, 901, 200, 0.5);
  REQUIRE(samples.size() == 200);

  SECTION("positive count follows the ceil rule and labels match provenance") {
    std::size_t pos = 0;
    for (const auto& s : samples) {
      pos += s.label;
      CHECK((s.label == 1) == (s.provenance.kind == ProvenanceKind::gold));
    }
    CHECK(pos == 100);
  }

  SECTION("labels are pure against the owning sentence") {
    for (const auto& sample : samples) {
      REQUIRE(by_id.count(sample.candidate.sentence_id) == 1);
      const Sentence& s = *by_id[sample.candidate.sentence_id];
      CHECK(sample.dataset == s.dataset);
      REQUIRE((sample.label == 1) == is_gold_of(s, sample.candidate.candidate));
      // the marked text strips back to the sentence
      std::u32string marked = utf8_decode(sample.candidate.marked_text);
      const std::u32string open = utf8_decode(kMarkerOpen);
      const std::u32string close = utf8_decode(kMarkerClose);
      const std::size_t at_open = marked.find(open);
      REQUIRE(at_open == sample.candidate.candidate.start);
      marked.erase(at_open, open.size());
      const std::size_t at_close = marked.find(close, at_open);
      REQUIRE(at_close == sample.candidate.candidate.end);
      marked.erase(at_close, close.size());
      REQUIRE(utf8_encode(marked) == s.text);
      REQUIRE(sample.candidate.selector_input ==
              sample.candidate.candidate.etype + " | " +
                  sample.candidate.marked_text);
    }
  }

  SECTION("negatives carry an honest provenance") {
    std::size_t shifts = 0, swaps = 0;
    for (const auto& sample : samples) {
      if (sample.label == 1) continue;
      const Sentence& s = *by_id[sample.candidate.sentence_id];
      const EntitySpan& cand = sample.candidate.candidate;
      const Provenance& prov = sample.provenance;
      const std::vector<Token> tokens = tokenize(s.text32(), s.language);

      if (prov.kind == ProvenanceKind::type_swap) {
        ++swaps;
        CHECK(prov.new_type == cand.etype);
        CHECK(prov.old_type != prov.new_type);
        bool anchor_found = false;
        for (const EntitySpan& g : s.entities) {
          anchor_found = anchor_found ||
                         (g.start == cand.start && g.end == cand.end &&
                          g.etype == prov.old_type);
        }
        CHECK(anchor_found);
        bool in_schema = false;
        for (const TypeDef& td : schemas.at(s.dataset).types) {
          in_schema = in_schema || td.name == prov.new_type;
        }
        CHECK(in_schema);
      } else {
        ++shifts;
        REQUIRE((prov.delta == -2 || prov.delta == -1 || prov.delta == 1 ||
                 prov.delta == 2));
        const auto ct = token_span_of(cand.start, cand.end, tokens);
        REQUIRE(ct.has_value());
        bool anchor_found = false;
        for (const EntitySpan& g : s.entities) {
          if (g.etype != cand.etype) continue;
          const auto gt = token_span_of(g.start, g.end, tokens);
          if (!gt) continue;
          if (prov.kind == ProvenanceKind::shift_start) {
            anchor_found = anchor_found ||
                           (g.end == cand.end && gt->second == ct->second &&
                            static_cast<long long>(gt->first) + prov.delta ==
                                static_cast<long long>(ct->first));
          } else {
            anchor_found = anchor_found ||
                           (g.start == cand.start && gt->first == ct->first &&
                            static_cast<long long>(gt->second) + prov.delta ==
                                static_cast<long long>(ct->second));
          }
        }
        CHECK(anchor_found);
      }
    }
    CHECK(shifts + swaps == 100);
  }

  SECTION("a fixed seed reproduces the file byte for byte") {
    const auto again = gen_selector_dataset(corpus, schemas, 901, 200, 0.5);
    testgen::TempDir tmp;
    emit_selector_file(samples, tmp.file("a.jsonl"));
    emit_selector_file(again, tmp.file("b.jsonl"));
    const std::string a = slurp(tmp.file("a.jsonl"));
    REQUIRE_FALSE(a.empty());
    REQUIRE(a == slurp(tmp.file("b.jsonl")));

    const auto other = gen_selector_dataset(corpus, schemas, 902, 200, 0.5);
    emit_selector_file(other, tmp.file("c.jsonl"));
    REQUIRE(a != slurp(tmp.file("c.jsonl")));
  }
}

TEST_CASE("positive share rounds up") {
  std::vector<Sentence> corpus = {testgen::nested_fixture()};
  const auto schemas = testgen::schemas();
  const auto count_pos = [](const std::vector<SelectorSample>& v) {
    std::size_t n = 0;
    for (const auto& s : v) n += s.label;
    return n;
  };

  auto odd = gen_selector_dataset(corpus, schemas, 1, 7, 0.5);
  CHECK(odd.size() == 7);
  CHECK(count_pos(odd) == 4);

  auto skew = gen_selector_dataset(corpus, schemas, 1, 10, 0.34);
  CHECK(count_pos(skew) == 7);

  auto all_pos = gen_selector_dataset(corpus, schemas, 1, 5, 0.0);
  CHECK(count_pos(all_pos) == 5);

  auto all_neg = gen_selector_dataset(corpus, schemas, 1, 5, 1.0);
  CHECK(count_pos(all_neg) == 0);
  CHECK(all_neg.size() == 5);

  CHECK(gen_selector_dataset(corpus, schemas, 1, 0, 0.5).empty());
}

TEST_CASE("selector generation rejects bad input") {
  const auto schemas = testgen::schemas();
  SECTION("neg_ratio outside [0,1]") {
    std::vector<Sentence> corpus = {testgen::nested_fixture()};
    CHECK_THROWS_AS(gen_selector_dataset(corpus, schemas, 1, 10, -0.1), Error);
    CHECK_THROWS_AS(gen_selector_dataset(corpus, schemas, 1, 10, 1.1), Error);
  }
  SECTION("unknown dataset") {
    Sentence s = testgen::nested_fixture();
    s.dataset = "nobody-home";
    CHECK_THROWS_AS(gen_selector_dataset({s}, schemas, 1, 10, 0.5),
                    SchemaNotFound);
  }
  SECTION("no markable entities") {
    const Sentence bare = simple_sentence("b-1", "nothing here", {});
    CHECK_THROWS_AS(gen_selector_dataset({bare}, schemas, 1, 10, 0.5), Error);
    const Sentence tainted =
        simple_sentence("b-2", "literal ⟨e⟩ text", {{0, 7, "Protein"}});
    CHECK_THROWS_AS(gen_selector_dataset({tainted}, schemas, 1, 10, 0.5),
                    Error);
  }
  SECTION("sentences containing markers are skipped, not sampled") {
    const Sentence tainted =
        simple_sentence("b-3", "literal ⟨e⟩ text", {{0, 7, "Protein"}});
    const Sentence clean = simple_sentence("b-4", "IL-5 binds",
                                           {{0, 4, "Protein"}});
    const auto samples =
        gen_selector_dataset({tainted, clean}, testgen::schemas(), 3, 12, 0.5);
    for (const auto& sample : samples) {
      CHECK(sample.candidate.sentence_id == "b-4");
    }
  }
  SECTION("impossible negatives give up with a clear error") {
    DatasetSchema solo;
    solo.name = "solo";
    solo.language = Language::en;
    solo.types = {{"Protein", "the only type"}};
    const Sentence s =
        simple_sentence("s-1", "ab", {{0, 2, "Protein"}}, "solo");
    std::map<std::string, DatasetSchema> m = {{"solo", solo}};
    CHECK_THROWS_AS(gen_selector_dataset({s}, m, 1, 4, 0.5),
                    InsufficientNegatives);
  }
}

TEST_CASE("score backends") {
  SECTION("constant") {
    ConstantScoreBackend b(0.7);
    CHECK(b.score("anything") == 0.7);
    CHECK(b.name() == "constant");
  }
  SECTION("gold oracle scores membership exactly") {
    const Sentence s = testgen::nested_fixture();
    GoldOracleScoreBackend oracle({s});
    for (const EntitySpan& e : s.entities) {
      CHECK(oracle.score(mark_candidate(s, e).selector_input) == 1.0);
    }
    const std::u32string t = s.text32();
    CHECK(oracle.score(
              mark_candidate(s, make_span(t, 22, 33, "Protein")).selector_input) ==
          0.0);
    CHECK(oracle.score(
              mark_candidate(s, make_span(t, 23, 33, "DNA")).selector_input) ==
          0.0);
    CHECK(oracle.score("no separator") == 0.0);
    CHECK(oracle.score("Protein | no markers at all") == 0.0);
    CHECK(oracle.score("Protein | ⟨e⟩unknown⟨/e⟩ sentence") == 0.0);
  }
  SECTION("wire score parses the first line") {
    ScriptedScoreBackend inner;
    WireScoreBackend wire(inner);
    inner.reply = "0.75\nrationale: looks fine";
    CHECK(wire.score("Protein | ⟨e⟩AB⟨/e⟩") == 0.75);
    CHECK(inner.last.prompt == "Protein | ⟨e⟩AB⟨/e⟩");
    CHECK(inner.last.max_output_chars == 64);

    inner.reply = "1.5";
    CHECK(wire.score("x") == 1.0);
    inner.reply = "-3";
    CHECK(wire.score("x") == 0.0);
    inner.reply = "  0.25  ";
    CHECK(wire.score("x") == 0.25);
    CHECK(wire.name().find("scripted") != std::string::npos);

    inner.reply = "definitely yes";
    try {
      wire.score("x");
      FAIL("expected malformed_response");
    } catch (const BackendError& e) {
      CHECK(e.kind == BackendErrorKind::malformed_response);
    }
  }
}

TEST_CASE("filtering predictions") {
  const Sentence s = testgen::nested_fixture();
  const std::u32string t = s.text32();
  GoldOracleScoreBackend oracle({s});

  SECTION("oracle keeps exactly the gold entities") {
    std::vector<EntitySpan> preds = {
        make_span(t, 22, 33, "Protein"),  // shifted fake
        s.entities[0],
        s.entities[2],
        make_span(t, 23, 33, "DNA"),      // type fake
        s.entities[1],
        make_span(t, 5, 13, "Protein"),   // unrelated fake
    };
    const FilterResult r = filter_predictions(s, preds, oracle);
    REQUIRE(r.kept.size() == 3);
    CHECK(r.kept[0] == s.entities[0]);
    CHECK(r.kept[1] == s.entities[2]);
    CHECK(r.kept[2] == s.entities[1]);
    REQUIRE(r.audit.size() == 6);
    for (std::size_t i = 0; i < preds.size(); ++i) {
      CHECK(r.audit[i].entity == preds[i]);
      CHECK(r.audit[i].backend_failed == false);
      CHECK(r.audit[i].kept == is_gold_of(s, preds[i]));
      CHECK(r.audit[i].score == (is_gold_of(s, preds[i]) ? 1.0 : 0.0));
    }
  }
  SECTION("threshold boundaries") {
    ConstantScoreBackend zero(0.0);
    const std::vector<EntitySpan> preds = {s.entities[1], s.entities[2]};
    CHECK(filter_predictions(s, preds, zero, 0.5).kept.empty());
    CHECK(filter_predictions(s, preds, zero, 0.0).kept.size() == 2);
    ConstantScoreBackend half(0.5);
    CHECK(filter_predictions(s, preds, half, 0.5).kept.size() == 2);
  }
  SECTION("backend failures keep the candidate") {
    ThrowingScoreBackend bad;
    const std::vector<EntitySpan> preds = {s.entities[1], s.entities[2]};
    const FilterResult r = filter_predictions(s, preds, bad);
    REQUIRE(r.kept.size() == 2);
    for (const auto& a : r.audit) {
      CHECK(a.backend_failed);
      CHECK(a.kept);
      CHECK(a.score == 1.0);
      CHECK(a.diagnostic.find("selector fell over") != std::string::npos);
    }
  }
  SECTION("an unmarkable candidate is kept too") {
    const std::vector<EntitySpan> preds = {EntitySpan{0, 999, "Protein", ""}};
    const FilterResult r = filter_predictions(s, preds, oracle);
    REQUIRE(r.kept.size() == 1);
    CHECK(r.audit[0].backend_failed);
    CHECK_FALSE(r.audit[0].diagnostic.empty());
  }
  SECTION("parallel filtering matches sequential") {
    std::vector<EntitySpan> preds;
    for (std::size_t k = 0; k + 2 <= 48; ++k) {
      preds.push_back(make_span(t, k, k + 2, "Protein"));
    }
    const FilterResult seq = filter_predictions(s, preds, oracle, 0.5, 1);
    const FilterResult par = filter_predictions(s, preds, oracle, 0.5, 8);
    REQUIRE(seq.kept == par.kept);
    REQUIRE(seq.audit.size() == par.audit.size());
    for (std::size_t i = 0; i < seq.audit.size(); ++i) {
      CHECK(seq.audit[i].score == par.audit[i].score);
      CHECK(seq.audit[i].kept == par.audit[i].kept);
    }
  }
  SECTION("no predictions, no output") {
    const FilterResult r = filter_predictions(s, {}, oracle);
    CHECK(r.kept.empty());
    CHECK(r.audit.empty());
  }
}

TEST_CASE("selector file round trip") {
  Rng rng(73);
  std::vector<Sentence> corpus;
  for (std::uint64_t n = 0; n < 20; ++n) {
    corpus.push_back(testgen::random_sentence(rng, n));
  }
  corpus.push_back(testgen::nested_fixture());
  const auto samples =
      gen_selector_dataset(corpus, testgen::schemas(), 904, 60, 0.5);

  testgen::TempDir tmp;
  emit_selector_file(samples, tmp.file("sel.jsonl"));
  const auto loaded = load_selector_file(tmp.file("sel.jsonl"));
  REQUIRE(loaded.size() == samples.size());
  for (std::size_t i = 0; i < samples.size(); ++i) {
    CHECK(loaded[i].candidate.selector_input ==
          samples[i].candidate.selector_input);
    CHECK(loaded[i].candidate.marked_text == samples[i].candidate.marked_text);
    CHECK(loaded[i].candidate.sentence_id == samples[i].candidate.sentence_id);
    CHECK(loaded[i].candidate.candidate == samples[i].candidate.candidate);
    CHECK(loaded[i].label == samples[i].label);
    CHECK(loaded[i].provenance == samples[i].provenance);
    CHECK(loaded[i].dataset == samples[i].dataset);
  }

  SECTION("records are json lines with stable keys") {
    std::ifstream in(tmp.file("sel.jsonl"));
    std::string line;
    std::size_t lines = 0;
    while (std::getline(in, line)) {
      const auto rec = nlohmann::ordered_json::parse(line);
      std::vector<std::string> keys;
      for (const auto& [k, v] : rec.items()) keys.push_back(k);
      REQUIRE(keys == std::vector<std::string>{"input", "label", "meta"});
      const auto& meta = rec["meta"];
      const std::string kind = meta["kind"];
      std::vector<std::string> mkeys;
      for (const auto& [k, v] : meta.items()) mkeys.push_back(k);
      if (kind == "gold") {
        REQUIRE(mkeys == std::vector<std::string>{"kind", "dataset", "id",
                                                  "start", "end", "type"});
      } else if (kind == "type_swap") {
        REQUIRE(mkeys == std::vector<std::string>{"kind", "old_type",
                                                  "new_type", "dataset", "id",
                                                  "start", "end", "type"});
      } else {
        REQUIRE(mkeys == std::vector<std::string>{"kind", "delta", "dataset",
                                                  "id", "start", "end",
                                                  "type"});
      }
      ++lines;
    }
    CHECK(lines == samples.size());
  }
}

TEST_CASE("selector file loader rejects malformed records") {
  testgen::TempDir tmp;
  const auto write = [&](const std::string& name, const std::string& body) {
    std::ofstream out(tmp.file(name));
    out << body;
    return tmp.file(name);
  };
  const std::string good_meta =
      R"("meta":{"kind":"gold","dataset":"d","id":"s-1","start":0,"end":2,"type":"T"})";

  CHECK_THROWS_AS(load_selector_file(tmp.file("absent.jsonl")), IoError);
  CHECK_THROWS_AS(
      load_selector_file(write("garbage.jsonl", "not json at all\n")),
      ParseError);
  CHECK_THROWS_AS(load_selector_file(write(
                      "badlabel.jsonl",
                      R"({"input":"T | ⟨e⟩ab⟨/e⟩","label":2,)" + good_meta +
                          "}\n")),
                  ParseError);
  CHECK_THROWS_AS(load_selector_file(write(
                      "strlabel.jsonl",
                      R"({"input":"T | ⟨e⟩ab⟨/e⟩","label":"1",)" + good_meta +
                          "}\n")),
                  ParseError);
  CHECK_THROWS_AS(
      load_selector_file(write("noinput.jsonl",
                               R"({"label":1,)" + good_meta + "}\n")),
      ParseError);
  CHECK_THROWS_AS(load_selector_file(write(
                      "badkind.jsonl",
                      R"({"input":"x","label":0,"meta":{"kind":"invented",)"
                      R"("dataset":"d","id":"i","start":0,"end":2,"type":"T"}})"
                      "\n")),
                  ParseError);

  // blank lines are tolerated
  const auto ok = write("blank.jsonl", "\n\n{\"input\":\"T | ⟨e⟩ab⟨/e⟩\","
                                       "\"label\":1," + good_meta + "}\n\n");
  const auto loaded = load_selector_file(ok);
  REQUIRE(loaded.size() == 1);
  CHECK(loaded[0].label == 1);
  CHECK(loaded[0].candidate.marked_text == "⟨e⟩ab⟨/e⟩");
}
