#include "doctest.h"

#include <algorithm>
#include <random>

#include "colex/concepts.hpp"
#include "colex/dot.hpp"
#include "colex/graph.hpp"
#include "colex/summary.hpp"
#include "support/corpus_gen.hpp"

using namespace colex;

namespace {

LexEntry entry(const char* lang, const char* lemma, const char* synset) {
  return LexEntry{lang, lemma, parse_synset_id(synset)};
}

std::vector<LexEntry> table1_entries() {
  return {
      entry("fa", "pāp", "dad#n#1"),  entry("fa", "pāp", "pope#n#1"),
      entry("ar", "bābā", "dad#n#1"), entry("ar", "bābā", "pope#n#1"),
      entry("ru", "papa", "dad#n#1"), entry("ru", "papa", "pope#n#1"),
      entry("da", "far", "dad#n#1"),  entry("da", "far", "sire#n#1"),
      entry("ca", "pare", "Santa_Claus#n#1"), entry("ca", "pare", "dad#n#1"),
  };
}

}  // namespace

TEST_CASE("construct_graph: colexifying lemma creates one witnessed edge") {
  std::vector<LexEntry> entries = {entry("fa", "pāp", "dad#n#1"), entry("fa", "pāp", "pope#n#1")};
  ColexGraph graph = construct_graph(entries);
  CHECK(graph.edge_count() == 1);
  CHECK(graph.node_count() == 2);
  const ColexEdge* edge = graph.find(parse_synset_id("dad#n#1"), parse_synset_id("pope#n#1"));
  REQUIRE(edge != nullptr);
  REQUIRE(edge->witnesses.size() == 1);
  CHECK(edge->witnesses[0] == Witness{"pāp", "fa"});
}

TEST_CASE("construct_graph: single-synset lemma creates nothing") {
  std::vector<LexEntry> entries = {entry("fa", "x", "dad#n#1"), entry("fa", "y", "pope#n#1")};
  ColexGraph graph = construct_graph(entries);
  CHECK(graph.edge_count() == 0);
  CHECK(graph.node_count() == 0);
  CHECK(construct_graph(std::vector<LexEntry>{}).edge_count() == 0);
}

TEST_CASE("construct_graph: 3 synsets yield all 2-subsets") {
  std::vector<LexEntry> entries = {entry("fa", "x", "a#n#1"), entry("fa", "x", "b#n#1"),
                                   entry("fa", "x", "c#n#1")};
  ColexGraph graph = construct_graph(entries);
  CHECK(graph.edge_count() == 3);  // C(3,2)
  for (const auto& [pair, edge] : graph.edges) {
    REQUIRE(edge.witnesses.size() == 1);
    CHECK(edge.witnesses[0] == Witness{"x", "fa"});
  }
  // matches the brute-force enumeration by definition
  CHECK(witness_relation(graph) == brute_force_colex(entries));
}

TEST_CASE("brute_force_colex: empty input and scale cap") {
  CHECK(brute_force_colex(std::vector<LexEntry>{}).empty());
  std::vector<LexEntry> too_many(kOracleScaleLimit + 1, entry("fa", "x", "a#n#1"));
  CHECK_THROWS_AS((void)brute_force_colex(too_many), Error);
}

TEST_CASE("oracle equivalence on random corpora") {
  for (std::uint64_t seed = 1; seed <= 50; ++seed) {
    auto entries = colex_test::random_corpus(seed, 6, 30, 20);
    REQUIRE(entries.size() <= kOracleScaleLimit);
    ColexGraph graph = construct_graph(entries);
    CHECK(witness_relation(graph) == brute_force_colex(entries));
  }
}

TEST_CASE("monotonicity: adding an entry never removes edges or witnesses") {
  auto entries = colex_test::random_corpus(99, 4, 20, 12);
  ColexGraph before = construct_graph(entries);
  entries.push_back(entry("lg0", "lem1", "w5#n#1"));
  entries.push_back(entry("lg0", "lem1", "w7#v#2"));
  ColexGraph after = construct_graph(entries);
  auto rel_before = witness_relation(before);
  auto rel_after = witness_relation(after);
  CHECK(std::includes(rel_after.begin(), rel_after.end(), rel_before.begin(), rel_before.end()));
}

TEST_CASE("language-partition independence") {
  auto entries = colex_test::random_corpus(123, 6, 25, 15);
  ColexGraph whole = construct_graph(entries);

  std::map<std::string, std::vector<LexEntry>> by_language;
  for (const auto& e : entries) by_language[e.language].push_back(e);
  ColexGraph merged;
  for (const auto& [language, shard] : by_language) {
    ColexGraph partial = construct_graph(shard);
    merge_graphs(merged, partial);
  }
  CHECK(witness_relation(merged) == witness_relation(whole));
  CHECK(merged.nodes == whole.nodes);
}

TEST_CASE("canonicalization: both query orders return the same edge") {
  auto entries = table1_entries();
  ColexGraph graph = construct_graph(entries);
  const ColexEdge* ab = graph.find(parse_synset_id("dad#n#1"), parse_synset_id("pope#n#1"));
  const ColexEdge* ba = graph.find(parse_synset_id("pope#n#1"), parse_synset_id("dad#n#1"));
  CHECK(ab == ba);
  REQUIRE(ab != nullptr);
  CHECK(ab->witnesses.size() == 3);
}

TEST_CASE("derive_concept_graph filters non-first senses and counts") {
  auto entries = table1_entries();
  entries.push_back(entry("fr", "noeud", "knot#n#4"));
  entries.push_back(entry("fr", "noeud", "tie#n#1"));
  ColexGraph graph = construct_graph(entries);
  CHECK(graph.edge_count() == 4);  // knot#n#4 -- tie#n#1 edge exists pre-filter

  TextNorm norm;
  norm.underscores_to_space = true;
  auto records = derive_concept_graph(graph, norm);
  REQUIRE(records.size() == 3);  // the knot--tie edge is dropped

  CHECK(records[0].concept1.word == "dad");
  CHECK(records[0].concept2.word == "pope");
  CHECK(records[0].n_colex == 3);
  CHECK(records[0].n_lemmas == 3);
  CHECK(records[0].n_languages == 3);

  CHECK(records[1].concept1.word == "dad");
  CHECK(records[1].concept2.word == "santa claus");
  CHECK(records[1].synset1.to_string() == "dad#n#1");
  CHECK(records[1].synset2.to_string() == "Santa_Claus#n#1");

  CHECK(records[2].concept2.word == "sire");

  // hand-counted example: two witnesses, two lemmas, two languages
  std::vector<LexEntry> pair = {entry("fa", "pāp", "dad#n#1"), entry("fa", "pāp", "pope#n#1"),
                                entry("ar", "bābā", "dad#n#1"), entry("ar", "bābā", "pope#n#1")};
  auto recs = derive_concept_graph(construct_graph(pair));
  REQUIRE(recs.size() == 1);
  CHECK(recs[0].n_colex == 2);
  CHECK(recs[0].n_lemmas == 2);
  CHECK(recs[0].n_languages == 2);
}

TEST_CASE("derive_concept_graph is invariant under entry permutation") {
  auto entries = colex_test::random_corpus(7, 5, 20, 12);
  auto records = derive_concept_graph(construct_graph(entries));
  std::mt19937_64 rng(11);
  std::shuffle(entries.begin(), entries.end(), rng);
  auto records2 = derive_concept_graph(construct_graph(entries));
  REQUIRE(records.size() == records2.size());
  for (std::size_t i = 0; i < records.size(); ++i) {
    CHECK(records[i].concept1 == records2[i].concept1);
    CHECK(records[i].concept2 == records2[i].concept2);
    CHECK(records[i].witnesses == records2[i].witnesses);
  }
  // count invariants: n_colex >= n_lemmas >= 1 and n_colex >= n_languages >= 1
  for (const auto& rec : records) {
    CHECK(rec.n_colex >= rec.n_lemmas);
    CHECK(rec.n_lemmas >= 1);
    CHECK(rec.n_colex >= rec.n_languages);
    CHECK(rec.n_languages >= 1);
    CHECK(rec.n_colex == rec.witnesses.size());
  }
}

TEST_CASE("summary_stats hand counts on the five-row fixture") {
  auto entries = table1_entries();
  ColexGraph graph = construct_graph(entries);
  TextNorm norm;
  norm.underscores_to_space = true;
  auto records = derive_concept_graph(graph, norm);

  PhonologyJoin no_phonemes;
  std::map<ConceptKey, ConceptRatings> no_ratings;
  SummaryTable t = summary_stats(entries, graph, records, no_phonemes, no_ratings);
  CHECK(t.entries == 10);
  CHECK(t.colex_patterns == 5);  // five colexifications
  CHECK(t.lexicalizations == 5);  // five distinct lemmas
  CHECK(t.synsets == 4);
  CHECK(t.concepts == 4);
  CHECK(t.concepts_with_affect == 0);
  CHECK(t.concepts_with_concreteness == 0);
}

TEST_CASE("summary_stats on an empty pipeline is all zeros") {
  ColexGraph graph;
  PhonologyJoin join;
  std::map<ConceptKey, ConceptRatings> ratings;
  SummaryTable t = summary_stats(std::vector<LexEntry>{}, graph, {}, join, ratings);
  CHECK(t.entries == 0);
  CHECK(t.colex_patterns == 0);
  CHECK(t.synsets == 0);
  CHECK(t.lexicalizations == 0);
  CHECK(t.concepts == 0);
}

TEST_CASE("export_dot renders the focus neighborhood deterministically") {
  TextNorm norm;
  norm.underscores_to_space = true;
  auto records = derive_concept_graph(construct_graph(table1_entries()), norm);

  std::string dot = export_dot(records, "dad", 1);
  CHECK(dot.find("\"dad\"") != std::string::npos);
  CHECK(dot.find("\"pope\"") != std::string::npos);
  CHECK(dot.find("\"sire\"") != std::string::npos);
  CHECK(dot.find("\"santa claus\"") != std::string::npos);
  CHECK(dot.find("penwidth=5.00") != std::string::npos);  // dad--pope has max weight
  CHECK(dot == export_dot(records, "dad", 1));  // identical across runs

  SUBCASE("depth 0 violates the precondition") {
    CHECK_THROWS_AS((void)export_dot(records, "dad", 0), Error);
  }
  SUBCASE("unknown focus concept") {
    try {
      (void)export_dot(records, "zzz", 1);
      FAIL("expected UnknownConcept");
    } catch (const Error& e) {
      CHECK(e.code() == Errc::unknown_concept);
    }
  }
  SUBCASE("depth 2 node set contains depth 1 node set") {
    // chain: a--b--c--d; from a, depth1 = {a,b}, depth2 = {a,b,c}
    std::vector<LexEntry> chain = {
        entry("l1", "w1", "a#n#1"), entry("l1", "w1", "b#n#1"),
        entry("l1", "w2", "b#n#1"), entry("l1", "w2", "c#n#1"),
        entry("l1", "w3", "c#n#1"), entry("l1", "w3", "d#n#1"),
    };
    auto chain_records = derive_concept_graph(construct_graph(chain));
    std::string d1 = export_dot(chain_records, "a", 1);
    std::string d2 = export_dot(chain_records, "a", 2);
    CHECK(d1.find("\"c\"") == std::string::npos);
    CHECK(d2.find("\"c\"") != std::string::npos);
    CHECK(d2.find("\"d\"") == std::string::npos);
    CHECK(d2.find("\"b\" -- \"c\"") != std::string::npos);  // induced edge
  }
}
