#include <gtest/gtest.h>

#include <algorithm>

#include "fairkg/rdf/graph.hpp"
#include "fuzz.hpp"

using namespace fairkg::rdf;

namespace {

const Iri kPatient1("http://data.example.org/patient/1");
const Iri kHasDisease("http://www.cancerdata.org/roo/hasDisease");
const Iri kNeoplasm("http://purl.obolibrary.org/obo/NCIT_C3262");

}  // namespace

TEST(Graph, InsertReportsNovelty) {
  Graph g;
  EXPECT_TRUE(graph_insert(g, Triple(kPatient1, kHasDisease, kNeoplasm)));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_FALSE(graph_insert(g, Triple(kPatient1, kHasDisease, kNeoplasm)));
  EXPECT_EQ(g.size(), 1u);
  EXPECT_TRUE(graph_insert(g, Triple(kPatient1, kHasDisease, Iri("http://purl.obolibrary.org/obo/NCIT_C4323"))));
  EXPECT_EQ(g.size(), 2u);
}

TEST(Graph, MatchByPosition) {
  Graph g;
  const Iri p2("http://data.example.org/patient/2");
  const Iri type(ns::kRdfType);
  g.insert(Triple(kPatient1, kHasDisease, kNeoplasm));
  g.insert(Triple(kPatient1, type, Iri("http://purl.obolibrary.org/obo/NCIT_C16960")));
  g.insert(Triple(p2, type, Iri("http://purl.obolibrary.org/obo/NCIT_C16960")));

  EXPECT_EQ(graph_match(g, std::nullopt, std::nullopt, std::nullopt).size(), 3u);
  const auto by_subject = graph_match(g, Term(kPatient1), std::nullopt, std::nullopt);
  ASSERT_EQ(by_subject.size(), 2u);
  for (const auto& t : by_subject) EXPECT_EQ(t.subject, Term(kPatient1));
  EXPECT_EQ(g.match(std::nullopt, type, Term(Iri("http://purl.obolibrary.org/obo/NCIT_C16960"))).size(), 2u);
  EXPECT_TRUE(g.match(Term(Iri("http://nowhere.org/x")), std::nullopt, std::nullopt).empty());
  EXPECT_EQ(g.match(Term(kPatient1), kHasDisease, Term(kNeoplasm)).size(), 1u);
}

TEST(Graph, MatchIsCanonicallySorted) {
  fairkg::testing::Fuzzer fuzz(3);
  const Graph g = fuzz.graph(300);
  const auto all = g.triples();
  std::vector<std::string> lines;
  for (const auto& t : all) lines.push_back(t.to_ntriples());
  EXPECT_TRUE(std::is_sorted(lines.begin(), lines.end()));
}

TEST(Graph, EraseKeepsIndexesCoherent) {
  Graph g;
  const Triple t(kPatient1, kHasDisease, kNeoplasm);
  g.insert(t);
  EXPECT_TRUE(g.erase(t));
  EXPECT_FALSE(g.erase(t));
  EXPECT_TRUE(g.empty());
  EXPECT_TRUE(g.match(Term(kPatient1), std::nullopt, std::nullopt).empty());
  EXPECT_TRUE(g.match(std::nullopt, std::nullopt, Term(kNeoplasm)).empty());
  EXPECT_FALSE(g.contains(t));
}

TEST(Graph, IndexLookupsAgreeWithLinearScan) {
  fairkg::testing::Fuzzer fuzz(11);
  Graph g;
  std::vector<Triple> inserted;
  // Roughly 10^4 triples over a pool that forces repeats in every position.
  std::vector<Term> nodes;
  std::vector<Iri> preds;
  for (int i = 0; i < 150; ++i) nodes.push_back(fuzz.subject());
  for (int i = 0; i < 12; ++i) preds.push_back(fuzz.iri());
  std::vector<Term> objects = nodes;
  for (int i = 0; i < 100; ++i) objects.push_back(fuzz.literal());
  for (int i = 0; i < 10000; ++i) {
    Triple t(fuzz.pick(nodes), fuzz.pick(preds), fuzz.pick(objects));
    if (g.insert(t)) inserted.push_back(t);
  }
  // Remove some to exercise index maintenance.
  for (std::size_t i = 0; i < inserted.size(); i += 7) g.erase(inserted[i]);
  const auto all = g.triples();
  for (int trial = 0; trial < 300; ++trial) {
    std::optional<Term> s, o;
    std::optional<Iri> p;
    if (fuzz.chance(0.5)) s = fuzz.pick(nodes);
    if (fuzz.chance(0.5)) p = fuzz.pick(preds);
    if (fuzz.chance(0.5)) o = fuzz.pick(objects);
    std::vector<Triple> expected;
    for (const auto& t : all) {
      if ((!s || t.subject == *s) && (!p || t.predicate == *p) && (!o || t.object == *o)) expected.push_back(t);
    }
    EXPECT_EQ(g.match(s, p, o), expected);
  }
}

TEST(Graph, MergeIsOrderIndependentSetUnion) {
  fairkg::testing::Fuzzer fuzz(5);
  for (int i = 0; i < 20; ++i) {
    const Graph a = fuzz.graph(100);
    const Graph b = fuzz.graph(100);
    Graph ab = a;
    ab.insert_all(b);
    Graph ba = b;
    ba.insert_all(a);
    EXPECT_EQ(ab, ba);
    EXPECT_EQ(merge_graphs({&a, &b}), merge_graphs({&b, &a}));
    EXPECT_EQ(merge_graphs({&a, &a}), a);
    for (const auto& t : a.triples()) EXPECT_TRUE(ab.contains(t));
    for (const auto& t : b.triples()) EXPECT_TRUE(ab.contains(t));
  }
}

TEST(Graph, EqualityIsSetEquality) {
  Graph a, b;
  const Triple t1(kPatient1, kHasDisease, kNeoplasm);
  const Triple t2(kPatient1, Iri(ns::kRdfType), Iri("http://e.org/C"));
  a.insert(t1);
  a.insert(t2);
  b.insert(t2);
  b.insert(t1);
  b.insert(t1);
  EXPECT_EQ(a, b);
  b.erase(t1);
  EXPECT_FALSE(a == b);
}
