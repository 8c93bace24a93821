#include <gtest/gtest.h>

#include "fairkg/error.hpp"
#include "fairkg/rdf/prefix_map.hpp"

using namespace fairkg;
using namespace fairkg::rdf;

TEST(PrefixMap, ExpandsCurie) {
  PrefixMap m;
  m.bind("ncit", Iri("http://purl.obolibrary.org/obo/NCIT_"));
  EXPECT_EQ(expand_curie(m, "ncit:C3262").str(), "http://purl.obolibrary.org/obo/NCIT_C3262");
}

TEST(PrefixMap, UnknownPrefix) {
  try {
    expand_curie(PrefixMap{}, "roo:P100000");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::UnknownPrefix);
  }
}

TEST(PrefixMap, EmptyLocalPart) {
  PrefixMap m;
  m.bind("ex", Iri("http://e.org/"));
  EXPECT_EQ(m.expand("ex:").str(), "http://e.org/");
}

TEST(PrefixMap, MalformedAndIllegal) {
  PrefixMap m;
  m.bind("ex", Iri("http://e.org/"));
  try {
    m.expand("nocolon");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::MalformedCurie);
  }
  try {
    m.expand("ex:a b");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::IllegalCharacter);
  }
}

TEST(PrefixMap, RebindReplaces) {
  PrefixMap m;
  m.bind("ex", Iri("http://one.org/"));
  m.bind("ex", Iri("http://two.org/"));
  EXPECT_EQ(m.size(), 1u);
  EXPECT_EQ(m.expand("ex:a").str(), "http://two.org/a");
}

TEST(PrefixMap, CompactPicksShortestForm) {
  PrefixMap m;
  m.bind("a", Iri("http://e.org/"));
  m.bind("b", Iri("http://e.org/x/"));
  EXPECT_EQ(m.compact(Iri("http://e.org/x/y")), "b:y");
  EXPECT_EQ(m.compact(Iri("http://e.org/z")), "a:z");
  EXPECT_FALSE(m.compact(Iri("http://e.org/")));
  EXPECT_FALSE(m.compact(Iri("http://other.org/z")));
}

TEST(PrefixMap, StandardBindings) {
  const auto m = PrefixMap::standard();
  EXPECT_EQ(m.expand("rdf:type").str(), ns::kRdfType);
  EXPECT_EQ(m.expand("xsd:integer").str(), ns::kXsdInteger);
  EXPECT_TRUE(m.contains("rdfs"));
}
