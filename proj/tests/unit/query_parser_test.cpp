#include <gtest/gtest.h>

#include "fairkg/error.hpp"
#include "fairkg/query/query.hpp"

using namespace fairkg;
using namespace fairkg::query;

namespace {

rdf::PrefixMap prefixes() {
  auto p = rdf::PrefixMap::standard();
  p.bind("ncit", rdf::Iri("http://purl.obolibrary.org/obo/NCIT_"));
  p.bind("roo", rdf::Iri("http://www.cancerdata.org/roo/"));
  return p;
}

Error error_of(std::string_view text) {
  try {
    parse_query(text, prefixes());
  } catch (const Error& e) {
    return e;
  }
  ADD_FAILURE() << "parsed: " << text;
  return Error(ErrorCode::Io, "none");
}

}  // namespace

TEST(QueryParser, SelectOnePattern) {
  const auto q = parse_query("SELECT ?p WHERE { ?p rdf:type ncit:Patient . }", prefixes());
  ASSERT_EQ(q.patterns.size(), 1u);
  EXPECT_EQ(q.projection, std::vector<std::string>{"p"});
  EXPECT_FALSE(q.is_count());
  EXPECT_EQ(q.patterns[0].subject, PatternTerm(Variable{"p"}));
  EXPECT_EQ(q.patterns[0].predicate, PatternTerm(rdf::Term(rdf::Iri(rdf::ns::kRdfType))));
  EXPECT_EQ(q.patterns[0].object, PatternTerm(rdf::Term(rdf::Iri("http://purl.obolibrary.org/obo/NCIT_Patient"))));
}

TEST(QueryParser, CountQuery) {
  const auto q = parse_query("SELECT (COUNT(*) AS ?n) WHERE { ?p roo:hasTreatment ?t . }", prefixes());
  EXPECT_TRUE(q.is_count());
  EXPECT_EQ(*q.count_alias, "n");
  EXPECT_EQ(q.patterns.size(), 1u);
}

TEST(QueryParser, PrefixesAbbreviationsAndFilters) {
  const auto q = parse_query(R"(
    PREFIX ex: <http://e.org/>
    select * where {
      ?p a ex:Patient ; ex:age ?a ; ex:knows ?q, [] .
      ?q ex:dob ?d
      FILTER(?a >= 65) filter("2020-01-01"^^xsd:date > ?d)
    })",
                             prefixes());
  EXPECT_EQ(q.patterns.size(), 5u);
  EXPECT_EQ(q.projection, (std::vector<std::string>{"p", "a", "q", "d"}));
  ASSERT_EQ(q.filters.size(), 2u);
  EXPECT_EQ(q.filters[0].variable, "a");
  EXPECT_EQ(q.filters[0].op, CompareOp::Ge);
  EXPECT_EQ(q.filters[0].operand, rdf::Literal("65", rdf::Iri(rdf::ns::kXsdInteger)));
  // Mirrored: literal > ?d means ?d < literal.
  EXPECT_EQ(q.filters[1].variable, "d");
  EXPECT_EQ(q.filters[1].op, CompareOp::Lt);
  EXPECT_TRUE(std::get<Variable>(q.patterns[4].object).hidden() ||
              std::get<Variable>(q.patterns[3].object).hidden());
}

TEST(QueryParser, BlankNodesAreHiddenVariables) {
  const auto q = parse_query("SELECT ?x WHERE { _:b <http://e.org/p> ?x . _:b <http://e.org/q> 1 . }");
  const auto& s0 = std::get<Variable>(q.patterns[0].subject);
  EXPECT_TRUE(s0.hidden());
  EXPECT_EQ(s0, std::get<Variable>(q.patterns[1].subject));
  EXPECT_EQ(parse_query("SELECT * WHERE { _:b <http://e.org/p> ?x . }").projection, std::vector<std::string>{"x"});
}

TEST(QueryParser, UnboundProjection) {
  const auto e = error_of("SELECT ?x WHERE { ?p roo:hasAge ?a . }");
  EXPECT_EQ(e.code(), ErrorCode::UnboundProjection);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 8u);
}

TEST(QueryParser, SyntaxErrorPositions) {
  const auto e = error_of("SELECT ?x WHERE {");
  EXPECT_EQ(e.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e.line(), 1u);
  EXPECT_EQ(e.column(), 18u);
  const auto e2 = error_of("SELECT ?x\nWHERE { ?x ?y }");
  EXPECT_EQ(e2.code(), ErrorCode::SyntaxError);
  EXPECT_EQ(e2.line(), 2u);
  for (std::string_view bad : {"", "SELECT WHERE { ?a ?b ?c }", "SELECT ?a { }", "ASK { ?a ?b ?c }",
                               "SELECT ?a WHERE { ?a ?b ?c } trailing", "SELECT ?a WHERE { ?a ?b ?c . FILTER(?a) }",
                               "SELECT ?a WHERE { ?a ?b ?c OPTIONAL { ?a ?b ?d } }",
                               "SELECT ?a WHERE { \"lit\" ?b ?a }", "SELECT ?a WHERE { ?a \"p\" ?c }",
                               "SELECT (COUNT(*) AS ?a) WHERE { ?a ?b ?c }", "SELECT ?a WHERE { ?a ?b ( ?c ) }"}) {
    const auto err = error_of(bad);
    EXPECT_EQ(err.code(), ErrorCode::SyntaxError) << bad << ": " << err.what();
  }
}

TEST(QueryParser, UnknownPrefix) {
  EXPECT_EQ(error_of("SELECT ?p WHERE { ?p a zz:Patient . }").code(), ErrorCode::UnknownPrefix);
}

TEST(QueryParser, OrderingFilterNeedsComparableOperand) {
  EXPECT_EQ(error_of("SELECT ?a WHERE { ?p roo:hasAge ?a . FILTER(?a < \"old\") }").code(), ErrorCode::TypeMismatch);
  EXPECT_EQ(error_of("SELECT ?a WHERE { ?p roo:hasAge ?a . FILTER(?a >= <http://e.org/x>) }").code(),
            ErrorCode::SyntaxError);
  EXPECT_NO_THROW(parse_query("SELECT ?a WHERE { ?p roo:hasAge ?a . FILTER(?a = \"old\") }", prefixes()));
  EXPECT_NO_THROW(parse_query("SELECT ?a WHERE { ?p roo:hasAge ?a . FILTER(?a <= 2.5e1) }", prefixes()));
  EXPECT_TRUE(is_comparable(CompareOp::Lt, rdf::Literal("2020-01-01", rdf::Iri(rdf::ns::kXsdDate))));
  EXPECT_FALSE(is_comparable(CompareOp::Lt, rdf::Literal("x")));
  EXPECT_TRUE(is_comparable(CompareOp::Eq, rdf::Literal("x")));
}

TEST(QueryParser, FilterSemantics) {
  const auto integer = [](const char* v) { return rdf::Term(rdf::Literal(v, rdf::Iri(rdf::ns::kXsdInteger))); };
  FilterExpr ge{"a", CompareOp::Ge, rdf::Literal("65", rdf::Iri(rdf::ns::kXsdInteger))};
  EXPECT_TRUE(filter_accepts(ge, integer("65")));
  EXPECT_TRUE(filter_accepts(ge, integer("100")));
  EXPECT_FALSE(filter_accepts(ge, integer("9")));
  EXPECT_TRUE(filter_accepts(ge, rdf::Literal("65.5", rdf::Iri(rdf::ns::kXsdDecimal))));
  EXPECT_FALSE(filter_accepts(ge, rdf::Literal("70")));  // plain string is not comparable
  EXPECT_FALSE(filter_accepts(ge, rdf::Iri("http://e.org/70")));
  FilterExpr eq{"a", CompareOp::Eq, rdf::Literal("5.0", rdf::Iri(rdf::ns::kXsdDecimal))};
  EXPECT_TRUE(filter_accepts(eq, integer("5")));
  EXPECT_FALSE(filter_accepts(eq, rdf::Literal("5")));
  FilterExpr ne{"a", CompareOp::Ne, rdf::Literal("x")};
  EXPECT_TRUE(filter_accepts(ne, rdf::Literal::with_language("x", "en")));
  EXPECT_FALSE(filter_accepts(ne, rdf::Literal("x")));
  FilterExpr before{"d", CompareOp::Lt, rdf::Literal("2020-01-01", rdf::Iri(rdf::ns::kXsdDate))};
  EXPECT_TRUE(filter_accepts(before, rdf::Literal("2019-12-31", rdf::Iri(rdf::ns::kXsdDate))));
  EXPECT_FALSE(filter_accepts(before, rdf::Literal("2020-01-01", rdf::Iri(rdf::ns::kXsdDate))));
  EXPECT_FALSE(filter_accepts(before, integer("1")));
}
