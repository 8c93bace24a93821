#include <gtest/gtest.h>

#include "fairkg/error.hpp"
#include "fairkg/etl/table.hpp"
#include "tables.hpp"

using namespace fairkg;
using namespace fairkg::etl;

namespace {

ErrorCode code_of(std::string_view text, std::size_t* line = nullptr) {
  try {
    load_csv(text);
  } catch (const Error& e) {
    if (line) *line = e.line().value_or(0);
    return e.code();
  }
  return ErrorCode::Io;
}

}  // namespace

TEST(Csv, SimpleRow) {
  const auto t = load_csv("ID,AGE\n1,63\n");
  EXPECT_EQ(t.columns(), (std::vector<std::string>{"ID", "AGE"}));
  ASSERT_EQ(t.row_count(), 1u);
  EXPECT_EQ(t.row(0).at("ID"), Cell("1"));
  EXPECT_EQ(t.row(0).at("AGE"), Cell("63"));
}

TEST(Csv, QuotedComma) {
  EXPECT_EQ(load_csv("ID,NOTE\n1,\"a,b\"\n").row(0).at("NOTE"), Cell("a,b"));
}

TEST(Csv, NullVersusEmpty) {
  const auto t = load_csv("ID,AGE\n1,\n2,\"\"\n");
  EXPECT_EQ(t.row(0).at("AGE"), std::nullopt);
  EXPECT_EQ(t.row(1).at("AGE"), Cell(""));
}

TEST(Csv, QuotesNewlinesAndCrlf) {
  const auto t = load_csv("A,B\r\n\"x\"\"y\",\"l1\r\nl2\"\r\nlast,row");
  ASSERT_EQ(t.row_count(), 2u);
  EXPECT_EQ(t.row(0)[0], Cell("x\"y"));
  EXPECT_EQ(t.row(0)[1], Cell("l1\r\nl2"));
  EXPECT_EQ(t.row(1)[1], Cell("row"));
}

TEST(Csv, ByteOrderMarkStripped) {
  const auto t = load_csv("\xEF\xBB\xBFID\n7\n");
  EXPECT_EQ(t.columns(), std::vector<std::string>{"ID"});
}

TEST(Csv, HeaderOnlyAndEmpty) {
  EXPECT_EQ(load_csv("ID,AGE\n").row_count(), 0u);
  EXPECT_TRUE(load_csv("").columns().empty());
}

TEST(Csv, Errors) {
  std::size_t line = 0;
  EXPECT_EQ(code_of("A,B\n1,2\n1,2,3\n", &line), ErrorCode::RaggedRow);
  EXPECT_EQ(line, 3u);
  EXPECT_EQ(code_of("A,B\n1\n"), ErrorCode::RaggedRow);
  EXPECT_EQ(code_of("A,A\n1,2\n"), ErrorCode::DuplicateHeader);
  EXPECT_EQ(code_of("A\n\"open\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("A\n\"x\"y\n"), ErrorCode::SyntaxError);
  EXPECT_EQ(code_of("A\nx\"y\n"), ErrorCode::SyntaxError);
}

TEST(Csv, RowAccessUnknownColumnThrows) {
  const auto t = load_csv("ID\n1\n");
  EXPECT_THROW(t.row(0).at("NOPE"), Error);
  EXPECT_EQ(t.column_index("ID"), std::optional<std::size_t>(0));
  EXPECT_EQ(t.column_index("NOPE"), std::nullopt);
}

TEST(Csv, WriteReadRoundTrip) {
  fairkg::testing::TableGenerator gen(4);
  for (int i = 0; i < 30; ++i) {
    for (const auto& [name, table] : gen.tables(20)) {
      const auto back = load_csv(write_csv(table), name);
      EXPECT_EQ(back.columns(), table.columns());
      EXPECT_EQ(back.rows(), table.rows());
    }
  }
  TableSource awkward("T", {"A", "B"});
  awkward.add_row({Cell(""), std::nullopt});
  awkward.add_row({Cell("q\"uote,\n"), Cell(" lead")});
  const auto back = load_csv(write_csv(awkward));
  EXPECT_EQ(back.rows(), awkward.rows());
}
