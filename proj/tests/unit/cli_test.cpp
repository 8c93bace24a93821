#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "tables.hpp"

namespace fs = std::filesystem;
using fairkg::testing::fixture_path;
using fairkg::testing::read_text;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = fairkg::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    const auto* info = ::testing::UnitTest::GetInstance()->current_test_info();
    dir_ = fs::temp_directory_path() / (std::string("fairkg_cli_") + info->name());
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path(name), std::ios::binary) << text;
    return path(name);
  }

  std::string convert_fixture() {
    const auto r = run({"convert", fixture_path("protrait/PATIENT.csv"), fixture_path("protrait/TREATMENT.csv"),
                        "-o", path("graph.nt")});
    EXPECT_EQ(r.code, 0) << r.err;
    return path("graph.nt");
  }

  fs::path dir_;
};

}  // namespace

TEST_F(CliTest, ConvertMatchesOracle) {
  const auto r = run({"convert", fixture_path("protrait/PATIENT.csv"), fixture_path("protrait/TREATMENT.csv")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_text(fixture_path("protrait/expected.nt")));
  EXPECT_NE(r.err.find("triples emitted:      71"), std::string::npos);
  const auto with_mapping = run({"convert", "-m", fixture_path("r2rml/01_basic_template/mapping.ttl"),
                                 fixture_path("r2rml/01_basic_template/PERSON.csv")});
  EXPECT_EQ(with_mapping.code, 0) << with_mapping.err;
}

TEST_F(CliTest, ConvertTableOverride) {
  const auto patients = write("p.csv", read_text(fixture_path("protrait/PATIENT.csv")));
  const auto r = run({"convert", "--table", "PATIENT=" + patients, fixture_path("protrait/TREATMENT.csv")});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, read_text(fixture_path("protrait/expected.nt")));
  EXPECT_EQ(run({"convert", "--table", "nonsense", patients}).code, 2);
}

TEST_F(CliTest, ConvertMissingColumnExitsOne) {
  const auto patients = write("PATIENT.csv", "ID,AGE,SEX\nP1,50,C20197\n");
  const auto r = run({"convert", patients, fixture_path("protrait/TREATMENT.csv")});
  EXPECT_EQ(r.code, 1);
  EXPECT_NE(r.err.find("TUMOUR_SITE"), std::string::npos) << r.err;
  EXPECT_TRUE(r.out.empty());
}

TEST_F(CliTest, ConvertInputErrorsExitTwo) {
  EXPECT_EQ(run({"convert", "-m", path("nope.ttl"), fixture_path("protrait/PATIENT.csv")}).code, 2);
  EXPECT_EQ(run({"convert", path("missing.csv")}).code, 2);
  const auto bad_mapping = write("bad.ttl", "@prefix rr: <http://www.w3.org/ns/r2rml#> . this is not turtle");
  const auto r = run({"convert", "-m", bad_mapping, fixture_path("protrait/PATIENT.csv")});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("SyntaxError"), std::string::npos) << r.err;
  const auto ragged = write("PATIENT.csv", "ID,AGE,SEX,TUMOUR_SITE\nP1,1\n");
  EXPECT_EQ(run({"convert", ragged, fixture_path("protrait/TREATMENT.csv")}).code, 2);
  EXPECT_EQ(run({"convert", "--bogus"}).code, 2);
}

TEST_F(CliTest, ConvertStrictAndLog) {
  const auto patients = write("PATIENT.csv", "ID,AGE,SEX,TUMOUR_SITE\nP1,,C20197,C12468\n");
  const auto lenient = run({"convert", patients, fixture_path("protrait/TREATMENT.csv"), "--log", path("log.tsv")});
  EXPECT_EQ(lenient.code, 0);
  EXPECT_EQ(read_text(path("log.tsv")), "map:Patient\t1\tAGE\tnull value\n");
  EXPECT_EQ(run({"convert", patients, fixture_path("protrait/TREATMENT.csv"), "--strict"}).code, 1);
}

TEST_F(CliTest, ValidateConformingAndBroken) {
  const auto graph = convert_fixture();
  const auto ok = run({"validate", graph});
  EXPECT_EQ(ok.code, 0);
  EXPECT_EQ(ok.out, "");
  std::string text = read_text(graph);
  const std::string edge =
      "<http://data.example.org/patient/P3> <http://www.cancerdata.org/roo/hasBiologicalSex> "
      "<http://purl.obolibrary.org/obo/NCIT_C20197> .\n";
  ASSERT_NE(text.find(edge), std::string::npos);
  text.erase(text.find(edge), edge.size());
  const auto broken = run({"validate", write("broken.nt", text)});
  EXPECT_EQ(broken.code, 1);
  EXPECT_EQ(std::count(broken.out.begin(), broken.out.end(), '\n'), 1);
  EXPECT_NE(broken.out.find("patient/P3"), std::string::npos);
  EXPECT_EQ(run({"validate", write("bad.nt", "<http://e.org/s> <http://e.org/p> .\n")}).code, 2);
  EXPECT_EQ(run({"validate", path("absent.nt")}).code, 2);
  const auto shapes = write("shapes.tsv", "ncit:C16960\troo:hasNothing\tliteral(xsd:string)\t1\t1\n");
  EXPECT_EQ(run({"validate", graph, "--shapes", shapes}).code, 1);
}

TEST_F(CliTest, QueryAcrossCentres) {
  const auto a = write("a.nt",
                       "<http://data.example.org/patient/A1> <http://www.w3.org/1999/02/22-rdf-syntax-ns#type> "
                       "<http://purl.obolibrary.org/obo/NCIT_C16960> .\n");
  const auto b = write("b.ttl",
                       "@prefix ncit: <http://purl.obolibrary.org/obo/NCIT_> .\n"
                       "<http://data.example.org/patient/B1> a ncit:C16960 .\n");
  const auto r = run({"query", a, b, "-q", "SELECT (COUNT(*) AS ?n) WHERE { ?p a ncit:C16960 }"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out, "?n\n\"2\"^^<http://www.w3.org/2001/XMLSchema#integer>\n");
  const auto qfile = write("q.rq", "SELECT ?p WHERE { ?p roo:hasAge ?a }");
  EXPECT_EQ(run({"query", a, "-f", qfile}).out, "?p\n");
  const auto bad = run({"query", a, "-q", "SELECT ?x WHERE {"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("line 1, column 18"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"query", a}).code, 2);
  EXPECT_EQ(run({"query", a, "-q", "SELECT ?p WHERE { ?p a ?c }", "-f", qfile}).code, 2);
}

TEST_F(CliTest, SynthDeterministicAndChains) {
  ASSERT_EQ(run({"synth", "-n", "20", "--seed", "4", "-o", path("s1")}).code, 0);
  ASSERT_EQ(run({"synth", "-n", "20", "--seed", "4", "-o", path("s2")}).code, 0);
  for (const char* f : {"PATIENT.csv", "TREATMENT.csv"}) {
    EXPECT_EQ(read_text(path(std::string("s1/") + f)), read_text(path(std::string("s2/") + f)));
  }
  const auto c = run({"convert", path("s1/PATIENT.csv"), path("s1/TREATMENT.csv"), "-o", path("s.nt")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(run({"validate", path("s.nt")}).code, 0);
  const auto count = run({"query", path("s.nt"), "-q", "SELECT (COUNT(*) AS ?n) WHERE { ?p a ncit:C16960 }"});
  EXPECT_EQ(count.out, "?n\n\"20\"^^<http://www.w3.org/2001/XMLSchema#integer>\n");

  ASSERT_EQ(run({"synth", "-n", "0", "-o", path("empty")}).code, 0);
  EXPECT_EQ(read_text(path("empty/PATIENT.csv")), "ID,AGE,SEX,TUMOUR_SITE\n");
  EXPECT_EQ(read_text(path("empty/TREATMENT.csv")), "ID,PATIENT_ID,RT_START_DATE,MODALITY\n");
  EXPECT_EQ(run({"synth", "-o", path("x")}).code, 2);
  EXPECT_EQ(run({"synth", "-n", "-3", "-o", path("x")}).code, 2);
}

TEST_F(CliTest, Stats) {
  const auto r = run({"stats", convert_fixture()});
  EXPECT_EQ(r.code, 0);
  EXPECT_NE(r.out.find("triples\t71\n"), std::string::npos);
  EXPECT_NE(r.out.find("class\tncit:C16960\t5\n"), std::string::npos);
  EXPECT_NE(r.out.find("class\tncit:C15313\t8\n"), std::string::npos);
  EXPECT_NE(r.out.find("category\ttreatment\t24\n"), std::string::npos) << r.out;
}

TEST_F(CliTest, HelpAndVersion) {
  for (const char* cmd : {"convert", "validate", "query", "synth", "stats"}) {
    const auto r = run({cmd, "--help"});
    EXPECT_EQ(r.code, 0) << cmd;
    EXPECT_FALSE(r.out.empty()) << cmd;
  }
  EXPECT_EQ(run({"--help"}).code, 0);
  EXPECT_EQ(run({"--version"}).code, 0);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"frobnicate"}).code, 2);
}
