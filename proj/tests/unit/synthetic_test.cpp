#include <gtest/gtest.h>

#include <deque>
#include <set>

#include "fairkg/etl/convert.hpp"
#include "fairkg/model/shapes.hpp"
#include "fairkg/model/synthetic.hpp"
#include "fairkg/model/vocabulary.hpp"

using namespace fairkg;
using namespace fairkg::model;

namespace {

template <std::size_t N>
bool in(const std::array<std::string_view, N>& list, const std::string& v) {
  return std::find(list.begin(), list.end(), v) != list.end();
}

etl::ConversionResult convert_synthetic(std::size_t n, std::uint64_t seed) {
  const auto mapping = r2rml::load_mapping(builtin_mapping_text());
  return etl::convert(mapping, generate_synthetic(n, seed));
}

}  // namespace

TEST(Synthetic, ZeroPatientsGivesEmptyTables) {
  const auto tables = generate_synthetic(0, 1);
  ASSERT_EQ(tables.size(), 2u);
  EXPECT_TRUE(tables.at("PATIENT").empty());
  EXPECT_TRUE(tables.at("TREATMENT").empty());
  EXPECT_EQ(etl::write_csv(tables.at("PATIENT")), "ID,AGE,SEX,TUMOUR_SITE\n");
  EXPECT_EQ(etl::write_csv(tables.at("TREATMENT")), "ID,PATIENT_ID,RT_START_DATE,MODALITY\n");
}

TEST(Synthetic, Deterministic) {
  const auto a = generate_synthetic(40, 7);
  const auto b = generate_synthetic(40, 7);
  const auto c = generate_synthetic(40, 8);
  for (const char* name : {"PATIENT", "TREATMENT"}) {
    EXPECT_EQ(etl::write_csv(a.at(name)), etl::write_csv(b.at(name)));
  }
  EXPECT_NE(etl::write_csv(a.at("PATIENT")), etl::write_csv(c.at("PATIENT")));
}

TEST(Synthetic, ValueRanges) {
  const auto tables = generate_synthetic(500, 3);
  const auto& patients = tables.at("PATIENT");
  const auto& treatments = tables.at("TREATMENT");
  ASSERT_EQ(patients.row_count(), 500u);
  std::set<std::string> ids;
  for (std::size_t i = 0; i < patients.row_count(); ++i) {
    const auto row = patients.row(i);
    EXPECT_TRUE(ids.insert(*row.at("ID")).second);
    const int age = std::stoi(*row.at("AGE"));
    EXPECT_GE(age, kMinAge);
    EXPECT_LE(age, kMaxAge);
    EXPECT_TRUE(in(kSexCodes, *row.at("SEX")));
    EXPECT_TRUE(in(kTumourSiteCodes, *row.at("TUMOUR_SITE")));
  }
  std::map<std::string, int> per_patient;
  for (std::size_t i = 0; i < treatments.row_count(); ++i) {
    const auto row = treatments.row(i);
    EXPECT_EQ(ids.count(*row.at("PATIENT_ID")), 1u);
    ++per_patient[*row.at("PATIENT_ID")];
    const auto& date = *row.at("RT_START_DATE");
    EXPECT_TRUE(rdf::is_valid_lexical(date, rdf::ns::kXsdDate)) << date;
    const int year = std::stoi(date.substr(0, 4));
    EXPECT_GE(year, kFirstTreatmentYear);
    EXPECT_LE(year, kLastTreatmentYear);
    EXPECT_TRUE(in(kModalities, *row.at("MODALITY")));
  }
  EXPECT_EQ(per_patient.size(), 500u);
  std::set<int> counts;
  for (const auto& [id, n] : per_patient) {
    EXPECT_GE(n, 1);
    EXPECT_LE(n, kMaxTreatmentsPerPatient);
    counts.insert(n);
  }
  EXPECT_EQ(counts.size(), 3u);
}

TEST(Synthetic, CodesResolveInVocabulary) {
  const auto& v = builtin_vocabulary();
  for (auto code : kSexCodes) EXPECT_NE(v.find_curie("ncit:" + std::string(code)), nullptr);
  for (auto code : kTumourSiteCodes) EXPECT_NE(v.find_curie("ncit:" + std::string(code)), nullptr);
  for (auto m : kModalities) EXPECT_NE(v.find_curie("roo:modality_" + std::string(m)), nullptr);
}

TEST(Synthetic, FiftyPatientsConvertAndValidateCleanly) {
  const auto result = convert_synthetic(50, 1);
  EXPECT_TRUE(result.report.skipped_terms.empty());
  const auto report = validate_graph(result.graph, builtin_shapes());
  EXPECT_TRUE(report.conforms()) << report.to_string();
}

TEST(Synthetic, EverySubjectWithinTwoEdgesOfAPatient) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const auto g = convert_synthetic(30, seed).graph;
    const rdf::Iri type(rdf::ns::kRdfType);
    const rdf::Term patient_class = rdf::Iri("http://purl.obolibrary.org/obo/NCIT_C16960");
    std::map<rdf::Term, int> depth;
    std::deque<rdf::Term> queue;
    for (const auto& t : g.match(std::nullopt, type, patient_class)) {
      depth.emplace(t.subject, 0);
      queue.push_back(t.subject);
    }
    ASSERT_EQ(queue.size(), 30u);
    while (!queue.empty()) {
      const auto node = queue.front();
      queue.pop_front();
      if (depth[node] == 2) continue;
      for (const auto& t : g.match(node, std::nullopt, std::nullopt)) {
        if (t.predicate == type) continue;
        if (depth.emplace(t.object, depth[node] + 1).second) queue.push_back(t.object);
      }
    }
    for (const auto& t : g.triples()) EXPECT_EQ(depth.count(t.subject), 1u) << t.subject.to_ntriples();
  }
}
