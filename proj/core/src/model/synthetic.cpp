#include "fairkg/model/synthetic.hpp"

#include <cstdio>
#include <random>
#include <string>

namespace fairkg::model {

namespace {

// std::uniform_int_distribution is implementation-defined, so bounded draws
// are done by rejection on the raw engine output.
class Draw {
 public:
  explicit Draw(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x >= limit);
    return x % bound;
  }

  int between(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo) + 1));
  }

  template <typename List>
  std::string pick(const List& list) {
    return std::string(list[below(list.size())]);
  }

 private:
  std::mt19937_64 engine_;
};

int days_in_month(int year, int month) {
  static constexpr int kDays[] = {31, 28, 31, 30, 31, 30, 31, 31, 30, 31, 30, 31};
  const bool leap = (year % 4 == 0 && year % 100 != 0) || year % 400 == 0;
  return month == 2 && leap ? 29 : kDays[month - 1];
}

std::string numbered(char prefix, std::size_t value) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%c%06zu", prefix, value);
  return buf;
}

}  // namespace

etl::TableSet generate_synthetic(std::size_t n, std::uint64_t seed) {
  etl::TableSource patients("PATIENT", {"ID", "AGE", "SEX", "TUMOUR_SITE"});
  etl::TableSource treatments("TREATMENT", {"ID", "PATIENT_ID", "RT_START_DATE", "MODALITY"});
  Draw draw(seed);
  std::size_t treatment_count = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const auto id = numbered('P', i);
    patients.add_row({id, std::to_string(draw.between(kMinAge, kMaxAge)), draw.pick(kSexCodes),
                      draw.pick(kTumourSiteCodes)});
    const int courses = draw.between(1, kMaxTreatmentsPerPatient);
    for (int c = 0; c < courses; ++c) {
      const int year = draw.between(kFirstTreatmentYear, kLastTreatmentYear);
      const int month = draw.between(1, 12);
      const int day = draw.between(1, days_in_month(year, month));
      char date[32];
      std::snprintf(date, sizeof date, "%04d-%02d-%02d", year, month, day);
      treatments.add_row({numbered('T', ++treatment_count), id, std::string(date),
                          draw.pick(kModalities)});
    }
  }
  etl::TableSet tables;
  tables.emplace("PATIENT", std::move(patients));
  tables.emplace("TREATMENT", std::move(treatments));
  return tables;
}

}  // namespace fairkg::model
