#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <string_view>

#include "fairkg/etl/table.hpp"

namespace fairkg::model {

// Fixed code lists the generator draws from. Each code names a vocabulary
// class once prefixed with `ncit:` (or `roo:modality_` for modalities).
inline constexpr std::array<std::string_view, 2> kSexCodes = {"C20197", "C16576"};
inline constexpr std::array<std::string_view, 6> kTumourSiteCodes = {
    "C12439", "C12762", "C12468", "C12389", "C12971", "C12410"};
inline constexpr std::array<std::string_view, 2> kModalities = {"proton", "photon"};

inline constexpr int kMinAge = 18;
inline constexpr int kMaxAge = 90;
inline constexpr int kFirstTreatmentYear = 2015;
inline constexpr int kLastTreatmentYear = 2023;
inline constexpr int kMaxTreatmentsPerPatient = 3;

/// Deterministic flat registry extract with n patients.
///
/// PATIENT(ID, AGE, SEX, TUMOUR_SITE) holds one row per patient and
/// TREATMENT(ID, PATIENT_ID, RT_START_DATE, MODALITY) one to three rows per
/// patient. Values are uniform draws from the lists above; the output is
/// identical on every platform for the same (n, seed).
etl::TableSet generate_synthetic(std::size_t n, std::uint64_t seed);

}  // namespace fairkg::model
