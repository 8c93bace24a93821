#pragma once

#include <string_view>

namespace fairkg::model::embedded {

// Contents of core/data/*, compiled in so the tool works without install paths.
extern const std::string_view kVocabulary;
extern const std::string_view kShapes;
extern const std::string_view kMapping;

}  // namespace fairkg::model::embedded
