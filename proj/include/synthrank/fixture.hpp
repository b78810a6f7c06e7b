#pragma once

#include "synthrank/dataset.hpp"

namespace synthrank {

/// The embedded dataset: 12 circular-economy indicators (x1..x12) for the
/// 28 EU member states of 2019, including the source's missing cells.
/// Default directions: x1..x3 de-stimulant (waste-generation intensities),
/// x4..x12 stimulant. Deterministic; every call returns an equal value.
IndicatorDataset load_fixture();

/// Name of the bundled dataset, accepted by the CLI --input flag.
inline constexpr const char* kFixtureName = "fixture";

}  // namespace synthrank
