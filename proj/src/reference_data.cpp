#include "fqhe/reference_data.hpp"

namespace fqhe {
namespace {
#include "generated/reference_points.inc"
} // namespace

std::span<const ReferencePoint> reference_points() { return kReferencePoints; }

const ReferenceSpotValues& reference_spot_values() { return kReferenceSpotValues; }

} // namespace fqhe
