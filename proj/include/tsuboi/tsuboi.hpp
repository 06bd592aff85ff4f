#pragma once

#include "tsuboi/constructions.hpp"
#include "tsuboi/errors.hpp"
#include "tsuboi/group.hpp"
#include "tsuboi/norm.hpp"
#include "tsuboi/partitions.hpp"
#include "tsuboi/permutation.hpp"
#include "tsuboi/space.hpp"
#include "tsuboi/witness.hpp"

namespace tsuboi {

#ifdef TSUBOI_VERSION
inline constexpr const char* kVersion = TSUBOI_VERSION;
#else
inline constexpr const char* kVersion = "0.1.0";
#endif

} // namespace tsuboi
