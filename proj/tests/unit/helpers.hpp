#pragma once

#include "severi/lattice.hpp"

#include <string>

namespace testing {

inline severi::DivClass f2c(const std::string& s) { return severi::parse_class(severi::SurfaceId::F2, s); }
inline severi::DivClass f3c(const std::string& s) { return severi::parse_class(severi::SurfaceId::F3, s); }
inline const severi::SurfaceModel& F2() { return severi::SurfaceModel::get(severi::SurfaceId::F2); }
inline const severi::SurfaceModel& F3() { return severi::SurfaceModel::get(severi::SurfaceId::F3); }
inline const severi::SurfaceModel& P2() { return severi::SurfaceModel::get(severi::SurfaceId::P2); }

}  // namespace testing
