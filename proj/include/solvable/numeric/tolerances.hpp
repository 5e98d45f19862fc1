#pragma once

namespace solvable::numeric {

// All tolerances of the numeric layer.
inline constexpr double kQuadRelTol = 1e-12;
inline constexpr double kQuadAbsTol = 1e-300;
inline constexpr int kQuadPanels = 64;
inline constexpr int kQuadMaxDepth = 40;

inline constexpr double kPoleDistance = 1e-12;

inline constexpr double kOrthoTol = 1e-8;
inline constexpr double kMultiOrthoTol = 1e-7;
inline constexpr double kNormRatioTol = 1e-7;
inline constexpr double kFdBaseTol = 1e-8;
inline constexpr double kFdDeformedTol = 1e-7;
inline constexpr double kUnitarityTol = 1e-10;
inline constexpr double kPoleLocateTol = 1e-8;
inline constexpr double kKdvNumericTol = 1e-6;
inline constexpr double kLogGammaTol = 1e-12;

}  // namespace solvable::numeric
