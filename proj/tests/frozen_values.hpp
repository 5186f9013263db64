#pragma once

// Reference values produced by tests/oracles/freeze_values.py (mpmath and
// brute-force trapezoid sums, no library code involved).

namespace wkbres::frozen {

// 15 * 25 * exp(-5)
inline constexpr double kBbjs15AtR5 = 2.5267301246570502;
// 60 exp(-2) + 6/4
inline constexpr double kBbjs15EffL2AtR2 = 9.6201169941967615;
// sqrt(|7.01129 - 15/e|)
inline constexpr double kKinetic15AtR1 = 1.221924049369831;
// bisection: V(a) = 7.01129, a in (0, 2)
inline constexpr double kTurnInner15 = 1.3282439359464786;
// bisection: V(b) = 7.01129, b > 2
inline constexpr double kTurnOuter15 = 2.8672012621963662;
// trapezoid vs tanh-sinh differ by 1.40e-11
// W(0, a(5)) for V0 = 15, 1e7-point trapezoid
inline constexpr double kActionW15E5 = 1.4577685590098726;
// trapezoid+patch vs tanh-sinh differ by 6.25e-10
// tau(E = 16.8584) for V0 = 60, tanh-sinh (trapezoid+patch agrees, see above)
inline constexpr double kPeriod60 = 0.69203926421518936;
// integral_0^1 sqrt(1 - z^2 exp(2(1 - z))) dz
inline constexpr double kGamma = 0.55098358018981828;
// (pi e / (4 gamma))^2
inline constexpr double kBeta0 = 15.013827203241898;
// n = 0 position for V0 = 60
inline constexpr double kBbjs60Position = 16.917205328325398;
// n = 0 half-width for V0 = 60
inline constexpr double kBbjs60HalfWidth = 5.2851256581555587e-9;
// n = 0 position for V = 400 r^2 - 400 r^3
inline constexpr double kAnharmonicPosition = 47.010422992463489;
// n = 0 half-width for V = 400 r^2 - 400 r^3
inline constexpr double kAnharmonicHalfWidth = 0.56129991840776505;

}  // namespace wkbres::frozen
