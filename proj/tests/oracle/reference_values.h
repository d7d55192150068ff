// Frozen outputs of tests/oracle/reference_values.py (independent numpy
// evaluation). Regenerate with that script; never edit by hand.

#pragma once

namespace uncertainty::reference {

// Pauli triple at bloch_state(pi/4, 0).
inline constexpr double kPi4LhsProduct = 0.25;
inline constexpr double kPi4Carlson = 0.204154753012881;
inline constexpr double kPi4Lambda12Sq = 2.80656296487638;
inline constexpr double kPi4Lambda13Sq = 2.0;
inline constexpr double kPi4Delta = 5.67576661373241;
inline constexpr double kPi4Additive = 1.93735931602034;
inline constexpr double kPi4VarianceDecomposition = 1.99202258114172;
inline constexpr double kPi4SpinSumFd = 0.816496580927726;

// Pauli triple at |0>.
inline constexpr double kNorthVarianceDecomposition = 1.96187269438804;

// (sigma_1, sigma_3) at bloch_state(2 pi/3, 0).
inline constexpr double kWitnessLhsProduct = 0.1875;
inline constexpr double kWitnessMondalProduct = 0.09375;
inline constexpr double kWitnessMondalSum = 0.806186217847897;
inline constexpr double kWitnessCarlson = 0.174939881604791;
inline constexpr double kWitnessAdditive = 0.918258151868904;
inline constexpr double kWitnessVarianceDecomposition = 1.0;
inline constexpr double kWitnessSignedXLow = -0.482962913144534;
inline constexpr double kWitnessSignedXHigh = 0.12940952255126;
inline constexpr double kWitnessSignedZLow = -0.433012701892219;
inline constexpr double kWitnessSignedZHigh = 0.75;

// Pauli triple at bloch_state(pi/4, pi/4).
inline constexpr double kPi4Pi4SpinProHr = 0.0220970869120796;
inline constexpr double kPi4Pi4SpinProFd = 0.0340206908719886;

}  // namespace uncertainty::reference
