#pragma once

// Reference targets frozen from a 40-digit arbitrary-precision evaluation,
// independent of every code path under test.

namespace grv::testref {

// 1/(e^{z^2}+1) samples
inline constexpr double kFermiAt2 = 0.017986209962091558027;
inline constexpr double kFermiAt1p1iIm = -0.77870386232745111525;
inline constexpr double kArcAtHalfPiN1 = -2.5019560150556317794;
inline constexpr double kDampedX1N2 = 0.036397263435165491047;

// pole lattice
inline constexpr double kSqrtHalfPi = 1.2533141373155002512;   // sqrt(pi/2)
inline constexpr double kSqrt3HalfPi = 2.1708037636748029781;  // sqrt(3 pi/2)
inline constexpr double kResA0Mag = 0.19947114020071633897;
inline constexpr double kSqrt2Pi = 2.5066282746310005024;
inline constexpr double kRhs2 = -3.9538307837475358211;  // -sqrt(2 pi)(1 + 1/sqrt 3)

// fixed integrals
inline constexpr double kAtanIntegral = 1.4949995381200426425;  // int 1/(x^2+2), |x| < sqrt(2 pi)
inline constexpr double kHalfSqrtPi = 0.88622692545275801365;
inline constexpr double kLn2 = 0.69314718055994530942;
inline constexpr double kFermiHalfLine = 0.53607746497009566977;
inline constexpr double kSqrtPi = 1.7724538509055160273;
inline constexpr double kSqrtPiEtaHalf = 1.0721549299401913395;
inline constexpr double kPiOverSqrt2 = 2.2214414690791831235;

// eta / zeta / gamma
inline constexpr double kEtaHalf = 0.60489864342163037025;
inline constexpr double kZetaHalf = -1.4603545088095868129;
inline constexpr double kEtaThird = 0.57175283382527766494;
inline constexpr double kEtaTwoThirds = 0.63617775466431907599;
inline constexpr double kEtaQuarter = 0.55448738591407312155;
inline constexpr double kEta03 = 0.56490159144754604233;
inline constexpr double kGammaThird = 2.6789385347077476337;
inline constexpr double kGammaTwoThirds = 1.3541179394264004169;
inline constexpr double kGammaQuarter = 3.6256099082219083119;

// f(y) = int_0^inf dx/(e^{x^y}+1) = (1/y) Gamma(1/y) eta(1/y)
inline constexpr double kF15 = 0.5743064735033078959;
inline constexpr double kF2 = 0.53607746497009566977;
inline constexpr double kF3 = 0.51056356628763055834;
inline constexpr double kF4 = 0.50258874008853212648;

// segment integrals of 1/(e^{x^2}+1)
inline constexpr double kSegmentN1 = 1.0714594675334871529;  // H = sqrt(2 pi)
inline constexpr double kSegmentN2 = 1.0721539813872084646;
inline constexpr double kSegmentN5 = 1.0721549299401873492;
inline constexpr double kSegmentH05 = 0.47921298554137490418;
inline constexpr double kSegmentH1 = 0.83893296001338141087;
inline constexpr double kSegmentH17 = 1.0442381304764149812;

// arc-limit integrals s_n = Im int_0^pi e^{iv}/(e^{2 n pi e^{2iv}}+1) dv
inline constexpr double kS1 = 1.4274504833355141845;
inline constexpr double kS2 = 1.4178041257793695353;
inline constexpr double kS4 = 1.4151281351959197858;
inline constexpr double kS16 = 1.4142710823243314243;
inline constexpr double kS64 = 1.4142171588081399701;
inline constexpr double kArcIntegralN1Re = -3.5780877421644876553;

// realpart-zero companion integrals (imaginary parts, H in the exponent)
inline constexpr double kRe0ImH1 = 0.83893296001338141087;
inline constexpr double kRe0ImHm3 = 1.3952582677482859804;

// tail integrals B_n
inline constexpr double kTail1 = -0.70029892096532468777;
inline constexpr double kTail2 = 0.55301521635017556344;
inline constexpr double kTail4 = 0.41591543385644508861;
inline constexpr double kTail16 = 0.21809910765445866498;
inline constexpr double kTail64 = 0.11034567069249309836;
inline constexpr double kTail100 = 0.088401142736470386655;
inline constexpr double kTail256 = 0.055335092099849193223;

// sequences
inline constexpr double kSeqA2 = 0.59771698144536901607;
inline constexpr double kEq12BothSidesN1 = -0.32627341363306143141;
inline constexpr double kSeqADiffN1 = 0.25107685555656433309;  // 2 sqrt2 - 2 - 1/sqrt3
inline constexpr double kZPartHalf1e6 = -1.4598545088512534796;

}  // namespace grv::testref
