#pragma once
// Generated by tools/oracles.py; do not edit by hand.
namespace oracle {
inline constexpr double kernel_cases[] = {1, 0.20000000000000001, 0.29999999999999999, -1.1000000000000001, 1, 0.5, 0.5, -0.20000000000000001, 0.90000000000000002, 0.5, 2, -1, 1, 1, 0.20000000000000001};
inline constexpr double kernel_values[] = {0.20549644203748588, 0.19080221671387856, 0.5557346040900939};
inline constexpr double gamma_k2[] = {-0.034154943091895332, 0.53415494309189526};
inline constexpr double typeA_k6_consistency[] = {-0.66063966746696012, 0.33212793349339204};
inline constexpr double typeA_k6_derivative[] = {-0.0016887275638977073, -0.00086785305108971755};
inline constexpr double typeII_k6_consistency[] = {0.98254382206677826, -0.054141651175723053, 0.3171320646243217, 0.23402278263611387, -0.58566032312160854};
inline constexpr double typeII_k6_derivative[] = {0.0020946397705223774, 0.0018526704870236443, -0.0044329932963327323, -0.0046788698837563203, -0.0079185729129349625};
inline constexpr double typeII_k6_critical[] = {0.98670381888857661, -0.050413403216808789, 0.30801099147906885, 0.22451580759947809, -0.6015119235610944};
}  // namespace oracle
