// Generated by generate_reference_values.py -- do not edit by hand.
// Extended-precision (60 digit) reference values, rounded to double.
#pragma once

namespace oracle {
inline constexpr double log_gamma_401 = 2000.5006979832415;
inline constexpr double log_beta_161_241 = -271.99685588068405;
inline constexpr double log_choose_400_160 = 266.00289445337745;
inline constexpr double log_gamma_half = 0.5723649429247001;
inline constexpr double log_gamma_0p1 = 2.252712651734206;
inline constexpr double log_gamma_1em6 = 13.815509980749432;
inline constexpr double log_gamma_10p3 = 13.482036786138357;
inline constexpr double log_gamma_1e3p5 = 5908.674175848678;
inline constexpr double log_gamma_1e6 = 12815504.569147611;
inline constexpr double ibeta_half_161_241 = 0.999969332047093;
inline constexpr double ibeta_0p2_0p5_5 = 0.8550723945959195;
inline constexpr double ibeta_0p8_2_3 = 0.9728;
inline constexpr double ibeta_0p3_40_60 = 0.017592508468930085;
inline constexpr double ibeta_0p9_300_200 = 1.0;
inline constexpr double ibeta_0p4_1em3_1em3 = 0.49979755072797205;
inline constexpr double log_lik_400_160_rho04 = -3.201772350325117;
inline constexpr double log_lik_400_160_rho05 = -11.255977770600667;
inline constexpr double approx_marginal_w1_12 = 0.00041562759767248546;
inline constexpr double exact_marginal_w1_12 = 0.0004156148512248932;
inline constexpr double log_exact_marginal_w1_12 = -7.785751564957803;
inline constexpr double log_bf_flat = 5.955132855430865;
inline constexpr double posterior_odds_flat_w11_12 = 35.066195759456505;
inline constexpr double posterior_prob_linked_flat_w11_12 = 0.9722732054506248;
inline constexpr double log_mixture_marginal_w11_12 = -7.757633126508254;
inline constexpr double rho_upper_L1 = 0.43233235838169365;
inline constexpr double rho_upper_L2 = 0.4908421805556329;
inline constexpr double rho_upper_Lhalf = 0.31606027941427883;
inline constexpr double haldane_inv_rho04_L1 = 0.8047189562170501;
inline constexpr double transformed_density_rho04 = 1.9528104378294981;
inline constexpr double transformed_cdf_rho03 = 0.7063935555445364;
inline constexpr double marginal_haldane_L1 = 0.004198131442069216;
inline constexpr double log_marginal_haldane_L1 = -5.473115747433269;
inline constexpr double log_bf_haldane_L1 = 5.7828620231673975;
inline constexpr double posterior_density_flat_rho04 = 16.31719966085844;
inline constexpr double exact_marginal_N2_y2_w1_12 = 0.006944444444444444;
inline constexpr double posterior_density_N2_y0_at0 = 3.4285714285714284;
inline constexpr double beta12_mean = 0.3333333333333333;
inline constexpr double beta12_sd = 0.23570226039551584;
}  // namespace oracle
