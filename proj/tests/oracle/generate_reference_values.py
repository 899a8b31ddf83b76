#!/usr/bin/env python3
"""Regenerates reference_values.hpp from extended-precision arithmetic.

All constants asserted by the C++ test suites are computed here with mpmath
at 60 decimal digits and frozen as double literals. Run from this directory:

    python3 generate_reference_values.py > reference_values.hpp
"""
import mpmath as mp

mp.mp.dps = 60


def fmt(x):
    """Shortest double literal that round-trips the correctly rounded value."""
    d = float(x)
    return repr(d)


LN2 = mp.log(2)

# ---------------------------------------------------------------- special fns
log_gamma_401 = mp.fsum(mp.log(k) for k in range(1, 401))  # ln(400!)
log_gamma_161 = mp.fsum(mp.log(k) for k in range(1, 161))
log_gamma_241 = mp.fsum(mp.log(k) for k in range(1, 241))
log_gamma_402 = mp.fsum(mp.log(k) for k in range(1, 402))
assert mp.almosteq(log_gamma_401, mp.loggamma(401))

log_beta_161_241 = log_gamma_161 + log_gamma_241 - log_gamma_402
log_choose_400_160 = log_gamma_401 - log_gamma_161 - log_gamma_241

spot_lgamma = {
    "log_gamma_half": mp.loggamma("0.5"),
    "log_gamma_0p1": mp.loggamma("0.1"),
    "log_gamma_1em6": mp.loggamma(mp.mpf("1e-6")),
    "log_gamma_10p3": mp.loggamma("10.3"),
    "log_gamma_1e3p5": mp.loggamma("1000.5"),
    "log_gamma_1e6": mp.loggamma(mp.mpf("1e6")),
}

def reg_inc_beta(x, a, b):
    return mp.betainc(a, b, 0, x, regularized=True)

ibeta_half_161_241 = reg_inc_beta(mp.mpf(1) / 2, 161, 241)
spot_ibeta = {
    "ibeta_0p2_0p5_5": reg_inc_beta("0.2", "0.5", 5),
    "ibeta_0p8_2_3": reg_inc_beta("0.8", 2, 3),
    "ibeta_0p3_40_60": reg_inc_beta("0.3", 40, 60),
    "ibeta_0p9_300_200": reg_inc_beta("0.9", 300, 200),
    "ibeta_0p4_1em3_1em3": reg_inc_beta("0.4", "0.001", "0.001"),
}

# ------------------------------------------------------------------ inference
# Binomial log-likelihood, primrose data N=400, y=160.
def log_lik(n, y, rho):
    rho = mp.mpf(rho)
    lc = mp.loggamma(n + 1) - mp.loggamma(y + 1) - mp.loggamma(n - y + 1)
    t = mp.mpf(0)
    if y > 0:
        t += y * mp.log(rho)
    if n - y > 0:
        t += (n - y) * mp.log(1 - rho)
    return lc + t

log_lik_400_160_rho04 = log_lik(400, 160, "0.4")
log_lik_400_160_rho05 = log_lik(400, 160, "0.5")

# Flat-prior mixture marginal, continuous branch, weight 1/12:
#   approx (upper limit extended to 1):  (1/12) * 2 * C(N,y) * B(y+1, N-y+1)
#   exact:                               approx * I_half(y+1, N-y+1)
approx_marginal_w1_12 = mp.mpf(1) / 2406
exact_marginal_w1_12 = approx_marginal_w1_12 * ibeta_half_161_241

# Bayes factor, flat continuous prior: BF = 2 * B(161,241) * I / 0.5^400
log_bf_flat = mp.log(2) + log_beta_161_241 + mp.log(ibeta_half_161_241) + 400 * LN2
posterior_odds_flat_w11_12 = mp.exp(log_bf_flat) / 11
posterior_prob_linked_flat_w11_12 = posterior_odds_flat_w11_12 / (1 + posterior_odds_flat_w11_12)

# Full mixture marginal (point mass 11/12 at 1/2 + 1/12 flat branch).
mixture_marginal_w11_12 = (
    mp.mpf(11) / 12 * mp.exp(log_lik_400_160_rho05) + exact_marginal_w1_12
)

# --------------------------------------------------------------------- priors
# Distance prior Beta(1,2): p(x) = 2(1-x);  map rho = (1 - e^(-2Lx))/2.
rho_upper_L1 = (1 - mp.exp(-2)) / 2
rho_upper_L2 = (1 - mp.exp(-4)) / 2
rho_upper_Lhalf = (1 - mp.exp(-1)) / 2
haldane_inv_rho04_L1 = -mp.log(1 - mp.mpf("0.8")) / 2

def transformed_density(rho, L=1):
    rho = mp.mpf(rho)
    x = -mp.log(1 - 2 * rho) / (2 * L)
    return 2 * (1 - x) / (L * (1 - 2 * rho))

eq_density_rho04 = transformed_density("0.4")
assert mp.almosteq(
    eq_density_rho04, (2 + mp.log(1 - mp.mpf("0.8"))) / (1 - mp.mpf("0.8"))
)

# CDF of the transformed prior at rho: pull back through the map,
# Beta(1,2) CDF is 2x - x^2.
def transformed_cdf(rho, L=1):
    x = -mp.log(1 - 2 * mp.mpf(rho)) / (2 * L)
    return 2 * x - x * x

transformed_cdf_rho03 = transformed_cdf("0.3")

# Marginal likelihood of the primrose data under the distance-derived prior,
# by extended-precision quadrature over the support.
def integrand_haldane(rho):
    return mp.exp(log_lik(400, 160, rho)) * transformed_density(rho)

marginal_haldane_L1 = mp.quad(integrand_haldane, [0, mp.mpf("0.4"), rho_upper_L1])
log_bf_haldane_L1 = mp.log(marginal_haldane_L1) - log_lik_400_160_rho05

# Posterior density under the flat prior at rho = 0.4 (primrose data):
#   p(rho|y) = lik(rho) * 2 / (2 * C * B * I)  =>  density at 0.4
flat_cont_marginal = 2 * mp.exp(log_choose_400_160) * mp.exp(log_beta_161_241) * ibeta_half_161_241
posterior_density_flat_rho04 = mp.exp(log_lik_400_160_rho04) * 2 / flat_cont_marginal

# Small-case exact values used in unit tests.
exact_marginal_N2_y2_w1_12 = mp.mpf(1) / 18 * mp.mpf(1) / 8
posterior_density_N2_y0_at0 = mp.mpf(24) / 7

# ----------------------------------------------------------------- montecarlo
beta12_mean = mp.mpf(1) / 3
beta12_sd = mp.sqrt(mp.mpf(1) / 18)

values = [
    ("log_gamma_401", log_gamma_401),
    ("log_beta_161_241", log_beta_161_241),
    ("log_choose_400_160", log_choose_400_160),
    *spot_lgamma.items(),
    ("ibeta_half_161_241", ibeta_half_161_241),
    *spot_ibeta.items(),
    ("log_lik_400_160_rho04", log_lik_400_160_rho04),
    ("log_lik_400_160_rho05", log_lik_400_160_rho05),
    ("approx_marginal_w1_12", approx_marginal_w1_12),
    ("exact_marginal_w1_12", exact_marginal_w1_12),
    ("log_exact_marginal_w1_12", mp.log(exact_marginal_w1_12)),
    ("log_bf_flat", log_bf_flat),
    ("posterior_odds_flat_w11_12", posterior_odds_flat_w11_12),
    ("posterior_prob_linked_flat_w11_12", posterior_prob_linked_flat_w11_12),
    ("log_mixture_marginal_w11_12", mp.log(mixture_marginal_w11_12)),
    ("rho_upper_L1", rho_upper_L1),
    ("rho_upper_L2", rho_upper_L2),
    ("rho_upper_Lhalf", rho_upper_Lhalf),
    ("haldane_inv_rho04_L1", haldane_inv_rho04_L1),
    ("transformed_density_rho04", eq_density_rho04),
    ("transformed_cdf_rho03", transformed_cdf_rho03),
    ("marginal_haldane_L1", marginal_haldane_L1),
    ("log_marginal_haldane_L1", mp.log(marginal_haldane_L1)),
    ("log_bf_haldane_L1", log_bf_haldane_L1),
    ("posterior_density_flat_rho04", posterior_density_flat_rho04),
    ("exact_marginal_N2_y2_w1_12", exact_marginal_N2_y2_w1_12),
    ("posterior_density_N2_y0_at0", posterior_density_N2_y0_at0),
    ("beta12_mean", beta12_mean),
    ("beta12_sd", beta12_sd),
]

print("// Generated by generate_reference_values.py -- do not edit by hand.")
print("// Extended-precision (60 digit) reference values, rounded to double.")
print("#pragma once")
print()
print("namespace oracle {")
for name, v in values:
    print(f"inline constexpr double {name} = {fmt(v)};")
print("}  // namespace oracle")
