"""Certify congruences modulo pi^2 with integer relations.

The order-3 series of {1,3}^n has a t^1 coefficient congruent to
2((-4)^-n - c) zeta*(4n+1). Reducing the order-2 closed form mod pi^2 pins
c = 2; with c = 4 the leftover is a rational multiple of zeta(4n+1), which no
combination of zeta(2)-multiples can absorb.
"""

from mzvlab import EvalConfig, main_rhs, repeat_pattern, t_adic_smzv, verify_congruence_mod_pi2

cfg = EvalConfig(60)

for n in (1, 2):
    lhs = t_adic_smzv(repeat_pattern(1, 3, n), 3, cfg)
    for corrected in (True, False):
        rhs = main_rhs(n, cfg, corrected=corrected)
        cert = verify_congruence_mod_pi2(lhs[1], rhs[1], 4 * n + 1, cfg)
        c = 2 if corrected else 4
        print(f"n={n}, t^1 with c={c}: {cert.status}")
        if cert.ok and cert.status == "certified":
            print("   difference =", {k: str(v) for k, v in cert.pi2_combination().items()})

# The weight-10 t^2 coefficient at n=2 needs the depth-2 generator zeta(3,5).
lhs = t_adic_smzv(repeat_pattern(1, 3, 2), 3, cfg)[2]
cert = verify_congruence_mod_pi2(lhs, main_rhs(2, cfg)[2], 10, cfg)
print("n=2, t^2:", cert.status, "residual", f"{float(cert.residual):.1e}")
print("   difference =", {k: str(v) for k, v in cert.pi2_combination().items()})
