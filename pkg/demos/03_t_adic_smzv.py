"""t-adic symmetric MZVs of {1,3}^n and {3,1}^n against their closed forms."""

from mzvlab import EvalConfig, repeat_pattern, t_adic_smzv, t_adic_smzv_symbolic, thm11_rhs, thm13_rhs

cfg = EvalConfig(60)

print("symbolic zeta*_S3(1,3):")
for j, c in enumerate(t_adic_smzv_symbolic((1, 3), 3)):
    print(f"  t^{j}: {c}")

for n in range(3):
    lhs = t_adic_smzv(repeat_pattern(1, 3, n), 2, cfg)
    rhs = thm11_rhs(n, cfg)
    worst = max(abs((lhs[j] - rhs[j]).value) for j in range(2))
    print(f"{{1,3}}^{n}, order 2: max coefficient gap {float(worst):.1e}")

for n in range(3):
    lhs = t_adic_smzv(repeat_pattern(3, 1, n), 3, cfg)
    rhs = thm13_rhs(n, cfg)
    worst = max(abs((lhs[j] - rhs[j]).value) for j in range(3))
    print(f"{{3,1}}^{n}, order 3: max coefficient gap {float(worst):.1e}")
