"""
Solving the semi-classical equations
====================================

Given the targets (Y1, Y2) the solution set is empty, the ground state
alone, or infinite.  In the infinite case an explicit two-mode state
exists for every large enough mode, and a Bose state minimises
Tr(rho log rho) among all solutions.
"""
from esu import (
    ModelParams,
    NoSolutionError,
    SemiclassicalTargets,
    classify,
    construct_two_mode,
    minimal_n_high,
    solve_entropy_minimizer,
    targets,
    verify_solution,
    von_neumann_entropy,
)

# %% Targets computed from a cosmological constant (infinite for 1 < Lambda < 1.5 here).
p = ModelParams(a=1.0, m=1.0, xi=0.0, Lambda=1.25, kappa=1.0)
t = targets(p)
print("Y1 =", t.y1, " Y2 =", t.y2, " ->", classify(t).to_dict())

# %% Prescribed targets make the trichotomy easy to see.
for y1, y2 in ((0.0, 0.0), (0.1, 0.05), (0.1, 0.1), (0.1, 0.5), (-0.1, 0.5)):
    cls = classify(SemiclassicalTargets.from_values(p, y1, y2))
    print(f"Y1={y1:5.2f} Y2={y2:5.2f}  qf={cls.qf.value:18s} full={cls.full.value}")

# %% Two-mode solutions: modes 0 and N, any N past the threshold.
t = SemiclassicalTargets.from_values(p, 0.1, 0.5)
n0 = minimal_n_high(t)
print("smallest admissible N:", n0)
for n in (n0 - 1, n0, n0 + 5, n0 + 50):
    try:
        s = construct_two_mode(t, n)
    except NoSolutionError as exc:
        print(f"N={n}: {exc}")
        continue
    r = verify_solution(s, t)
    print(f"N={n}: a_n={dict(s.coeffs)}  residuals={r}  Tr(rho log rho)={von_neumann_entropy(s, p):.4f}")

# %% The entropy minimiser is a Bose state with two Lagrange multipliers.
r = solve_entropy_minimizer(t)
print(f"lambda={r.lam:.10f} beta={r.beta:.10f} residuals={r.residuals}")
print(f"Tr(rho log rho) = {r.entropy:.6f}, below every two-mode solution above")
