"""The improvement operators and their extremal behavior at one state.

Run:  python3 demos/04_improvement_operators.py
"""

import numpy as np

from offlab.agents import bcq_improve, greedy_improve, spibb_improve

q = np.array([1.0, 3.0, 2.0])
beta = np.array([0.70, 0.05, 0.25])
u = np.array([0.5, 2.0, 1.0])  # action 1 is rarely seen, hence uncertain

print(f"Q    = {q}\nbeta = {beta}\nu    = {u}\n")
print(f"greedy:            {greedy_improve(q)}")
for tau in (0.0, 0.1, 0.5, 1.0):
    print(f"bcq  tau={tau:<5g} ->   {bcq_improve(q, beta, tau)}")
print()

# The constrained operator spends an uncertainty-weighted L1 budget eps.
# eps=0 reproduces the behavior; a large budget reproduces greedy; in
# between, mass moves where the value gain per unit of budget is highest.
for eps in (0.0, 0.25, 0.5, 1.0, 2.0, 6.0):
    pi = spibb_improve(q, beta, u, eps)
    spent = float((np.abs(pi - beta) * u).sum())
    print(f"spibb eps={eps:<4g} -> pi = {np.round(pi, 3)}  "
          f"value {pi @ q:.3f}  budget spent {spent:.3f}")

print("\nNote: mass flows by gain per unit of budget: 0 -> 1 first "
      "(gain 2 / cost 2.5 = 0.8, beating 0 -> 2 at 1 / 1.5), and once "
      "the budget allows, action 2's own mass is relocated to action 1.")
