"""Energy levels of the conformable hydrogen atom.

Walks through the bound-state spectrum for a few derivative orders and
shows how the classical -13.6/n^2 eV ladder is recovered at order 1.

Run:  python3 demos/demo_energy_levels.py
"""
import numpy as np

from confhydro import energy_level

alphas = [0.5, 0.7, 0.9, 1.0]
ns = range(1, 7)

header = "n    " + "".join(f"alpha={a:<10.2f}" for a in alphas)
print(header)
print("-" * len(header))
for n in ns:
    row = f"{n:<5d}"
    for a in alphas:
        row += f"{energy_level(n, a):<16.6f}"
    print(row)

print()
print("The alpha = 1 column is the textbook ladder:")
for n in ns:
    print(f"  n={n}:  {energy_level(n, 1.0):10.6f}  vs  {-13.6 / n**2:10.6f}")

print()
print("Level spacing shrinks toward zero from below for every order,")
print("so each spectrum accumulates at the ionization threshold:")
for a in alphas:
    gaps = np.diff([energy_level(n, a) for n in ns])
    print(f"  alpha={a}: successive gaps {np.array2string(gaps, precision=4)}")
