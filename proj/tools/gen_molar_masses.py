#!/usr/bin/env python3
"""Regenerates data/molar_masses.txt from the lexicon and IUPAC standard
atomic weights (2021 abridged values)."""

import re
import sys
from pathlib import Path

ATOMIC_WEIGHTS = {
    "H": 1.008, "Li": 6.94, "Be": 9.0122, "B": 10.81, "C": 12.011,
    "N": 14.007, "O": 15.999, "F": 18.998, "Na": 22.990, "Mg": 24.305,
    "Al": 26.982, "Si": 28.085, "P": 30.974, "S": 32.06, "Cl": 35.45,
    "K": 39.098, "Ca": 40.078, "Sc": 44.956, "Ti": 47.867, "V": 50.942,
    "Cr": 51.996, "Mn": 54.938, "Fe": 55.845, "Co": 58.933, "Ni": 58.693,
    "Cu": 63.546, "Zn": 65.38, "Ga": 69.723, "Ge": 72.630, "As": 74.922,
    "Se": 78.971, "Rb": 85.468, "Sr": 87.62, "Y": 88.906, "Zr": 91.224,
    "Nb": 92.906, "Mo": 95.95, "Ag": 107.87, "Cd": 112.41, "In": 114.82,
    "Sn": 118.71, "Sb": 121.76, "Te": 127.60, "Cs": 132.91, "Ba": 137.33,
    "La": 138.91, "Ce": 140.12, "Pr": 140.91, "Nd": 144.24, "Sm": 150.36,
    "Eu": 151.96, "Gd": 157.25, "Tb": 158.93, "Dy": 162.50, "Ho": 164.93,
    "Er": 167.26, "Tm": 168.93, "Yb": 173.05, "Lu": 174.97, "Hf": 178.49,
    "Ta": 180.95, "W": 183.84, "Tl": 204.38, "Pb": 207.2, "Bi": 208.98,
    "Th": 232.04, "U": 238.03,
}

FORMULA_TOKEN = re.compile(r"([A-Z][a-z]?)(\d*)")


def molar_mass(formula: str) -> float:
    total = 0.0
    pos = 0
    for match in FORMULA_TOKEN.finditer(formula):
        if match.start() != pos:
            raise ValueError(f"cannot parse formula: {formula}")
        pos = match.end()
        element, count = match.group(1), match.group(2)
        if element not in ATOMIC_WEIGHTS:
            raise ValueError(f"unknown element {element} in {formula}")
        total += ATOMIC_WEIGHTS[element] * (int(count) if count else 1)
    if pos != len(formula):
        raise ValueError(f"cannot parse formula: {formula}")
    return total


def main() -> int:
    root = Path(__file__).resolve().parent.parent
    lexicon = root / "data" / "oxides.txt"
    out_path = root / "data" / "molar_masses.txt"
    lines = ["# oxide molar masses in g/mol, computed from IUPAC standard",
             "# atomic weights by tools/gen_molar_masses.py"]
    for raw in lexicon.read_text().splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        formula = line.split(",")[0].strip()
        lines.append(f"{formula} {molar_mass(formula):.3f}")
    out_path.write_text("\n".join(lines) + "\n")
    print(f"wrote {out_path}")
    return 0


if __name__ == "__main__":
    sys.exit(main())
