#!/usr/bin/env python3
"""Survey the stock algebras: identities, nucleus/center/derivation dimensions.

Usage: python scripts/structure_survey.py
"""

from altrings import analyze
from altrings.catalog import direct_sum, matrix_algebra, octonion_algebra, zorn


def main():
    subjects = [
        ("Q", matrix_algebra(1)),
        ("M2(Q)", matrix_algebra(2)),
        ("M3(Q)", matrix_algebra(3)),
        ("Zorn", zorn()),
        ("O(-1,-1,-1)", octonion_algebra((-1, -1, -1))),
        ("O(+1,+1,+1)", octonion_algebra((1, 1, 1))),
        ("M2+M2", direct_sum(matrix_algebra(2), matrix_algebra(2))),
        ("Zorn+Q", direct_sum(zorn(), matrix_algebra(1))),
    ]
    header = f"{'algebra':<14}{'dim':>4}{'nuc':>5}{'cen':>5}{'der':>5}  alt flex assoc"
    print(header)
    print("-" * len(header))
    for name, algebra in subjects:
        rep = analyze(algebra)
        flags = "  ".join(
            "y" if f else "n"
            for f in (rep.is_alternative, rep.is_flexible, rep.is_associative)
        )
        print(f"{name:<14}{algebra.dim:>4}{rep.nucleus.dim:>5}{rep.center.dim:>5}"
              f"{rep.derivation_dim:>5}  {flags}")


if __name__ == "__main__":
    main()
