"""Assemble the spin rows of a weight 4 Rouquier block and compare both routes.

The projective characters give E D^-1 directly. The q-Schur data gives E = J A.
Both must agree with the closed form J Dbar^-1.
"""

from spinmod.rouquier import (RouquierBlock, assemble_E, omega_spin_matrix, schur_algebra_matrices,
                              steinberg_rows, unitri_inverse)


def main():
    block = RouquierBlock((3, 2, 1), 4)
    print(f"core (3,2,1), weight 4, tau = ({block.tau}), size {block.size}")
    d, dbar = schur_algebra_matrices(4)
    e, j, a = assemble_E(block, d, dbar)
    for name, m in (("J", j), ("A", a), ("E", e)):
        print(f"\n{name}:\n{m.to_text()}")
    via_projectives = omega_spin_matrix(block)
    via_schur = e @ unitri_inverse(d)
    print(f"\nE D^-1:\n{via_schur.to_text()}")
    print("\nprojective route agrees:", via_projectives == via_schur)
    print("closed form agrees:", steinberg_rows(4) == via_schur)


if __name__ == "__main__":
    main()
