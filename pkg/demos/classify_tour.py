"""Which spin characters stay irreducible mod 2, for every n up to 12."""

from spinmod import dblreg, spin_degree, spin_irreducible
from spinmod.partitions import enumerate_partitions


def main(top=12):
    for n in range(1, top + 1):
        print(f"n = {n}")
        for lam in enumerate_partitions(n, two_regular=True):
            verdict = spin_irreducible(lam)
            if verdict.irreducible:
                print(f"  <{lam}>  degree {spin_degree(lam):>4}  dblreg ({dblreg(lam)})  {verdict.describe()}")


if __name__ == "__main__":
    main()
