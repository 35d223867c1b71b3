"""Restrict a spin character one residue at a time, and with divided powers."""

from spinmod.characters import FormalChar, divided, e_step, eps, kleshchev, signature_text, spin_label


def main():
    start = FormalChar.of(spin_label((11, 9, 7, 5, 4, 1))[0])
    print("start:", start)
    for i in (0, 1):
        print(f"e_{i}:", e_step(i, start))
        top = eps(i, start)
        print(f"e_{i}^({top}):", divided(i, top, "e", start))
    k = kleshchev((15, 11, 8, 6, 5, 2), 0)
    print("\nresidue 0 signature of (15,11,8,6,5,2):", signature_text(k.signature))
    print("reduced:", signature_text(k.reduced))
    print("normal nodes:", ", ".join(f"({n.row},{n.col})" for n in k.normal))


if __name__ == "__main__":
    main()
