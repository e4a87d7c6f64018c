"""Re-derive the tables the braid modules compute at import time and print them.

Covers the inverse automorphisms Theta_{X_i^-1}, the search for the normal
form of x13, the derivation table of U(p5) and the t_ij in normal form.
"""
from __future__ import annotations

from harmonica import braid_betti as bb, braid_derham as bd
from harmonica.algebra import serialize

NAMES = {1: "x15", 2: "x25", 3: "x35"}


def word(w) -> str:
    if not w:
        return "1"
    return " ".join(NAMES[abs(x)] + ("^-1" if x < 0 else "") for x in w)


def main() -> None:
    print("Theta images of x15, x25, x35")
    labels = {1: "X0", 2: "X1", -1: "X0^-1", -2: "X1^-1"}
    for code, images in sorted(bb.theta_table().items(), key=lambda kv: (abs(kv[0]), -kv[0])):
        print(f"  {labels[code]:6} " + " | ".join(word(w) for w in images))

    print("\nx13 candidates matching pr1, pr2 (length <= 6)")
    for cand in bb._x13_candidates(6):
        ok = bb.relators_hold(bb._k4_from_x13(cand))
        print(f"  {serialize(cand):48} relators {'hold' if ok else 'fail'}")

    print("\nK4 generators in normal form")
    for name, g in bb.k4_generators().items():
        print(f"  {name} = {serialize(g)}")

    print("\nderivations e_k . t - t . e_k")
    for k, e in enumerate((bd.u_e0, bd.u_e1)):
        for t, name in zip(bd.T_GENS, bd.T_NAMES):
            print(f"  [e{k}, {name}] = {serialize(e * t - t * e)}")

    print("\nt_ij in the normal form of U(p5)")
    for name, v in bd.infinitesimal_generators().items():
        print(f"  {name} = {serialize(v)}")
    bad = [n for n, v in {**bd.definition_defects(), **bd.infinitesimal_relators()}.items() if not v.is_zero()]
    print(f"\nnonvanishing relators: {bad or 'none'}")


if __name__ == "__main__":
    main()
