"""Compare two readings of the graded Betti coproduct against Delta^{W,DR}.

literal: the degree-(n+1) Magnus component of Delta^{W,B}(X0^n (X1 - 1)).
lifted:  the leading class of Delta^{W,B}((X0 - 1)^n (X1 - 1)), whose
         argument lies in F^{n+1} with class e0^n e1.
"""
from __future__ import annotations

import argparse

from harmonica import betti, derham
from harmonica.algebra import serialize
from harmonica.magnus import filtration_degree, magnus


def main() -> None:
    p = argparse.ArgumentParser(description="literal vs lifted graded coproduct")
    p.add_argument("--trunc", type=int, default=4)
    N = p.parse_args().trunc
    for n in range(N):
        want = derham.delta_WDR(n)
        g = betti.delta_WB_generator(n)
        lit = magnus(g, N).component(n + 1)
        lift = betti.delta_W(derham.betti_lift_of_generator(n))
        cls = magnus(lift, N).component(n + 1)
        print(f"n={n}  Delta^(W,DR)       = {serialize(want)}")
        print(f"      literal  [{'ok' if lit == want else 'differs'}] deg(arg)=1          {serialize(lit)}")
        print(f"      lifted   [{'ok' if cls == want else 'differs'}] deg(Delta)={filtration_degree(lift, N)}  {serialize(cls)}")


if __name__ == "__main__":
    main()
