#!/usr/bin/env python3
"""Half-quotient counts of dipoles.

A single-color dipole with e halvable edges has floor(e/2)+1 half-quotients
(choose the number of loops); pairing up colors pushes the count to the
2^(e/2) ceiling.
"""

from regcover.atoms import find_atoms
from regcover.fixtures import dipole, with_pendants
from regcover.quotient import atom_quotients


def dipole_atom(colors):
    host = with_pendants(dipole(colors), ["u", "v"])
    (a,) = [x for x in find_atoms(host) if x.kind == "dipole"]
    return a


def main():
    print("single color class:")
    for e in range(2, 9):
        n = len(atom_quotients(dipole_atom([0] * e)).half_quotients)
        print(f"  e={e}: {n} half-quotients (bound 2^{e // 2} = {2 ** (e // 2)})")
    print("paired colors (k pairs of 2):")
    for k in range(1, 5):
        colors = [i for i in range(k) for _ in range(2)]
        n = len(atom_quotients(dipole_atom(colors)).half_quotients)
        print(f"  k={k} (e={2 * k}): {n} half-quotients = 2^{k}")


if __name__ == "__main__":
    main()
