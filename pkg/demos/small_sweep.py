"""Check the cycle and path bounds by exhaustive search on a few small points.

The cycle statement holds everywhere it is checked. The path statement fails
at n = k: a Berge path of length k needs k+1 vertices, so at n = k every
connected family qualifies and K4, K5 exceed the formula. From n = k+1 on it
holds.
"""

from berge.verify import verify

for theorem in ("main2conn", "main_paths"):
    rep = verify(theorem, {"nmin": 4, "nmax": 6, "k": [4, 5], "r": [3]})
    print(rep.to_csv(), end="")
    for p in rep.failures:
        print(f"  witness at n={p.n}, k={p.k}: {p.witness['edges']}")
    print()
