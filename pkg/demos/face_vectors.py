"""Tour of exact face enumeration: f, h, g and gamma vectors.

Run:  python3 demos/face_vectors.py
"""

import spherestress as ss

print("=== f/h/g/gamma vectors over the catalog ===\n")
for name in ("octahedron", "cross-5", "K-2-4", "K-2-5", "cyclejoin-4-6"):
    c = ss.build(name).complex
    inv = ss.invariants(c)
    print(f"{name:<16} f = {list(inv.f)}")
    print(f"{'':<16} h = {list(inv.h)}   g = {list(inv.g)}   gamma = {list(inv.gamma)}")

print("\nThe h-vector of a boundary simplex is all ones:")
for d in (3, 5, 8):
    print(f"  d = {d}: {ss.h_vector(ss.boundary_simplex(d))}")

print("\nJoins multiply h-polynomials: h(K(2,5)) coefficient-wise equals")
print("the cube of h(boundary triangle) = (1, 1, 1):")
print(" ", ss.h_vector(ss.build("K-2-5").complex))

print("\n=== vertex-link sum rules ===\n")
print("On a pure (d-1)-complex, sum_v g_k(lk v) = (k+1) g_{k+1} + (d+1-k) g_k.")
print("The analogous rule for gamma has weights (i+1) and (2d-4i).")
for name in ("octahedron", "K-2-4", "K-2-5"):
    c = ss.build(name).complex
    d = c.dim + 1
    rows = []
    for k in range((d - 1) // 2 + 1):
        rows.append(f"k={k}: g-residual {ss.mcmullen_residual(c, k)}, "
                    f"gamma-residual {ss.gamma_mcmullen_residual(c, k)}")
    print(f"{name:<12} " + "; ".join(rows))

print("\nBoth residuals vanish identically, as they must on spheres.")

print("\n=== missing faces and sphere classes ===\n")
for name in ("octahedron", "K-2-4", "polytope-1"):
    c = ss.build(name).complex
    jstar = ss.max_missing_dim(c)
    counts = ss.missing_face_counts(c)
    print(f"{name:<12} missing faces by dim: {counts}  -> class S({jstar},{c.dim})"
          + ("  [flag]" if jstar <= 1 else ""))
