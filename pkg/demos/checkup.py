#!/usr/bin/env python3
"""Walk one tree through the full classification pipeline, printing each
verdict as it lands: pendant congruences, the extremal eigenvalue set,
and what happens at eigenvalue 1."""

from treespectra import (
    admissible_q,
    classify_m1,
    classify_vertices,
    eigen_symmetric,
    extremal_lambda_set,
    from_edge_list,
    laplacian,
    multiplicity_exact,
)

# a spider with legs 1, 1, 4: three pendants, one major vertex
tree = from_edge_list([(1, 2), (1, 3), (1, 4), (4, 5), (5, 6), (6, 7)])

cls = classify_vertices(tree)
print(f"tree on {tree.n} vertices, edges {list(tree.edges)}")
print(f"pendants {list(cls.pendants)}, majors {list(cls.majors)}")

print("\npendant pair distances:")
for i, u in enumerate(cls.pendants):
    for w in cls.pendants[i + 1:]:
        d = tree.distance_row(u)[w]
        print(f"  d({u},{w}) = {d}, d+1 = {d + 1}")

cert = admissible_q(tree)
print(f"\ngcd of d+1 over pairs: {cert.g}")
print(f"admissible odd moduli: {list(cert.admissible_moduli)} -> q values {list(cert.q_list)}")

params = extremal_lambda_set(tree)
p = len(cls.pendants)
print(f"\neigenvalues reaching multiplicity p-1 = {p - 1}:")
for prm in params:
    print(f"  lambda = 2(1 - cos({prm.ratio} pi)) = {prm.value:.12f}")

# both verification routes for each one
spectrum = eigen_symmetric(laplacian(tree))
for prm in params:
    print(f"\nratio {prm.ratio}:")
    print(f"  exact multiplicity   {multiplicity_exact(tree, prm)}")
    near = [x for x in spectrum.eigenvalues if abs(x - prm.value) < 1e-8]
    print(f"  numeric eigenvalues  {[f'{x:.12f}' for x in near]}")

report = classify_m1(tree)
print(f"\nat eigenvalue 1: multiplicity {report.m1_exact} (class {report.m1_class})")
print("full spectrum:", ", ".join(f"{x:.6f}" for x in spectrum.eigenvalues))
