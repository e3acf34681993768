"""The commutative core: which generators are normal, projecting onto the
core, commutant witnesses, and the Laurent structure of corner subalgebras.

Run:  python3 demos/02_commutative_core.py
"""

from lpa import (IntegerRing, LaurentPoly, LaurentRing, LeavittAlgebra,
                 PeriodicTrail, classify_generator, core_project,
                 corner_project, corner_to_laurent, cycle_power,
                 diagonal_commutant_witness, disc_decomposition, in_core,
                 laurent_to_corner, parse_expr, parse_graph, parse_path)

lasso = parse_graph("""
vertices: u v
edges: g: u -> v
       c: v -> v
""")
A = LeavittAlgebra(lasso, IntegerRing())

# Normal generators (x x* = x* x) come in three kinds: diagonal monomials,
# and the two orientations of "wrap around an exit-free cycle".
for text in ("g.g*", "g.c.g*", "g.c*.g*", "g"):
    x = parse_expr(text, A)
    (m,) = x.terms
    print(f"{text:10s} classifies as {classify_generator(m)}")

# The core projection keeps exactly the normal part of a normal form.
mixed = parse_expr("g.c.g* + 2*u + g", A)
print("core projection of g.c.g* + 2u + g ->", core_project(mixed))

# Elements outside the core fail to commute with some diagonal projection;
# the witness search returns the offending path.
print("is g in the core? ", in_core(parse_expr("g", A)))
print("witness path:     ", diagonal_commutant_witness(parse_expr("g", A), 3))

# Around the exit-free loop at v, the corner over the distinguished path g
# is an exact copy of the Laurent polynomial ring.
g_path = parse_path("g", lasso)
w = cycle_power(A, g_path, 1)
print("cycle power (+1): ", w)
print("its inverse:      ", cycle_power(A, g_path, -1))
print("their product:    ", (w * cycle_power(A, g_path, -1)).normal_form())

p = LaurentPoly([(2, 1), (0, -3)], A.ring)  # x^2 - 3
lifted = laurent_to_corner(A, p, g_path)
laurent = LaurentRing(A.ring)
print("x^2 - 3 lifts to: ", lifted)
print("and maps back to: ", laurent.show(corner_to_laurent(A, lifted, g_path)))

# Corners over discrete trails land inside the core: compressing by the
# essential head is the same as projecting and then compressing.
tau = PeriodicTrail(g_path, parse_path("c", lasso))
print("corner of u:      ", corner_project(parse_expr("u", A), tau))
print("corner of g:      ", corner_project(parse_expr("g", A), tau))

# The discrete part decomposes as one ring summand per finite trail and one
# Laurent summand per infinite discrete trail.
report = disc_decomposition(lasso, 2)
print("discrete summands:", report.summary("Z"),
      "(complete)" if report.complete else "(partial: graph is not commutative)")
