"""The trail module: trails of the three kinds, the exact action of algebra
elements on trail vectors, projections, and the averaging expectation.

Run:  python3 demos/03_trail_module.py
"""

from lpa import (IntegerRing, LeavittAlgebra, act, averaged_act,
                 check_expectation_square, classify, core_project,
                 diagonal_scalar, enumerate_discrete, find_trail_from,
                 parse_expr, parse_graph, parse_path, parse_trail,
                 prefix_project, trail_project, vec)

lasso = parse_graph("""
vertices: u v
edges: g: u -> v
       c: v -> v
""")
A = LeavittAlgebra(lasso, IntegerRing())

# Trails are finite paths into sinks, periodic wraps of exit-free cycles, or
# aperiodic infinite walks.  The lasso has two discrete infinite trails.
for t in enumerate_discrete(lasso, 2):
    print("trail:", t, "->", classify(t))

# A bouquet of two loops has no discrete trails at all; the fallback walk
# chooses branches by the Thue-Morse word, so it is aperiodic by construction.
rose = parse_graph("vertices: v\nedges: e: v -> v\n f: v -> v")
walker = find_trail_from(rose, "v")
print("aperiodic walk:", walker, "first letters:", walker.head(8))

# Elements act on trail vectors exactly: edges prepend, ghost edges strip.
tau = parse_trail("periodic:g|c", lasso)
m = vec(A, tau, 0)
print("g* . xi(g|c, 0) =", act(parse_expr("g*", A), m))
print("c.c . xi(g|c, 0) =", act(parse_expr("g.c.g*", A), m))

# Projections: by a prefix path, or onto a single trail.
mix = vec(A, tau, 0) + vec(A, parse_trail("periodic:v|c", lasso), 3).scale(2)
print("keep trails through g:  ", prefix_project(parse_path("g", lasso), mix))
print("keep exactly g then c:  ", trail_project(tau, mix))

# Diagonal elements act on each trail by a scalar: the sum of the
# coefficients of its prefixes.
d = parse_expr("2*g.g* + 3*u", A)
print("scalar of 2g.g* + 3u on g|c:", diagonal_scalar(d, tau))

# The square that defines the core projection: represent-then-average equals
# project-then-represent, on every vector.
x = parse_expr("g.c.g* + g", A)
print("square holds:", check_expectation_square(x, mix))
print("averaged action:", averaged_act(x, mix))
print("projected action:", act(core_project(x), mix))
