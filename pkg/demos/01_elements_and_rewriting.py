"""Elements and rewriting: build graphs, multiply generators, reduce to the
canonical basis, and read off ranks.

Run:  python3 demos/01_elements_and_rewriting.py
"""

from lpa import IntegerRing, LeavittAlgebra, parse_expr, parse_graph

# A bouquet of two loops at one vertex.  Its algebra is the classical
# rank-(1,2) algebra: the vertex splits as v = e.e* + f.f*.
rose = parse_graph("""
vertices: v
edges: e: v -> v
       f: v -> v
""")
A = LeavittAlgebra(rose, IntegerRing())

x = parse_expr("e.e*", A)
print("e.e*             ->", x.normal_form())
print("v = e.e* + f.f*  ->", parse_expr("v", A).equiv(parse_expr("e.e* + f.f*", A)))
print("e*.f             ->", parse_expr("e*.f", A))  # distinct edges annihilate

# Products follow the generator calculus; they are never normalized behind
# your back, so you can watch spanning representatives before reduction.
y = parse_expr("e", A) * parse_expr("e", A).star()
print("raw product      ->", y, "   reduced ->", y.normal_form())

# A single loop gives the Laurent polynomial ring: the basis in the window
# |leg| <= k has exactly 2k + 1 monomials (powers x^-k .. x^k).
loop = parse_graph("vertices: v\nedges: c: v -> v")
L = LeavittAlgebra(loop, IntegerRing())
for k in (1, 2, 3):
    print(f"loop basis, legs <= {k}:", [str(m) for m in L.basis_monomials(k)])

# A straight line of n vertices gives the n x n matrix ring: n^2 basis monomials.
line = parse_graph("""
vertices: v1 v2 v3
edges: a: v1 -> v2
       b: v2 -> v3
""")
M = LeavittAlgebra(line, IntegerRing())
print("line3 basis size:", len(M.basis_monomials(2)), "(= 3 x 3 matrix units)")

# The grading by path-length difference is respected by multiplication.
z = parse_expr("c + c*", L)
print("graded parts of c + c*:", {n: str(p) for n, p in z.graded_parts().items()})

# Vertices expand over the paths leaving them, to any depth.
print("v expanded to depth 2 in the rose:", A.expand_vertex("v", 2))
print("...still equals v:", A.expand_vertex("v", 2).equiv(A.vertex("v")))
