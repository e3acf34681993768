"""Uniqueness checking: concrete matrix systems, the induced homomorphism,
reduction certificates, and injectivity reports for both Leavitt and Cohn
algebras.

Run:  python3 demos/04_uniqueness.py
"""

from lpa import (IntegerRing, LaurentRing, LeavittAlgebra, MatrixTarget,
                 RationalRing, check_conditions, cohn_check, hom_apply,
                 make_system, parse_expr, parse_graph, reduce_search,
                 sink_split)

loop = parse_graph("vertices: v\nedges: c: v -> v")

# Two 1x1 systems for the single loop.  The Laurent one sends the loop to x
# and is as injective as a bounded check can certify; the integer one
# collapses the loop to 1 and is caught by the annihilator search.
laurent_target = MatrixTarget(LaurentRing(RationalRing()), 1)
laurent_sys = make_system(loop, laurent_target,
                          {"v": ((laurent_target.entry_ring.one,),)},
                          {"c": ((laurent_target.entry_ring.monomial(1),),)})
int_target = MatrixTarget(IntegerRing(), 1)
int_sys = make_system(loop, int_target, {"v": ((1,),)}, {"c": ((1,),)})

for name, sysm, bound in (("loop -> x", laurent_sys, 8), ("loop -> 1", int_sys, 4)):
    print(f"--- system {name}")
    report = check_conditions(sysm, bound)
    for line in report.lines(sysm.ring):
        print("   ", line)

# The homomorphism evaluates exactly on arbitrary elements.
A = LeavittAlgebra(loop, RationalRing())
print("image of c + c*:", laurent_sys.target.show(
    hom_apply(laurent_sys, parse_expr("c + c*", A))))

AZ = LeavittAlgebra(loop, IntegerRing())
kernel_elem = parse_expr("c - v", AZ)
print("loop -> 1 kills c - v:",
      int_sys.target.is_zero(hom_apply(int_sys, kernel_elem)))

# Any nonzero element compresses onto a scalar multiple of a vertex or a
# Laurent polynomial in an exit-free cycle; the certificate replays exactly.
cert = reduce_search(kernel_elem, 4)
print("reduction of c - v: kind =", cert.kind, " value =",
      cert.outcome_element(AZ).normal_form(), " replays:", cert.replays(kernel_elem))

# Cohn algebras are handled through the sink-split graph, which always
# satisfies Condition (L), so only the vertex condition matters there.
F = sink_split(loop)
print("sink-split of the loop:", F.vertices, F.edges)
cohn_sys = make_system(F, int_target,
                       {"v": ((1,),), "v'": ((0,),)},
                       {"c": ((1,),), "c'": ((0,),)})
report = cohn_check(cohn_sys, 4)
print("collapsing the primed sink is detected:")
for line in report.lines(cohn_sys.ring):
    print("   ", line)
