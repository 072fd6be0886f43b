"""Print the rank-2 worked examples: vertex shadows, the recursion trace, and point counts."""

from chimneys.chimney import Chimney
from chimneys.counting import count_grassmannian
from chimneys.roots import Hyperplane
from chimneys.shadow import shadow, vertex_shadow
from chimneys.weyl import weyl_group

A2, C2 = weyl_group("A2"), weyl_group("C2")
ROOT_NAMES = {"A2": ("a", "b", "a+b"), "C2": ("a", "b", "a+b", "a+2b")}


def missing(W, lam, c):
    return sorted(W.polytope_points(lam) - vertex_shadow(W, lam, c).points())


def wall(W, H):
    return f"H({ROOT_NAMES[W.rs.name][H.root_index]},{H.level})"


def main() -> None:
    strip = Chimney.make(A2, {1})
    S = A2.spherical
    print("A2, J={1}, lambda=(2,2): polytope points missing from the shadow:", missing(A2, (2, 2), strip))
    mult = vertex_shadow(A2, (2, 2), strip, oracle=True).multiplicities
    print("  multiplicity 2 at:", sorted(s.rep.translation for s, m in mult.items() if m == 2))
    trace: list = []
    shadow(A2, A2.x_lambda((2, 2)), S, S, strip, trace=trace)
    for step in trace:
        if step.added or step is trace[0] or step is trace[1]:
            print(f"  {wall(A2, step.hyperplane)} adds", sorted(e.rep.translation for e in step.added))

    lam = (4, 3)
    print("C2, lambda=(4,3), J={1}: missing", missing(C2, lam, Chimney.make(C2, {1})))
    print("C2, lambda=(4,3), J={2}: missing", missing(C2, lam, Chimney.make(C2, {2})))
    shifted = Chimney.make(C2, {1}, C2.reflection(Hyperplane(0, 1)))
    print("C2, lambda=(4,3), strip 1 <= <a,.> <= 2: missing", missing(C2, lam, shifted))
    print("C2, lambda=(4,3), J empty: missing", missing(C2, lam, Chimney.make(C2, ())))

    print("A2, J={1}, lambda=(2,2): |K t^lam K meet I_P t^mu K| for mu in the shadow")
    for mu in sorted(vertex_shadow(A2, (2, 2), strip).points()):
        print(f"  mu={mu}: {count_grassmannian(A2, (2, 2), mu, strip).human()}")


if __name__ == "__main__":
    main()
