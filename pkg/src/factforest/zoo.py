"""Built-in test semigroups, each with a small generating alphabet."""

from .semigroup import (
    cyclic_group,
    homomorphism,
    new_semigroup,
    rectangular_band,
    transformation_closure,
)


def trivial():
    return new_semigroup(["e"], [[0]], name="trivial")


def u1():
    """{1, 0}: identity and absorbing zero."""
    return new_semigroup(["1", "0"], [[0, 1], [1, 1]], name="U1")


def flip_flop():
    """{1, a, b} with x*a = a and x*b = b."""
    return new_semigroup(["1", "a", "b"], [[0, 1, 2], [1, 1, 2], [2, 1, 2]], name="flip-flop")


def _closure_hom(name, n, gens, letters):
    s, idx = transformation_closure(n, gens, name=name)
    return homomorphism(s, dict(zip(letters, idx)))


def zoo():
    """``name -> Homomorphism`` in a fixed order."""
    out = {}
    out["trivial"] = homomorphism(trivial(), {"x": 0})
    out["U1"] = homomorphism(u1(), {"i": "1", "z": "0"})
    for n in range(2, 7):
        out[f"Z{n}"] = homomorphism(cyclic_group(n), {"g": "1", "e": "0"})
    out["B(2,2)"] = homomorphism(rectangular_band(2, 2), {"a": "(0,0)", "b": "(1,1)"})
    out["B(2,3)"] = homomorphism(rectangular_band(2, 3),
                                 {"a": "(0,0)", "b": "(1,1)", "c": "(0,2)"})
    out["flip-flop"] = homomorphism(flip_flop(), {"a": "a", "b": "b", "u": "1"})
    # full transformation monoid on 2 points: swap and a constant map
    out["T2"] = _closure_hom("T2", 2, [(1, 0), (0, 0)], "sc")
    # full transformation monoid on 3 points: 3-cycle, transposition, merge
    out["T3"] = _closure_hom("T3", 3, [(1, 2, 0), (1, 0, 2), (0, 0, 2)], "cts")
    # aperiodic: saturating increment and reset-to-0 on {0,1,2}
    out["Sat3"] = _closure_hom("Sat3", 3, [(1, 2, 2), (0, 0, 0)], "ir")
    return out
