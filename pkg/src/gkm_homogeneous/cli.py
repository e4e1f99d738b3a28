"""Command-line entry point.

    gkm graph --type G2 --k long --format dot
    gkm analyze --type A2 --k torus --seed 0 --num-xi 20
    gkm cohomology --type A2 --k parabolic:2 --trials 100 --max-degree 3

Exit codes: 0 success, 2 invalid input, 3 a mathematical invariant failed.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
import warnings
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

from .axial import AxialFunction, check_acs_condition, enumerate_sections, verify_axial
from .cohomology import (
    borel_map,
    constant_class,
    gkm_membership,
    symmetrize,
    weyl_act_class,
    weyl_act_poly,
)
from .gkmgraph import GKMGraph, build_graph, euler_characteristic, is_simple
from .morse import (
    Orientation,
    betti,
    chamber_representatives,
    closure_oracle,
    find_morse,
    integrable_chamber,
    random_regular_covectors,
    upward_cycle,
)
from .polynomial import Polynomial
from .rootsystem import CartanDatum, RootSystem, Subsystem, build_root_system

EXIT_OK = 0
EXIT_USAGE = 2
EXIT_INVARIANT = 3


class SpecError(ValueError):
    """The space specification cannot be turned into a homogeneous space."""

    def __init__(self, message: str, notes: Sequence[str] = ()):
        super().__init__(message)
        self.notes = list(notes)


class InvariantViolation(RuntimeError):
    """A mathematical identity the library guarantees did not hold."""


@dataclass
class Space:
    type: str
    k: str
    root_system: RootSystem
    delta_k: Subsystem
    graph: GKMGraph
    warnings: list[str] = field(default_factory=list)

    def echo(self) -> dict:
        return {
            "type": self.type,
            "k": self.k,
            "delta_k": [list(r) for r in self.delta_k],
        }


def _parse_vectors(text: str, rank: int) -> list[tuple[int, ...]]:
    vecs = []
    for chunk in text.split(";"):
        chunk = chunk.strip()
        if not chunk:
            continue
        try:
            v = json.loads(chunk)
        except json.JSONDecodeError:
            raise SpecError(f"cannot parse root {chunk!r}") from None
        if not isinstance(v, list) or not all(isinstance(c, int) for c in v):
            raise SpecError(f"root {chunk!r} must be a list of integers")
        if len(v) != rank:
            raise SpecError(f"root {chunk!r} needs {rank} coordinates")
        vecs.append(tuple(v))
    return vecs


def k_generators(R: RootSystem, k: str) -> list[tuple[int, ...]]:
    k = k.strip()
    if k == "torus":
        return []
    if k == "long":
        return list(R.long_roots())
    if k == "short":
        return list(R.short_roots())
    if k.startswith("parabolic:"):
        body = k.split(":", 1)[1]
        try:
            idx = [int(x) for x in body.split(",") if x.strip()]
        except ValueError:
            raise SpecError(f"bad simple-root list in {k!r}") from None
        for i in idx:
            if not 1 <= i <= R.rank:
                raise SpecError(f"simple root index {i} out of range 1..{R.rank}")
        return [R.simples[i - 1] for i in idx]
    if k.startswith("explicit:"):
        gens = _parse_vectors(k.split(":", 1)[1], R.rank)
        for g in gens:
            if not R.is_root(g):
                raise SpecError(f"{list(g)} is not a root of {R.datum}")
        return gens
    raise SpecError(f"unknown K specification {k!r}")


def resolve_space(type_: str, k: str) -> Space:
    try:
        datum = CartanDatum.parse(type_)
    except ValueError as exc:
        raise SpecError(str(exc)) from None
    R = build_root_system(datum)
    gens = k_generators(R, k)
    with warnings.catch_warnings(record=True) as caught:
        warnings.simplefilter("always")
        if k.strip().startswith("parabolic:"):
            # generated by definition; enlarging is expected
            delta_k = R.close_subsystem(gens)
        else:
            delta_k = R.resolve_subsystem(gens)
    notes = [str(w.message) for w in caught]
    if len(delta_k) == len(R.roots):
        raise SpecError(f"K = G for --k {k} on {datum}: the space is a point", notes)
    try:
        g = build_graph(R, delta_k)
    except ValueError as exc:
        raise SpecError(str(exc)) from None
    return Space(str(datum), k, R, delta_k, g, notes)


# -- serialization -------------------------------------------------------------


def _q(x) -> str:
    return str(Fraction(x))


def _word(g: GKMGraph, v: int) -> str:
    w = g.word(v)
    return " ".join(f"s{i}" for i in w) if w else "e"


def graph_summary(g: GKMGraph) -> dict:
    return {
        "vertices": len(g),
        "edges": g.num_edges,
        "degree": g.degree,
        "simple": is_simple(g),
        "euler_characteristic": euler_characteristic(g),
        "vertex_words": [_word(g, v) for v in g.vertices],
        "edge_list": [
            {"source": e.source, "target": r.source, "label": list(e.direction)}
            for e, r in g.edges()
        ],
    }


def to_dot(space: Space) -> str:
    g = space.graph
    lines = [f'graph "{space.type}/{space.k}" {{']
    for v in g.vertices:
        lines.append(f'  {v} [label="{_word(g, v)}"];')
    for e, r in g.edges():
        label = "(" + ",".join(str(c) for c in e.direction) + ")"
        lines.append(f'  {e.source} -- {r.source} [label="{label}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


# -- analysis --------------------------------------------------------------------


def analyze_sections(space: Space, seed: int, num_xi: int) -> list[dict]:
    g, R = space.graph, space.root_system
    chambers = chamber_representatives(R, g.weyl)
    xis = random_regular_covectors(R, num_xi, seed) + chambers
    out = []
    for s in enumerate_sections(g):
        a = AxialFunction(g, s)
        report = verify_axial(a)
        if not report.ok:
            raise InvariantViolation(f"axial axioms fail for section {s.delta0}: "
                                     f"{report.first_violation}")
        vectors = [betti(Orientation(a, x)) for x in xis]
        invariant = len(set(vectors)) == 1
        if not invariant:
            raise InvariantViolation(f"Betti numbers depend on xi for section {s.delta0}")
        xi_ok = integrable_chamber(a)
        oracle = closure_oracle(s, space.delta_k, R)
        if (xi_ok is not None) != oracle:
            raise InvariantViolation(f"integrability disagrees with the closure oracle for {s.delta0}")
        if xi_ok is not None:
            morse = {"xi": [_q(c) for c in xi_ok],
                     "values": list(find_morse(Orientation(a, xi_ok)).values)}
        else:
            xi0 = chambers[0]
            morse = {"xi": [_q(c) for c in xi0], "cycle": upward_cycle(Orientation(a, xi0))}
        out.append({
            "signs": list(s.signs),
            "orbit_representatives": [list(r) for r in s.orbit_reps],
            "delta0": [list(r) for r in s.delta0],
            "axial": report.as_dict(),
            "betti": list(vectors[0]),
            "betti_invariant": invariant,
            "xi_tested": len(xis),
            "integrable": xi_ok is not None,
            "closure_oracle": oracle,
            "morse": morse,
        })
    return out


def _random_poly(rng: random.Random, n: int, max_degree: int, terms: int) -> Polynomial:
    p = Polynomial.zero(n)
    for _ in range(terms):
        d = rng.randint(0, max_degree)
        exps = [0] * n
        for _ in range(d):
            exps[rng.randrange(n)] += 1
        p = p + Polynomial.monomial(exps, rng.choice([-3, -2, -1, 1, 2, 3]))
    return p


def cohomology_checks(space: Space, trials: int, max_degree: int, seed: int) -> dict:
    g, R = space.graph, space.root_system
    n = R.rank
    names = ["membership", "homomorphism", "middle_factor", "linearity", "equivariance", "wg_fixed"]
    fragment = {"trials": trials, "max_degree": max_degree, "seed": seed,
                "passed": 0, "failed": 0, "checks": {}}
    if trials <= 0:
        return fragment
    counts = {k: [0, 0] for k in names}
    rng = random.Random(seed)
    one = Polynomial.one(n)
    for _ in range(trials):
        f1 = symmetrize(_random_poly(rng, n, max_degree, 2), g.weyl_k)
        f1b = symmetrize(_random_poly(rng, n, max_degree, 2), g.weyl_k)
        f2 = _random_poly(rng, n, max_degree, 3)
        f2b = _random_poly(rng, n, max_degree, 3)
        h = _random_poly(rng, n, max_degree, 2)
        f_inv = symmetrize(_random_poly(rng, n, max_degree, 2), g.weyl)
        w = rng.choice(g.weyl.elements)

        img = borel_map(f1, f2, g)
        results = {
            "membership": gkm_membership(img, g),
            "homomorphism": img * borel_map(f1b, f2b, g) == borel_map(f1 * f1b, f2 * f2b, g),
            "middle_factor": borel_map(f1 * f_inv, f2, g) == borel_map(f1, f_inv * f2, g),
            "linearity": borel_map(f1, f2 * h, g) == img * constant_class(h, g),
            "equivariance": weyl_act_class(w, img, g) == borel_map(f1, weyl_act_poly(w, f2), g),
            "wg_fixed": weyl_act_class(w, borel_map(f1, one, g), g) == borel_map(f1, one, g),
        }
        for k, ok in results.items():
            counts[k][0 if ok else 1] += 1
        if all(results.values()):
            fragment["passed"] += 1
        else:
            fragment["failed"] += 1
    fragment["checks"] = {k: {"passed": p, "failed": f} for k, (p, f) in counts.items()}
    return fragment


def analyze(space: Space, seed: int, num_xi: int, trials: int = 0, max_degree: int = 3) -> dict:
    return {
        "space": {**space.echo(), "seed": seed, "num_xi": num_xi},
        "graph": graph_summary(space.graph),
        "acs": check_acs_condition(space.graph),
        "sections": analyze_sections(space, seed, num_xi),
        "cohomology": cohomology_checks(space, trials, max_degree, seed) if trials > 0 else None,
        "warnings": list(space.warnings),
    }


# -- entry point -----------------------------------------------------------------


def _dump(payload: dict) -> str:
    return json.dumps(payload, indent=2) + "\n"


def _emit(text: str, out: str | None) -> None:
    if out:
        with open(out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--type", required=True, help="Cartan type, e.g. A2, B3, G2")
    common.add_argument("--k", default="torus",
                        help='torus | long | short | parabolic:i,j | explicit:"[1,0];[0,1]"')
    common.add_argument("--out", default=None, help="write output to this file instead of stdout")

    parser = argparse.ArgumentParser(prog="gkm", description="GKM graphs of homogeneous spaces G/K")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graph", parents=[common], help="export the GKM graph")
    p.add_argument("--format", choices=["dot", "json"], default="json")

    p = sub.add_parser("analyze", parents=[common], help="sections, Betti numbers, integrability")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--num-xi", type=int, default=20)
    p.add_argument("--trials", type=int, default=0, help="also run Borel-map checks")
    p.add_argument("--max-degree", type=int, default=3)

    p = sub.add_parser("cohomology", parents=[common], help="random checks of the Borel map")
    p.add_argument("--trials", type=int, default=100)
    p.add_argument("--max-degree", type=int, default=3)
    p.add_argument("--seed", type=int, default=0)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        space = resolve_space(args.type, args.k)
    except (SpecError, ValueError) as exc:
        for note in getattr(exc, "notes", ()):
            print(f"warning: {note}", file=sys.stderr)
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    for note in space.warnings:
        print(f"warning: {note}", file=sys.stderr)

    try:
        if args.command == "graph":
            if args.format == "dot":
                text = to_dot(space)
            else:
                text = _dump({"space": space.echo(), "graph": graph_summary(space.graph),
                              "warnings": space.warnings})
        elif args.command == "analyze":
            text = _dump(analyze(space, args.seed, args.num_xi, args.trials, args.max_degree))
        else:
            frag = cohomology_checks(space, args.trials, args.max_degree, args.seed)
            text = _dump({"space": space.echo(), "cohomology": frag, "warnings": space.warnings})
            if frag["failed"]:
                _emit(text, args.out)
                print(f"error: {frag['failed']} of {frag['trials']} Borel-map trials failed",
                      file=sys.stderr)
                return EXIT_INVARIANT
    except InvariantViolation as exc:
        print(f"invariant violated: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    _emit(text, args.out)
    return EXIT_OK


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
