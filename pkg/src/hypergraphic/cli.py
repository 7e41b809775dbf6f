"""Command-line front end emitting deterministic JSON.

Exit codes: 0 success, 1 input or usage error, 2 verification failure,
3 guard exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from typing import Any, Callable, Optional, Sequence

from . import families, hopf
from .flags import enumerate_set_compositions
from .hypergraph import GuardError, Hypergraph, new_hypergraph, split_rank
from .polytope import ORACLE_GUARD, HypergraphicPolytope
from .qsym import QPoly, QSymM, f_polynomial_from_enumerator

EXIT_OK, EXIT_INPUT, EXIT_VERIFY, EXIT_GUARD = 0, 1, 2, 3

COMMANDS = (
    "psi",
    "fpoly",
    "fpoly-oracle",
    "vertices",
    "faces",
    "coproduct",
    "antipode",
    "verify-theorem",
    "verify-hopf",
)
FAMILIES = ("complete", "uniform", "pitman-stanley", "graph", "complex")
DEFAULT_SEED = 20240101
EXHAUSTIVE_GUARD = 4


class InputError(ValueError):
    pass


def _hypergraph_from_doc(doc: Any, strict: bool = False) -> Hypergraph:
    if not isinstance(doc, dict) or "n" not in doc or "edges" not in doc:
        raise InputError('malformed document: expected {"n": int, "edges": [[int, ...], ...]}')
    n, edges = doc["n"], doc["edges"]
    if not isinstance(n, int) or isinstance(n, bool) or n < 0:
        raise InputError('malformed document: "n" must be a nonnegative integer')
    if not isinstance(edges, list) or not all(isinstance(e, list) for e in edges):
        raise InputError('malformed document: "edges" must be a list of lists')
    for e in edges:
        if not all(isinstance(v, int) and not isinstance(v, bool) for v in e):
            raise InputError("malformed document: vertices must be integers")
        if not e:
            raise InputError("empty edge")
        bad = [v for v in e if not 1 <= v <= n]
        if bad:
            raise InputError(f"vertex out of range: {bad[0]} not in 1..{n}")
    strict = strict or bool(doc.get("strict", False))
    try:
        return new_hypergraph(n, edges, add_singletons=not strict)
    except ValueError as exc:
        raise InputError(str(exc)) from exc


def parse_input(text: str, strict: bool = False) -> Hypergraph:
    """Parse {"n": int, "edges": [[...]]}; singletons are added unless strict."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed document: {exc.msg}") from exc
    return _hypergraph_from_doc(doc, strict)


def parse_inputs(text: str, strict: bool = False) -> list[Hypergraph]:
    """Like :func:`parse_input` but also accepts a JSON list of hypergraphs."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"malformed document: {exc.msg}") from exc
    docs = doc if isinstance(doc, list) else [doc]
    return [_hypergraph_from_doc(d, strict) for d in docs]


def hypergraph_doc(H: Hypergraph) -> dict:
    return {"n": H.n, "edges": [list(e) for e in H.edges]}


def _poly(p: QPoly, q: Optional[int]) -> list[int]:
    return [p(q)] if q is not None else p.to_list()


def qsym_doc(F: QSymM, q: Optional[int] = None) -> dict:
    return {
        "degree": F.degree,
        "terms": [{"composition": list(a), "poly": _poly(c, q)} for a, c in F.terms.items()],
    }


def _or(value: Optional[int], default: int) -> int:
    return default if value is None else value


def _pmap(func: Callable, items: Sequence, threads: int) -> list:
    if threads <= 1 or len(items) <= 1:
        return [func(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(func, items, chunksize=max(1, len(items) // (4 * threads))))


def _theorem_check(H: Hypergraph, guard: Optional[int]) -> tuple[int, list[dict]]:
    P = HypergraphicPolytope(H, _or(guard, ORACLE_GUARD))
    checked, bad = 0, []
    for F in enumerate_set_compositions(H.n):
        g, a = P.face(F).dim, split_rank(H, F)
        checked += 1
        if g != a:
            bad.append({"hypergraph": hypergraph_doc(H), "flag": [list(b) for b in F.blocks], "geometric_rank": g, "split_rank": a})
    return checked, bad


def _hopf_check(H: Hypergraph, guard: Optional[int]) -> tuple[int, list[dict]]:
    x = hopf.HopfElement.basis(H)
    unit_counit = hopf.HopfElement.unit().scale(hopf.counit(x))
    delta = hopf.coproduct(x)
    S = partial(hopf.antipode_basis, guard=_or(guard, hopf.ANTIPODE_GUARD))
    checks = {
        "coassociativity": hopf.coproduct_left(x) == hopf.coproduct_right(x),
        "antipode_left": hopf.multiply(hopf.tensor_map(delta, S, hopf.HopfElement.basis)) == unit_counit,
        "antipode_right": hopf.multiply(hopf.tensor_map(delta, hopf.HopfElement.basis, S)) == unit_counit,
    }
    bad = [{"hypergraph": hypergraph_doc(H), "identity": k} for k, ok in checks.items() if not ok]
    return len(checks), bad


def _sweep(check, hypergraphs: list[Hypergraph], args) -> tuple[dict, int]:
    results = _pmap(partial(check, guard=args.guard_n), hypergraphs, args.threads)
    checked = sum(c for c, _ in results)
    bad = [m for _, ms in results for m in ms]
    doc = {"checked": checked, "mismatches": len(bad)}
    if bad:
        doc["mismatch_list"] = bad
    return doc, (EXIT_VERIFY if bad else EXIT_OK)


def _verify_population(args, read_input) -> list[Hypergraph]:
    if args.exhaustive is not None:
        if not 1 <= args.exhaustive <= EXHAUSTIVE_GUARD:
            raise GuardError(f"--exhaustive needs 1 <= N <= {EXHAUSTIVE_GUARD}")
        return list(families.all_hypergraphs(args.exhaustive))
    if args.random is not None:
        rng = random.Random(args.seed)
        return [families.random_hypergraph(args.random_n, rng) for _ in range(args.random)]
    return read_input(many=True)


def run_command(command: str, args, read_input) -> tuple[dict, int]:
    """Execute one command; ``read_input(many)`` supplies the hypergraph(s)."""
    guard, q = args.guard_n, args.q
    psi_guard = _or(guard, hopf.PSI_GUARD)
    oracle_guard = _or(guard, ORACLE_GUARD)
    if command == "verify-theorem":
        return _sweep(_theorem_check, _verify_population(args, read_input), args)
    if command == "verify-hopf":
        return _sweep(_hopf_check, _verify_population(args, read_input), args)

    H = read_input(many=False)
    if command == "psi":
        return qsym_doc(hopf.psi_q(H, guard=psi_guard), q), EXIT_OK
    if command == "fpoly":
        return {"f": _poly(f_polynomial_from_enumerator(hopf.psi_q(H, guard=psi_guard)), q)}, EXIT_OK
    if command == "fpoly-oracle":
        return {"f": _poly(HypergraphicPolytope(H, oracle_guard).f_polynomial(), q)}, EXIT_OK
    if command == "vertices":
        return {"n": H.n, "vertices": [list(v) for v in HypergraphicPolytope(H, oracle_guard).vertices]}, EXIT_OK
    if command == "faces":
        P = HypergraphicPolytope(H, oracle_guard)
        faces = sorted(P.faces(), key=lambda r: (r.dim, sorted(r.vertex_ids)))
        return {
            "n": H.n,
            "vertices": [list(v) for v in P.vertices],
            "faces": [{"vertex_ids": sorted(r.vertex_ids), "dim": r.dim} for r in faces],
        }, EXIT_OK
    if command == "coproduct":
        t = hopf.coproduct(hopf.HopfElement.basis(H))
        terms = [{"left": hypergraph_doc(a), "right": hypergraph_doc(b), "coefficient": _poly(c, q)} for (a, b), c in t.terms.items()]
        return {"terms": terms}, EXIT_OK
    if command == "antipode":
        s = hopf.antipode(hopf.HopfElement.basis(H), guard=_or(guard, hopf.ANTIPODE_GUARD))
        terms = [{"hypergraph": hypergraph_doc(G), "coefficient": _poly(c, q)} for G, c in s.terms.items()]
        return {"terms": terms}, EXIT_OK
    raise InputError(f"unknown command {command!r}")


def materialize_family(name: str, params: Sequence[str], edges: Optional[str]) -> Hypergraph:
    """Build a named family from CLI parameters.

    pitman-stanley takes the polytope dimension d (hypergraph on d + 1 vertices).
    """
    try:
        ints = [int(p) for p in params]
    except ValueError as exc:
        raise InputError(f"family parameters must be integers: {params}") from exc

    def need(k: int) -> None:
        if len(ints) != k:
            raise InputError(f"family {name} takes {k} integer parameter(s)")

    def load(text: Optional[str], what: str) -> list:
        if text is None:
            raise InputError(f"family {name} needs --edges with a JSON list of {what}")
        try:
            val = json.loads(text)
        except json.JSONDecodeError as exc:
            raise InputError(f"malformed document: {exc.msg}") from exc
        if not isinstance(val, list) or not all(isinstance(e, list) for e in val):
            raise InputError(f"malformed document: --edges must be a list of {what}")
        return val

    try:
        if name == "complete":
            need(1)
            return families.complete(ints[0])
        if name == "uniform":
            need(2)
            return families.uniform(*ints)
        if name == "pitman-stanley":
            need(1)
            if ints[0] < 0:
                raise InputError("pitman-stanley dimension must be nonnegative")
            return families.pitman_stanley(ints[0] + 1)
        if name == "graph":
            need(1)
            return families.from_graph(ints[0], load(edges, "vertex pairs"))
        if name == "complex":
            need(1)
            return families.simplicial_complex(ints[0], load(edges, "facets"))
    except GuardError:
        raise
    except ValueError as exc:
        raise InputError(str(exc)) from exc
    raise InputError(f"unknown family {name!r}; choose from {', '.join(FAMILIES)}")


def _common_options(p: argparse.ArgumentParser) -> None:
    p.add_argument("--strict", action="store_true", help="do not add missing singletons")
    p.add_argument("--guard-n", type=int, default=None, help="maximum vertex count for exhaustive sweeps")
    p.add_argument("--threads", type=int, default=1, help="worker processes for verification sweeps")
    p.add_argument("--q", type=int, default=None, help="evaluate polynomials at this integer")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED, help="seed for --random populations")
    p.add_argument("-o", "--output", default=None, help="write JSON here instead of stdout")


def _verify_options(p: argparse.ArgumentParser) -> None:
    g = p.add_mutually_exclusive_group()
    g.add_argument("--exhaustive", type=int, metavar="N", help="check every labeled hypergraph on N vertices")
    g.add_argument("--random", type=int, metavar="COUNT", help="check COUNT seeded random hypergraphs")
    p.add_argument("--random-n", type=int, default=5, help="vertex count for --random (default 5)")


_HELP = {
    "psi": "quasisymmetric enumerator in the monomial basis",
    "fpoly": "f-polynomial from the enumerator",
    "fpoly-oracle": "f-polynomial by direct face enumeration",
    "vertices": "vertices of the Minkowski sum of simplices",
    "faces": "faces as vertex-index sets with dimensions",
    "coproduct": "coproduct of the basis element",
    "antipode": "antipode of the basis element",
    "verify-theorem": "compare face dimension and split rank over every flag",
    "verify-hopf": "check coassociativity and the antipode identities",
}


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hypergraphic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for name in COMMANDS:
        p = sub.add_parser(name, help=_HELP[name])
        p.add_argument("input", nargs="?", default="-", help="JSON file, or - for stdin")
        _common_options(p)
        if name.startswith("verify"):
            _verify_options(p)
    p = sub.add_parser("family", help="materialize a named family, optionally chaining into a command")
    p.add_argument("name", choices=FAMILIES)
    p.add_argument("params", nargs="*")
    p.add_argument("--edges", default=None, help="JSON list of pairs (graph) or facets (complex)")
    p.add_argument("--then", choices=COMMANDS, default=None, dest="then")
    _common_options(p)
    _verify_options(p)
    return parser


def _guard_defaults(args) -> None:
    if args.guard_n is not None and args.guard_n < 1:
        raise InputError("--guard-n must be positive")
    if args.threads < 1:
        raise InputError("--threads must be positive")


def main(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None) -> int:
    stdin = stdin or sys.stdin
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT

    try:
        _guard_defaults(args)
        if args.command == "family":
            H = materialize_family(args.name, args.params, args.edges)
            if args.then is None:
                doc, code = hypergraph_doc(H), EXIT_OK
            else:
                doc, code = run_command(args.then, args, lambda many: [H] if many else H)
        else:

            def read_input(many: bool):
                if args.input == "-":
                    text = stdin.read()
                else:
                    try:
                        with open(args.input) as fh:
                            text = fh.read()
                    except OSError as exc:
                        raise InputError(f"cannot read {args.input}: {exc.strerror}") from exc
                return parse_inputs(text, args.strict) if many else parse_input(text, args.strict)

            doc, code = run_command(args.command, args, read_input)
    except GuardError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_GUARD
    except ValueError as exc:
        print(f"error: {exc}", file=stderr)
        return EXIT_INPUT

    text = json.dumps(doc) + "\n"
    if args.output:
        with open(args.output, "w") as fh:
            fh.write(text)
    else:
        stdout.write(text)
    if code == EXIT_VERIFY:
        print(f"error: {doc['mismatches']} verification failure(s)", file=stderr)
    return code


if __name__ == "__main__":
    sys.exit(main())
