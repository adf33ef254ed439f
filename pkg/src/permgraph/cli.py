"""Command-line front end.

Graph files are plain text, whitespace separated, 1-based::

    P                  kind: P (permutation) or C (circular)
    11                 n
    5 3 10 9 1 ...     Π, i.e. the row of each vertex
    NBNN...            chord types, kind C only

Exit codes: 0 ok, 1 domain error (bad input, bad vertex), 2 usage error.
"""

import argparse
import random
import sys
import time
from dataclasses import dataclass

from .bpgraph import BipartitePermGraph, canonical_relabel
from .core import INF, InvalidPermutation, check_permutation, inversions_count, random_permutation
from .cpgraph import CircularPermGraph, InvalidChordTypes, random_valid_types, validate
from .pgraph import SuccinctPermGraph
from . import algos


class DomainError(Exception):
    pass


class UsageError(Exception):
    pass


@dataclass
class GraphFile:
    kind: str
    pi_inv: list
    types: str = None

    @property
    def n(self):
        return len(self.pi_inv)


def format_graph(gf):
    lines = [gf.kind, str(gf.n), " ".join(map(str, gf.pi_inv))]
    if gf.kind == "C":
        lines.append(gf.types)
    return "\n".join(lines) + "\n"


def parse_graph(text):
    lines = [(i, ln.strip()) for i, ln in enumerate(text.splitlines(), 1)]
    lines = [(i, ln) for i, ln in lines if ln and not ln.startswith("#")]
    if not lines:
        raise DomainError("line 1: empty graph file")
    it = iter(lines)
    lno, kind = next(it)
    if kind not in ("P", "C"):
        raise DomainError(f"line {lno}: kind must be P or C, got {kind!r}")
    try:
        lno, tok = next(it)
        n = int(tok)
        lno, row = next(it)
        pi = [int(t) for t in row.split()]
    except StopIteration:
        raise DomainError(f"line {lno}: file ends early") from None
    except ValueError as e:
        raise DomainError(f"line {lno}: {e}") from None
    if len(pi) != n:
        raise DomainError(f"line {lno}: expected {n} values, got {len(pi)}")
    try:
        check_permutation(pi)
    except InvalidPermutation as e:
        raise DomainError(f"line {lno}: {e}") from None
    types = None
    if kind == "C":
        try:
            lno, types = next(it)
        except StopIteration:
            raise DomainError(f"line {lno}: missing chord type line") from None
        types = types.replace(" ", "").upper()
        if len(types) != n or set(types) - set("NFB"):
            raise DomainError(f"line {lno}: type line must be {n} letters from N, F, B")
        bad = validate(pi, types)
        if bad is not None:
            raise DomainError(f"line {lno}: chords {bad.u} and {bad.v} violate rule {bad.rule}")
    rest = next(it, None)
    if rest is not None:
        raise DomainError(f"line {rest[0]}: unexpected trailing content")
    return GraphFile(kind, pi, types)


# --- structures ------------------------------------------------------------------

_LOADERS = {b"SPGR1": SuccinctPermGraph, b"SBPG1": BipartitePermGraph, b"SCPG1": CircularPermGraph}


def build_structure(gf, backend="array", bipartite=False, oracles=False):
    try:
        if gf.kind == "C":
            return CircularPermGraph(gf.pi_inv, gf.types)
        if bipartite:
            return BipartitePermGraph(gf.pi_inv, with_oracles=oracles)
        return SuccinctPermGraph(gf.pi_inv, backend=backend)
    except (ValueError, InvalidChordTypes) as e:
        raise DomainError(str(e)) from None


def load_structure(path):
    with open(path, "rb") as fh:
        data = fh.read()
    cls = _LOADERS.get(data[:5])
    if cls is not None:
        return cls.from_bytes(data)[0]
    try:
        text = data.decode()
    except UnicodeDecodeError:
        raise DomainError(f"{path}: neither a structure nor a graph file") from None
    return build_structure(parse_graph(text))


def _stats(g):
    out = [f"n {g.n}"]
    if isinstance(g, SuccinctPermGraph):
        out.append(f"A {g.Ax.ones}")
        out.append(f"B {g.Bx.ones}")
    elif isinstance(g, BipartitePermGraph):
        out.append(f"A {g.Ax.ones}")
        out.append(f"B {g.m - g.Ax.ones}")
        out.append(f"isolated {g.w}")
    else:
        out.append(f"points {g.point_count()}")
    for k, v in g.space_report().items():
        out.append(f"bits.{k} {v}")
    lg = max(1, (g.n - 1).bit_length())
    out.append(f"bits.baseline_nlgn {g.n * lg}")
    out.append(f"bits_per_vertex {g.report_bits() / g.n:.3f}")
    return out


# --- queries -------------------------------------------------------------------------

_ARITY = {"adjacent": 2, "degree": 1, "neighbors": 1, "dist": 2, "spath": 2, "first": 2}


def _fmt(d):
    return "inf" if d == INF else str(d)


def answer(g, query):
    parts = query.split()
    if not parts:
        raise UsageError("empty query")
    op, args = parts[0], parts[1:]
    if op not in _ARITY:
        raise UsageError(f"unknown query {op!r}")
    if len(args) != _ARITY[op]:
        raise UsageError(f"{op} takes {_ARITY[op]} vertex id(s)")
    try:
        ids = [int(a) for a in args]
    except ValueError:
        raise UsageError(f"vertex ids must be integers: {query!r}") from None
    for v in ids:
        if not 1 <= v <= g.n:
            raise DomainError(f"vertex {v} outside [1..{g.n}]")
    if op == "adjacent":
        return "true" if g.adjacent(*ids) else "false"
    if op == "degree":
        return str(g.degree(ids[0]))
    if op == "neighbors":
        return " ".join(map(str, sorted(g.neighbors(ids[0]))))
    if op == "dist":
        return _fmt(g.distance(*ids))
    u, v = ids
    if g.distance(u, v) == INF:
        return "inf"
    if op == "spath":
        return " ".join(map(str, g.spath(u, v)))
    return str(u) if u == v else str(g.spath_first(u, v))


# --- generation ----------------------------------------------------------------------


def gen_graph(kind, n, seed, bipartite=False):
    rng = random.Random(seed)
    if kind == "C":
        pi = random_permutation(n, rng)
        return GraphFile("C", pi, random_valid_types(pi, rng))
    if not bipartite:
        return GraphFile("P", random_permutation(n, rng))
    # merge two increasing sequences, then put isolated vertices on top
    k = rng.randint(0, n)
    xs = set(rng.sample(range(1, n + 1), k))
    ys = sorted(rng.sample(range(1, n + 1), k))
    rest = sorted(set(range(1, n + 1)) - set(ys))
    pi, i, j = [], 0, 0
    for x in range(1, n + 1):
        if x in xs:
            pi.append(ys[i])
            i += 1
        else:
            pi.append(rest[j])
            j += 1
    return GraphFile("P", canonical_relabel(pi)[0])


# --- benchmark -------------------------------------------------------------------------


def bench(g, workload, queries, seed):
    rng = random.Random(seed)
    n = g.n
    out = [f"workload {workload}", f"n {n}"]
    if workload == "apsp":
        if not isinstance(g, SuccinctPermGraph):
            raise DomainError("apsp bench needs a permutation graph structure")
        t = time.perf_counter()
        cells = sum(len(r) for r in algos.apsp(g))
        dt = time.perf_counter() - t
        out += [f"pairs {cells}", f"seconds {dt:.3f}", f"ns_per_pair {1e9 * dt / max(1, cells):.1f}"]
    else:
        pairs = [(rng.randint(1, n), rng.randint(1, n)) for _ in range(queries)]
        t = time.perf_counter()
        reported = 0
        if workload == "dist":
            for u, v in pairs:
                g.distance(u, v)
        elif workload == "adjacent":
            for u, v in pairs:
                g.adjacent(u, v)
        elif workload == "nextneighbor":
            for u, _ in pairs:
                reported += sum(1 for _ in g.neighbors(u))
        else:
            raise UsageError(f"unknown workload {workload!r}")
        dt = time.perf_counter() - t
        out += [f"queries {queries}", f"seconds {dt:.4f}",
                f"us_per_query {1e6 * dt / max(1, queries):.2f}"]
        if workload == "nextneighbor":
            out.append(f"us_per_neighbor {1e6 * dt / max(1, reported):.3f}")
    bits = g.report_bits()
    out.append(f"bits_per_vertex {bits / n:.3f}")
    if isinstance(g, (SuccinctPermGraph, BipartitePermGraph)):
        m = inversions_count([g.pi_inv(v) for v in range(1, n + 1)])
        lg = max(1, (n - 1).bit_length())
        # adjacency lists: one offset per vertex plus both directions of every edge
        out.append(f"edges {m}")
        out.append(f"adjlist_bits_per_vertex {(n + 1 + 2 * m) * lg / n:.3f}")
    return out


# --- entry point -------------------------------------------------------------------------


def _parser():
    p = argparse.ArgumentParser(prog="permgraph", description="Succinct permutation graph toolkit")
    sub = p.add_subparsers(dest="cmd", required=True)
    b = sub.add_parser("build", help="build a structure from a graph file")
    b.add_argument("input")
    b.add_argument("-o", "--output", required=True)
    b.add_argument("--backend", choices=("array", "grid"), default="array")
    b.add_argument("--bipartite", action="store_true", help="build the 2n-bit bipartite structure")
    b.add_argument("--oracles", action="store_true", help="bipartite: add O(1) distance oracles")
    q = sub.add_parser("query", help="answer queries on a structure or graph file")
    q.add_argument("structure")
    q.add_argument("query", nargs="*", help="e.g. dist 5 9; omit to read one query per stdin line")
    q.add_argument("--queries", dest="qfile", help="file with one query per line")
    g = sub.add_parser("gen", help="generate a random graph file")
    g.add_argument("kind", choices=("P", "C"))
    g.add_argument("n", type=int)
    g.add_argument("--seed", type=int, default=0)
    g.add_argument("--bipartite", action="store_true")
    g.add_argument("-o", "--output")
    s = sub.add_parser("stats", help="print the space report of a structure")
    s.add_argument("structure")
    bn = sub.add_parser("bench", help="time a query workload")
    bn.add_argument("structure")
    bn.add_argument("--workload", choices=("dist", "adjacent", "nextneighbor", "apsp"), default="dist")
    bn.add_argument("--queries", type=int, default=10000)
    bn.add_argument("--seed", type=int, default=0)
    return p


def run(argv, out=None):
    out = out or sys.stdout
    args = _parser().parse_args(argv)
    if args.cmd == "build":
        with open(args.input) as fh:
            gf = parse_graph(fh.read())
        g = build_structure(gf, args.backend, args.bipartite, args.oracles)
        with open(args.output, "wb") as fh:
            fh.write(g.to_bytes())
        lines = _stats(g)
    elif args.cmd == "query":
        g = load_structure(args.structure)
        if args.query:
            qs = [" ".join(args.query)]
        elif args.qfile:
            with open(args.qfile) as fh:
                qs = [ln for ln in fh.read().splitlines() if ln.strip()]
        else:
            qs = [ln for ln in sys.stdin.read().splitlines() if ln.strip()]
        lines = [answer(g, q) for q in qs]
    elif args.cmd == "gen":
        if args.n < 1:
            raise UsageError("n must be at least 1")
        text = format_graph(gen_graph(args.kind, args.n, args.seed, args.bipartite))
        if args.output:
            with open(args.output, "w") as fh:
                fh.write(text)
            return 0
        out.write(text)
        return 0
    elif args.cmd == "stats":
        lines = _stats(load_structure(args.structure))
    else:
        g = load_structure(args.structure)
        lines = bench(g, args.workload, args.queries, args.seed)
    for ln in lines:
        out.write(ln + "\n")
    return 0


def main(argv=None):
    try:
        return run(sys.argv[1:] if argv is None else argv)
    except SystemExit as e:
        return e.code if isinstance(e.code, int) else 2
    except UsageError as e:
        print(f"usage error: {e}", file=sys.stderr)
        return 2
    except (DomainError, OSError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
