"""Batch command line front end.

Every subcommand loads its inputs, runs one pipeline, and prints a
deterministic RunReport: a digest of the inputs, one line per named
assertion with the achieved value and the claimed bound as exact "num/den"
strings, and an overall verdict.  Exit status 0 means every assertion
passed, 1 means some mathematical check failed (with the certificate in
the report), 2 means the input itself was rejected.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import embeddings as emb
from . import homology, homotopy, lamplighter, posets
from .complexes import Chain, build_complex, format_fraction, nerve_of_poset
from .errors import CheckError, InputError, NotABoundary
from .filling import INFINITE, min_l1_fill, uniform_constant
from .posets import BUILTIN_SYSTEMS, FinitePoset


class Assertion:
    __slots__ = ("name", "status", "achieved", "bound")

    def __init__(self, name, passed, achieved="-", bound="-"):
        self.name = name
        self.status = "pass" if passed else "fail"
        self.achieved = achieved
        self.bound = bound


class RunReport:
    def __init__(self, command, digest, decimal=None):
        self.command = command
        self.digest = digest
        self.decimal = decimal
        self.lines = []
        self.assertions = []

    def info(self, text):
        self.lines.append(str(text))

    def check(self, name, passed, achieved="-", bound="-"):
        self.assertions.append(
            Assertion(name, passed, self.render(achieved), self.render(bound))
        )
        return passed

    def render(self, value):
        if isinstance(value, Fraction):
            text = format_fraction(value)
            if self.decimal is not None:
                text += f" (~{float(value):.{self.decimal}f}, approx)"
            return text
        if value is INFINITE:
            return "Infinite"
        return str(value)

    @property
    def ok(self):
        return all(a.status == "pass" for a in self.assertions)

    def to_text(self):
        out = [f"command: {self.command}", f"inputs: sha256:{self.digest}"]
        out.extend(self.lines)
        for a in self.assertions:
            out.append(
                f"assert {a.name}: {a.status}  achieved={a.achieved}  bound={a.bound}"
            )
        out.append(f"overall: {'pass' if self.ok else 'fail'}")
        return "\n".join(out)


def _digest(args, file_fields=()):
    h = hashlib.sha256()
    payload = {k: v for k, v in sorted(vars(args).items()) if k != "handler"}
    h.update(json.dumps(payload, sort_keys=True, default=str).encode())
    for field in file_fields:
        path = getattr(args, field, None)
        if path:
            try:
                with open(path, "rb") as fh:
                    h.update(fh.read())
            except OSError as exc:
                raise InputError(f"cannot read {path}: {exc}") from exc
    return h.hexdigest()[:16]


def _load_json(path):
    try:
        with open(path) as fh:
            return json.load(fh)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def _load_complex(path):
    return build_complex(_load_json(path))


def _load_poset(path):
    return FinitePoset.from_dict(_load_json(path))


def _load_chain(data, X=None):
    """Chain from JSON; coefficients index simplices or name them by label."""
    try:
        level = int(data["level"])
        entries = list(data["coeffs"])
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed chain data: {exc}") from exc
    coeffs = {}
    for pair in entries:
        if len(pair) != 2:
            raise InputError(f"chain entry {pair!r} is not a pair")
        key, value = pair
        if isinstance(key, list):
            if X is None:
                raise InputError("label-based chain entries need a complex")
            try:
                key = X.index_of(level, tuple(key))
            except KeyError:
                raise InputError(f"no simplex labelled {key!r} at level {level}") from None
        coeffs[int(key)] = Fraction(str(value))
    return Chain(level, coeffs)


# ---------------------------------------------------------------- homology


def _cmd_homology(args):
    report = RunReport("homology", _digest(args, ["complex"]), args.decimal)
    X = _load_complex(args.complex)
    levels = [args.level] if args.level is not None else list(range(X.max_dim))
    for p in levels:
        res = homology.reduced_homology(X, p)
        report.info(
            f"H~_{p}: betti={res.betti} torsion={list(res.torsion) or '[]'}"
        )
        report.check(f"computed-H{p}", True, res.betti, "-")
    return report


def _cmd_cohomology(args):
    report = RunReport("cohomology", _digest(args, ["complex"]), args.decimal)
    X = _load_complex(args.complex)
    levels = [args.level] if args.level is not None else list(range(X.max_dim))
    for p in levels:
        cb = homology.cohomology_betti(X, p)
        hb = homology.reduced_homology(X, p).betti
        report.info(f"H~^{p}: betti={cb}")
        report.check(f"matches-homology-{p}", cb == hb, cb, hb)
    return report


def _cmd_fill(args):
    report = RunReport("fill", _digest(args, ["complex", "cycle"]), args.decimal)
    X = _load_complex(args.complex)
    z = _load_chain(_load_json(args.cycle), X)
    try:
        cert = min_l1_fill(X, z)
    except NotABoundary as exc:
        report.info("separating functional (one value per level-p simplex):")
        report.info("  " + " ".join(format_fraction(v) for v in exc.functional))
        report.info(f"pairing with the cycle: {format_fraction(exc.pairing)}")
        report.check("fillable", False, "no filling", "boundary required")
        return report
    report.info(f"filling supported on {len(cert.filling.support())} simplices")
    for j, a in cert.filling.items():
        report.info(f"  simplex {j} at level {z.level + 1}: {format_fraction(a)}")
    report.check("fills-cycle", True, Fraction(0), Fraction(0))
    report.check("norm", True, cert.norm, "-")
    report.check("ratio", True, cert.ratio, "-")
    report.check("dual-certificate", cert.optimal, "verified", "exact")
    return report


def _cmd_constant(args):
    report = RunReport("constant", _digest(args, ["complex"]), args.decimal)
    X = _load_complex(args.complex)
    res = uniform_constant(X, args.level, dim_cap=args.dim_cap)
    report.info(f"method: {res.method}")
    for z, cert in res.witnesses:
        extreme = "non-bounding cycle" if cert is None else f"ratio {report.render(cert.ratio)}"
        report.info(f"witness cycle on {sorted(z.support())}: {extreme}")
    report.check("constant", True, res.constant, "-")
    if res.constant is not INFINITE:
        report.check("finite", True, res.constant, "Infinite")
    return report


# ------------------------------------------------------------------ posets


def _cmd_wcheck(args):
    report = RunReport("wcheck", _digest(args, ["poset"]), args.decimal)
    P = _load_poset(args.poset)
    res = posets.check_w(P, args.max_q)
    scope = "exhaustive" if res.exhaustive else f"subposets of size <= {res.max_q}"
    report.info(f"checked {scope} of a poset with {len(P)} elements")
    if res.holds:
        for Q, table in sorted(res.tables.items(), key=lambda kv: (len(kv[0]), str(kv[0]))):
            mins = ",".join(str(m) for m in table.minimals)
            cells = "  ".join(
                f"y_{{{','.join(str(i) for i in sorted(I))}}}={table.witness[I]}"
                for I in sorted(table.witness, key=lambda s: (len(s), sorted(s)))
            )
            report.info(f"Q={list(Q)} minimals=[{mins}]: {cells}")
    else:
        Q, I = res.failure
        report.info(f"fails at Q={list(Q)}, I={sorted(I)}")
    report.check("w-property", res.holds, "holds" if res.holds else "fails", "holds")
    return report


def _make_system(args):
    key = args.system
    if key not in BUILTIN_SYSTEMS:
        raise InputError(f"unknown system {key!r}; choose from {sorted(BUILTIN_SYSTEMS)}")
    if key == "integer-blocks":
        return BUILTIN_SYSTEMS[key](args.block)
    return BUILTIN_SYSTEMS[key]()


def _cmd_interweave(args):
    report = RunReport("interweave", _digest(args), args.decimal)
    sys_ = _make_system(args)
    seqs = [sys_.sequence(spec) for spec in args.seq]
    res = posets.interweave(sys_, seqs, depth=args.depth, horizon=args.horizon)
    report.info(f"y = {list(res.y)}")
    report.info(f"sources (sequence, index) = {list(res.sources)}")
    for I in sorted(res.y_I, key=lambda s: (len(s), sorted(s))):
        report.info(f"y^{{{','.join(str(i) for i in sorted(I))}}} = {list(res.y_I[I])}")
    report.check("increasing", True, "verified", "exact")
    report.check("pairwise-inequivalent", True, "verified", "exact")
    ok = True
    for i in range(1, len(seqs) + 1):
        block = res.y_I[frozenset([i])]
        ok = ok and posets.is_subsequence(block, seqs[i - 1], sys_, args.horizon)
    report.check("blocks-are-subsequences", ok, "verified" if ok else "violated", "exact")
    return report


# ---------------------------------------------------------------- homotopy


def _parse_vertex_map(spec, P):
    if spec == "identity":
        return lambda e: e
    if spec.startswith("const:"):
        target = _coerce_label(spec[6:], P)
        return lambda e: target
    pairs = {}
    for item in spec.split(","):
        src, _, dst = item.partition("=")
        if not dst:
            raise InputError(f"bad map entry {item!r}; use a=b,c=d, identity, or const:x")
        pairs[_coerce_label(src, P)] = _coerce_label(dst, P)
    missing = [e for e in P.elements if e not in pairs]
    if missing:
        raise InputError(f"map does not cover {missing!r}")
    return pairs.__getitem__


def _coerce_label(text, P):
    if text in P:
        return text
    try:
        num = int(text)
    except ValueError:
        num = None
    if num is not None and num in P:
        return num
    raise InputError(f"{text!r} is not an element of the poset")


def _cmd_order_homotopy(args):
    report = RunReport("order-homotopy", _digest(args, ["poset"]), args.decimal)
    P = _load_poset(args.poset)
    fmap = _parse_vertex_map(args.f, P)
    gmap = _parse_vertex_map(args.g, P)
    N = nerve_of_poset(P, args.depth)
    try:
        f = homotopy._induced_nerve_map(N, N, fmap)
        g = homotopy._induced_nerve_map(N, N, gmap)
    except KeyError:
        raise InputError("vertex map is not order-preserving") from None
    h = homotopy.order_homotopy(N, P, f, g)
    report.check("homotopy-identity", True, "exact", "exact")
    for p in range(h.levels()):
        report.check(f"norm-bound-{p}", h.norm(p) <= 2 * (p + 1), h.norm(p), Fraction(2 * (p + 1)))
    return report


def _cmd_w_pipeline(args):
    report = RunReport("w-pipeline", _digest(args, ["poset", "cycle"]), args.decimal)
    P = _load_poset(args.poset)
    Q = [_coerce_label(s, P) for s in args.subposet.split(",") if s]
    data = _load_json(args.cycle)
    level = int(data.get("level", 0))
    NQ = nerve_of_poset(P.restrict(Q), level + 1)
    z = _load_chain(data, NQ)
    res = homotopy.w_pipeline(P, Q, z, max_q=args.max_q)
    for j, a in res.filling.items():
        report.info(
            f"filling simplex {res.nerve.label(level + 1, j)}: {format_fraction(a)}"
        )
    report.check("fills-cycle", True, Fraction(0), Fraction(0))
    report.check("ratio-bound", res.ratio <= res.bound, res.ratio, res.bound)
    lp = min_l1_fill(res.nerve, res.cycle_in_ambient)
    report.check("lp-never-beaten", lp.norm <= res.norm, lp.norm, res.norm)
    return report


# -------------------------------------------------------------- embeddings


def _parse_index_spec(spec, window):
    if spec == "naturals":
        return emb.CofiniteEmbedding.identity()
    if spec == "evens":
        return emb.StreamEmbedding([2 * n for n in range(1, window + 1)])
    if spec == "odds":
        return emb.StreamEmbedding([2 * n - 1 for n in range(1, window + 1)])
    if spec.startswith("multiples:"):
        k = int(spec.split(":")[1])
        return emb.StreamEmbedding([k * n for n in range(1, window + 1)])
    if spec.startswith("missing:"):
        vals = [int(s) for s in spec[8:].split(",") if s]
        return emb.CofiniteEmbedding(vals)
    if spec.startswith("list:"):
        return emb.StreamEmbedding([int(s) for s in spec[5:].split(",") if s])
    raise InputError(f"unknown sequence spec {spec!r}")


def _cmd_orbit_check(args):
    report = RunReport("orbit-check", _digest(args), args.decimal)
    specs = args.seqs
    window = args.window
    seqs = [
        emb.IndexedSequence(lambda n: n, _parse_index_spec(spec, window), spec)
        for spec in specs
    ]
    chain = emb.SubsequenceChain(seqs, window)
    tup = emb.orbit_index(chain)
    for i, eta in enumerate(tup, 1):
        report.info(f"eta_{i} = {eta!r}")
    if chain.p >= 1:
        res = emb.verify_face_commutation(chain)
        for i, ok, exact in res.details:
            kind = "exact" if exact else f"window {window}"
            report.check(f"face-{i}", ok, "commutes" if ok else "violated", kind)
    else:
        report.info("0-chain: face commutation is vacuous")
        report.check("faces-vacuous", True, "-", "-")
    return report


def _random_cofinite(rng, max_missing=4, universe=12):
    k = rng.randint(0, max_missing)
    return emb.CofiniteEmbedding(rng.sample(range(1, universe + 1), k))


def _cmd_monoid_check(args):
    report = RunReport("monoid-check", _digest(args), args.decimal)
    rng = random.Random(args.seed)
    tuples = [
        tuple(_random_cofinite(rng) for _ in range(rng.randint(1, args.max_p)))
        for _ in range(args.count)
    ]
    if args.jobs > 1:
        chunks = [tuples[i :: args.jobs] for i in range(args.jobs)]
        with ThreadPoolExecutor(args.jobs) as ex:
            parts = list(ex.map(emb.monoid_simplicial_identities, chunks))
        ok = all(p.ok for p in parts)
        checked = sum(p.identities_checked for p in parts)
    else:
        res = emb.monoid_simplicial_identities(tuples)
        ok, checked = res.ok, res.identities_checked
    report.info(f"{len(tuples)} random tuples, p <= {args.max_p}")
    report.check("simplicial-identities", ok, f"{checked} identities", "all equal")
    return report


# ------------------------------------------------------------- lamplighter


def _random_perm(rng, m):
    p = list(range(m))
    rng.shuffle(p)
    return tuple(p)


def _cmd_binate_check(args):
    report = RunReport("binate-check", _digest(args), args.decimal)
    rng = random.Random(args.seed)
    failures = 0
    for _ in range(args.count):
        m = rng.randint(2, args.base_size)
        gens = [_random_perm(rng, m) for _ in range(rng.randint(1, args.num_gens))]
        w = lamplighter.make_binate_witness(m, gens)
        res = lamplighter.verify_binate(w, args.word_cap)
        if not res.ok:
            failures += 1
            report.info(f"failure: {res.first_failure!r}")
    report.info(f"{args.count} random instances, word cap {args.word_cap}")
    report.check("binate-identities", failures == 0, f"{failures} failures", "0 failures")
    control = lamplighter.make_binate_witness(2, [(1, 0)], psi_start=2)
    res = lamplighter.verify_binate(control, args.word_cap)
    report.check(
        "negative-control-detected",
        not res.ok,
        "detected" if not res.ok else "missed",
        "misplaced psi must fail",
    )
    return report


def _cmd_conjugates_check(args):
    report = RunReport("conjugates-check", _digest(args), args.decimal)
    rng = random.Random(args.seed)
    m = args.base_size
    gens = []
    for _ in range(args.num_gens):
        level = rng.randrange(args.levels)
        gens.append(lamplighter.LampElement.level_lamp(m, _random_perm(rng, m), level))
    t = lamplighter.LampElement.shift_element(m, 1)
    res = lamplighter.verify_commuting_conjugates(gens, t, args.range)
    report.info(f"{args.num_gens} generators on levels 0..{args.levels - 1}, shift t")
    report.check(
        "commutators-vanish",
        res.ok,
        "all trivial" if res.ok else f"failure at {res.first_failure}",
        f"p = 1..{args.range}",
    )
    report.check(
        "conclusive",
        res.conclusive,
        str(res.conclusive_at),
        f"<= {args.range}",
    )
    return report


# ------------------------------------------------------------------ driver


def _parser():
    top = argparse.ArgumentParser(
        prog="l1fill",
        description="exact filling norms, order homotopies, and acyclicity witnesses",
    )
    sub = top.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--decimal", type=int, default=None, metavar="K",
                       help="add a K-digit decimal rendering (approximate)")
        p.add_argument("--jobs", type=int, default=1)

    p = sub.add_parser("homology", help="reduced homology via integer normal form")
    p.add_argument("--complex", required=True)
    p.add_argument("--level", type=int, default=None)
    common(p)
    p.set_defaults(handler=_cmd_homology)

    p = sub.add_parser("cohomology", help="rational cohomology, cross-checked")
    p.add_argument("--complex", required=True)
    p.add_argument("--level", type=int, default=None)
    common(p)
    p.set_defaults(handler=_cmd_cohomology)

    p = sub.add_parser("fill", help="exact minimal l1 filling of a cycle")
    p.add_argument("--complex", required=True)
    p.add_argument("--cycle", required=True)
    common(p)
    p.set_defaults(handler=_cmd_fill)

    p = sub.add_parser("constant", help="exact uniform filling constant")
    p.add_argument("--complex", required=True)
    p.add_argument("--level", type=int, required=True)
    p.add_argument("--dim-cap", type=int, default=12)
    common(p)
    p.set_defaults(handler=_cmd_constant)

    p = sub.add_parser("wcheck", help="decide the W property on a finite poset")
    p.add_argument("--poset", required=True)
    p.add_argument("--max-q", type=int, default=5)
    common(p)
    p.set_defaults(handler=_cmd_wcheck)

    p = sub.add_parser("interweave", help="greedy interweaving of cofinal sequences")
    p.add_argument("--system", default="integer-line")
    p.add_argument("--block", type=int, default=10)
    p.add_argument("--seq", action="append", required=True,
                   help="repeatable: evens, odds, naturals, multiples:K, arith:A:D, list:...")
    p.add_argument("--depth", type=int, default=5)
    p.add_argument("--horizon", type=int, default=1000)
    common(p)
    p.set_defaults(handler=_cmd_interweave)

    p = sub.add_parser("order-homotopy", help="prism homotopy between comparable nerve maps")
    p.add_argument("--poset", required=True)
    p.add_argument("--f", required=True, help="identity, const:X, or a=b,c=d")
    p.add_argument("--g", required=True)
    p.add_argument("--depth", type=int, default=3)
    common(p)
    p.set_defaults(handler=_cmd_order_homotopy)

    p = sub.add_parser("w-pipeline", help="constructive W filling vs the LP optimum")
    p.add_argument("--poset", required=True)
    p.add_argument("--subposet", required=True, help="comma-separated elements")
    p.add_argument("--cycle", required=True)
    p.add_argument("--max-q", type=int, default=5)
    common(p)
    p.set_defaults(handler=_cmd_w_pipeline)

    p = sub.add_parser("orbit-check", help="orbit indexing and face commutation")
    p.add_argument("--seqs", nargs="+", required=True,
                   help="chain, smallest first: multiples:4 evens naturals")
    p.add_argument("--window", type=int, default=16)
    common(p)
    p.set_defaults(handler=_cmd_orbit_check)

    p = sub.add_parser("monoid-check", help="bar-construction simplicial identities")
    p.add_argument("--count", type=int, default=500)
    p.add_argument("--max-p", type=int, default=5)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(handler=_cmd_monoid_check)

    p = sub.add_parser("binate-check", help="binate identities in the lamplighter model")
    p.add_argument("--count", type=int, default=50)
    p.add_argument("--base-size", type=int, default=5)
    p.add_argument("--num-gens", type=int, default=3)
    p.add_argument("--word-cap", type=int, default=4)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(handler=_cmd_binate_check)

    p = sub.add_parser("conjugates-check", help="commuting Z-conjugates, conclusively")
    p.add_argument("--base-size", type=int, default=4)
    p.add_argument("--num-gens", type=int, default=3)
    p.add_argument("--levels", type=int, default=2)
    p.add_argument("--range", type=int, default=6)
    p.add_argument("--seed", type=int, default=0)
    common(p)
    p.set_defaults(handler=_cmd_conjugates_check)

    return top


def run(argv=None):
    """Parse and execute; returns (exit status, RunReport or None)."""
    args = _parser().parse_args(argv)
    try:
        report = args.handler(args)
    except InputError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2, None
    except CheckError as exc:
        print(f"check failed: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1, None
    return (0 if report.ok else 1), report


def main(argv=None):
    code, report = run(argv)
    if report is not None:
        print(report.to_text())
    return code


if __name__ == "__main__":
    sys.exit(main())
