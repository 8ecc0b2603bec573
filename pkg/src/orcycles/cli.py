"""Command-line front end: ``orcycles <subcommand> [flags]``.

Exit status: 0 on success, 1 on a domain error or failed verification
(diagnostic on stderr), 2 on a usage error.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction

from . import additive, analysis, constructions, cycles, homomorphism, scanner
from .errors import IncompatibleSidewalks, OrCyclesError, ParseError
from .graph import degree_summary
from .io import format_edge_list, read_edge_list, to_dot, write_edge_list


class VerificationFailed(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(x) for x in text.replace(",", " ").split()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _load(path: str):
    try:
        return read_edge_list(path)
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def _emit_graph(g, out, lines):
    if out:
        write_edge_list(g, out)
        lines.append(f"wrote {out}")
    else:
        lines.append(format_edge_list(g).rstrip("\n"))


def _verify_extremal(g, ell: int, lines: list[str]) -> None:
    """Shared check for construct/verify: exact degree value and no C_ell."""
    ds = degree_summary(g)
    semi = constructions.extremal_value(ell, g.n)
    outv = constructions.extremal_value(ell, g.n, outdegree=True) if homomorphism.k_of(ell) % 2 else None
    matched = []
    if Fraction(ds.min_semidegree) == semi:
        matched.append("semidegree")
    if outv is not None and Fraction(ds.min_outdegree) == outv:
        matched.append("outdegree")
    lines.append(f"verify.min_semidegree={ds.min_semidegree} (extremal value {semi})")
    if outv is not None:
        lines.append(f"verify.min_outdegree={ds.min_outdegree} (extremal value {outv})")
    walk = cycles.contains_closed_walk_of_length(g, ell)
    lines.append(f"verify.closed_walk_{ell}={'present' if walk else 'absent'}")
    cyc = cycles.contains_cycle_of_length(g, ell)
    lines.append(f"verify.cycle_{ell}={'absent' if cyc is None else 'present: ' + str(cyc)}")
    ok = bool(matched) and cyc is None
    lines.append(f"verify.degree_match={','.join(matched) or 'none'}")
    lines.append(f"verify.result={'pass' if ok else 'fail'}")
    if not ok:
        raise VerificationFailed("\n".join(lines))


# -- handlers ------------------------------------------------------------------------

def cmd_construct(a, lines):
    built = constructions.build_semidegree_extremal(a.ell, a.n)
    lines.append(built.plan.audit().rstrip("\n"))
    _verify_extremal(built.graph, a.ell, lines)
    _emit_graph(built.graph, a.out, lines)


def cmd_construct_outdeg(a, lines):
    built = constructions.build_outdegree_extremal(a.ell, a.n)
    lines.append(built.plan.audit().rstrip("\n"))
    _verify_extremal(built.graph, a.ell, lines)
    _emit_graph(built.graph, a.out, lines)


def cmd_construct_c6(a, lines):
    g = constructions.construct_c6_bipartite_blob(a.n)
    ds = degree_summary(g)
    walk = cycles.contains_closed_walk_of_length(g, 6)
    lines.append(f"verify.min_semidegree={ds.min_semidegree} (expected {a.n // 4})")
    lines.append(f"verify.closed_walk_6={'present' if walk else 'absent'}")
    ok = ds.min_semidegree == a.n // 4 and not walk
    lines.append(f"verify.result={'pass' if ok else 'fail'}")
    if not ok:
        raise VerificationFailed("\n".join(lines))
    _emit_graph(g, a.out, lines)


def cmd_blowup(a, lines):
    _emit_graph(constructions.balanced_blowup_ck(a.k, a.b), a.out, lines)


def cmd_verify(a, lines):
    _verify_extremal(_load(a.input), a.ell, lines)


def cmd_cycle(a, lines):
    w = cycles.contains_cycle_of_length(_load(a.input), a.len, budget=a.budget, engine=a.engine)
    lines.append("none" if w is None else str(w))


def cmd_walk(a, lines):
    lines.append("true" if cycles.contains_closed_walk_of_length(_load(a.input), a.len) else "false")


def cmd_girth(a, lines):
    L = cycles.girth(_load(a.input))
    lines.append("none" if L is None else str(L))


def cmd_shortcut(a, lines):
    w = cycles.find_shortcut(_load(a.input), a.len, budget=a.budget)
    lines.append("none" if w is None else str(w))


def cmd_paths(a, lines):
    s = cycles.path_length_set(_load(a.input), a.x, a.y, a.len, a.avoid or (), budget=a.budget)
    lines.append(" ".join(map(str, sorted(s))) if s else "none")


def cmd_hom_ck(a, lines):
    lab = homomorphism.hom_to_ck(_load(a.input), a.k)
    lines.append("none" if lab is None else " ".join(map(str, lab.labels)))


def cmd_cycle_type(a, lines):
    c = homomorphism.OrientedCycleWord.parse(a.word)
    t = homomorphism.cycle_type(c)
    lines.append(f"type={t}")
    if t >= 1:
        lines.append(f"k={homomorphism.k_of(t)}")


def cmd_d_ell(a, lines):
    _emit_graph(homomorphism.build_d_ell(a.ell), a.out, lines)


def cmd_embed(a, lines):
    c = homomorphism.OrientedCycleWord.parse(a.word)
    phi = homomorphism.find_cycle_embedding(_load(a.input), c, injective=not a.hom, budget=a.budget)
    lines.append("none" if phi is None else " ".join(map(str, phi)))


def cmd_sumset(a, lines):
    x = additive.ResidueSet.of(a.k, a.left)
    y = additive.ResidueSet.of(a.k, a.right)
    lines.append(" ".join(map(str, additive.sumset(x, y).members)))


def cmd_stabilizer(a, lines):
    lines.append(" ".join(map(str, additive.stabilizer(additive.ResidueSet.of(a.k, a.set)).members)))


def cmd_reach(a, lines):
    sets = [additive.ResidueSet.of(a.k, s) for s in a.sets]
    lines.append(additive.reachable_residues(sets, a.ell).summary())


def cmd_subset_sum(a, lines):
    ms = additive.ResidueMultiset.of(a.k, a.multiset)
    lines.append(" ".join(map(str, additive.subset_sum_residue(ms, a.ell))))


def _partition(path):
    try:
        with open(path) as fh:
            return analysis.BlobPartition.parse(fh.read())
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc.strerror}") from None


def cmd_sidewalks(a, lines):
    g = _load(a.input)
    p = _partition(a.partition)
    p.check_cover(g.n)
    walks = analysis.enumerate_sidewalks(g, p)
    lines.extend(str(s) for s in walks)
    lines.append(f"total={len(walks)}")


def cmd_realize(a, lines):
    g = _load(a.input)
    p = _partition(a.partition)
    p.check_cover(g.n)
    where = {(s.entry, s.middle, s.exit): s for s in analysis.enumerate_sidewalks(g, p)}
    chosen = []
    for triple in a.sidewalk:
        key = tuple(triple)
        if len(key) != 3 or key not in where:
            raise IncompatibleSidewalks(f"{','.join(map(str, triple))} is not a sidewalk")
        chosen.append(where[key])
    w = analysis.realize_sidewalk_combination(g, p, chosen, a.ell)
    lines.append("none" if w is None else str(w))


def _scan_out(report, a, lines):
    lines.append(report.to_text().rstrip("\n"))
    if a.out:
        for path in report.save_graphs(a.out):
            lines.append(f"saved {path}")


def cmd_scan_girth(a, lines):
    r = scanner.scan_girth_lemma(a.n, a.m, a.trials, a.seed)
    _scan_out(r, a, lines)
    if not r.ok:
        raise VerificationFailed("\n".join(lines))


def cmd_scan_c3d(a, lines):
    r = scanner.scan_c3_or_d(a.n, a.trials, a.seed)
    _scan_out(r, a, lines)
    if not r.ok:
        raise VerificationFailed("\n".join(lines))


def cmd_scan_conj(a, lines):
    _scan_out(scanner.scan_outdegree_conjecture(a.ell, a.n, a.trials, a.seed), a, lines)


def cmd_export_dot(a, lines):
    text = to_dot(_load(a.input))
    if a.out:
        with open(a.out, "w", newline="\n") as fh:
            fh.write(text)
        lines.append(f"wrote {a.out}")
    else:
        lines.append(text.rstrip("\n"))


# -- parser ------------------------------------------------------------------------------

def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="orcycles", description="Oriented-graph cycle toolkit")
    sub = p.add_subparsers(dest="command", required=True, metavar="subcommand")

    def add(name, func, help_text):
        sp = sub.add_parser(name, help=help_text, description=help_text)
        sp.set_defaults(func=func)
        return sp

    def graph_in(sp):
        sp.add_argument("--in", dest="input", required=True, help="edge-list file")

    def budget(sp):
        sp.add_argument("--budget", type=int, default=cycles.DEFAULT_BUDGET, help="node-expansion budget")

    sp = add("construct", cmd_construct, "semidegree-extremal C_ell-free graph")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")

    sp = add("construct-outdeg", cmd_construct_outdeg, "outdegree-extremal C_ell-free graph")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")

    sp = add("construct-c6", cmd_construct_c6, "C_4 blow-up with a one-way bipartite blob")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--out")

    sp = add("blowup", cmd_blowup, "balanced blow-up of C_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--b", type=int, required=True)
    sp.add_argument("--out")

    sp = add("verify", cmd_verify, "check a graph is C_ell-free at the extremal degree")
    graph_in(sp)
    sp.add_argument("--ell", type=int, required=True)

    sp = add("cycle", cmd_cycle, "find a directed cycle of the given length")
    graph_in(sp)
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--engine", choices=cycles.ENGINES, default="auto")
    budget(sp)

    sp = add("walk", cmd_walk, "closed walk of the given length?")
    graph_in(sp)
    sp.add_argument("--len", type=int, required=True)

    sp = add("girth", cmd_girth, "length of a shortest directed cycle")
    graph_in(sp)

    sp = add("shortcut", cmd_shortcut, "find an s-shortcut (s = --len)")
    graph_in(sp)
    sp.add_argument("--len", type=int, required=True)
    budget(sp)

    sp = add("paths", cmd_paths, "lengths of simple x->y paths up to --len")
    graph_in(sp)
    sp.add_argument("x", type=int)
    sp.add_argument("y", type=int)
    sp.add_argument("--len", type=int, required=True)
    sp.add_argument("--avoid", type=_ints)
    budget(sp)

    sp = add("hom-ck", cmd_hom_ck, "homomorphism to C_k")
    graph_in(sp)
    sp.add_argument("--k", type=int, required=True)

    sp = add("cycle-type", cmd_cycle_type, "cycle-type of a +/- word")
    sp.add_argument("word")

    sp = add("d-ell", cmd_d_ell, "the graph D^ell")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--out")

    sp = add("embed", cmd_embed, "embed an oriented cycle word into a host")
    graph_in(sp)
    sp.add_argument("word")
    sp.add_argument("--hom", action="store_true", help="allow repeated vertices")
    sp.add_argument("--budget", type=int, default=10**7)

    sp = add("sumset", cmd_sumset, "A + B in Z_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("left", type=_ints)
    sp.add_argument("right", type=_ints)

    sp = add("stabilizer", cmd_stabilizer, "stabilizer of a subset of Z_k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("set", type=_ints)

    sp = add("reach", cmd_reach, "reachable residues of a family of zero-free sets")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("sets", type=_ints, nargs="+")

    sp = add("subset-sum", cmd_subset_sum, "sub-multiset summing to ell mod k")
    sp.add_argument("--k", type=int, required=True)
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--multiset", type=_ints, required=True)

    sp = add("sidewalks", cmd_sidewalks, "list sidewalks of a blob partition")
    graph_in(sp)
    sp.add_argument("partition", help="partition file: one line per blob, then the exceptional line")

    sp = add("realize", cmd_realize, "route a C_ell through chosen sidewalks")
    graph_in(sp)
    sp.add_argument("partition")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("sidewalk", type=_ints, nargs="*", help="entry,middle,exit triples")

    sp = add("scan-girth", cmd_scan_girth, "random scan: short cycles under an outdegree floor")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--m", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--out", help="directory for offending graphs")

    sp = add("scan-c3d", cmd_scan_c3d, "random scan: C_3 or a 4-shortcut under a semidegree floor")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--out", help="directory for offending graphs")

    sp = add("scan-conj", cmd_scan_conj, "random scan: C_ell-free graphs above n/k outdegree")
    sp.add_argument("--ell", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--trials", type=int, required=True)
    sp.add_argument("--seed", type=int, required=True)
    sp.add_argument("--out", help="directory for archived graphs")

    sp = add("export-dot", cmd_export_dot, "convert an edge list to DOT")
    graph_in(sp)
    sp.add_argument("--out")
    return p


def run(argv=None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse already printed the usage error
        return int(exc.code or 0)
    lines: list[str] = []
    try:
        args.func(args, lines)
    except VerificationFailed as exc:
        stdout.write(str(exc) + "\n")
        stderr.write("error: verification failed\n")
        return 1
    except OrCyclesError as exc:
        stderr.write(f"error: {type(exc).__name__}: {exc}\n")
        return 1
    if lines:
        stdout.write("\n".join(lines) + "\n")
    return 0


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
