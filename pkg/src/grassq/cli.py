"""Command line front end.

    grassq pieri   --type C --m 4 --n 6 --p 4 5,3,2,2
    grassq qpieri  --type D --m 5 --n 6 --p 2 --primed 8,7,2,1,1:1
    grassq product --type C --m 2 --n 3 1 2
    grassq gw      --type C --m 3 --n 5 --d 2 4,2,2 5,3,1 7,6,4
    grassq dual    --type C --m 4 --n 7 7,4,2
    grassq convert --type C --m 3 --n 5 --from-index 3,5,9
    grassq basis   --type B --m 1 --n 2
    grassq verify  --type B --m 2 --n 3

Errors print a one-line diagnostic to stderr and exit with status 2.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from .core import (GrassmannianSpec, PartitionPair, SpecError, basis_key, dual,
                   enumerate_basis, format_label, index_set_to_label, label_to_index_set,
                   make_label, make_spec, parse_label, partition_pair_to_label)
from .ring import RingElement, render_q

DEFAULT_MAX_N = 8


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def spec_json(spec: GrassmannianSpec) -> dict:
    return {"type": spec.lie_type, "m": spec.m, "n": spec.n, "k": spec.k,
            "N": spec.ambient_N, "dim": spec.space_dim, "q_degrees": list(spec.q_degrees)}


def dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=False)


def element_json(x: RingElement) -> dict:
    return {"spec": spec_json(x.spec),
            "terms": [{"partition": list(lab.parts), "type": lab.type, "q": list(q),
                       "coeff": str(c)} for (lab, q), c in x.sorted_terms()]}


def element_from_json(data: dict) -> RingElement:
    s = data["spec"]
    spec = make_spec(s["type"], s["m"], s["n"])
    return RingElement(spec, {(make_label(t["partition"], t["type"]), tuple(t["q"])): int(t["coeff"])
                              for t in data["terms"]})


def render_element(x: RingElement) -> str:
    if not x:
        return "0"
    return "\n".join(f"{c}*s[{format_label(lab)}]{render_q(q)}" for (lab, q), c in x.sorted_terms())


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in text.split(",") if v.strip() != ""]
    except ValueError:
        raise SpecError(f"expected comma-separated integers, got {text!r}") from None


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="grassq", description="Schubert calculus on isotropic Grassmannians")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(sp):
        sp.add_argument("--type", required=True, choices=["C", "B", "D", "Dmax"])
        sp.add_argument("--m", type=int, required=True)
        sp.add_argument("--n", type=int, required=True)
        sp.add_argument("--json", action="store_true", help="JSON output")
        return sp

    for name, helptext in (("pieri", "classical Pieri product"), ("qpieri", "quantum Pieri product")):
        sp = common(sub.add_parser(name, help=helptext))
        sp.add_argument("--p", type=int, required=True)
        sp.add_argument("--primed", action="store_true", help="use tau'_k")
        sp.add_argument("label")
        if name == "pieri":
            sp.add_argument("--oracle", action="store_true", help="use the index-set rule")
    for name in ("product", "qproduct"):
        sp = common(sub.add_parser(name, help=f"{'quantum' if name[0] == 'q' else 'classical'} product"))
        sp.add_argument("left")
        sp.add_argument("right")
        if name == "product":
            sp.add_argument("--oracle", action="store_true", help="use the index-set rule")
    sp = common(sub.add_parser("gw", help="three-point Gromov-Witten invariant"))
    sp.add_argument("--d", type=int)
    sp.add_argument("--d1", type=int)
    sp.add_argument("--d2", type=int)
    sp.add_argument("labels", nargs=3)
    sp = common(sub.add_parser("dual", help="Poincare dual label"))
    sp.add_argument("label")
    sp = common(sub.add_parser("convert", help="label <-> index set, or partition pair -> label"))
    sp.add_argument("label", nargs="?")
    sp.add_argument("--from-index")
    sp.add_argument("--alpha")
    sp.add_argument("--beta")
    common(sub.add_parser("basis", help="list the Schubert basis"))
    common(sub.add_parser("verify", help="presentation, basis and oracle checks"))
    return p


def _spec(args) -> GrassmannianSpec:
    cap = int(os.environ.get("GRASSQ_MAX_N", DEFAULT_MAX_N))
    if args.n > cap:
        raise SpecError(f"n={args.n} exceeds GRASSQ_MAX_N={cap}")
    return make_spec(args.type, args.m, args.n)


def _label(spec, text):
    from .core import check_label
    return check_label(spec, parse_label(text))


def _emit(args, text: str, payload: dict) -> str:
    return dumps(payload) if args.json else text


def run(argv: list[str] | None = None) -> tuple[int, str]:
    """Execute a command; returns (exit status, rendered output)."""
    from .gw import classical_product, gromov_witten, quantum_product
    from .index_pieri import classical_pieri_via_index
    from .pieri import SpecialClass, check_special, classical_pieri
    from .quantum import quantum_pieri

    try:
        args = build_parser().parse_args(argv)
        spec = _spec(args)
        cmd = args.command
        if cmd in ("pieri", "qpieri"):
            s = check_special(spec, SpecialClass(args.p, args.primed))
            lam = _label(spec, args.label)
            if cmd == "qpieri":
                x = quantum_pieri(spec, s, lam)
            elif args.oracle:
                x = classical_pieri_via_index(spec, s, lam)
            else:
                x = classical_pieri(spec, s, lam)
            return 0, _emit(args, render_element(x), element_json(x))
        if cmd in ("product", "qproduct"):
            a, b = _label(spec, args.left), _label(spec, args.right)
            if cmd == "qproduct":
                x = quantum_product(spec, a, b)
            elif args.oracle:
                x = quantum_product(spec, a, b, mode="oracle")
            else:
                x = classical_product(spec, a, b)
            return 0, _emit(args, render_element(x), element_json(x))
        if cmd == "gw":
            labels = [_label(spec, t) for t in args.labels]
            if spec.nq == 2:
                if args.d is not None:
                    raise SpecError("Dmax takes --d1 and --d2")
                d = (args.d1 or 0, args.d2 or 0)
            else:
                if args.d1 is not None or args.d2 is not None:
                    raise SpecError("--d1/--d2 apply only to Dmax; use --d")
                d = (args.d or 0,)
            v = gromov_witten(spec, *labels, d)
            return 0, _emit(args, str(v), {"spec": spec_json(spec), "value": str(v)})
        if cmd == "dual":
            lab = dual(spec, _label(spec, args.label))
            return 0, _emit(args, format_label(lab),
                            {"spec": spec_json(spec), "partition": list(lab.parts), "type": lab.type})
        if cmd == "convert":
            if args.from_index:
                lab = index_set_to_label(spec, _ints(args.from_index))
                return 0, _emit(args, format_label(lab),
                                {"spec": spec_json(spec), "partition": list(lab.parts), "type": lab.type})
            if args.alpha is not None or args.beta is not None:
                if spec.is_even:
                    raise SpecError("partition pairs are offered for types C and B only")
                lab = partition_pair_to_label(
                    PartitionPair(tuple(_ints(args.alpha or "")), tuple(_ints(args.beta or ""))),
                    spec.k, spec.n)
                from .core import check_label
                check_label(spec, lab)
                return 0, _emit(args, format_label(lab),
                                {"spec": spec_json(spec), "partition": list(lab.parts), "type": 0})
            if args.label is None:
                raise SpecError("convert needs a label, --from-index, or --alpha/--beta")
            P = label_to_index_set(spec, _label(spec, args.label))
            return 0, _emit(args, ",".join(map(str, P)), {"spec": spec_json(spec), "index_set": list(P)})
        if cmd == "basis":
            labels = enumerate_basis(spec)
            return 0, _emit(args, "\n".join(format_label(l) for l in labels),
                            {"spec": spec_json(spec),
                             "basis": [{"partition": list(l.parts), "type": l.type} for l in labels]})
        if cmd == "verify":
            return _verify(spec, args)
        raise SpecError(f"unknown command {cmd}")  # pragma: no cover
    except (UsageError, SpecError, ValueError) as exc:
        return 2, f"error: {exc}"


def oracle_equivalence(spec: GrassmannianSpec) -> tuple[int, int]:
    """(pairs checked, mismatches) between partition and index-set Pieri rules."""
    from .index_pieri import classical_pieri_via_index
    from .pieri import SpecialClass, classical_pieri
    specials = [SpecialClass(p) for p in range(1, spec.width + 1)]
    if spec.is_even:
        specials.append(SpecialClass(spec.k, True))
    checked = bad = 0
    for lab in enumerate_basis(spec):
        for s in specials:
            checked += 1
            if classical_pieri(spec, s, lab) != classical_pieri_via_index(spec, s, lab):
                bad += 1
    return checked, bad


def _verify(spec, args) -> tuple[int, str]:
    from .presentation import basis_check, verify_presentation
    rows = []
    payload = {"spec": spec_json(spec), "checks": []}
    modes = ["classical"] + (["quantum"] if spec.quantum_supported() else [])
    for mode in modes:
        rep = verify_presentation(spec, mode)
        n_ok = sum(r.passed for r in rep.results)
        rows.append((f"presentation ({mode})", rep.passed, f"{n_ok}/{len(rep.results)} relations vanish"))
        payload["checks"].append({"check": f"presentation-{mode}", **rep.as_dict()})
    b = basis_check(spec)
    rows.append(("basis", b.passed, f"size {b.basis_size}, rank formula {b.rank_formula}, "
                                    f"degree ratio {b.degree_ratio}, unitriangular {b.unitriangular}"))
    payload["checks"].append({"check": "basis", **b.as_dict()})
    checked, bad = oracle_equivalence(spec)
    rows.append(("oracle equivalence", bad == 0, f"{checked - bad}/{checked} Pieri products agree"))
    payload["checks"].append({"check": "oracle", "checked": checked, "mismatches": bad, "passed": bad == 0})
    ok = all(r[1] for r in rows)
    payload["passed"] = ok
    width = max(len(r[0]) for r in rows)
    text = "\n".join(f"{name:<{width}}  {'PASS' if good else 'FAIL'}  {detail}" for name, good, detail in rows)
    return (0 if ok else 1), _emit(args, text, payload)


def main(argv: list[str] | None = None) -> int:
    code, out = run(argv)
    stream = sys.stderr if code == 2 else sys.stdout
    print(out, file=stream)
    return code


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
