"""Command-line front end: ``wklr <command> [options]``.

Inputs are JSON (inline or a file path); results go to stdout as aligned
text or, with --json, as JSON. Exit status: 0 success, 1 domain error,
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass
from typing import Callable

from . import abacus, cellular, checks, fock, partition, presets, ring, tableau
from .errors import WklrError
from .partition import Box, Weighting, multipartition
from .ring import LaurentPoly
from .tableau import EntryPos, ITableau, Loading


class InputError(Exception):
    """Malformed user input; exit status 2."""


# ------------------------------------------------------------------ parsing

def _load_json(text: str, what: str):
    if os.path.exists(text):
        with open(text) as fh:
            text = fh.read()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{what}: not valid JSON ({exc.msg})") from None


def parse_weighting(text: str) -> Weighting:
    """Full form {"kappa","theta","charges","e"}, or {"charges","e","sign"} for an Uglov weighting."""
    obj = _load_json(text, "--weighting")
    try:
        if isinstance(obj, dict) and "kappa" not in obj and "theta" not in obj:
            if "charges" not in obj or "e" not in obj:
                raise ValueError("weighting is missing field 'charges' or 'e'")
            return partition.uglov_weighting(obj["charges"], obj["e"], obj.get("sign", 1))
        return Weighting.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise InputError(f"--weighting: {exc}") from None


def parse_shape(text: str):
    obj = _load_json(text, "--shape")
    try:
        return multipartition(obj)
    except (ValueError, TypeError) as exc:
        raise InputError(f"--shape: {exc}") from None


def parse_loading(text: str) -> Loading:
    obj = _load_json(text, "--loading")
    try:
        if isinstance(obj, list) and all(not isinstance(x, list) for x in obj):
            return Loading.unlabelled(obj)
        return Loading.from_json(obj)
    except (ValueError, TypeError) as exc:
        raise InputError(f"--loading: {exc}") from None


def parse_box(text: str) -> Box:
    try:
        return Box.parse(text)
    except (ValueError, TypeError):
        raise InputError(f"--box: expected 'i,j,m', got {text!r}") from None


# ------------------------------------------------------------------ output

def _poly(f: LaurentPoly):
    return f.to_json()


def _shape_json(xi):
    return [list(p) for p in xi]


def _shape_str(xi) -> str:
    return "(" + "|".join(",".join(map(str, p)) if p else "-" for p in xi) + ")"


def _table(rows: list[list[str]]) -> str:
    if not rows:
        return ""
    widths = [max(len(r[k]) for r in rows) for k in range(len(rows[0]))]
    return "\n".join("  ".join(c.ljust(w) for c, w in zip(r, widths)).rstrip() for r in rows)


@dataclass
class Result:
    data: object
    text: str
    ok: bool = True


# ------------------------------------------------------------------ context

class Ctx:
    def __init__(self, args):
        self.args = args
        self.preset = presets.get(args.example) if getattr(args, "example", None) else None

    @property
    def w(self) -> Weighting:
        if self.args.weighting:
            return parse_weighting(self.args.weighting)
        if self.preset:
            return self.preset.weighting
        raise InputError("a weighting is required (--weighting or --example)")

    def shapes(self, need: int | None = None) -> list:
        out = [parse_shape(s) for s in self.args.shape or []]
        if need is not None and len(out) < need:
            raise InputError(f"need {need} --shape argument(s)")
        return out

    def shape(self):
        return self.shapes(1)[0]

    def loadings(self) -> list[Loading]:
        return [parse_loading(s) for s in self.args.loading or []]

    def vector(self, w: Weighting) -> fock.FockVector:
        if self.args.vector:
            obj = _load_json(self.args.vector, "--vector")
            try:
                return fock.FockVector.from_json(obj, w)
            except (ValueError, TypeError) as exc:
                raise InputError(f"--vector: {exc}") from None
        return fock.FockVector.basis(self.shape(), w)

    def block(self, w: Weighting) -> list:
        if self.preset and not self.args.shape:
            return list(self.preset.shapes)
        xi = self.shape()
        return partition.enumerate_block(w, partition.content(xi, w))

    def need(self, name: str):
        v = getattr(self.args, name)
        if v is None:
            raise InputError(f"--{name.replace('_', '-')} is required")
        return v


# ------------------------------------------------------------------ commands

def cmd_residue(c: Ctx) -> Result:
    w = c.w
    cells = [parse_box(b) for b in c.args.box] if c.args.box else list(partition.boxes(c.shape()))
    rows = [{"box": b.key(), "residue": partition.residue(b, w)} for b in cells]
    data = {"boxes": rows}
    text = _table([[r["box"], str(r["residue"])] for r in rows])
    if c.args.shape:
        cont = partition.content(c.shape(), w)
        data["content"] = {str(k): v for k, v in cont.items()}
        text += "\ncontent " + " ".join(f"{k}:{v}" for k, v in cont.items())
    return Result(data, text)


def cmd_xcoord(c: Ctx) -> Result:
    w = c.w
    if c.args.residue is not None:
        xi = c.shape()
        i = c.args.residue
        add = partition.addable_boxes(xi, i, w)
        rem = partition.removable_boxes(xi, i, w)
        fmt = lambda bs: [{"box": b.key(), "x": ring.format_rational(partition.x_coord(b, w))} for b in bs]
        data = {"addable": fmt(add), "removable": fmt(rem)}
        text = "\n".join(f"{k:9s} " + " ".join(f"{d['box']}@{d['x']}" for d in v) for k, v in data.items())
        return Result(data, text)
    cells = [parse_box(b) for b in c.args.box] if c.args.box else list(partition.boxes(c.shape()))
    rows = [{"box": b.key(), "x": ring.format_rational(partition.x_coord(b, w))} for b in cells]
    return Result({"boxes": rows}, _table([[r["box"], r["x"]] for r in rows]))


def cmd_dominance(c: Ctx) -> Result:
    a, b = c.shapes(2)[:2]
    r = partition.dominance_compare(a, b, c.w)
    return Result({"result": r.value}, r.value)


def cmd_cfun(c: Ctx) -> Result:
    w = c.w
    if c.args.block_size is not None:
        shapes = partition.enumerate_by_size(c.args.block_size, w.level, w)
    elif c.args.content:
        cont = _load_json(c.args.content, "--content")
        try:
            shapes = partition.enumerate_block(w, {int(k): int(v) for k, v in cont.items()})
        except (AttributeError, ValueError, TypeError):
            raise InputError("--content: expected an object residue -> count") from None
    else:
        shapes = c.shapes(1)
    rows = [{"shape": _shape_json(xi), "c": ring.format_rational(partition.c_function(xi, w))} for xi in shapes]
    return Result({"shapes": rows}, _table([[_shape_str(xi), r["c"]] for xi, r in zip(shapes, rows)]))


def cmd_uglovate(c: Ctx) -> Result:
    w = c.w
    if c.args.star:
        s = partition.star_weighting(w)
        return Result({"weighting": s.to_json()}, json.dumps(s.to_json()))
    u = partition.uglovate(w)
    order = partition.uglovation_order(w)
    data = {"weighting": u.to_json(), "order": [m + 1 for m in order]}
    text = json.dumps(u.to_json()) + "\ncomponent order " + " ".join(str(m + 1) for m in order)
    if c.args.shape:
        moved = partition.permute_components(c.shape(), order)
        data["shape"] = _shape_json(moved)
        text += "\nshape " + _shape_str(moved)
    return Result(data, text)


def cmd_braid(c: Ctx) -> Result:
    w = c.w
    g = c.need("generator")
    top = partition.braid_on_weighting(g, w)
    perm = partition.braid_permutation(g, w.level)
    data = {"weighting": top.to_json(), "order": [m + 1 for m in perm]}
    text = json.dumps(top.to_json()) + "\ncomponent order " + " ".join(str(m + 1) for m in perm)
    if c.args.between:
        other = parse_weighting(c.args.between)
        ok = partition.between_check(w, top, other, c.args.max_size)
        data["between"] = ok
        text += f"\nbetween {ok}"
    return Result(data, text)


def _tableau_json(t: ITableau):
    return t.to_json()


def cmd_tableaux(c: Ctx) -> Result:
    if c.preset and c.preset.d_sets and not c.args.shape:
        p = c.preset
        counts = []
        for xi in p.shapes:
            n = sum(len(tableau.enumerate_d_tableaux(xi, D, p.weighting)) for D in p.d_sets)
            counts.append(n)
        data = {"shapes": [_shape_json(xi) for xi in p.shapes], "counts": counts,
                "sum_of_squares": sum(n * n for n in counts)}
        text = _table([[_shape_str(xi), str(n)] for xi, n in zip(p.shapes, counts)])
        text += f"\nsum of squares {data['sum_of_squares']}"
        return Result(data, text)
    w = c.w
    xi = c.shape()
    loads = c.loadings()
    L = loads[0] if loads else tableau.canonical_loading(xi, w)
    if all(lab is None for _, lab in L.points):
        ts = tableau.enumerate_d_tableaux(xi, L.positions(), w)
    else:
        ts = tableau.enumerate_i_tableaux(xi, L, w)
    data = {"loading": L.to_json(), "tableaux": [_tableau_json(t) for t in ts], "count": len(ts)}
    lines = [" ".join(f"{b.key()}={p}" for b, p in t.fill) for t in ts]
    return Result(data, "\n".join(lines + [f"{len(ts)} tableaux"]))


def cmd_degree(c: Ctx) -> Result:
    w = c.w
    if c.args.tableau:
        try:
            t = ITableau.from_json(_load_json(c.args.tableau, "--tableau"), w)
        except (ValueError, TypeError) as exc:
            raise InputError(f"--tableau: {exc}") from None
    else:
        t = tableau.tautological_tableau(c.shape(), w)
    if c.args.box and c.args.value is not None:
        try:
            h = EntryPos.parse(c.args.value)
        except (ValueError, TypeError):
            raise InputError("--value: expected a rational or 'r@eps'") from None
        st = tableau.relative_status(t, parse_box(c.args.box[0]), h)
        return Result({"status": st.value}, st.value)
    d = tableau.tableau_degree(t)
    x = cellular.crossing_degree(t)
    word = tableau.russian_reading_word(t)
    data = {"degree": d, "crossing_degree": x, "reading_word": word}
    return Result(data, f"degree {d}\ncrossing degree {x}\nreading word {' '.join(map(str, word))}")


def cmd_celldim(c: Ctx) -> Result:
    w = c.w
    xi = c.shape()
    loads = c.loadings()
    L = loads[0] if loads else tableau.canonical_loading(xi, w)
    f = cellular.graded_cell_dim(xi, L, w)
    return Result({"dim": _poly(f)}, str(f))


def cmd_homdim(c: Ctx) -> Result:
    loads = c.loadings()
    if len(loads) != 2:
        raise InputError("homdim needs two --loading arguments")
    f = cellular.graded_hom_dim(loads[0], loads[1], c.w)
    return Result({"dim": _poly(f), "at_one": f.at_one()}, f"{f}\nat q=1: {f.at_one()}")


def _matrix_result(M: cellular.GradedMatrix, extra: str = "") -> Result:
    return Result(M.to_json(), M.render() + extra)


def cmd_decomp(c: Ctx) -> Result:
    w = c.w
    block = c.block(w)
    loads = c.loadings() or (list(c.preset.loadings) if c.preset and c.preset.loadings else None)
    if c.args.standard:
        return _matrix_result(cellular.standard_multiplicity_columns(block, w, loads, c.args.threads))
    if c.args.cartan:
        D = cellular.peel_canonical_basis(cellular.standard_multiplicity_columns(block, w, loads, c.args.threads), w)
        C = cellular.cartan_matrix(D)
        return Result({"cartan": [[_poly(f) for f in r] for r in C]}, _table([[str(f) for f in r] for r in C]))
    return _matrix_result(cellular.decomposition_matrix(block, w, loads, c.args.threads))


def cmd_canonical(c: Ctx) -> Result:
    w = c.w
    block = c.block(w)
    loads = list(c.preset.loadings) if c.preset and c.preset.loadings else None
    data = fock.BlockBasisData.build(block, w, cellular.decomposition_matrix(block, w, loads, c.args.threads))
    if c.args.mutate_to:
        M = fock.mutate_basis(data, parse_weighting(c.args.mutate_to))
        return _matrix_result(M)
    if c.args.vector:
        v = c.vector(w)
        b = fock.bar_on_block(data, v)
        return Result({"bar": b.to_json()}, str(b))
    if c.args.gram:
        G = fock.gram_matrix(data, [fock.FockVector.basis(xi, w) for xi in block])
        return Result({"gram": [[_poly(f) for f in r] for r in G]}, _table([[str(f) for f in r] for r in G]))
    if c.args.shape and len(c.args.shape) == 2:
        a, b = c.shapes(2)
        u, v = fock.FockVector.basis(a, w), fock.FockVector.basis(b, w)
        f = fock.sesqui_form(data, u, v)
        g = fock.bilinear_form(u, v)
        return Result({"form": _poly(f), "standard_form": _poly(g)}, f"{f}\nstandard form {g}")
    vecs = [data.canonical_vector(xi) for xi in block]
    out = {_shape_str(xi): v.to_json()["terms"] for xi, v in zip(block, vecs)}
    return Result({"canonical": out}, "\n".join(f"b{_shape_str(xi)} = {v}" for xi, v in zip(block, vecs)))


def cmd_branch(c: Ctx) -> Result:
    w = c.w
    xi = c.shape()
    fn = cellular.branch_restrict if c.args.restrict else cellular.branch_induce
    rows = fn(xi, w, c.args.residue)
    data = [{"shape": _shape_json(eta), "shift": d} for eta, d in rows]
    return Result({"terms": data}, _table([[_shape_str(eta), str(d)] for eta, d in rows]))


def cmd_fock_apply(c: Ctx) -> Result:
    w = c.w
    v = c.vector(w)
    i = c.need("residue")
    if c.args.weight:
        if c.args.dual:
            mu = fock.dual_weight(i, w)
        else:
            mu = {_shape_str(xi): fock.weight_pairing(i, xi, w) for xi in v.terms}
        return Result({"weight": mu}, json.dumps(mu))
    op = c.args.op
    if c.args.dual:
        f = fock.dual_apply_F if op == "F" else fock.dual_apply_E
        out = v
        for _ in range(c.args.power):
            out = f(i, out)
        out = fock.divide(out, ring.q_factorial(c.args.power))
    elif c.args.power != 1:
        out = fock.divided_power(op, i, c.args.power, v)
    else:
        out = (fock.apply_F if op == "F" else fock.apply_E)(i, v)
    return Result(out.to_json(), str(out))


def cmd_crystal(c: Ctx) -> Result:
    w = c.w
    xi = c.shape()
    i = c.need("residue")
    eps, phi = fock.string_lengths(i, xi, w)
    out = (fock.crystal_F if c.args.op == "F" else fock.crystal_E)(i, xi, w)
    data = {"result": None if out is None else _shape_json(out), "epsilon": eps, "phi": phi}
    return Result(data, f"{'null' if out is None else _shape_str(out)}\nepsilon {eps} phi {phi}")


def cmd_weyl(c: Ctx) -> Result:
    if c.args.calibrate:
        res = fock.calibrate_dual_convention(c.w if c.args.weighting else None, c.args.max_size)
        rows = [{"sign": k.sign, "q_power": k.sub_power, "passes": ok} for k, ok in res.items()]
        passing = [r for r in rows if r["passes"]]
        text = _table([[f"sign {r['sign']:+d}", f"q^{r['q_power']:+d}", "pass" if r["passes"] else "fail"] for r in rows])
        text += f"\n{len(passing)} of 4 conventions pass"
        return Result({"conventions": rows}, text)
    w = c.w
    i = c.need("residue")
    out = fock.quantum_weyl_t(i, c.vector(w), dual=c.args.dual)
    return Result(out.to_json(), str(out))


def cmd_flip(c: Ctx) -> Result:
    w = c.w
    xi = c.shape()
    dual, t = abacus.koszul_flip(xi, w.charges, w.e)
    R = abacus.matrix_u(xi, w.charges, w.e)
    data = {
        "dual": _shape_json(dual), "charges": list(t), "u": [list(r) for r in R.u], "weight": R.w,
        "abaci": [abacus.to_abacus(lam, s).to_json() for lam, s in zip(xi, w.charges)],
        "runners": [[r.to_json() for r in abacus.runner_split(abacus.to_abacus(lam, s), w.e)]
                    for lam, s in zip(xi, w.charges)],
        "cores": [list(abacus.e_core(lam, w.e, s)) for lam, s in zip(xi, w.charges)],
        "push_counts": [abacus.push_count(xi, w.charges, k) for k in range(1, w.level + 1)],
    }
    text = (f"dual {_shape_str(dual)} charges {' '.join(map(str, t))}\n"
            + "\n".join(" ".join(f"{x:3d}" for x in r) for r in R.u)
            + f"\ne-weight {R.w}")
    return Result(data, text)


def cmd_interp_degree(c: Ctx) -> Result:
    w = c.w
    xi = c.shape()
    if c.args.top:
        d = cellular.interpolation_degree(xi, parse_weighting(c.args.top), w)
        return Result({"degree": d}, str(d))
    g = c.need("generator")
    d = cellular.braid_interpolation_degree(xi, g, w)
    m = abacus.swap_count(xi, w.charges, g, w.e)
    eta, s2 = abacus.swap_rows(xi, w.charges, g, w.e)
    data = {"degree": d, "swap_count": m, "swapped": _shape_json(eta), "swapped_charges": list(s2)}
    return Result(data, f"degree {d}\nswap count {m}")


def cmd_check(c: Ctx) -> Result:
    a = c.args
    if a.qint is not None:
        n = a.qint
        rows = {"qint": ring.q_int(n)}
        if n >= 0:
            rows["qfactorial"] = ring.q_factorial(n)
            if a.k is not None:
                rows["qbinomial"] = ring.q_binomial(n, a.k)
        return Result({k: _poly(f) for k, f in rows.items()}, "\n".join(f"{k} {f}" for k, f in rows.items()))
    if a.poly:
        try:
            f = ring.LaurentPoly.from_json(_load_json(a.poly, "--poly"))
        except (ValueError, TypeError) as exc:
            raise InputError(f"--poly: {exc}") from None
        b, h = ring.bar(f), ring.bar_symmetrize_head(f)
        return Result({"bar": _poly(b), "head": _poly(h)}, f"bar {b}\nhead {h}")
    if a.all:
        results = checks.run_all(max_size=a.max_size, seed=a.seed, random_count=a.random_count,
                                 random_max_size=a.max_size + 1, threads=a.threads)
    else:
        results = checks.run_all(max_size=a.max_size, seed=a.seed, random_count=0, threads=a.threads)
    ok = all(r.ok for r in results)
    data = {"ok": ok, "suites": [{"name": r.name, "cases": r.cases, "failures": r.failures,
                                  "first_failure": r.first, "notes": r.notes} for r in results]}
    text = "\n".join(r.line() + "".join(f"  ({n})" for n in r.notes) for r in results)
    return Result(data, text + ("\nall suites passed" if ok else "\nsome suites failed"), ok)


@dataclass(frozen=True)
class Command:
    handler: Callable[[Ctx], Result]
    ops: tuple[str, ...]
    help: str


# every public library operation is reachable from exactly one command
COMMANDS: dict[str, Command] = {
    "residue": Command(cmd_residue, ("residue", "content", "boxes"), "residues of boxes"),
    "xcoord": Command(cmd_xcoord, ("x_coord", "addable_boxes", "removable_boxes", "i_boxes"), "x-coordinates, addable/removable i-boxes"),
    "dominance": Command(cmd_dominance, ("dominance_compare",), "weighted dominance of two shapes"),
    "cfun": Command(cmd_cfun, ("c_function", "enumerate_by_size", "enumerate_block"), "c-function and shape enumeration"),
    "uglovate": Command(cmd_uglovate, ("uglovate", "uglovation_order", "permute_components", "uglov_weighting", "star_weighting"), "Uglovation and the star symmetry"),
    "braid": Command(cmd_braid, ("braid_on_weighting", "braid_permutation", "between_check"), "affine braid generator on an Uglov weighting"),
    "tableaux": Command(cmd_tableaux, ("enumerate_d_tableaux", "enumerate_i_tableaux", "canonical_loading"), "enumerate D- or i-tableaux"),
    "degree": Command(cmd_degree, ("tableau_degree", "crossing_degree", "relative_status", "russian_reading_word", "tautological_tableau"), "degree of a tableau"),
    "celldim": Command(cmd_celldim, ("graded_cell_dim",), "graded dimension of e_L S_xi"),
    "homdim": Command(cmd_homdim, ("graded_hom_dim",), "graded dimension of e_L1 T e_L2"),
    "decomp": Command(cmd_decomp, ("standard_multiplicity_columns", "decomposition_matrix", "peel_canonical_basis", "cartan_matrix"), "graded decomposition matrix"),
    "canonical": Command(cmd_canonical, ("BlockBasisData", "bar_on_block", "sesqui_form", "bilinear_form", "gram_matrix", "mutate_basis"), "canonical basis, bar involution, forms, mutation"),
    "branch": Command(cmd_branch, ("branch_induce", "branch_restrict"), "branching data"),
    "fock-apply": Command(cmd_fock_apply, ("apply_F", "apply_E", "divided_power", "dual_apply_F", "dual_apply_E", "weight_pairing", "dual_weight"), "Chevalley and dual operators"),
    "crystal": Command(cmd_crystal, ("crystal_E", "crystal_F", "string_lengths"), "crystal operators"),
    "weyl": Command(cmd_weyl, ("quantum_weyl_t", "calibrate_dual_convention"), "quantum Weyl group generator"),
    "flip": Command(cmd_flip, ("koszul_flip", "matrix_u", "to_abacus", "from_abacus", "runner_split", "runner_join", "e_core", "push_count"), "level-rank flip of the runner grid"),
    "interp-degree": Command(cmd_interp_degree, ("interpolation_degree", "braid_interpolation_degree", "swap_count", "swap_rows"), "interpolation degree between weightings"),
    "check": Command(cmd_check, ("run_all", "q_int", "q_factorial", "q_binomial", "bar", "bar_symmetrize_head"),
                     "run the invariant suites; small ring computations"),
}


@dataclass(frozen=True)
class JobSpec:
    """One CLI invocation as data: command, inputs and output format."""

    command: str
    weighting: dict | None = None
    shapes: tuple = ()
    loadings: tuple = ()
    vectors: tuple = ()
    json_output: bool = False
    options: tuple[tuple[str, object], ...] = ()  # remaining flags, sorted by name

    def to_json(self) -> dict:
        return {
            "command": self.command,
            "weighting": self.weighting,
            "shapes": [[list(p) for p in xi] for xi in self.shapes],
            "loadings": [list(map(list, L)) for L in self.loadings],
            "vectors": list(self.vectors),
            "json": self.json_output,
            "options": dict(self.options),
        }

    @classmethod
    def from_json(cls, obj) -> "JobSpec":
        if not isinstance(obj, dict) or "command" not in obj:
            raise InputError("job is missing field 'command'")
        if obj["command"] not in COMMANDS:
            raise InputError(f"job field 'command': unknown command {obj['command']!r}")
        return cls(
            obj["command"],
            obj.get("weighting"),
            tuple(tuple(tuple(p) for p in xi) for xi in obj.get("shapes", [])),
            tuple(tuple(tuple(pt) for pt in L) for L in obj.get("loadings", [])),
            tuple(obj.get("vectors", [])),
            bool(obj.get("json", False)),
            tuple(sorted(obj.get("options", {}).items())),
        )

    def to_argv(self) -> list[str]:
        argv = [self.command]
        if self.weighting is not None:
            argv += ["--weighting", json.dumps(self.weighting)]
        for xi in self.shapes:
            argv += ["--shape", json.dumps([list(p) for p in xi])]
        for L in self.loadings:
            argv += ["--loading", json.dumps([list(pt) for pt in L])]
        for v in self.vectors:
            argv += ["--vector", json.dumps(v)]
        for k, v in self.options:
            flag = "--" + k.replace("_", "-")
            if v is True:
                argv.append(flag)
            elif v is not False and v is not None:
                argv += [flag, v if isinstance(v, str) else json.dumps(v)]
        if self.json_output:
            argv.append("--json")
        return argv


def run_job(job: JobSpec, out=None) -> int:
    return run(job.to_argv(), out)


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="wklr", description="Weighted KLR combinatorics.")
    sub = p.add_subparsers(dest="command", required=True, metavar="command")
    for name, cmd in COMMANDS.items():
        s = sub.add_parser(name, help=cmd.help)
        s.add_argument("--weighting", help="JSON object or file")
        s.add_argument("--example", help="built-in example: " + ", ".join(presets.PRESETS))
        s.add_argument("--shape", action="append", help="multipartition as JSON, e.g. [[2],[]]")
        s.add_argument("--loading", action="append", help="JSON list of [position, residue] pairs")
        s.add_argument("--box", action="append", help="box as i,j,m")
        s.add_argument("--vector", help="Fock vector as JSON")
        s.add_argument("--tableau", help="tableau as JSON")
        s.add_argument("--value", help="entry value for relative status")
        s.add_argument("--content", help="residue content as JSON")
        s.add_argument("--residue", type=int)
        s.add_argument("--generator", type=int)
        s.add_argument("--op", choices=("E", "F"), default="F")
        s.add_argument("--power", type=int, default=1)
        s.add_argument("--dual", action="store_true")
        s.add_argument("--weight", action="store_true")
        s.add_argument("--restrict", action="store_true")
        s.add_argument("--star", action="store_true")
        s.add_argument("--standard", action="store_true", help="standard multiplicities before peeling")
        s.add_argument("--cartan", action="store_true")
        s.add_argument("--gram", action="store_true")
        s.add_argument("--calibrate", action="store_true")
        s.add_argument("--top", help="top weighting for interp-degree")
        s.add_argument("--between", help="third weighting for the betweenness test")
        s.add_argument("--mutate-to", help="weighting whose dominance order the basis is mutated to")
        s.add_argument("--block-size", type=int)
        s.add_argument("--max-size", type=int, default=3)
        s.add_argument("--all", action="store_true")
        s.add_argument("--random-count", type=int, default=200)
        s.add_argument("--qint", type=int, help="print [n], [n]! and, with --k, the q-binomial")
        s.add_argument("--k", type=int)
        s.add_argument("--poly", help="Laurent polynomial as JSON: bar and bar-invariant head")
        s.add_argument("--json", action="store_true")
        s.add_argument("--seed", type=int, default=0)
        s.add_argument("--threads", type=int, default=1)
    return p


def run(argv: list[str] | None = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        res = COMMANDS[args.command].handler(Ctx(args))
    except (InputError, KeyError) as exc:
        msg = exc.args[0] if exc.args else str(exc)
        print(f"wklr: {msg}", file=sys.stderr)
        return 2
    except WklrError as exc:
        print(f"wklr: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    if args.json:
        print(json.dumps(res.data, sort_keys=True), file=out)
    else:
        print(res.text, file=out)
    return 0 if res.ok else 1


def main() -> None:
    sys.exit(run())
