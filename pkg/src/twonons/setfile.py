"""Versioned human-readable text formats: element-set files and reports.

Set file layout (one token stream per line):

    twonons-set v1
    level 4
    flags inverse_closed all_niner single_privileged_orthant
    elem 1 0 0 0 0 0 0 0 0 0 0 0 0 0 0 0
    elem 2 0 ...

Coordinates are "num" or "num/den" in lowest terms.  Declared flags are
re-validated on load; a mismatch is a hard load error.
"""

from __future__ import annotations

from fractions import Fraction

from .algebra import CDNumber
from .sets import ElementSet

FORMAT_VERSION = 1
KNOWN_FLAGS = ("nonzero", "inverse_closed", "all_niner", "single_privileged_orthant")


class SetFileError(ValueError):
    pass


def _flag_value(A, flag):
    if flag == "nonzero":
        return not A.has_zero()
    if flag == "inverse_closed":
        return A.is_inverse_closed()
    if flag == "all_niner":
        return A.is_all_niner()
    if flag == "single_privileged_orthant":
        return A.in_single_privileged_orthant()
    raise SetFileError(f"unknown flag {flag!r}")


def compute_flags(A):
    return tuple(f for f in KNOWN_FLAGS if _flag_value(A, f))


def render_fraction(f):
    f = Fraction(f)
    if f.denominator == 1:
        return str(f.numerator)
    return f"{f.numerator}/{f.denominator}"


def save_set(A, path):
    lines = [f"twonons-set v{FORMAT_VERSION}", f"level {A.level}"]
    flags = compute_flags(A)
    if flags:
        lines.append("flags " + " ".join(flags))
    for e in A.elements:
        lines.append("elem " + " ".join(render_fraction(c) for c in e.coords))
    with open(path, "w") as fh:
        fh.write("\n".join(lines) + "\n")


def load_set(path):
    with open(path) as fh:
        raw = [ln.strip() for ln in fh]
    lines = [ln for ln in raw if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("twonons-set v"):
        raise SetFileError("missing 'twonons-set v<N>' header")
    try:
        version = int(lines[0].split("v", 1)[1])
    except ValueError:
        raise SetFileError("bad version in header") from None
    if version != FORMAT_VERSION:
        raise SetFileError(f"unsupported format version {version}")

    level = None
    declared = []
    elements = []
    for ln in lines[1:]:
        tokens = ln.split()
        if tokens[0] == "level":
            level = int(tokens[1])
        elif tokens[0] == "flags":
            declared = tokens[1:]
        elif tokens[0] == "elem":
            if level is None:
                raise SetFileError("'elem' before 'level'")
            try:
                coords = [Fraction(t) for t in tokens[1:]]
            except ValueError as exc:
                raise SetFileError(f"bad coordinate: {exc}") from None
            elements.append(CDNumber.from_coords(level, coords))
        else:
            raise SetFileError(f"unknown line {tokens[0]!r}")
    if not elements:
        raise SetFileError("no elements")
    A = ElementSet(elements)
    for flag in declared:
        if flag not in KNOWN_FLAGS:
            raise SetFileError(f"unknown flag {flag!r}")
        if not _flag_value(A, flag):
            raise SetFileError(f"declared flag {flag!r} does not hold for this set")
    return A


# -- report rendering ------------------------------------------------------

def _approx(f):
    return f"{float(f):.6g} (approx)"


def render_bound_report(rep):
    lines = [
        "== bound report ==",
        f"mode            {rep.mode}",
        f"quotient side   {rep.side}" + ("  (swapped from preferred)" if rep.swapped_side else ""),
        f"|A|             {rep.set_size}",
        f"|A+A|           {rep.sumset_size}",
        f"E(A)            {rep.E}",
        f"E'(A)           {rep.E_prime}",
        f"chosen I        {rep.chosen_I}",
        f"|R|             {rep.R_size}",
        f"sum |S_x|       {rep.sum_Sx}",
        f"|union S_x|     {rep.union_Sx}",
        f"ratio           {render_fraction(rep.ratio)} = {_approx(rep.ratio)}",
        f"k16 lower bound {render_fraction(rep.k16_lower)} = {_approx(rep.k16_lower)}",
        "chain stages:",
    ]
    for s in rep.chain_stages:
        lines.append(
            f"  [{'pass' if s.passed else 'FAIL'}] {s.name}: "
            f"{render_fraction(s.lhs)} {s.relation} {render_fraction(s.rhs)}"
        )
    lines.append(f"injectivity     {'ok' if rep.injectivity_ok else 'FAIL'}")
    ball = {True: "ok", False: "FAIL", None: "not applicable (no orthant)"}[rep.ball_lemma_ok]
    lines.append(f"ball lemma      {ball}")
    lines.append(f"sanity ceiling  {'ok' if rep.sanity_ceiling_ok else 'FAIL'}")
    lines.append(f"certified       {'yes' if rep.certified else 'no'} ({rep.certification_reason})")
    lines.append("ratio profiles (x : ell, r):")
    for p in rep.profiles:
        lines.append(f"  {p.x.render()} : {p.ell}, {p.r}")
    return "\n".join(lines)


def render_search_record(rec):
    cfg = rec.config
    lines = [
        "== search record ==",
        f"seed            {cfg.seed}",
        f"generator       {cfg.generator}",
        f"acceptance      {cfg.acceptance}",
        f"iterations      {cfg.iterations}",
        f"set size range  {cfg.set_size_min}..{cfg.set_size_max}",
        f"evaluations     {rec.evaluations}",
        f"uncertified/degenerate evals {rec.failures}",
        f"best ratio      {render_fraction(rec.best_ratio)} = {_approx(rec.best_ratio)}",
        f"best k16 bound  {render_fraction(rec.best_ratio - 1)} = {_approx(rec.best_ratio - 1)}",
        "best set:",
    ]
    for e in rec.best_set.elements:
        lines.append("  " + e.render())
    lines.append("history (iteration, best ratio so far):")
    last = None
    for it, ratio in rec.history:
        if ratio != last:
            lines.append(f"  {it} {render_fraction(ratio)}")
            last = ratio
    if rec.best_report is not None:
        lines.append("")
        lines.append(render_bound_report(rec.best_report))
    return "\n".join(lines)


def render_history_table(rec):
    """Plain-text (iteration, ratio) table for external plotting."""
    return "\n".join(f"{it}\t{render_fraction(r)}" for it, r in rec.history)
