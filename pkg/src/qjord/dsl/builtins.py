"""Built-in presentations: shipped .qalg files plus the sl(N) templates."""

from __future__ import annotations

import logging
import re
from collections.abc import Callable
from functools import lru_cache
from importlib.resources import files

from qjord.core.errors import UnknownPresentation
from qjord.dsl.expr import AlgebraPresentation
from qjord.dsl.parser import parse

log = logging.getLogger("qjord")

QALG_FILES = (
    "ohn_sl2",
    "uq_sl2",
    "uq_sl3",
    "uh_sl3",
    "uh_sl3_chevalley",
    "uq_osp12",
    "uh_osp12_super",
    "uh_osp12_jordanian",
    "classical_osp12",
    "classical_sl21",
    "uq_sl21",
    "uh_sl21",
)

_TEMPLATE_RE = re.compile(r"^(uh_slN|classical_slN)(?:\((\d+)\)|_(\d+))$")


def cartan_entry(i: int, j: int) -> int:
    """Cartan matrix of sl(N) (1-based indices)."""
    if i == j:
        return 2
    return -1 if abs(i - j) == 1 else 0


def _coef(c: int, term: str) -> str:
    if c == 1:
        return term
    if c == -1:
        return f"-{term}"
    return f"{c}*{term}"


def _tpow(k: int) -> str:
    """T^k as DSL text, with Tinv for negative k and '' for k = 0."""
    if k == 0:
        return ""
    base = "T" if k > 0 else "Tinv"
    return base if abs(k) == 1 else f"{base}^{abs(k)}"


def _times(*factors: str) -> str:
    return "*".join(f for f in factors if f)


def _serre(x: str, y: str) -> str:
    return f"{x}^2*{y} - 2*{x}*{y}*{x} + {y}*{x}^2"


def _classical_slN_text(n: int) -> str:
    rank = range(1, n)
    lines = [
        f"# sl({n}) on Chevalley generators",
        f"presentation classical_slN_{n};",
        'anchor "Chevalley generators";',
        "",
    ]
    lines.append("generator " + ", ".join(f"e{i}" for i in rank) + " even;")
    lines.append("generator " + ", ".join(f"h{i}" for i in rank) + " even;")
    lines.append("generator " + ", ".join(f"f{i}" for i in rank) + " even;")
    if n == 3:
        lines.append("generator e3, h3, f3 even;")
    lines.append("")
    for i in rank:
        for j in rank:
            if i < j:
                lines.append(f"relation h{i}h{j}: [h{i}, h{j}];")
            a = cartan_entry(i, j)
            lines.append(f"relation h{i}e{j}: [h{i}, e{j}]" + (
                f" = {_coef(a, f'e{j}')};" if a else ";"))
            lines.append(f"relation h{i}f{j}: [h{i}, f{j}]" + (
                f" = {_coef(-a, f'f{j}')};" if a else ";"))
            lines.append(f"relation e{i}f{j}: [e{i}, f{j}]" + (f" = h{i};" if i == j else ";"))
            if i < j and j - i > 1:
                lines.append(f"relation e{i}e{j}: [e{i}, e{j}];")
                lines.append(f"relation f{i}f{j}: [f{i}, f{j}];")
            if abs(i - j) == 1:
                lines.append(f"relation serre_e{i}{j}: {_serre(f'e{i}', f'e{j}')};")
                lines.append(f"relation serre_f{i}{j}: {_serre(f'f{i}', f'f{j}')};")
    if n == 3:
        lines += [
            "relation e3_def: e3 = [e1, e2];",
            "relation f3_def: f3 = [f2, f1];",
            "relation h3_def: h3 = h1 + h2;",
        ]
    lines.append("")
    names = [f"{x}{i}" for x in "ehf" for i in rank] + (["e3", "h3", "f3"] if n == 3 else [])
    lines += [f"coproduct {g} = {g} (x) 1 + 1 (x) {g};" for g in names]
    lines += [f"antipode {g} = -{g};" for g in names]
    lines += [f"counit {g} = 0;" for g in names]
    return "\n".join(lines) + "\n"


def delta(i: int, n: int) -> int:
    """δ_i = δ_{i1} + δ_{i,N−1}: the power of T carried by the corner generators.

    Only meaningful for N ≥ 3; at N = 2 both terms land on i = 1.
    """
    return int(i == 1) + int(i == n - 1)


def _uh_slN_text(n: int) -> str:
    if n == 2:
        # rank one degenerates to Ohn's H, X, Y, T
        ohn = builtin_text("ohn_sl2")
        return ohn.replace("presentation ohn_sl2;", "presentation uh_slN_2;")
    rank = range(1, n)
    hsum = "(" + " + ".join(f"H{i}" for i in rank) + ")"
    lines = [
        f"# Jordanian U_h(sl({n})) generated by T and the deformed Chevalley elements",
        f"presentation uh_slN_{n};",
        'anchor "they satisfy the commutation relations";',
        'anchor "admits the following coalgebra structure";',
        "",
        "generator T even;",
        "generator " + ", ".join(f"H{i}" for i in rank) + " even;",
        "generator " + ", ".join(f"E{i}" for i in rank) + " even;",
        "generator " + ", ".join(f"F{i}" for i in rank) + " even;",
        "",
    ]
    for i in rank:
        di = delta(i, n)
        for j in rank:
            dj = delta(j, n)
            a = cartan_entry(i, j)
            if i < j:
                lines.append(f"relation H{i}H{j}: [H{i}, H{j}];")
            lines.append(f"relation H{i}E{j}: [H{i}, E{j}]" + (
                f" = {_coef(a, f'E{j}')};" if a else ";"))
            rhs = [_coef(-a, f"F{j}")] if a else []
            if di:
                rhs.append(_times(str(di) if di != 1 else "", f"Tinv*[F{j}, T]*{hsum}"))
            lines.append(f"relation H{i}F{j}: [H{i}, F{j}]" + (
                " = " + " + ".join(rhs) + ";" if rhs else ";"))
            lhs = f"[{_times(_tpow(-di), f'E{i}')}, F{j}]"
            if i == j:
                corr = f"(T - Tinv)*{hsum}"
                if di == 1:
                    corr = f"1/2*{corr}"
                elif di > 2:
                    corr = f"{di}/2*{corr}"
                rhs_ef = _times(_tpow(-di), f"H{i}")
                if di:
                    rhs_ef += f" + {corr}"
                lines.append(f"relation E{i}F{j}: {lhs} = {rhs_ef};")
            else:
                lines.append(f"relation E{i}F{j}: {lhs};")
            if j - i > 1:
                lines.append(f"relation E{i}E{j}: [E{i}, E{j}];")
                lines.append(
                    f"relation TF{i}_TF{j}: "
                    f"[{_times(_tpow(di), f'F{i}')}, {_times(_tpow(dj), f'F{j}')}];"
                )
            if abs(i - j) == 1:
                lines.append(f"relation serre_E{i}{j}: {_serre(f'E{i}', f'E{j}')};")
                fi = f"({_times(_tpow(di), f'F{i}')})" if di else f"F{i}"
                fj = f"({_times(_tpow(dj), f'F{j}')})" if dj else f"F{j}"
                lines.append(f"relation serre_F{i}{j}: {_serre(fi, fj)};")
    lines.append("")
    lines += ["coproduct T = T (x) T;", "coproduct Tinv = Tinv (x) Tinv;"]
    for i in rank:
        di = delta(i, n)
        t_left = _tpow(di) or "1"
        lines.append(f"coproduct E{i} = E{i} (x) 1 + {t_left} (x) E{i};")
        lines.append(
            f"coproduct F{i} = F{i} (x) 1 + {_tpow(-di) or '1'} (x) F{i}"
            f" + T*{hsum} (x) Tinv*[F{i}, T];"
        )
        h_co = f"coproduct H{i} = H{i} (x) 1 + 1 (x) H{i}"
        if di:
            h_co += f" - {di}/2*(1 - Tinv^2) (x) {hsum}"
        lines.append(h_co + ";")
    lines += ["antipode T = Tinv;", "antipode Tinv = T;"]
    for i in rank:
        di = delta(i, n)
        lines.append(f"antipode E{i} = -{_times(_tpow(-di), f'E{i}')};")
        lines.append(
            f"antipode F{i} = -{_times(_tpow(di), f'F{i}')} + T^2*{hsum}*Tinv^2*[F{i}, T];"
        )
        h_s = f"antipode H{i} = -H{i}"
        if di:
            h_s += f" + {di}/2*(1 - T^2)*{hsum}"
        lines.append(h_s + ";")
    lines += ["counit T = 1;", "counit Tinv = 1;"]
    lines += [f"counit {x}{i} = 0;" for i in rank for x in "EFH"]
    return "\n".join(lines) + "\n"


TEMPLATES: dict[str, Callable[[int], str]] = {
    "uh_slN": _uh_slN_text,
    "classical_slN": _classical_slN_text,
}


def builtin_text(name: str) -> str:
    """Source text of a built-in presentation, e.g. ``uh_sl3`` or ``uh_slN(4)``."""
    m = _TEMPLATE_RE.match(name)
    if m:
        n = int(m.group(2) or m.group(3))
        if n < 2:
            raise UnknownPresentation(f"{name}: N must be at least 2")
        return TEMPLATES[m.group(1)](n)
    if name not in QALG_FILES:
        raise UnknownPresentation(name)
    return (files("qjord.dsl") / "qalg" / f"{name}.qalg").read_text(encoding="utf-8")


@lru_cache(maxsize=None)
def builtin(name: str) -> AlgebraPresentation:
    """Parsed built-in presentation; unknown names raise UnknownPresentation."""
    text = builtin_text(name)
    p = parse(text)
    log.debug("loaded built-in %s: %d relations", name, len(p.relations))
    return p


def builtin_names() -> list[str]:
    return list(QALG_FILES) + [f"{key}(N)" for key in TEMPLATES]
