"""
Regeneration of the published parameter tables, with printed-vs-computed flags
"""

import logging
from dataclasses import dataclass, field
from typing import Any

from .infoset import valid_factorizations
from .pdsets import baselines, ranked_factorizations

logger = logging.getLogger(__name__)

# (m, n, r1, r2, a) exactly as printed
PRINTED_TABLE1 = [
    (4, 5, 3, 5, 2),
    (6, 63, 7, 9, 3),
    (8, 255, 3, 85, 2),
    (8, 255, 15, 17, 4),
    (8, 255, 5, 51, 4),
    (9, 511, 7, 73, 3),
    (10, 1023, 3, 341, 2),
    (10, 1023, 11, 93, 10),
    (10, 1023, 31, 33, 5),
    (11, 2047, 23, 89, 11),
]

# m -> (r1, r2, l, t, A, B1, B2, s) exactly as printed
PRINTED_TABLE2 = {
    4: (5, 3, 16, 8, 3, 1, 2, 5),
    6: (9, 7, 64, 32, 5, 3, 8, 13),
    8: (17, 15, 256, 128, 28, 16, 27, 44),
    9: (73, 7, 512, 256, 51, 32, 50, 62),
    10: (11, 93, 1024, 512, 93, 64, 92, 185),
    11: (23, 89, 2048, 1024, 170, 128, 169, 266),
    12: (13, 315, 4096, 2048, 315, 256, 314, 629),
    14: (43, 381, 16384, 8192, 1092, 1024, 1091, 1523),
    15: (151, 217, 32768, 16384, 2047, 2048, 2047, 2386),
    16: (257, 255, 65536, 32768, 3855, 2048, 3854, 4334),
}

TABLE2_M = tuple(PRINTED_TABLE2)

GORDON_SCHONHEIM_NOTE = (
    "Gordon-Schonheim: the smallest s-PD-set has s + 1 elements, "
    "i.e. column A + 1 for the translation PD-sets."
)


@dataclass(frozen=True)
class Table1Row:
    m: int
    n: int
    r1: int
    r2: int
    a: int
    flags: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "n": self.n,
            "r1": self.r1,
            "r2": self.r2,
            "a": self.a,
            "flags": list(self.flags),
        }


@dataclass(frozen=True)
class Table2Row:
    m: int
    r1: int
    r2: int
    l: int  # noqa: E741
    t: int  # as printed: equals the minimum distance 2^(m-1)
    packing_radius: int
    col_a: int
    col_b1: int | None
    col_b2: int
    s: int
    gs_min_pd_size: int
    multiple: bool
    flags: tuple[str, ...] = field(default=())

    def as_dict(self) -> dict[str, Any]:
        return {
            "m": self.m,
            "multiple": self.multiple,
            "r1": self.r1,
            "r2": self.r2,
            "l": self.l,
            "t": self.t,
            "packing_radius": self.packing_radius,
            "A": self.col_a,
            "B1": self.col_b1,
            "B2": self.col_b2,
            "s": self.s,
            "gs_min_pd_size": self.gs_min_pd_size,
            "flags": list(self.flags),
        }


def table1(max_m: int = 11) -> list[Table1Row]:
    """Every coprime splitting for 3 <= m <= max_m, smaller factor as r1"""
    printed = {(m, r1, r2): n for m, n, r1, r2, _ in PRINTED_TABLE1}
    rows = []
    for m in range(3, max_m + 1):
        for fact in valid_factorizations(m):
            if fact.r1 > fact.r2:
                continue
            n = fact.n
            flags = ()
            printed_n = printed.get((m, fact.r1, fact.r2))
            if printed_n is not None and printed_n != n:
                flags = (f"n: computed {n} != printed {printed_n}",)
            rows.append(Table1Row(m=m, n=n, r1=fact.r1, r2=fact.r2, a=fact.a, flags=flags))
    return rows


def table2(ms: tuple[int, ...] = TABLE2_M) -> list[Table2Row]:
    """Phased-decoder s next to the earlier PD-set baselines, best factorization per m"""
    rows = []
    for m in ms:
        ranked = ranked_factorizations(m)
        if not ranked:
            logger.info(f"m={m}: 2^{m} - 1 has no valid decomposition, skipped")
            continue
        fact, s = ranked[0]
        base = baselines(m)
        row = Table2Row(
            m=m,
            r1=fact.r1,
            r2=fact.r2,
            l=1 << m,
            t=1 << (m - 1),
            packing_radius=(1 << (m - 2)) - 1,
            col_a=base.col_a,
            col_b1=base.col_b1,
            col_b2=base.col_b2,
            s=s,
            gs_min_pd_size=base.gordon_schonheim_min_size,
            multiple=len(ranked) > 1,
        )
        flags = _table2_flags(row)
        for flag in flags:
            logger.warning(f"Correctable-error table, m={m}: {flag}")
        rows.append(Table2Row(**{**row.__dict__, "flags": flags}))
    return rows


def _table2_flags(row: Table2Row) -> tuple[str, ...]:
    printed = PRINTED_TABLE2.get(row.m)
    if printed is None:
        return ()
    computed = (row.r1, row.r2, row.l, row.t, row.col_a, row.col_b1, row.col_b2, row.s)
    names = ("r1", "r2", "l", "t", "A", "B1", "B2", "s")
    return tuple(
        f"{name}: formula {value} != printed {shown}"
        for name, value, shown in zip(names, computed, printed, strict=True)
        if value != shown
    )


def render_columns(headers: list[str], body: list[list[str]]) -> str:
    widths = [max([len(h), *(len(r[i]) for r in body)]) for i, h in enumerate(headers)]
    lines = ["  ".join(h.rjust(w) for h, w in zip(headers, widths, strict=True))]
    lines.append("  ".join("-" * w for w in widths))
    for r in body:
        lines.append("  ".join(c.rjust(w) for c, w in zip(r, widths, strict=True)))
    return "\n".join(lines)


def render_table1(rows: list[Table1Row]) -> str:
    body = [
        [str(r.m), str(r.n), str(r.r1), str(r.r2), str(r.a), "; ".join(r.flags)] for r in rows
    ]
    return render_columns(["m", "n", "r1", "r2", "a", "flags"], body)


def render_table2(rows: list[Table2Row]) -> str:
    body = [
        [
            f"{r.m}{'*' if r.multiple else ''}",
            str(r.r1),
            str(r.r2),
            str(r.l),
            str(r.t),
            str(r.packing_radius),
            str(r.col_a),
            "-" if r.col_b1 is None else str(r.col_b1),
            str(r.col_b2),
            str(r.s),
            "; ".join(r.flags),
        ]
        for r in rows
    ]
    headers = ["m", "r1", "r2", "l", "t", "radius", "A", "B1", "B2", "s", "flags"]
    footer = [
        "t is shown as printed (the minimum distance); radius = floor((t - 1) / 2).",
        "* more than one full-order factorization; the one with the largest s is shown.",
        GORDON_SCHONHEIM_NOTE,
    ]
    return render_columns(headers, body) + "\n\n" + "\n".join(footer)
