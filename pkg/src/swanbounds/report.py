"""Serializable projections of SwanReport and their JSON / CSV / table renderings.

Groups are written as invariant-factor lists (trivial group = ``[]``) in
JSON.  In CSV a group cell is ``2x6``-style, ``1`` for the trivial group and
empty for an absent bound.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import asdict, dataclass, field, fields
from typing import Any, Iterable, Optional, Sequence

from . import __version__
from .abgroup import AbGroup
from .swan import SwanReport

__all__ = [
    "ScanRow",
    "AnalysisReport",
    "group_cell",
    "parse_group_cell",
    "rows_to_json",
    "rows_to_csv",
    "rows_from_json",
    "rows_from_csv",
    "rows_to_table",
]

Group = Optional[tuple[int, ...]]


def _g(G: Optional[AbGroup]) -> Group:
    return None if G is None else G.invariant_factors


def group_cell(g: Group) -> str:
    if g is None:
        return ""
    return "x".join(map(str, g)) if g else "1"


def parse_group_cell(s: str) -> Group:
    s = s.strip()
    if not s:
        return None
    if s == "1":
        return ()
    return tuple(int(x) for x in s.split("x"))


def group_label(g: Group) -> str:
    if g is None:
        return "-"
    return str(AbGroup(g))


def _as_group(v: Any) -> Group:
    return None if v is None else tuple(int(x) for x in v)


@dataclass(frozen=True)
class ScanRow:
    d: int
    p: int
    splitting: str
    lower_t: Group
    upper_t: Group
    exact_t: Group
    lower_rd: Group
    upper_rd: Group
    rd_equality: str
    nontrivial: bool

    GROUP_FIELDS = ("lower_t", "upper_t", "exact_t", "lower_rd", "upper_rd")

    @classmethod
    def from_report(cls, r: SwanReport) -> "ScanRow":
        return cls(
            d=r.field.d,
            p=r.p,
            splitting=r.splitting.value,
            lower_t=_g(r.lower_t),
            upper_t=_g(r.upper_t),
            exact_t=_g(r.exact_t),
            lower_rd=_g(r.lower_rd),
            upper_rd=_g(r.upper_rd),
            rd_equality=r.rd_equality.value,
            nontrivial=r.nontrivial,
        )

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        for k in self.GROUP_FIELDS:
            out[k] = None if out[k] is None else list(out[k])
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "ScanRow":
        kw = dict(data)
        for k in cls.GROUP_FIELDS:
            kw[k] = _as_group(kw[k])
        return cls(**kw)

    def to_csv_record(self) -> dict[str, str]:
        rec = {}
        for f in fields(self):
            v = getattr(self, f.name)
            if f.name in self.GROUP_FIELDS:
                rec[f.name] = group_cell(v)
            elif isinstance(v, bool):
                rec[f.name] = "true" if v else "false"
            else:
                rec[f.name] = str(v)
        return rec

    @classmethod
    def from_csv_record(cls, rec: dict[str, str]) -> "ScanRow":
        return cls(
            d=int(rec["d"]),
            p=int(rec["p"]),
            splitting=rec["splitting"],
            rd_equality=rec["rd_equality"],
            nontrivial=rec["nontrivial"] == "true",
            **{k: parse_group_cell(rec[k]) for k in cls.GROUP_FIELDS},
        )


SCAN_FIELDS = [f.name for f in fields(ScanRow)]


@dataclass(frozen=True)
class AnalysisReport:
    d: int
    disc: int
    p: int
    splitting: str
    unit_group: Group
    v_p: Group
    lower_t: Group
    upper_t: Group
    exact_t: Group
    d_equals_t: bool
    lower_rd: Group
    upper_rd: Group
    rd_equality: str
    nontrivial: bool
    stickelberger_exponent: int
    provenance: dict[str, Any] = field(default_factory=dict)

    GROUP_FIELDS = ("unit_group", "v_p", "lower_t", "upper_t", "exact_t", "lower_rd", "upper_rd")

    @classmethod
    def from_report(
        cls, r: SwanReport, stickelberger_exponent: int, provenance: dict[str, Any]
    ) -> "AnalysisReport":
        return cls(
            d=r.field.d,
            disc=r.field.disc,
            p=r.p,
            splitting=r.splitting.value,
            unit_group=_g(r.unit_group),
            v_p=_g(r.v_p),
            lower_t=_g(r.lower_t),
            upper_t=_g(r.upper_t),
            exact_t=_g(r.exact_t),
            d_equals_t=r.d_equals_t,
            lower_rd=_g(r.lower_rd),
            upper_rd=_g(r.upper_rd),
            rd_equality=r.rd_equality.value,
            nontrivial=r.nontrivial,
            stickelberger_exponent=stickelberger_exponent,
            provenance={"tool_version": __version__, **provenance},
        )

    def to_dict(self) -> dict[str, Any]:
        out = asdict(self)
        for k in self.GROUP_FIELDS:
            out[k] = None if out[k] is None else list(out[k])
        return out

    @classmethod
    def from_dict(cls, data: dict[str, Any]) -> "AnalysisReport":
        kw = dict(data)
        for k in cls.GROUP_FIELDS:
            kw[k] = _as_group(kw[k])
        return cls(**kw)

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_csv(self) -> str:
        buf = io.StringIO()
        flat = {}
        for k, v in self.to_dict().items():
            if k == "provenance":
                for pk, pv in v.items():
                    flat[f"provenance.{pk}"] = json.dumps(pv) if isinstance(pv, dict) else str(pv)
            elif k in self.GROUP_FIELDS:
                flat[k] = group_cell(getattr(self, k))
            elif isinstance(v, bool):
                flat[k] = "true" if v else "false"
            else:
                flat[k] = str(v)
        w = csv.DictWriter(buf, fieldnames=list(flat), lineterminator="\r\n")
        w.writeheader()
        w.writerow(flat)
        return buf.getvalue()

    def to_table(self) -> str:
        lines = [
            ("field", f"Q(sqrt(-{self.d})), disc {self.disc}"),
            ("p", f"{self.p} ({self.splitting})"),
            ("(O/pO)^*", group_label(self.unit_group)),
            ("V_p", group_label(self.v_p)),
            ("T_lower", group_label(self.lower_t)),
            ("T_upper", group_label(self.upper_t)),
            ("T_exact", group_label(self.exact_t)),
            ("D=T?", "yes" if self.d_equals_t else "no (ramified)"),
            ("RD_lower", group_label(self.lower_rd)),
            ("RD_upper", group_label(self.upper_rd)),
            ("RD=T?", self.rd_equality),
            ("nontrivial", "yes" if self.nontrivial else "no"),
            (
                "stickelberger exp",
                f"{self.stickelberger_exponent} ({self.provenance.get('stickelberger_source', '?')})",
            ),
        ]
        width = max(len(k) for k, _ in lines)
        return "".join(f"{k:<{width}}  {v}\n" for k, v in lines)


def rows_to_json(rows: Sequence[ScanRow]) -> str:
    return json.dumps({"rows": [r.to_dict() for r in rows]}, indent=2) + "\n"


def rows_from_json(text: str) -> list[ScanRow]:
    return [ScanRow.from_dict(r) for r in json.loads(text)["rows"]]


def rows_to_csv(rows: Iterable[ScanRow]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=SCAN_FIELDS, lineterminator="\r\n")
    w.writeheader()
    for r in rows:
        w.writerow(r.to_csv_record())
    return buf.getvalue()


def rows_from_csv(text: str) -> list[ScanRow]:
    return [ScanRow.from_csv_record(rec) for rec in csv.DictReader(io.StringIO(text))]


TABLE_HEADERS = ["d", "p", "split", "T_lower", "T_upper", "T_exact", "D=T?", "RD_lower", "RD_upper", "RD=T?", "nontrivial"]


def rows_to_table(rows: Sequence[ScanRow]) -> str:
    body = [
        [
            str(r.d),
            str(r.p),
            r.splitting,
            group_label(r.lower_t),
            group_label(r.upper_t),
            group_label(r.exact_t),
            "no" if r.splitting == "ramified" else "yes",
            group_label(r.lower_rd),
            group_label(r.upper_rd),
            r.rd_equality,
            "yes" if r.nontrivial else "no",
        ]
        for r in rows
    ]
    table = [TABLE_HEADERS] + body
    widths = [max(len(row[i]) for row in table) for i in range(len(TABLE_HEADERS))]
    return "".join("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() + "\n" for row in table)
