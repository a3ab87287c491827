"""Command-line front end.

Examples::

    fockcanon --e 2 --charge 0,0 --mu "2,1|1"
    fockcanon --e 2 --charge 0,0 --size 4 --matrix --block "4|-"
    fockcanon --e inf --charge 0,1,0 --mu "2,1|-|1" --format json
    fockcanon --e 2 --charge 0,0 --size 4 --oracle
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass
from typing import Sequence, TextIO

from .canonical import (
    CanonicalBasisEntry,
    CanonicalBasisError,
    basis_for,
    canonical_basis_up_to_einf,
    canonical_vector_einf,
    decomposition_matrix,
    einf_modulus,
)
from .combinat import Charge, Multipartition, parse_multipartition, pretty, size, sorted_labels
from .fockspace import FockVector, weight_of
from .laurentq import LaurentPoly
from .wedge_oracle import WedgeError, oracle_canonical


class UsageError(ValueError):
    pass


@dataclass(frozen=True)
class RunConfig:
    e: int | None  # None means e = infinity
    charge: tuple[int, ...]
    mu: Multipartition | None = None
    n: int | None = None
    fmt: str = "text"
    oracle: bool = False
    oracle_cap: int | None = None
    matrix: bool = False
    block: Multipartition | None = None

    def __post_init__(self):
        if self.e is not None and self.e < 2:
            raise UsageError(f"e must be at least 2 or 'inf', got {self.e}")
        if not self.charge:
            raise UsageError("charge must be non-empty")
        if (self.mu is None) == (self.n is None):
            raise UsageError("give exactly one of --mu and --size")
        if self.n is not None and self.n < 0:
            raise UsageError("--size must be non-negative")
        if self.fmt not in ("text", "json"):
            raise UsageError(f"unknown format {self.fmt!r}")
        for label in (self.mu, self.block):
            if label is not None and len(label) != len(self.charge):
                raise UsageError(f"{format_label(label)} has {len(label)} components, charge has {len(self.charge)}")


# -- parsing helpers ---------------------------------------------------------


def parse_e(text: str) -> int | None:
    if text.strip().lower() in ("inf", "infinity"):
        return None
    try:
        return int(text)
    except ValueError:
        raise UsageError(f"--e expects an integer or 'inf', got {text!r}") from None


def parse_charge(text: str) -> tuple[int, ...]:
    try:
        return tuple(int(x) for x in text.replace(" ", "").split(","))
    except ValueError:
        raise UsageError(f"--charge expects comma-separated integers, got {text!r}") from None


def format_label(la: Multipartition) -> str:
    return pretty(la)


# -- serialization -----------------------------------------------------------


def vector_to_json(v: FockVector) -> list[dict]:
    return [{"la": [list(c) for c in la], "coeff": v[la].to_json()} for la in sorted_labels(v.terms)]


def vector_from_json(obj: list[dict], s: Charge) -> FockVector:
    return FockVector(s, ((tuple(tuple(c) for c in t["la"]), LaurentPoly.from_json(t["coeff"])) for t in obj))


def report_from_json(text: str) -> list[tuple[Multipartition, dict[Multipartition, LaurentPoly]]]:
    """Parse the ``entries`` of a JSON report back into labels and coefficient maps."""
    data = json.loads(text)
    out = []
    for en in data["entries"]:
        mu = tuple(tuple(c) for c in en["mu"])
        terms = {tuple(tuple(c) for c in t["la"]): LaurentPoly.from_json(t["coeff"]) for t in en["vector"]}
        out.append((mu, terms))
    return out


# -- running -----------------------------------------------------------------


def _entries(cfg: RunConfig) -> list[CanonicalBasisEntry]:
    if cfg.e is None:
        if cfg.mu is not None:
            return [canonical_vector_einf(cfg.mu, cfg.charge)]
        return canonical_basis_up_to_einf(cfg.n, cfg.charge)
    basis = basis_for(Charge(cfg.charge, cfg.e))
    if cfg.mu is not None:
        return [basis.entry(cfg.mu)]
    return basis.up_to(cfg.n)


def _context_charge(cfg: RunConfig, entries: list[CanonicalBasisEntry]) -> Charge:
    if cfg.e is not None:
        return Charge(cfg.charge, cfg.e)
    n = max((size(en.label) for en in entries), default=0)
    return Charge(cfg.charge, einf_modulus(cfg.charge, n))


def _oracle_checks(cfg: RunConfig, entries, s: Charge) -> list[tuple[Multipartition, FockVector | None, str]]:
    out = []
    for en in entries:
        if cfg.oracle_cap is not None and size(en.label) > cfg.oracle_cap:
            continue
        try:
            ref = oracle_canonical(en.label, s)
        except WedgeError as exc:
            out.append((en.label, None, f"ERROR {exc}"))
            continue
        out.append((en.label, ref, "PASS" if ref.terms == en.vector.terms else "FAIL"))
    return out


def _write_vector_text(v: FockVector, out: TextIO) -> None:
    for la in sorted_labels(v.terms):
        out.write(f"|{format_label(la)}> : {v[la]}\n")


def run(cfg: RunConfig, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    entries = _entries(cfg)
    s = _context_charge(cfg, entries)
    if cfg.block is not None:
        wt = weight_of(cfg.block, s)
        entries = [en for en in entries if weight_of(en.label, s) == wt]
    checks = _oracle_checks(cfg, entries, s) if cfg.oracle else []
    failed = [c for c in checks if c[2] != "PASS"]

    if cfg.fmt == "json":
        report: dict = {
            "e": "inf" if cfg.e is None else cfg.e,
            "charge": list(cfg.charge),
            "entries": [{"mu": [list(c) for c in en.label], "vector": vector_to_json(en.vector)} for en in entries],
        }
        if cfg.matrix:
            m = decomposition_matrix(entries)
            report["matrix"] = {
                "rows": [[list(c) for c in la] for la in m.rows],
                "columns": [[list(c) for c in mu] for mu in m.columns],
                "cells": [[c.to_json() for c in row] for row in m.to_lists()],
            }
        if cfg.oracle:
            report["oracle"] = [
                {"mu": [list(c) for c in mu], "status": st.split()[0]}
                | ({"oracle_vector": vector_to_json(ref)} if ref is not None and st != "PASS" else {})
                for mu, ref, st in checks
            ]
        json.dump(report, out, indent=1)
        out.write("\n")
        return 1 if failed else 0

    if cfg.matrix:
        m = decomposition_matrix(entries)
        width = max([len(format_label(la)) for la in m.rows] + [0])
        cells = [[str(c) if c else "." for c in row] for row in m.to_lists()]
        colw = [max([len(format_label(mu))] + [len(r[j]) for r in cells]) for j, mu in enumerate(m.columns)]
        out.write(" " * width + "  " + "  ".join(format_label(mu).rjust(w) for mu, w in zip(m.columns, colw)) + "\n")
        for la, row in zip(m.rows, cells):
            out.write(format_label(la).ljust(width) + "  " + "  ".join(c.rjust(w) for c, w in zip(row, colw)) + "\n")
    else:
        many = len(entries) > 1
        for k, en in enumerate(entries):
            if many:
                out.write(("\n" if k else "") + f"G{format_label(en.label)}:\n")
            _write_vector_text(en.vector, out)

    by_label = {en.label: en for en in entries}
    for mu, ref, st in checks:
        out.write(f"oracle {format_label(mu)}: {st}\n")
        if st == "FAIL":
            out.write("  algorithm:\n")
            _write_vector_text(by_label[mu].vector, out)
            out.write("  oracle:\n")
            _write_vector_text(ref, out)
    return 1 if failed else 0


# -- argument parsing --------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="fockcanon",
        description="Canonical basis vectors of tensor products of level-one Fock space modules.",
    )
    p.add_argument("--e", required=True, help="quantum characteristic e >= 2, or 'inf'")
    p.add_argument("--charge", required=True, help="comma-separated residues (integer lifts when --e inf)")
    which = p.add_mutually_exclusive_group(required=True)
    which.add_argument("--mu", help="one label, e.g. '2,1|-|1'")
    which.add_argument("--size", type=int, help="all multiregular labels up to this size")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument(
        "--oracle", nargs="?", type=int, const=-1, default=None, metavar="CAP",
        help="cross-check against the wedge oracle, optionally only up to size CAP",
    )
    p.add_argument("--matrix", action="store_true", help="show a decomposition matrix")
    p.add_argument("--block", help="restrict to the weight space of this label")
    return p


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    return RunConfig(
        e=parse_e(ns.e),
        charge=parse_charge(ns.charge),
        mu=parse_multipartition(ns.mu) if ns.mu is not None else None,
        n=ns.size,
        fmt=ns.format,
        oracle=ns.oracle is not None,
        oracle_cap=None if ns.oracle in (None, -1) else ns.oracle,
        matrix=ns.matrix,
        block=parse_multipartition(ns.block) if ns.block is not None else None,
    )


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    ns = parser.parse_args(argv)
    try:
        cfg = config_from_args(ns)
        return run(cfg)
    except (UsageError, ValueError) as exc:
        print(f"fockcanon: error: {exc}", file=sys.stderr)
        return 2
    except (CanonicalBasisError, WedgeError) as exc:
        print(f"fockcanon: internal error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
