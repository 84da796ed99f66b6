"""Bundled catalog of maximal valid colorings and its verifier.

Each catalog entry pairs an instance with its van der Waerden number w and a
set of pattern families that expand to every maximal valid coloring (length
w-1).  A family is a token pattern in the compact run grammar extended with
variable slots "{a}", a domain per variable, and a list of excluded
assignments (the complement of prose conditions like "at least one of a and b
equals 1").  Families that state their reversals separately carry
includes_reversals; expansion then appends the reversal of every concrete
coloring, except colorings that are their own reversal.

Verification re-derives everything checkable locally: every expansion has
length w-1, passes the progression checker, totals match the recorded count,
and no two colorings coincide up to color renaming.  Whether the set is
complete (no further valid coloring of that length exists) is the search
engine's claim, not this module's; entries record in their provenance notes
how their w was established.
"""

from __future__ import annotations

import hashlib
import itertools
import json
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

from .canon import canonical_form
from .core import Coloring, ColoringSyntaxError, Instance, parse_coloring, reverse
from .table import KNOWN_W
from .validity import Violation, find_violation

SCHEMA_VERSION = 1

_VAR_TOKEN = re.compile(r"\{([A-Za-z][A-Za-z0-9]*)\}$")


class DatasetFormatError(ValueError):
    """The dataset file does not parse or misses required fields."""


class MalformedFamily(ValueError):
    """A family's pattern, variables, and exclusions do not fit together."""


@dataclass(frozen=True)
class VariableSpec:
    """One or more pattern variables with a joint domain.

    parts names the variables; each domain element assigns all of them at
    once, so ("x","y") with domain ((0,1),(1,0)) is the condition "xy = 01
    or xy = 10".  A scalar variable is the one-part case.
    """

    parts: tuple[str, ...]
    domain: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class CertificateFamily:
    instance: Instance
    w: int
    pattern: str
    variables: tuple[VariableSpec, ...]
    excluded: tuple[tuple[tuple[str, int], ...], ...]  # each: sorted (name, value) pairs
    includes_reversals: bool


@dataclass(frozen=True)
class CertificateEntry:
    instance: Instance
    w: int
    expected_total: int
    provenance: str
    families: tuple[CertificateFamily, ...]


@dataclass(frozen=True)
class CertificateDataset:
    schema_version: int
    entries: tuple[CertificateEntry, ...]


@dataclass(frozen=True)
class EntryReport:
    instance: Instance
    w: int
    expected_total: int
    actual_total: int
    failures: tuple[str, ...]
    first_violation: Violation | None

    @property
    def ok(self) -> bool:
        return not self.failures

    def __str__(self) -> str:
        head = f"w{self.instance} = {self.w}: {self.actual_total} colorings"
        if self.ok:
            return f"PASS {head}"
        lines = [f"FAIL {head}"] + [f"  - {f}" for f in self.failures]
        if self.first_violation is not None:
            lines.append(f"  first violation: {self.first_violation}")
        return "\n".join(lines)


@dataclass(frozen=True)
class VerificationReport:
    entries: tuple[EntryReport, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def __str__(self) -> str:
        lines = [str(e) for e in self.entries]
        n_bad = sum(1 for e in self.entries if not e.ok)
        lines.append(f"{len(self.entries)} entries, "
                     + ("all pass" if not n_bad else f"{n_bad} failing"))
        return "\n".join(lines)


def expand_family(f: CertificateFamily) -> list[Coloring]:
    """All concrete colorings of the family, in assignment order (the
    product of the variable domains as declared), reversals appended last."""
    slots: list[tuple[int, ...] | str] = []
    used_names: set[str] = set()
    for token in f.pattern.split():
        m = _VAR_TOKEN.match(token)
        if m:
            slots.append(m.group(1))
            used_names.add(m.group(1))
        else:
            try:
                slots.append(parse_coloring(token))
            except ColoringSyntaxError as e:
                raise MalformedFamily(f"bad pattern token {token!r}: {e}") from e
    declared: set[str] = set()
    for spec in f.variables:
        for part in spec.parts:
            if part in declared:
                raise MalformedFamily(f"variable {part!r} declared twice")
            declared.add(part)
        if not spec.domain:
            raise MalformedFamily(f"empty domain for {spec.parts}")
        for tup in spec.domain:
            if len(tup) != len(spec.parts):
                raise MalformedFamily(f"domain arity mismatch for {spec.parts}")
    if used_names - declared:
        raise MalformedFamily(f"undeclared pattern variables {sorted(used_names - declared)}")
    if declared - used_names:
        raise MalformedFamily(f"declared variables unused {sorted(declared - used_names)}")
    for constraint in f.excluded:
        for name, _ in constraint:
            if name not in declared:
                raise MalformedFamily(f"exclusion names unknown variable {name!r}")
    out: list[Coloring] = []
    for combo in itertools.product(*(spec.domain for spec in f.variables)):
        env: dict[str, int] = {}
        for spec, tup in zip(f.variables, combo):
            env.update(zip(spec.parts, tup))
        if any(all(env[n] == v for n, v in constraint) for constraint in f.excluded):
            continue
        c: list[int] = []
        for slot in slots:
            if isinstance(slot, str):
                c.append(env[slot])
            else:
                c.extend(slot)
        for x in c:
            if not 0 <= x < f.instance.r:
                raise MalformedFamily(f"color {x} out of range for {f.instance}")
        out.append(tuple(c))
    if f.includes_reversals:
        out += [reverse(c) for c in out if reverse(c) != c]
    return out


def verify_entry(entry: CertificateEntry) -> EntryReport:
    failures: list[str] = []
    first_violation: Violation | None = None
    key = tuple(entry.instance.k)
    if key in KNOWN_W and KNOWN_W[key] != entry.w:
        failures.append(f"entry w={entry.w} but the known value is {KNOWN_W[key]}")
    try:
        colorings: list[Coloring] = []
        for f in entry.families:
            colorings.extend(expand_family(f))
    except MalformedFamily as e:
        return EntryReport(entry.instance, entry.w, entry.expected_total, 0,
                           (f"malformed family: {e}",), None)
    n = len(colorings)
    if n != entry.expected_total:
        failures.append(f"expanded to {n} colorings, expected {entry.expected_total}")
    for i, c in enumerate(colorings):
        if len(c) != entry.w - 1:
            failures.append(f"coloring #{i + 1} has length {len(c)}, want {entry.w - 1}")
            continue
        v = find_violation(c, entry.instance)
        if v is not None:
            failures.append(f"coloring #{i + 1} is invalid")
            if first_violation is None:
                first_violation = v
    canon = {canonical_form(c, entry.instance, include_reversal=False) for c in colorings}
    if len(canon) != n:
        failures.append(f"only {len(canon)} distinct up to renaming, expected {n}")
    return EntryReport(entry.instance, entry.w, entry.expected_total, n,
                       tuple(failures), first_violation)


def verify_dataset(ds: CertificateDataset) -> VerificationReport:
    return VerificationReport(tuple(verify_entry(e) for e in ds.entries))


def _default_path() -> Path:
    return Path(str(resources.files(__package__).joinpath("data/certificates.json")))


def dataset_digest(path: str | Path | None = None) -> str:
    p = Path(path) if path is not None else _default_path()
    return hashlib.sha256(p.read_bytes()).hexdigest()


def _family_from_json(inst: Instance, w: int, doc: dict) -> CertificateFamily:
    variables = []
    for v in doc.get("variables", ()):
        if "name" in v:
            parts = (v["name"],)
            domain = tuple((x,) for x in v["domain"])
        else:
            parts = tuple(v["parts"])
            domain = tuple(tuple(t) for t in v["domain"])
        variables.append(VariableSpec(parts, domain))
    excluded = tuple(tuple(sorted(d.items())) for d in doc.get("excluded", ()))
    return CertificateFamily(inst, w, doc["pattern"], tuple(variables), excluded,
                             doc["includes_reversals"])


def load_dataset(path: str | Path | None = None) -> CertificateDataset:
    p = Path(path) if path is not None else _default_path()
    try:
        doc = json.loads(p.read_text())
    except OSError as e:
        raise DatasetFormatError(f"cannot read dataset: {e}") from e
    except json.JSONDecodeError as e:
        raise DatasetFormatError(f"dataset is not valid JSON: {e}") from e
    try:
        if doc["schema_version"] != SCHEMA_VERSION:
            raise DatasetFormatError(
                f"schema_version {doc['schema_version']} unsupported (want {SCHEMA_VERSION})")
        entries = []
        for e in doc["entries"]:
            inst = Instance.of(*e["instance"])
            w = e["w"]
            families = tuple(_family_from_json(inst, w, fd) for fd in e["families"])
            entries.append(CertificateEntry(inst, w, e["expected_total"],
                                            e.get("provenance", ""), families))
    except (KeyError, TypeError) as e:
        raise DatasetFormatError(f"dataset structure broken: {e!r}") from e
    return CertificateDataset(doc["schema_version"], tuple(entries))
