"""Search results and the identity of a scan."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass

from ..modmath import Factorization, ResidueClass

KINDS = ("prime", "square-pseudoprime", "semiprime-pseudoprime", "general-pseudoprime")


@dataclass(frozen=True)
class SearchHit:
    """A prime or pseudoprime found by a scan, with its direct-evaluation witness.

    ``residual`` is ``W_n - 1`` (or ``M_n - 1``) at the modulus that decides
    the hit, so it is always the zero class. ``b_pm3`` is ``B_{p-3} mod p``
    for prime hits and None otherwise.
    """

    n: int
    family: str
    kind: str
    order: int
    factorization: Factorization
    residual: ResidueClass
    confirmed: bool = True
    b_pm3: ResidueClass | None = None

    def to_record(self) -> dict:
        return {
            "n": self.n,
            "family": self.family,
            "kind": self.kind,
            "order": self.order,
            "factors": self.factorization.as_lists(),
            "residual": str(self.residual.value),
            "modulus": str(self.residual.modulus),
            "confirmed": self.confirmed,
            "b_pm3": None if self.b_pm3 is None else str(self.b_pm3.value),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_record(), separators=(",", ":"))

    @classmethod
    def from_record(cls, rec: dict) -> "SearchHit":
        factors = Factorization(tuple((int(p), int(e)) for p, e in rec["factors"]))
        b = rec.get("b_pm3")
        return cls(
            n=int(rec["n"]),
            family=rec["family"],
            kind=rec["kind"],
            order=int(rec["order"]),
            factorization=factors,
            residual=ResidueClass(int(rec["residual"]), int(rec["modulus"])),
            confirmed=bool(rec["confirmed"]),
            b_pm3=None if b is None else ResidueClass(int(b), factors.factors[0][0]),
        )

    @classmethod
    def from_json(cls, line: str) -> "SearchHit":
        return cls.from_record(json.loads(line))

    def human(self) -> str:
        sym = "W" if self.family == "W" else "M"
        base = self.factorization.factors[0][0]
        if self.kind == "prime":
            mod = f"{self.n}^4"
        elif self.kind == "square-pseudoprime":
            mod = f"{base}^4"
        else:
            mod = f"{self.n}" if self.order == 1 else f"{self.n}^{self.order}"
        text = f"{sym}_{self.n} ≡ 1 (mod {mod})"
        shape = " × ".join(f"{p}" if e == 1 else f"{p}^{e}" for p, e in self.factorization)
        if self.kind != "prime":
            text += f"  [{self.kind}, order {self.order}, n = {shape}]"
        return text


@dataclass(frozen=True)
class ScanSpec:
    """Everything that determines the output of a scan.

    ``lo``/``hi`` bound the primes for the prime and square scans; for the
    semiprime and general scans ``hi`` is the exclusive bound on ``n``.
    """

    kind: str  # wprimes | mprimes | square | semiprime | general
    family: str
    order: int
    lo: int
    hi: int
    seed: int = 0
    sample_rate: float = 0.01
    strict: bool = False
    include_prime_powers: bool = False
    block: int = 1 << 14

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True, separators=(",", ":"))

    @classmethod
    def from_json(cls, text: str) -> "ScanSpec":
        return cls(**json.loads(text))
