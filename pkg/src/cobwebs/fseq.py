"""Natural-number-valued sequences F that size the levels of a cobweb poset.

A cobweb poset over a sequence F has levels of cardinality |Phi_k| = F_k
(0-based, every level nonempty).  Built-in kinds:

    naturals     F_k = k + 1                 (sizes 1, 2, 3, ...)
    fibonacci    F_0 = F_1 = 1, F_k = F_{k-1} + F_{k-2}
    gaussian(q)  F_0 = 1, F_k = 1 + q + ... + q^{k-1}  (q-integers, q >= 2)
    constant(c)  F_k = c
    explicit     a fixed finite list of sizes

Values beyond the signed 64-bit range are reported as overflow rather
than produced.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

MAX_LEVEL_SIZE = 2**63 - 1

KINDS = ("naturals", "fibonacci", "gaussian", "constant", "explicit")


@dataclass(frozen=True)
class FSequence:
    """A level-cardinality sequence; construct via the classmethods."""

    kind: str
    q: Optional[int] = None
    c: Optional[int] = None
    values: Optional[tuple[int, ...]] = None

    def __post_init__(self) -> None:
        if self.kind not in KINDS:
            raise ValueError(f"unknown sequence kind {self.kind!r}")
        if self.kind == "gaussian":
            if self.q is None or self.q < 2:
                raise ValueError(f"gaussian base must be an integer >= 2, got {self.q}")
        if self.kind == "constant":
            if self.c is None or self.c < 1:
                raise ValueError(f"constant value must be an integer >= 1, got {self.c}")
        if self.kind == "explicit":
            if not self.values:
                raise ValueError("explicit sequence needs a nonempty list of sizes")
            bad = [v for v in self.values if v < 1]
            if bad:
                raise ValueError(f"explicit sizes must be >= 1, got {bad}")

    @classmethod
    def naturals(cls) -> "FSequence":
        return cls("naturals")

    @classmethod
    def fibonacci(cls) -> "FSequence":
        return cls("fibonacci")

    @classmethod
    def gaussian(cls, q: int) -> "FSequence":
        return cls("gaussian", q=q)

    @classmethod
    def constant(cls, c: int) -> "FSequence":
        return cls("constant", c=c)

    @classmethod
    def explicit(cls, values) -> "FSequence":
        return cls("explicit", values=tuple(int(v) for v in values))

    @classmethod
    def parse(cls, spec: str) -> "FSequence":
        """Parse a CLI spec string.

        Accepted forms: ``naturals``, ``fibonacci``, ``gaussian:2``,
        ``constant:3``, ``explicit:1,1,2,3,5``.
        """
        kind, _, arg = spec.partition(":")
        kind = kind.strip()
        try:
            if kind == "naturals":
                return cls.naturals()
            if kind == "fibonacci":
                return cls.fibonacci()
            if kind == "gaussian":
                return cls.gaussian(int(arg))
            if kind == "constant":
                return cls.constant(int(arg))
            if kind == "explicit":
                return cls.explicit(int(v) for v in arg.split(","))
        except ValueError as exc:
            raise ValueError(f"bad sequence spec {spec!r}: {exc}") from None
        raise ValueError(f"bad sequence spec {spec!r}: unknown kind {kind!r}")


def level_size(seq: FSequence, k: int) -> int:
    """F_k, the cardinality of level k (0-based)."""
    if k < 0:
        raise ValueError(f"level index must be >= 0, got {k}")
    if seq.kind == "naturals":
        value = k + 1
    elif seq.kind == "fibonacci":
        a, b = 1, 1
        for _ in range(k):
            a, b = b, a + b
        value = a
    elif seq.kind == "gaussian":
        value = 1 if k == 0 else (seq.q**k - 1) // (seq.q - 1)
    elif seq.kind == "constant":
        value = seq.c
    else:
        if k >= len(seq.values):
            raise IndexError(
                f"level index {k} out of range for explicit sequence of "
                f"length {len(seq.values)}"
            )
        value = seq.values[k]
    if value > MAX_LEVEL_SIZE:
        raise OverflowError(f"level size F_{k} exceeds 64-bit range")
    return value


def level_sizes(seq: FSequence, n: int) -> list[int]:
    """The first n cardinalities [F_0, ..., F_{n-1}]."""
    if n < 1:
        raise ValueError(f"level count must be >= 1, got {n}")
    return [level_size(seq, k) for k in range(n)]
