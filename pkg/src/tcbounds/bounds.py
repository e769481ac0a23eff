"""Certified topological-complexity bounds for configuration spaces F(R^m, n).

TC conventions are unreduced throughout: TC(point) = 1, TC(circle) = 2.

Lower bounds come from zero-divisor cup-lengths (a nonzero product of k
zero-divisors forces TC > k).  Upper bounds come from four sources:

* dimension: TC <= 2*dim + 1 for a complex of dimension dim;
* connectivity: for an (s-1)-connected complex, TC < (2*dim + 1)/s + 1,
  and TC <= r + 1 when 2*dim = r*s;
* sharpness: with 2*dim = r*s and free degree-s homology, TC = r + 1 exactly
  when some product of r barred degree-s classes survives, so a bar-span
  length below r improves the bound to r;
* the m = 2 product trick: F(R^2, n) splits off a circle factor, giving
  TC <= (2(n-2) + 1) + 2 - 1 = 2n - 2.

`assemble_report` combines these for F(R^m, n) and compares the pinched value
against the known closed form (2n - 1 for m odd, 2n - 2 for m even).

Homotopy-dimension inputs are taken as facts, recorded in the diagnostics:
dim = (m-1)(n-1) for m >= 3, dim = n-1 for m = 2.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dataclass_field
from fractions import Fraction
from typing import List, Optional, Tuple

from .algebra import Presentation
from .coeffs import QQ
from .tensor import TensorSquare

LOWER_TAG = "zero-divisor cup-length + 1"
UPPER_TAGS = {
    "dimension": "dimension bound 2*dim + 1",
    "connectivity": "connectivity bound",
    "sharpness": "bar-product sharpness",
    "product": "circle-factor product bound (m = 2)",
}


class ClosedFormContradiction(AssertionError):
    """A pinched report disagreed with the closed form; the engine is broken."""


class CapExceeded(ValueError):
    """Requested size is beyond the configured resource caps."""


@dataclass(frozen=True)
class Caps:
    max_n: int = 5
    max_m: int = 9

    def check(self, m: int, n: int) -> None:
        if n > self.max_n or m > self.max_m:
            raise CapExceeded(
                f"(m={m}, n={n}) exceeds caps (max_m={self.max_m}, max_n={self.max_n})"
            )


def closed_form_tc(m: int, n: int) -> int:
    """The known value of TC(F(R^m, n)): 1 for n = 1, else 2n-1 (m odd) or 2n-2 (m even)."""
    if m < 2:
        raise ValueError(f"ambient dimension m={m} must be >= 2")
    if n < 1:
        raise ValueError(f"point count n={n} must be >= 1")
    if n == 1:
        return 1
    return 2 * n - 1 if m % 2 else 2 * n - 2


def dimension_upper(dim: int) -> int:
    if dim < 0:
        raise ValueError("dimension must be >= 0")
    return 2 * dim + 1


def connectivity_upper(dim: int, s: int) -> int:
    """Upper bound for an (s-1)-connected complex of dimension dim, s >= 2.

    Divisible case 2*dim = r*s gives r + 1; otherwise the largest integer
    strictly below (2*dim + 1)/s + 1.
    """
    if s <= 1:
        raise ValueError("connectivity bound needs s >= 2")
    if dim < 1:
        raise ValueError("connectivity bound needs dim >= 1")
    if (2 * dim) % s == 0:
        return 2 * dim // s + 1
    b = Fraction(2 * dim + 1, s) + 1
    return b.numerator // b.denominator if b.denominator > 1 else int(b) - 1


def sharpness_upper(dim: int, s: int, bar_len: int) -> int:
    """r + 1 when a length-r bar product survives, else r (with 2*dim = r*s)."""
    if s <= 1:
        raise ValueError("sharpness bound needs s >= 2")
    if (2 * dim) % s:
        raise ValueError(f"sharpness bound needs s | 2*dim, got dim={dim}, s={s}")
    r = 2 * dim // s
    return r + 1 if bar_len >= r else r


def product_upper_m2(n: int) -> int:
    """TC(F(R^2, n)) <= 2n - 2 via the circle factor: (2(n-2)+1) + 2 - 1."""
    if n < 2:
        raise ValueError("product bound needs n >= 2")
    return (2 * (n - 2) + 1) + 2 - 1


def lower_from_zcl(zcl: int) -> int:
    if zcl < 0:
        raise ValueError("cup-length must be >= 0")
    return zcl + 1


@dataclass
class BoundsReport:
    m: int
    n: int
    closed_form: int
    field_used: str
    lower: Optional[int] = None
    lower_source: Optional[str] = None
    upper: Optional[int] = None
    upper_source: Optional[str] = None
    pinched: bool = False
    diagnostics: List[Tuple[str, int]] = dataclass_field(default_factory=list)
    warnings: List[str] = dataclass_field(default_factory=list)

    @property
    def computed(self) -> bool:
        return self.lower is not None and self.upper is not None

    def to_json_dict(self) -> dict:
        return {
            "m": self.m,
            "n": self.n,
            "closed_form": self.closed_form,
            "field": self.field_used,
            "lower": self.lower,
            "lower_source": self.lower_source,
            "upper": self.upper,
            "upper_source": self.upper_source,
            "pinched": self.pinched,
            "diagnostics": [[tag, value] for tag, value in self.diagnostics],
            "warnings": list(self.warnings),
        }

    @classmethod
    def from_json_dict(cls, data: dict) -> "BoundsReport":
        return cls(
            m=data["m"],
            n=data["n"],
            closed_form=data["closed_form"],
            field_used=data["field"],
            lower=data["lower"],
            lower_source=data["lower_source"],
            upper=data["upper"],
            upper_source=data["upper_source"],
            pinched=data["pinched"],
            diagnostics=[(tag, value) for tag, value in data["diagnostics"]],
            warnings=list(data["warnings"]),
        )

    def text_lines(self) -> List[str]:
        lines = [
            f"F(R^{self.m}, {self.n})  over {self.field_used}",
            f"  closed form : TC = {self.closed_form}",
        ]
        if not self.computed:
            lines.append("  bounds      : not computed (resource cap exceeded)")
        else:
            lines.append(f"  lower bound : {self.lower}  [{self.lower_source}]")
            lines.append(f"  upper bound : {self.upper}  [{self.upper_source}]")
            lines.append(f"  pinched     : {'yes' if self.pinched else 'no'}")
        for tag, value in self.diagnostics:
            lines.append(f"  diag        : {tag} = {value}")
        for w in self.warnings:
            lines.append(f"  warning     : {w}")
        return lines


def assemble_report(m: int, n: int, field=QQ, caps: Caps = Caps(),
                    pres: Optional[Presentation] = None) -> BoundsReport:
    """Compute and cross-check TC bounds for F(R^m, n).

    The lower bound is the zero-divisor cup-length over the requested field.
    The sharpness upper bound always consumes the bar-span length over Q: the
    ring and its tensor square are free Z-modules, so rational nonvanishing of
    a bar product is the same as integral nonvanishing, which is what the
    sharpness criterion needs.  A modular field can only weaken the lower
    bound (recorded as a warning for characteristic 2), never the upper one.

    `pres` may supply an already-built (e.g. cache-backed) presentation.

    Raises ClosedFormContradiction if a pinched value disagrees with the closed
    form, and CapExceeded when (m, n) is beyond `caps`.
    """
    report = BoundsReport(
        m=m, n=n, closed_form=closed_form_tc(m, n), field_used=field.describe()
    )
    caps.check(m, n)
    if field.characteristic == 2:
        report.warnings.append(
            "characteristic 2 kills the doubled square of barred even-degree classes; "
            "lower bounds for odd m can degrade below the rational value"
        )

    if pres is None:
        pres = Presentation(n, m)
    elif (pres.n, pres.m) != (n, m):
        raise ValueError(f"presentation is for (n={pres.n}, m={pres.m}), not (n={n}, m={m})")
    square = TensorSquare(pres, field)
    zcl = square.zero_divisor_cuplength()
    report.lower = lower_from_zcl(zcl)
    report.lower_source = LOWER_TAG
    report.diagnostics.append(("zero_divisor_cuplength", zcl))

    if field == QQ:
        bar_len = square.bar_span_length()
    else:
        bar_len = TensorSquare(pres, QQ).bar_span_length()
    report.diagnostics.append(("bar_span_length_over_Q", bar_len))

    candidates: List[Tuple[int, str]] = []
    if m >= 3:
        dim = (m - 1) * (n - 1)
        s = m - 1
        candidates.append((dimension_upper(dim), "dimension"))
        if s >= 2 and dim >= 1:
            candidates.append((connectivity_upper(dim, s), "connectivity"))
        if s >= 2 and (2 * dim) % s == 0:
            candidates.append((sharpness_upper(dim, s, bar_len), "sharpness"))
    else:
        dim = n - 1
        candidates.append((dimension_upper(dim), "dimension"))
        if n >= 2:
            candidates.append((product_upper_m2(n), "product"))
    report.diagnostics.append(("homotopy_dimension", dim))
    for value, tag in candidates:
        report.diagnostics.append((f"upper_{tag}", value))

    best, best_tag = min(candidates)
    report.upper = best
    report.upper_source = UPPER_TAGS[best_tag]

    if report.lower > report.upper:
        raise ClosedFormContradiction(
            f"lower bound {report.lower} exceeds upper bound {report.upper} "
            f"for (m={m}, n={n}) over {field.describe()}"
        )
    report.pinched = report.lower == report.upper
    if report.pinched and report.lower != report.closed_form:
        raise ClosedFormContradiction(
            f"pinched at {report.lower} but the closed form is {report.closed_form} "
            f"for (m={m}, n={n})"
        )
    return report


def capped_report(m: int, n: int, field=QQ, caps: Caps = Caps()) -> BoundsReport:
    """Like `assemble_report`, but a cap overflow yields an unknown-bounds report."""
    try:
        return assemble_report(m, n, field=field, caps=caps)
    except CapExceeded as exc:
        report = BoundsReport(
            m=m, n=n, closed_form=closed_form_tc(m, n), field_used=field.describe()
        )
        report.warnings.append(f"not computed: {exc}")
        return report
