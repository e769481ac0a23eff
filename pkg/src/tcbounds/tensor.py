"""The tensor square H* (x) H* of a configuration-space ring.

This models the cohomology of the product space.  The multiplication carries
the Koszul sign, (a (x) b)(c (x) d) = (-1)^{|b||c|} ac (x) bd; restriction to
the diagonal is the algebra map a (x) b -> a*b, and its kernel is the ideal of
zero-divisors.  Two graded quantities drive the bound machinery:

* `zero_divisor_cuplength`: the largest k with Z^k != 0, where Z is the whole
  zero-divisor ideal and powers are iterated as graded product spans;
* `bar_span_length`: the largest k with V_k != 0, where V_1 is spanned by the
  classes g (x) 1 - 1 (x) g of the ring generators and V_{k+1} = V_k * V_1.

Both are computed by exact row reduction, one graded piece at a time.  The
bar-span route only multiplies degree-(m-1) classes, so it stays independent
of the full ideal iteration; their agreement (bar span <= cup-length) is a
consistency check, never an input.
"""

from __future__ import annotations

from typing import Dict, List, Optional, Tuple

from .algebra import AlgebraElement, Presentation, Word, format_terms, monomial_str
from .linalg import EchelonBasis, Vec, kernel_basis

Pair = Tuple[Word, Word]


class TensorElement:
    """Sparse element of H* (x) H*; keys are pairs of admissible words."""

    __slots__ = ("pres", "field", "terms")

    def __init__(self, pres: Presentation, field, terms: Dict[Pair, object]):
        self.pres = pres
        self.field = field
        self.terms = {k: c for k, c in terms.items() if c}

    @classmethod
    def zero(cls, pres, field):
        return cls(pres, field, {})

    @classmethod
    def one(cls, pres, field):
        return cls(pres, field, {((), ()): field.one})

    @classmethod
    def of(cls, left: AlgebraElement, right: AlgebraElement):
        """The decomposable tensor left (x) right."""
        left._compatible(right)
        field = left.field
        mul = field.mul
        terms = {}
        for u, cu in left.terms.items():
            for v, cv in right.terms.items():
                terms[(u, v)] = mul(cu, cv)
        return cls(left.pres, field, terms)

    def is_zero(self) -> bool:
        return not self.terms

    @property
    def weight(self) -> Optional[int]:
        """Common total factor count, or None when mixed (0 for zero)."""
        counts = {len(u) + len(v) for u, v in self.terms}
        if not counts:
            return 0
        if len(counts) == 1:
            return counts.pop()
        return None

    @property
    def degree(self) -> Optional[int]:
        w = self.weight
        return None if w is None else w * self.pres.degree

    def is_homogeneous(self) -> bool:
        return self.weight is not None

    def _compatible(self, other: "TensorElement"):
        if not isinstance(other, TensorElement):
            raise TypeError(f"cannot combine TensorElement with {type(other).__name__}")
        if not self.pres.same_ring(other.pres) or self.field != other.field:
            raise ValueError("elements live over different presentations or fields")

    def __add__(self, other):
        self._compatible(other)
        add = self.field.add
        terms = dict(self.terms)
        for k, c in other.terms.items():
            prev = terms.get(k)
            nv = add(prev, c) if prev is not None else c
            if nv:
                terms[k] = nv
            else:
                del terms[k]
        return TensorElement(self.pres, self.field, terms)

    def __neg__(self):
        neg = self.field.neg
        return TensorElement(self.pres, self.field, {k: neg(c) for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, scalar):
        c = self.field.coerce(scalar)
        if not c:
            return TensorElement.zero(self.pres, self.field)
        mul = self.field.mul
        return TensorElement(self.pres, self.field, {k: mul(c, v) for k, v in self.terms.items()})

    def __rmul__(self, scalar):
        if isinstance(scalar, TensorElement):
            return NotImplemented
        return self.scale(scalar)

    def __mul__(self, other):
        if not isinstance(other, TensorElement):
            return self.scale(other)
        self._compatible(other)
        pres, field = self.pres, self.field
        parity = pres.parity
        prod = pres.product
        mul, mul_int, add, neg = field.mul, field.mul_int, field.add, field.neg
        out: Dict[Pair, object] = {}
        for (u1, v1), c1 in self.terms.items():
            lv1 = len(v1)
            for (u2, v2), c2 in other.terms.items():
                pu = prod(u1, u2)
                if not pu:
                    continue
                pv = prod(v1, v2)
                if not pv:
                    continue
                c = mul(c1, c2)
                if parity and lv1 & len(u2) & 1:
                    c = neg(c)
                for wu, ku in pu.items():
                    for wv, kv in pv.items():
                        contrib = mul_int(c, ku * kv)
                        key = (wu, wv)
                        prev = out.get(key)
                        nv = add(prev, contrib) if prev is not None else contrib
                        if nv:
                            out[key] = nv
                        else:
                            del out[key]
        return TensorElement(pres, field, out)

    def __eq__(self, other):
        if not isinstance(other, TensorElement):
            return NotImplemented
        return (
            self.pres.same_ring(other.pres)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __repr__(self):
        return format_terms(
            self.terms, lambda k: f"{monomial_str(k[0])}(x){monomial_str(k[1])}"
        )


def tensor_multiply(x: TensorElement, y: TensorElement) -> TensorElement:
    return x * y


def diagonal_restriction(x: TensorElement) -> AlgebraElement:
    """Restriction to the diagonal: a (x) b -> a*b, extended linearly."""
    pres, field = x.pres, x.field
    add, mul_int = field.add, field.mul_int
    prod = pres.product
    out: Dict[Word, object] = {}
    for (u, v), c in x.terms.items():
        for w, k in prod(u, v).items():
            contrib = mul_int(c, k)
            prev = out.get(w)
            nv = add(prev, contrib) if prev is not None else contrib
            if nv:
                out[w] = nv
            else:
                del out[w]
    return AlgebraElement(pres, field, out)


def bar(v: AlgebraElement) -> TensorElement:
    """The zero-divisor v (x) 1 - 1 (x) v of a homogeneous positive-degree class."""
    if v.is_zero():
        return TensorElement.zero(v.pres, v.field)
    if not v.is_homogeneous():
        raise ValueError("bar requires a homogeneous class")
    if v.weight == 0:
        raise ValueError("bar requires positive degree")
    neg = v.field.neg
    terms: Dict[Pair, object] = {(w, ()): c for w, c in v.terms.items()}
    for w, c in v.terms.items():
        terms[((), w)] = neg(c)
    return TensorElement(v.pres, v.field, terms)


def koszul_swap(x: TensorElement) -> TensorElement:
    """The involution a (x) b -> (-1)^{|a||b|} b (x) a."""
    parity = x.pres.parity
    neg = x.field.neg
    terms: Dict[Pair, object] = {}
    for (u, v), c in x.terms.items():
        if parity and len(u) & len(v) & 1:
            c = neg(c)
        terms[(v, u)] = c
    return TensorElement(x.pres, x.field, terms)


# ---------------------------------------------------------------------------
# graded pieces and subspaces
# ---------------------------------------------------------------------------

class GradedSubspace:
    """A row-reduced subspace of one graded piece of the tensor square."""

    def __init__(self, square: "TensorSquare", weight: Optional[int],
                 echelon: EchelonBasis, degree: Optional[int] = None):
        self.square = square
        self.weight = weight
        if weight is not None:
            self.degree = weight * square.pres.degree
            self.ambient = square.basis(weight)
        else:
            # a degree where the grading is empty (not a multiple of m-1)
            self.degree = degree
            self.ambient = []
        self.echelon = echelon

    @property
    def dim(self) -> int:
        return self.echelon.dim

    def contains(self, x: TensorElement) -> bool:
        if x.is_zero():
            return True
        if self.weight is None or x.weight != self.weight:
            return False
        return self.echelon.contains(self.square.coords(x))

    def basis_elements(self) -> List[TensorElement]:
        return [self.square.element(self.weight, row) for row in self.echelon.vectors()]

    def __repr__(self):
        return f"GradedSubspace(weight={self.weight}, dim={self.dim}, ambient={len(self.ambient)})"


class TensorSquare:
    """Graded coordinate model of H* (x) H* over a fixed field.

    Caches bases and the diagonal kernels per weight; all computations consume
    frozen data, so instances are safe to share once warmed up.
    """

    def __init__(self, pres: Presentation, field):
        self.pres = pres
        self.field = field
        self.top_weight = 2 * pres.top_weight
        self._bases: Dict[int, List[Pair]] = {}
        self._index: Dict[int, Dict[Pair, int]] = {}
        self._zkernels: Dict[int, EchelonBasis] = {}

    def basis(self, w: int) -> List[Pair]:
        got = self._bases.get(w)
        if got is None:
            got = []
            for k1 in range(w + 1):
                for u in self.pres.basis(k1):
                    for v in self.pres.basis(w - k1):
                        got.append((u, v))
            self._bases[w] = got
        return got

    def index(self, w: int) -> Dict[Pair, int]:
        got = self._index.get(w)
        if got is None:
            got = {p: i for i, p in enumerate(self.basis(w))}
            self._index[w] = got
        return got

    def dim(self, w: int) -> int:
        return len(self.basis(w))

    def coords(self, x: TensorElement, weight: Optional[int] = None) -> Vec:
        w = x.weight if weight is None else weight
        if w is None:
            raise ValueError("coordinates require a homogeneous element")
        idx = self.index(w)
        return {idx[k]: c for k, c in x.terms.items()}

    def element(self, w: int, vec: Vec) -> TensorElement:
        basis = self.basis(w)
        return TensorElement(self.pres, self.field, {basis[i]: c for i, c in vec.items()})

    # -- multiplication in coordinates (the hot path) -----------------------

    def multiply_coords(self, w1: int, a: Vec, w2: int, b: Vec) -> Vec:
        field = self.field
        mul, mul_int, add, neg = field.mul, field.mul_int, field.add, field.neg
        prod = self.pres.product
        parity = self.pres.parity
        basis1, basis2 = self.basis(w1), self.basis(w2)
        idx = self.index(w1 + w2)
        out: Vec = {}
        for ia, ca in a.items():
            u1, v1 = basis1[ia]
            lv1 = len(v1)
            for ib, cb in b.items():
                u2, v2 = basis2[ib]
                pu = prod(u1, u2)
                if not pu:
                    continue
                pv = prod(v1, v2)
                if not pv:
                    continue
                c = mul(ca, cb)
                if parity and lv1 & len(u2) & 1:
                    c = neg(c)
                for wu, ku in pu.items():
                    for wv, kv in pv.items():
                        k = idx[(wu, wv)]
                        contrib = mul_int(c, ku * kv)
                        prev = out.get(k)
                        nv = add(prev, contrib) if prev is not None else contrib
                        if nv:
                            out[k] = nv
                        else:
                            del out[k]
        return out

    # -- zero divisors -------------------------------------------------------

    def diagonal_kernel(self, w: int) -> EchelonBasis:
        """Kernel of the diagonal restriction on the weight-w piece."""
        got = self._zkernels.get(w)
        if got is None:
            coerce = self.field.coerce
            alg_index = self.pres.basis_index(w)
            images = []
            for u, v in self.basis(w):
                images.append({alg_index[m]: coerce(c) for m, c in self.pres.product(u, v).items()})
            got = kernel_basis(self.field, images, self.dim(w))
            self._zkernels[w] = got
        return got

    def _span_product(self, current: Dict[int, List[Vec]],
                      factor: Dict[int, List[Vec]]) -> Dict[int, EchelonBasis]:
        """Echelonized products span(current * factor), one piece per weight."""
        out: Dict[int, EchelonBasis] = {}
        for w1, vecs1 in current.items():
            if not vecs1:
                continue
            for w2, vecs2 in factor.items():
                w = w1 + w2
                if w > self.top_weight or not vecs2:
                    continue
                eb = out.get(w)
                if eb is None:
                    eb = EchelonBasis(self.field, self.dim(w))
                    out[w] = eb
                if eb.is_full():
                    continue
                for a in vecs1:
                    for b in vecs2:
                        p = self.multiply_coords(w1, a, w2, b)
                        if p:
                            eb.insert(p)
                    if eb.is_full():
                        break
        return {w: eb for w, eb in out.items() if eb.dim}

    def zero_divisor_power_profile(self, max_power: Optional[int] = None) -> List[Dict[int, int]]:
        """Dimensions of the graded pieces of Z^1, Z^2, ... until the power dies.

        Entry k-1 maps weight -> dim of the weight piece of Z^k.  The list
        stops at the last nonzero power (or at max_power).
        """
        if self.top_weight == 0:
            return []
        z1 = {
            w: self.diagonal_kernel(w).vectors()
            for w in range(1, self.top_weight + 1)
            if self.diagonal_kernel(w).dim
        }
        if not z1:
            return []
        profile = [{w: len(vs) for w, vs in z1.items()}]
        current = z1
        while max_power is None or len(profile) < max_power:
            nxt = self._span_product(current, z1)
            if not nxt:
                break
            profile.append({w: eb.dim for w, eb in sorted(nxt.items())})
            current = {w: eb.vectors() for w, eb in nxt.items()}
        return profile

    def zero_divisor_cuplength(self) -> int:
        return len(self.zero_divisor_power_profile())

    def bar_span_profile(self, max_power: Optional[int] = None) -> List[int]:
        """Dimensions of V_1, V_2, ... where V_1 = span of barred generators."""
        v1 = EchelonBasis(self.field, self.dim(1))
        for i, j in self.pres.generators():
            g = AlgebraElement.generator(self.pres, self.field, i, j)
            v1.insert(self.coords(bar(g), weight=1))
        if not v1.dim:
            return []
        dims = [v1.dim]
        v1_vecs = v1.vectors()
        cur = v1_vecs
        k = 1
        while (k + 1) <= self.top_weight and (max_power is None or k < max_power):
            eb = EchelonBasis(self.field, self.dim(k + 1))
            for a in cur:
                for b in v1_vecs:
                    p = self.multiply_coords(k, a, 1, b)
                    if p:
                        eb.insert(p)
                if eb.is_full():
                    break
            if not eb.dim:
                break
            dims.append(eb.dim)
            cur = eb.vectors()
            k += 1
        return dims

    def bar_span_length(self) -> int:
        return len(self.bar_span_profile())


# ---------------------------------------------------------------------------
# one-shot entry points
# ---------------------------------------------------------------------------

def zero_divisor_subspace(pres: Presentation, field, degree: int,
                          square: Optional[TensorSquare] = None) -> GradedSubspace:
    """Zero-divisors of the given cohomological degree, as a row-reduced subspace."""
    d = pres.degree
    top = 2 * pres.top_weight * d
    if degree <= 0 or degree > top:
        raise ValueError(f"degree {degree} out of range (0, {top}]")
    if square is None:
        square = TensorSquare(pres, field)
    if degree % d:
        return GradedSubspace(square, None, EchelonBasis(field, 0), degree=degree)
    w = degree // d
    return GradedSubspace(square, w, square.diagonal_kernel(w))


def zero_divisor_cuplength(pres: Presentation, field,
                           square: Optional[TensorSquare] = None) -> int:
    if square is None:
        square = TensorSquare(pres, field)
    return square.zero_divisor_cuplength()


def bar_span_length(pres: Presentation, field,
                    square: Optional[TensorSquare] = None) -> int:
    if square is None:
        square = TensorSquare(pres, field)
    return square.bar_span_length()
