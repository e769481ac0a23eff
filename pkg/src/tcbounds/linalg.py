"""Exact sparse row reduction over a field.

Vectors are dicts {column: nonzero value}.  An `EchelonBasis` keeps a reduced
row echelon basis of a subspace of F^width: every row has a leading 1 in its
pivot column, and pivot columns are eliminated from all other rows.  Because
of that, reducing a vector touches each pivot at most once.
"""

from __future__ import annotations

from typing import Dict, List, Tuple

Vec = Dict[int, object]


class EchelonBasis:
    def __init__(self, field, width: int):
        self.field = field
        self.width = width
        self._rows: Dict[int, Vec] = {}  # pivot column -> row, row[pivot] == 1

    @property
    def dim(self) -> int:
        return len(self._rows)

    def is_full(self) -> bool:
        return len(self._rows) == self.width

    def reduce(self, vec: Vec) -> Vec:
        """Residual of vec after eliminating all pivot columns (vec untouched)."""
        r = dict(vec)
        rows = self._rows
        sub, mul = self.field.sub, self.field.mul
        for p in sorted(c for c in r if c in rows):
            c = r.get(p)
            if not c:
                continue
            for col, val in rows[p].items():
                nv = sub(r.get(col, 0), mul(c, val)) if col in r else self.field.neg(mul(c, val))
                if nv:
                    r[col] = nv
                else:
                    r.pop(col, None)
        return r

    def contains(self, vec: Vec) -> bool:
        return not self.reduce(vec)

    def insert(self, vec: Vec) -> bool:
        """Add a vector to the span; returns True when the dimension grew."""
        r = self.reduce(vec)
        if not r:
            return False
        p = min(r)
        inv = self.field.inv(r[p])
        mul, sub = self.field.mul, self.field.sub
        row = {col: mul(inv, val) for col, val in r.items()}
        for other in self._rows.values():
            c = other.get(p)
            if c is None:
                continue
            for col, val in row.items():
                nv = sub(other.get(col, 0), mul(c, val)) if col in other else self.field.neg(mul(c, val))
                if nv:
                    other[col] = nv
                else:
                    other.pop(col, None)
        self._rows[p] = row
        return True

    def pivots(self) -> List[int]:
        return sorted(self._rows)

    def vectors(self) -> List[Vec]:
        """Basis rows in pivot order (copies)."""
        return [dict(self._rows[p]) for p in sorted(self._rows)]

    def dense(self) -> List[List[object]]:
        zero = self.field.zero
        out = []
        for p in sorted(self._rows):
            row = self._rows[p]
            out.append([row.get(c, zero) for c in range(self.width)])
        return out


def kernel_basis(field, images: List[Vec], source_dim: int) -> EchelonBasis:
    """Kernel of the map sending source basis vector i to images[i].

    Forward-eliminates the augmented rows [image_i | e_i]; rows whose image
    part dies yield kernel vectors, collected into an RREF basis.
    """
    ker = EchelonBasis(field, source_dim)
    pivot_rows: Dict[int, Tuple[Vec, Vec]] = {}
    sub, mul, inv = field.sub, field.mul, field.inv

    def eliminate(target: Vec, src: Vec, factor, prow: Vec, psrc: Vec):
        for col, val in prow.items():
            nv = sub(target.get(col, 0), mul(factor, val)) if col in target else field.neg(mul(factor, val))
            if nv:
                target[col] = nv
            else:
                target.pop(col, None)
        for col, val in psrc.items():
            nv = sub(src.get(col, 0), mul(factor, val)) if col in src else field.neg(mul(factor, val))
            if nv:
                src[col] = nv
            else:
                src.pop(col, None)

    for i in range(source_dim):
        img = dict(images[i])
        src: Vec = {i: field.one}
        while img:
            lead = min(img)
            pivot = pivot_rows.get(lead)
            if pivot is None:
                break
            eliminate(img, src, img[lead], pivot[0], pivot[1])
        if not img:
            ker.insert(src)
        else:
            lead = min(img)
            scale = inv(img[lead])
            img = {c: mul(scale, v) for c, v in img.items()}
            src = {c: mul(scale, v) for c, v in src.items()}
            pivot_rows[lead] = (img, src)
    return ker
