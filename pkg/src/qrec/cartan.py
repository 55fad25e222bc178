"""Static data for the simple Lie types: Cartan matrices, symmetrizers,
recurrence-order tables and dimension-growth degrees.

Node numbering: the classical families are chains 1..r with the short/long
asymmetry on the last bond (B: node r short, C: node r long); D attaches
node r to node r-2; E types are chains 1..(r-1) with node r attached to
node 3; F4 is 1-2=>3-4 (nodes 3,4 short); G2 has node 1 long, node 2 short.
"""
from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from importlib import resources

RANK_BOUNDS = {"A": (1, None), "B": (2, None), "C": (2, None), "D": (3, None),
               "E": (6, 8), "F": (4, 4), "G": (2, 2)}


@dataclass(frozen=True)
class LieType:
    family: str
    rank: int

    def __post_init__(self):
        bounds = RANK_BOUNDS.get(self.family)
        if bounds is None:
            raise ValueError(f"unknown family {self.family!r}")
        lo, hi = bounds
        if self.rank < lo or (hi is not None and self.rank > hi):
            raise ValueError(f"rank {self.rank} out of range for family {self.family}")

    @classmethod
    def parse(cls, text: str) -> "LieType":
        text = text.strip()
        if len(text) < 2 or not text[1:].isdigit():
            raise ValueError(f"cannot parse Lie type {text!r} (expected e.g. 'B3')")
        return cls(text[0].upper(), int(text[1:]))

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"


@dataclass(frozen=True)
class CartanData:
    lie_type: LieType
    cartan: tuple[tuple[int, ...], ...]
    t: tuple[int, ...]
    quadratic_form: tuple[tuple[Fraction, ...], ...]
    cartan_inverse: tuple[tuple[Fraction, ...], ...]

    @property
    def rank(self) -> int:
        return self.lie_type.rank


def _chain_matrix(r):
    mat = [[0] * r for _ in range(r)]
    for i in range(r):
        mat[i][i] = 2
    for i in range(r - 1):
        mat[i][i + 1] = -1
        mat[i + 1][i] = -1
    return mat


def _cartan_matrix_and_t(lt: LieType):
    fam, r = lt.family, lt.rank
    mat = _chain_matrix(r)
    t = [1] * r
    if fam == "B":
        mat[r - 1][r - 2] = -2
        t[r - 1] = 2
    elif fam == "C":
        mat[r - 2][r - 1] = -2
        t = [2] * (r - 1) + [1]
    elif fam == "D":
        mat[r - 1][r - 2] = mat[r - 2][r - 1] = 0
        mat[r - 1][r - 3] = mat[r - 3][r - 1] = -1
    elif fam == "E":
        mat[r - 1][r - 2] = mat[r - 2][r - 1] = 0
        mat[r - 1][2] = mat[2][r - 1] = -1
    elif fam == "F":
        mat[2][1] = -2
        t = [1, 1, 2, 2]
    elif fam == "G":
        mat[0][1] = -1
        mat[1][0] = -3
        t = [1, 3]
    return mat, t


@lru_cache(maxsize=None)
def cartan_data(lt: LieType) -> CartanData:
    """Cartan matrix, squared-length labels and the exact form (omega_a, omega_b)."""
    from .linalg import invert_matrix

    mat, t = _cartan_matrix_and_t(lt)
    inv = invert_matrix(mat)
    # (omega_a, omega_b) = (C^-1)_ab / t_a; symmetric because C = diag(t) * S.
    form = [[inv[a][b] / t[a] for b in range(lt.rank)] for a in range(lt.rank)]
    return CartanData(
        lie_type=lt,
        cartan=tuple(tuple(row) for row in mat),
        t=tuple(t),
        quadratic_form=tuple(tuple(row) for row in form),
        cartan_inverse=tuple(tuple(row) for row in inv),
    )


def growth_degree(lt: LieType) -> list[int]:
    """Row sums of 2*C^-1: the polynomial growth degree of each node's
    dimension sequence. Integral for every simple type."""
    cd = cartan_data(lt)
    degs = []
    for row in cd.cartan_inverse:
        total = 2 * sum(row)
        if total.denominator != 1:
            raise ArithmeticError(f"non-integer growth degree {total} for {lt}")
        degs.append(int(total))
    return degs


@lru_cache(maxsize=None)
def lm_coefficient(m: int, n: int) -> int:
    """Triangle L with L(m,0)=1, L(m,m)=(3^m+1)/2, L(m,n)=2L(m-1,n-1)+L(m-1,n)."""
    if not 0 <= n <= m:
        raise ValueError(f"L({m},{n}) out of domain 0 <= n <= m")
    if n == 0:
        return 1
    if n == m:
        return (3**m + 1) // 2
    return 2 * lm_coefficient(m - 1, n - 1) + lm_coefficient(m - 1, n)


@lru_cache(maxsize=None)
def mm_coefficient(m: int, n: int) -> int:
    """Triangle M with M(m,0)=1, M(m,m)=2*3^m-2^m, same interior recursion as L."""
    if not 0 <= n <= m:
        raise ValueError(f"M({m},{n}) out of domain 0 <= n <= m")
    if n == 0:
        return 1
    if n == m:
        return 2 * 3**m - 2**m
    return 2 * mm_coefficient(m - 1, n - 1) + mm_coefficient(m - 1, n)


# Minimal recurrence orders for the exceptional types; None marks nodes whose
# order is not tabulated (the CLI treats those as discovery targets).
_EXCEPTIONAL_ORDERS = {
    ("E", 6): (27, 243, None, 243, 27, 73),
    ("E", 7): (127, None, None, None, None, 56, None),
    ("E", 8): (None, None, None, None, None, None, 241, None),
    ("F", 4): (25, None, None, 74),
    ("G", 2): (7, 27),
}


def predicted_order(lt: LieType, a: int):
    """Tabulated minimal recurrence order for node a (1-based), or None if unknown."""
    if not 1 <= a <= lt.rank:
        raise ValueError(f"node {a} out of range for {lt}")
    fam, r = lt.family, lt.rank
    if fam == "A":
        import math
        return math.comb(r + 1, a)
    if fam == "B":
        return lm_coefficient(r, a) if a < r else 3**r - 2**r + 1
    if fam == "C":
        return mm_coefficient(r, a) if a < r else 2**r
    if fam == "D":
        return lm_coefficient(r, a) if a <= r - 2 else 2 ** (r - 1)
    return _EXCEPTIONAL_ORDERS[(fam, r)][a - 1]


@lru_cache(maxsize=None)
def order_tables() -> tuple[dict, ...]:
    """Shipped order/degree table rows: {type, rank, ell: [int|None], deg: [int]}."""
    payload = json.loads(
        resources.files("qrec.data").joinpath("order_tables.json").read_text()
    )
    return tuple(payload["rows"])
