"""Operator layer: quadratic superoperator bilinears and the shift calculus.

The four left/right ladder superoperators assemble into an 8-component pair
(A, A+) with the twisted canonical relation [A_a, Gamma_bc A+_c] = delta_ab.
Generators are the bilinears A+ Gamma S_AB A; products compose left to
right, so right-multiplication words reverse order (this ordering is what
makes the central element read the sector grade as C + 2 = kappa).

Radial multipliers move through level-shifting words by lam-shifts of their
argument; the second/first difference operators built from those shifts
replace radial derivatives everywhere in the commutator formulas.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

import numpy as np

from .liouville import Space, SuperOp, commutator
from .ncspace import PAULI
from .su22 import ETA, GAMMA, PAIRS, generator_matrix


# ---------------------------------------------------------------------------
# radial function descriptors
# ---------------------------------------------------------------------------

@dataclass(frozen=True)
class RadialFunction:
    """A function of the radius with its pole positions (in units of lam).

    fn maps (w, lam) -> values; evaluation on a Space zeroes pole-adjacent
    pairs, which callers must exclude from comparison windows.
    """

    name: str
    fn: Callable[[np.ndarray, float], np.ndarray]
    poles: tuple[float, ...] = ()

    def shifted(self, steps: int) -> "RadialFunction":
        """f(r + steps*lam) as a new descriptor; poles move by -steps."""
        base = self.fn
        return RadialFunction(
            name=f"{self.name}(r{steps:+d}l)",
            fn=lambda w, lam: base(w + steps * lam, lam),
            poles=tuple(p - steps for p in self.poles),
        )

    def to_superop(self, space: Space) -> SuperOp:
        return space.radial(lambda w: self.fn(w, space.lam), self.poles)


RF_ONE = RadialFunction("1", lambda w, lam: np.ones_like(w))
RF_R = RadialFunction("r", lambda w, lam: w)
RF_R2 = RadialFunction("r^2", lambda w, lam: w * w)
RF_INV_R = RadialFunction("1/r", lambda w, lam: 1.0 / w, poles=(0.0,))
RF_INV_R2 = RadialFunction("1/r^2", lambda w, lam: 1.0 / (w * w), poles=(0.0,))
RF_INV_R_MINUS_2L = RadialFunction(
    "1/(r-2l)", lambda w, lam: 1.0 / (w - 2 * lam), poles=(2.0,)
)
# radial profile of the monopole field strength, 1/(r(r^2-l^2))
RF_MONOPOLE = RadialFunction(
    "1/(r(r^2-l^2))",
    lambda w, lam: 1.0 / (w * (w * w - lam * lam)),
    poles=(0.0, 1.0, -1.0),
)
RF_Q = RadialFunction("(r-l)/(r+l)", lambda w, lam: (w - lam) / (w + lam), poles=(-1.0,))


def second_difference(f: RadialFunction) -> RadialFunction:
    """(D+ + D- - 2) f, the discrete second difference (no 1/lam^2)."""
    base = f.fn
    return RadialFunction(
        name=f"dd[{f.name}]",
        fn=lambda w, lam: base(w + lam, lam) + base(w - lam, lam) - 2 * base(w, lam),
        poles=tuple(set(f.poles) | {p - 1 for p in f.poles} | {p + 1 for p in f.poles}),
    )


def first_difference(f: RadialFunction) -> RadialFunction:
    """(D+ - D-) f / (2 lam), the symmetric first difference."""
    base = f.fn
    return RadialFunction(
        name=f"d[{f.name}]",
        fn=lambda w, lam: (base(w + lam, lam) - base(w - lam, lam)) / (2 * lam),
        poles=tuple({p - 1 for p in f.poles} | {p + 1 for p in f.poles}),
    )


def radial_annihilator(f: RadialFunction) -> RadialFunction:
    """(1 + (D+ + D- - 2)/2 + r (D+ - D-)/(2 lam)) f; kills 1/r identically."""
    base = f.fn

    def val(w: np.ndarray, lam: float) -> np.ndarray:
        fp, fm, f0 = base(w + lam, lam), base(w - lam, lam), base(w, lam)
        return f0 + 0.5 * (fp + fm - 2 * f0) + w * (fp - fm) / (2 * lam)

    return RadialFunction(
        name=f"D[{f.name}]",
        fn=val,
        poles=tuple(set(f.poles) | {p - 1 for p in f.poles} | {p + 1 for p in f.poles}),
    )


def pole_window(f: RadialFunction, extra_shifts: tuple[int, ...] = (0,)) -> tuple[float, ...]:
    """Block radii (units of lam) a comparison must exclude when f appears
    shifted by the given steps."""
    out = set()
    for p in f.poles:
        for s in extra_shifts:
            out.add(p - s)
    return tuple(sorted(out))


# ---------------------------------------------------------------------------
# word builders
# ---------------------------------------------------------------------------

Letter = tuple[int, str]  # (mode, "create" | "annihilate")


def _letter_op(space: Space, mode: int, kind: str, side: str) -> SuperOp:
    if kind == "create":
        return space.lmul_adag(mode) if side == "left" else space.rmul_adag(mode)
    if kind == "annihilate":
        return space.lmul_a(mode) if side == "left" else space.rmul_a(mode)
    raise ValueError(f"kind must be 'create' or 'annihilate', got {kind!r}")


def left_action(space: Space, word: list[Letter]) -> SuperOp:
    """Left multiplication by the ladder word, letters applied in order."""
    out = space.identity()
    for mode, kind in word:
        out = out @ _letter_op(space, mode, kind, "left")
    return out


def right_action(space: Space, word: list[Letter]) -> SuperOp:
    """Right multiplication by the ladder word; composition order reverses."""
    out = space.identity()
    for mode, kind in word:
        out = _letter_op(space, mode, kind, "right") @ out
    return out


# ---------------------------------------------------------------------------
# the operator algebra
# ---------------------------------------------------------------------------

class OperatorAlgebra:
    """Named quadratic superoperators on one space, built lazily and cached."""

    def __init__(self, space: Space):
        self.space = space
        self._cache: dict[tuple, SuperOp] = {}

    def _get(self, key: tuple, builder: Callable[[], SuperOp]) -> SuperOp:
        if key not in self._cache:
            self._cache[key] = builder()
        return self._cache[key]

    # the 8-component ladder pair: (a1, a2, b1, b2) and daggers
    def avec(self, a: int) -> SuperOp:
        sp = self.space
        return sp.lmul_a(a + 1) if a < 2 else sp.rmul_a(a - 1)

    def avec_dag(self, a: int) -> SuperOp:
        sp = self.space
        return sp.lmul_adag(a + 1) if a < 2 else sp.rmul_adag(a - 1)

    # -- generators ---------------------------------------------------------

    def generator(self, A: int, B: int) -> SuperOp:
        """Bilinear generator: A+ Gamma S_AB A with composed ordering."""
        return self._get(("gen", A, B), lambda: self._bilinear(GAMMA @ generator_matrix(A, B)))

    def _bilinear(self, m: np.ndarray) -> SuperOp:
        terms = None
        for a in range(4):
            for b in range(4):
                if m[a, b] != 0:
                    t = complex(m[a, b]) * (self.avec_dag(a) @ self.avec(b))
                    terms = t if terms is None else terms + t
        if terms is None:
            return 0.0 * self.space.identity()
        return terms

    def center(self) -> SuperOp:
        """Central element, in the ordering exact on every admissible block.

        The literal bilinear form differs by right-side operator ordering,
        which the hard truncation corrupts on the top block; commuting the
        right-side pair once gives an equivalent word with no such defect.
        """
        def build() -> SuperOp:
            sp = self.space
            left = self.avec_dag(0) @ self.avec(0) + self.avec_dag(1) @ self.avec(1)
            right = sp.rmul_a(1) @ sp.rmul_adag(1) + sp.rmul_a(2) @ sp.rmul_adag(2)
            return left - right - 2.0 * sp.identity()

        return self._get(("center",), build)

    def center_naive(self) -> SuperOp:
        """Literal bilinear ordering (top-block truncation defect retained)."""
        return self._get(("center-naive",), lambda: self._bilinear(GAMMA))

    # -- sigma-contracted one-sided words ------------------------------------

    def raise_word(self, a: int) -> SuperOp:
        """Left-create/right-annihilate bilinear; shifts every block up one."""
        def build() -> SuperOp:
            sp = self.space
            if a == 4:
                return sum(
                    (sp.lmul_adag(al) @ sp.rmul_a(al) for al in (1, 2)),
                    start=0.0 * sp.identity(),
                )
            terms = None
            for al in range(2):
                for be in range(2):
                    c = PAULI[a - 1, al, be]
                    if c != 0:
                        t = complex(c) * (sp.lmul_adag(al + 1) @ sp.rmul_a(be + 1))
                        terms = t if terms is None else terms + t
            return terms

        return self._get(("raise", a), build)

    def lower_word(self, a: int) -> SuperOp:
        """Right-create/left-annihilate bilinear; shifts every block down one."""
        def build() -> SuperOp:
            sp = self.space
            if a == 4:
                return sum(
                    (sp.rmul_adag(al) @ sp.lmul_a(al) for al in (1, 2)),
                    start=0.0 * sp.identity(),
                )
            terms = None
            for al in range(2):
                for be in range(2):
                    c = PAULI[a - 1, al, be]
                    if c != 0:
                        t = complex(c) * (sp.rmul_adag(al + 1) @ sp.lmul_a(be + 1))
                        terms = t if terms is None else terms + t
            return terms

        return self._get(("lower", a), build)

    # -- shift-calculus vectors ----------------------------------------------

    def zeta(self, a: int) -> SuperOp:
        """Symmetric boost combination: 2*(S_k5, S_04) componentwise."""
        if a == 4:
            return 2.0 * self.generator(0, 4)
        return 2.0 * self.generator(a, 5)

    def w_op(self, a: int) -> SuperOp:
        """Antisymmetric boost combination: 2i*(S_0k, S_54) componentwise.

        Signs are the unique ones satisfying [w_a, r] = lam*zeta_a, fixed
        numerically and frozen (see conventions).
        """
        if a == 4:
            return 2j * self.generator(5, 4)
        return 2j * self.generator(0, a)

    # -- canonical pairing ----------------------------------------------------

    def canonical_pairing_residual(self, kappa: int, guard: int = 1) -> float:
        """Max residual of [A_a, Gamma_bc A+_c] = delta_ab over all 16 pairs."""
        from .sector import build_sector, graded_residual

        sec = build_sector(kappa, self.space.n_max, self.space.lam)
        res = 0.0
        ident = self.space.identity()
        for a in range(4):
            for b in range(4):
                twisted = None
                for c in range(4):
                    if GAMMA[b, c] != 0:
                        t = complex(GAMMA[b, c]) * self.avec_dag(c)
                        twisted = t if twisted is None else twisted + t
                lhs = commutator(self.avec(a), twisted)
                rhs = (1.0 if a == b else 0.0) * ident
                out = graded_residual(lhs, rhs, sec, guard)
                if out is not None:
                    res = max(res, out[0])
        return res


def su22_bracket_rhs(alg: OperatorAlgebra, a: int, b: int, c: int, d: int) -> SuperOp:
    """Operator-level bracket target i*(eta.S - ...) for [S_AB, S_CD]."""
    terms = []
    for coeff, (x, y) in (
        (ETA[a, c], (b, d)),
        (-ETA[b, c], (a, d)),
        (-ETA[a, d], (b, c)),
        (ETA[b, d], (a, c)),
    ):
        if coeff != 0 and x != y:
            terms.append(complex(1j * coeff) * alg.generator(x, y))
    if not terms:
        return 0.0 * alg.space.identity()
    out = terms[0]
    for t in terms[1:]:
        out = out + t
    return out


__all__ = [
    "OperatorAlgebra",
    "left_action",
    "right_action",
    "RadialFunction",
    "RF_ONE",
    "RF_R",
    "RF_R2",
    "RF_INV_R",
    "RF_INV_R2",
    "RF_INV_R_MINUS_2L",
    "RF_MONOPOLE",
    "RF_Q",
    "first_difference",
    "second_difference",
    "radial_annihilator",
    "pole_window",
    "su22_bracket_rhs",
    "PAIRS",
]
