"""Formal sums  sum_m c_m * m^{-u}  over positive rational bases m.

This is the medium in which the exact series identities are compared.  An
:class:`ExpSum` is a finite map from positive rational bases to ring
coefficients (symbolic Hecke polynomials or complex numbers) together with
a *completeness bound*: every term with base at or below the bound is
guaranteed present.  Identity checks refuse to compare beyond the bound,
so a truncation artifact can never masquerade as a verified equality.

The exponent variable u is implicit and single; each identity documents
its substitution (u = 2s, u = 2s-1, ...) in the resulting report.
Rational bases are essential: a factor d^{4s-3} = d^{-1} (d^2)^{2s-1}
moves integer terms a1^{-(2s-1)} to bases a1/d^2.
"""

from __future__ import annotations

from fractions import Fraction

from .report import CheckItem, CheckReport, render_fraction


class RingMismatchError(TypeError):
    """Raised when combining ExpSums over different coefficient rings."""


class CompletenessError(ValueError):
    """Raised when a comparison would reach past a completeness bound."""


def _as_base(x) -> Fraction:
    q = Fraction(x)
    if q <= 0:
        raise ValueError(f"ExpSum bases must be positive, got {q}")
    return q


class ExpSum:
    """Finite formal sum sum c_m m^{-u} with truncation bookkeeping.

    ``bound`` is the completeness bound (None means the object is exact:
    complete at every height, e.g. a finite Euler product).
    """

    __slots__ = ("terms", "bound", "ring")

    def __init__(self, terms: dict, bound, ring: str, *, _pruned: bool = False):
        if not _pruned:
            terms = {_as_base(b): c for b, c in terms.items() if c}
        self.terms = terms
        self.bound = None if bound is None else _as_base(bound)
        self.ring = ring

    # -- constructors ----------------------------------------------------
    @classmethod
    def zero(cls, ring: str) -> "ExpSum":
        return cls({}, None, ring, _pruned=True)

    # -- bookkeeping helpers ----------------------------------------------
    def smallest_base(self) -> Fraction | None:
        return min(self.terms) if self.terms else None

    def is_exact_zero(self) -> bool:
        return not self.terms and self.bound is None

    def _require_same_ring(self, other: "ExpSum"):
        if self.ring != other.ring:
            raise RingMismatchError(f"cannot combine {self.ring} with {other.ring}")

    # -- operations --------------------------------------------------------
    def add(self, other: "ExpSum") -> "ExpSum":
        """Pointwise sum; completeness bound is the min of the inputs."""
        self._require_same_ring(other)
        out = dict(self.terms)
        for b, c in other.terms.items():
            v = out.get(b)
            if v is None:
                out[b] = c
            else:
                v = v + c
                if v:
                    out[b] = v
                else:
                    del out[b]
        if self.bound is None:
            bound = other.bound
        elif other.bound is None:
            bound = self.bound
        else:
            bound = min(self.bound, other.bound)
        return ExpSum(out, bound, self.ring, _pruned=True)

    __add__ = add

    def mul(self, other: "ExpSum") -> "ExpSum":
        """Dirichlet-style convolution: bases multiply, coefficients convolve.

        The completeness bound follows the convolution rule
        min(bx * min_base(y), by * min_base(x)): a term missing from x has
        base above bx, so its products land above bx * min_base(y).
        """
        self._require_same_ring(other)
        if self.is_exact_zero() or other.is_exact_zero():
            return ExpSum.zero(self.ring)
        out: dict = {}
        get = out.get
        for b1, c1 in self.terms.items():
            for b2, c2 in other.terms.items():
                b = b1 * b2
                v = get(b)
                if v is None:
                    piece = c1 * c2
                    if piece:
                        out[b] = piece
                else:
                    v = v + c1 * c2
                    if v:
                        out[b] = v
                    else:
                        del out[b]
        sx, sy = self.smallest_base(), other.smallest_base()
        bx, by = self.bound, other.bound
        cands = []
        if bx is not None and sy is not None:
            cands.append(bx * sy)
        if by is not None and sx is not None:
            cands.append(by * sx)
        if bx is not None and by is not None and sx is None and sy is None:
            cands.append(bx * by)
        bound = min(cands) if cands else None
        return ExpSum(out, bound, self.ring, _pruned=True)

    def scale_base(self, q, c) -> "ExpSum":
        """Multiply by c * q^{u}: every base m becomes m/q, coefficients scale by c."""
        q = _as_base(q)
        if not c:
            return ExpSum.zero(self.ring)
        out = {b / q: coeff * c for b, coeff in self.terms.items()}
        out = {b: v for b, v in out.items() if v}
        bound = None if self.bound is None else self.bound / q
        return ExpSum(out, bound, self.ring, _pruned=True)

    def __neg__(self):
        return ExpSum({b: -c for b, c in self.terms.items()}, self.bound, self.ring, _pruned=True)

    def evaluate(self, assign) -> "ExpSum":
        """Map a symbolic ExpSum to a complex one via a generator assignment."""
        if self.ring != "symbolic":
            raise RingMismatchError("evaluate applies to symbolic ExpSums")
        out = {b: c.evaluate(assign) for b, c in self.terms.items()}
        return ExpSum(out, self.bound, "complex")

    # -- rendering ----------------------------------------------------------
    def __str__(self):
        inner = ", ".join(
            f"{render_fraction(b)} -> {self.terms[b]}" for b in sorted(self.terms)
        )
        tail = "exact" if self.bound is None else f"complete<= {render_fraction(self.bound)}"
        return "{" + inner + "} " + f"[{tail}]"

    def to_json_obj(self) -> dict:
        """JSON-ready form: bases ascending as num/den, canonical coefficients."""
        from .report import render_complex

        pairs = []
        for b in sorted(self.terms):
            c = self.terms[b]
            pairs.append([render_fraction(b), render_complex(c) if self.ring == "complex" else str(c)])
        return {
            "ring": self.ring,
            "completeness_bound": None if self.bound is None else render_fraction(self.bound),
            "terms": pairs,
        }

    __repr__ = __str__

    def __eq__(self, other):
        if not isinstance(other, ExpSum):
            return NotImplemented
        return self.ring == other.ring and self.bound == other.bound and self.terms == other.terms

    __hash__ = None


def truncated_L(provider, which: str = "standard", cutoff: int = 1) -> ExpSum:
    """Truncation of the standard L-series sum_n lam(n) n^{-u} up to n = cutoff.

    ``which`` selects the standard ("standard") or dual ("dual")
    eigenvalue sequence.  The completeness bound is exactly the cutoff.
    """
    if cutoff < 1:
        raise ValueError("truncated_L: cutoff must be >= 1")
    if which == "standard":
        value = provider.lam
    elif which == "dual":
        value = provider.lam_bar
    else:
        raise ValueError(f"truncated_L: unknown series {which!r}")
    terms = {Fraction(n): value(n) for n in range(1, cutoff + 1)}
    return ExpSum(terms, Fraction(cutoff), provider.ring)


def assert_equal_up_to(
    x: ExpSum,
    y: ExpSum,
    height,
    *,
    tol: float | None = None,
    identity: str = "expsum-equality",
    params: dict | None = None,
    substitution: str = "",
) -> CheckReport:
    """Compare two ExpSums at every base up to ``height``.

    ``height`` may not exceed either completeness bound -- comparing
    truncation tails is unsound and raises :class:`CompletenessError`.
    Symbolic coefficients must match exactly (ring equality); complex
    coefficients match within ``tol`` (default 1e-10).
    """
    if x.ring != y.ring:
        raise RingMismatchError(f"cannot compare {x.ring} with {y.ring}")
    height = Fraction(height)
    for side, name in ((x, "left"), (y, "right")):
        if side.bound is not None and height > side.bound:
            raise CompletenessError(
                f"comparison height {height} exceeds {name} completeness bound {side.bound}"
            )
    if tol is None:
        tol = 1e-10
    symbolic = x.ring == "symbolic"
    bases = sorted(b for b in set(x.terms) | set(y.terms) if b <= height)
    items = []
    max_err = 0.0
    ok = True
    for b in bases:
        cx = x.terms.get(b)
        cy = y.terms.get(b)
        if symbolic:
            if cx is None:
                match = not cy
            elif cy is None:
                match = not cx
            else:
                match = cx == cy
            items.append(CheckItem(render_fraction(b), None, bool(match)))
            ok = ok and match
        else:
            err = abs((cx or 0j) - (cy or 0j))
            items.append(CheckItem(render_fraction(b), err, False))
            max_err = max(max_err, err)
            ok = ok and err <= tol
    return CheckReport(
        identity=identity,
        params=params or {},
        mode="symbolic" if symbolic else "numeric",
        items=items,
        max_error=max_err,
        passed=ok,
        substitution=substitution,
    )
