# poly.py ---
#
# Filename: poly.py
#
# Commentary:
#
# Exact integer polynomials in three representations: univariate in the
# monomial basis (UniPoly), bivariate sparse (BiPoly) and univariate in the
# falling factorial basis k_(i) = k (k-1) ... (k-i+1) (FFPoly).
#
# All coefficients are Python integers; nothing here ever rounds.
#
import logging
from functools import lru_cache
from math import factorial

from polyzoo.errors import InterpolationError


def _trim(coeffs):
    coeffs = list(coeffs)
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _term_text(coeff, power, var, latex=False):
    """Renders |coeff| * var^power; the sign is handled by the caller."""
    magnitude = abs(coeff)
    if power == 0:
        return str(magnitude)
    if power == 1:
        monomial = var
    else:
        monomial = f"{var}^{{{power}}}" if latex else f"{var}^{power}"
    if magnitude == 1:
        return monomial
    return f"{magnitude} {monomial}" if latex else f"{magnitude}*{monomial}"


def _join_terms(terms):
    """terms is a list of (coeff, text); returns 'a + b - c'."""
    if not terms:
        return "0"
    pieces = []
    for idx, (coeff, text) in enumerate(terms):
        if idx == 0:
            pieces.append(f"-{text}" if coeff < 0 else text)
        else:
            pieces.append(f" - {text}" if coeff < 0 else f" + {text}")
    return "".join(pieces)


class UniPoly:
    """Univariate integer polynomial, coefficients in ascending degree."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def monomial(cls, degree, coeff=1):
        return cls([0] * degree + [coeff])

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def falling_factorial(cls, i):
        """k_(i) = k (k-1) ... (k-i+1) in the monomial basis."""
        return _falling_factorial(i)

    @property
    def degree(self):
        """Degree, -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @property
    def leading(self):
        return self.coeffs[-1] if self.coeffs else 0

    def coeff(self, power):
        return self.coeffs[power] if 0 <= power < len(self.coeffs) else 0

    def is_zero(self):
        return not self.coeffs

    def __bool__(self):
        return bool(self.coeffs)

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        if isinstance(other, int):
            return UniPoly([other])
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        size = max(len(self.coeffs), len(other.coeffs))
        return UniPoly(self.coeff(i) + other.coeff(i) for i in range(size))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        if not self.coeffs or not other.coeffs:
            return UniPoly()
        result = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    result[i + j] += a * b
        return UniPoly(result)

    __rmul__ = __mul__

    def __pow__(self, exponent):
        if exponent < 0:
            raise ValueError("Negative exponent")
        result, base = UniPoly([1]), self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(('UniPoly', self.coeffs))

    def __call__(self, k):
        return self.eval(k)

    def eval(self, k):
        """Horner evaluation; k may be an integer or another UniPoly."""
        result = 0 if isinstance(k, int) else UniPoly()
        for c in reversed(self.coeffs):
            result = result * k + c
        return result

    def compose(self, inner):
        """self(inner) as a polynomial."""
        return self.eval(inner)

    def __repr__(self):
        return f"UniPoly({list(self.coeffs)})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var='k'):
        terms = [(c, _term_text(c, i, var)) for i, c in enumerate(self.coeffs) if c]
        return _join_terms(terms)

    def to_latex(self, var='k'):
        terms = [(c, _term_text(c, i, var, latex=True)) for i, c in enumerate(self.coeffs) if c]
        return _join_terms(terms)

    def to_json(self):
        return [str(c) for c in self.coeffs]


class BiPoly:
    """Sparse bivariate integer polynomial {(i, j): c} in x^i y^j."""

    __slots__ = ('terms',)

    def __init__(self, terms=None):
        cleaned = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError(f"Negative exponent ({i}, {j})")
            c = int(c)
            if c:
                cleaned[(int(i), int(j))] = c
        self.terms = cleaned

    @classmethod
    def x(cls):
        return cls({(1, 0): 1})

    @classmethod
    def y(cls):
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, value):
        return cls({(0, 0): value})

    @staticmethod
    def _coerce(other):
        if isinstance(other, BiPoly):
            return other
        if isinstance(other, int):
            return BiPoly({(0, 0): other})
        return NotImplemented

    def __add__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = dict(self.terms)
        for key, c in other.terms.items():
            terms[key] = terms.get(key, 0) + c
        return BiPoly(terms)

    __radd__ = __add__

    def __neg__(self):
        return BiPoly({key: -c for key, c in self.terms.items()})

    def __sub__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self + (-other)

    def __mul__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        terms = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in other.terms.items():
                key = (i1 + i2, j1 + j2)
                terms[key] = terms.get(key, 0) + a * b
        return BiPoly(terms)

    __rmul__ = __mul__

    def __eq__(self, other):
        other = self._coerce(other)
        if other is NotImplemented:
            return other
        return self.terms == other.terms

    def __hash__(self):
        return hash(('BiPoly', tuple(sorted(self.terms.items()))))

    def is_zero(self):
        return not self.terms

    def coeff(self, i, j):
        return self.terms.get((i, j), 0)

    def eval(self, x, y):
        """Exact evaluation at integers x, y."""
        return sum(c * x ** i * y ** j for (i, j), c in self.terms.items())

    def substitute(self, x_poly, y_poly):
        """Replaces x and y by univariate polynomials, returning a UniPoly."""
        result = UniPoly()
        for (i, j), c in self.terms.items():
            result = result + (x_poly ** i) * (y_poly ** j) * c
        return result

    def __repr__(self):
        return f"BiPoly({dict(sorted(self.terms.items()))})"

    def __str__(self):
        return self.to_text()

    def _monomial(self, i, j, latex=False):
        parts = []
        for var, power in (('x', i), ('y', j)):
            if power == 1:
                parts.append(var)
            elif power > 1:
                parts.append(f"{var}^{{{power}}}" if latex else f"{var}^{power}")
        return (" " if latex else "*").join(parts)

    def _render(self, latex):
        terms = []
        for (i, j), c in sorted(self.terms.items(), key=lambda t: (t[0][0] + t[0][1], t[0])):
            monomial = self._monomial(i, j, latex)
            magnitude = abs(c)
            if not monomial:
                text = str(magnitude)
            elif magnitude == 1:
                text = monomial
            else:
                text = f"{magnitude} {monomial}" if latex else f"{magnitude}*{monomial}"
            terms.append((c, text))
        return _join_terms(terms)

    def to_text(self):
        return self._render(False)

    def to_latex(self):
        return self._render(True)

    def to_json(self):
        return [[i, j, str(c)] for (i, j), c in sorted(self.terms.items())]


class FFPoly:
    """Integer polynomial in the falling factorial basis: sum c_i k_(i)."""

    __slots__ = ('coeffs',)

    def __init__(self, coeffs=()):
        self.coeffs = _trim(int(c) for c in coeffs)

    @classmethod
    def basis(cls, i):
        return cls([0] * i + [1])

    @property
    def degree(self):
        return len(self.coeffs) - 1

    def coeff(self, i):
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else 0

    def is_zero(self):
        return not self.coeffs

    def __add__(self, other):
        if not isinstance(other, FFPoly):
            return NotImplemented
        size = max(len(self.coeffs), len(other.coeffs))
        return FFPoly(self.coeff(i) + other.coeff(i) for i in range(size))

    def __neg__(self):
        return FFPoly(-c for c in self.coeffs)

    def __sub__(self, other):
        if not isinstance(other, FFPoly):
            return NotImplemented
        return self + (-other)

    def __eq__(self, other):
        if not isinstance(other, FFPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(('FFPoly', self.coeffs))

    def eval(self, k):
        """Evaluates sum c_i k_(i) directly by products."""
        total, falling = 0, 1
        for i, c in enumerate(self.coeffs):
            total += c * falling
            falling *= k - i
        return total

    __call__ = eval

    def to_standard(self):
        return ff_to_standard(self)

    def __repr__(self):
        return f"FFPoly({list(self.coeffs)})"

    def __str__(self):
        return self.to_text()

    def to_text(self, var='k'):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            basis = f"{var}_({i})"
            text = basis if abs(c) == 1 else f"{abs(c)}*{basis}"
            terms.append((c, text))
        return _join_terms(terms)

    def to_latex(self, var='k'):
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c:
                continue
            basis = f"{var}^{{\\underline{{{i}}}}}"
            text = basis if abs(c) == 1 else f"{abs(c)} {basis}"
            terms.append((c, text))
        return _join_terms(terms)

    def to_json(self):
        return [str(c) for c in self.coeffs]


@lru_cache(maxsize=None)
def _falling_factorial(i):
    if i == 0:
        return UniPoly([1])
    return _falling_factorial(i - 1) * UniPoly([-(i - 1), 1])


@lru_cache(maxsize=None)
def stirling2(n, k):
    """Stirling numbers of the second kind S(n, k)."""
    if n == k:
        return 1
    if n == 0 or k == 0:
        return 0
    return k * stirling2(n - 1, k) + stirling2(n - 1, k - 1)


def ff_to_standard(ffpoly):
    """Expands sum c_i k_(i) in the monomial basis."""
    result = UniPoly()
    for i, c in enumerate(ffpoly.coeffs):
        if c:
            result = result + _falling_factorial(i) * c
    return result


def standard_to_ff(poly):
    """Rewrites a monomial-basis polynomial using k^m = sum_i S(m, i) k_(i)."""
    coeffs = [0] * max(len(poly.coeffs), 1)
    for m, a in enumerate(poly.coeffs):
        if a:
            for i in range(m + 1):
                coeffs[i] += a * stirling2(m, i)
    return FFPoly(coeffs)


def newton_interpolate(values):
    """The polynomial of degree <= d through (k, values[k]) for k = 0..d.

    The i-th coefficient in the falling factorial basis is the i-th forward
    difference at 0 divided by i!; a nonzero remainder raises
    InterpolationError.
    """
    row = [int(v) for v in values]
    coeffs = []
    for i in range(len(row)):
        diff = row[0]
        quotient, remainder = divmod(diff, factorial(i))
        if remainder:
            raise InterpolationError(
                f"forward difference {diff} at order {i} is not divisible by {i}!")
        coeffs.append(quotient)
        row = [b - a for a, b in zip(row, row[1:])]
    logging.debug(f"Interpolated degree <= {len(values) - 1} from {len(values)} values")
    return FFPoly(coeffs)

#
# poly.py ends here
