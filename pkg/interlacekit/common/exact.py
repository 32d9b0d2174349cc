"""
    This module contains the exact arithmetic layer of interlacekit

    Scalars are python Fractions (arbitrary precision rationals kept in
    canonical form). Univariate polynomials wrap a sympy Poly over QQ
    in the variable `lambda`; sympy does the remainder sequences,
    gcds and square-free decompositions, while evaluation, sign
    variation counting and bisection happen here on Fractions.

    Functions:

        to_exact: parse ints, decimal strings, "p/q" strings, sympy
            Rationals into Fractions

        sturm_count: number of distinct real roots in an open interval

        isolate_real_roots: disjoint isolating intervals for all real
            roots, with multiplicities

        descartes_sign_variations: coefficient sign changes

        refine_until_disjoint: separate a list of isolated roots so
            that every pairwise order is decided

"""

import logging
import sympy

from decimal import Decimal, localcontext
from fractions import Fraction
from sympy import Poly, QQ

from interlacekit.common.errors import (EndpointRootError, InterlaceKitError,
                                        ZeroPolynomialError)
from interlacekit.common.settings import MAX_REFINEMENT_STEPS


LAMBDA = sympy.Symbol('lambda')


def to_exact(value):
    """
        Convert a value to an exact rational

        Args:
            value (int, str, Fraction, sympy.Rational, float): the
                value. Strings may be integers, decimal literals
                ("0.6", "-3.3928", "1e-3") or "p/q". Floats are read
                through their shortest repr so that 0.6 becomes 3/5.

        Returns:
            fractions.Fraction
    """

    if isinstance(value, Fraction):
        return value

    if isinstance(value, bool):
        raise TypeError("booleans are not rational numbers")

    if isinstance(value, int):
        return Fraction(value)

    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError):
            raise ValueError("'{}' is not a rational literal".format(value))

    if isinstance(value, float):
        return Fraction(repr(value))

    if isinstance(value, sympy.Rational):
        return Fraction(int(value.p), int(value.q))

    # numpy integers and other numbers.Rational implementations
    try:
        return Fraction(value)
    except TypeError:
        raise TypeError("cannot convert {!r} to an exact rational".format(
            value))


def format_exact(value, decimal=False, digits=16):
    """
        String form of an exact rational

        Args:
            value (Fraction): the number
            decimal (bool): if True produce an (approximate for non
                terminating expansions) decimal string instead of p/q
            digits (int): significant digits for decimal output

        Returns:
            str
    """

    value = to_exact(value)
    if not decimal:
        if value.denominator == 1:
            return str(value.numerator)
        return "{}/{}".format(value.numerator, value.denominator)

    with localcontext() as ctx:
        ctx.prec = digits
        text = Decimal(value.numerator) / Decimal(value.denominator)
    text = text.normalize()

    # avoid exponent notation for integers like 1E+1
    if text == text.to_integral_value():
        return str(text.quantize(Decimal(1)))
    return str(text)


def sign(value):
    if value > 0:
        return 1
    if value < 0:
        return -1
    return 0


def sign_variations(values):
    """
        Number of sign changes in a sequence, zeros are skipped
    """

    signs = [v > 0 for v in values if v != 0]
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def _to_sympy(value):
    value = to_exact(value)
    return sympy.Rational(value.numerator, value.denominator)


class UniPoly:
    """
        Immutable univariate polynomial over the rationals

        Coefficients are indexed by degree (ascending order). Mixed
        arithmetic with Fractions and ints is supported so that
        matrices of polynomials (A - lambda*I) can reuse the generic
        determinant code.
    """

    __slots__ = ('_poly', '_coefficients')

    def __init__(self, coefficients=()):
        coefficients = [_to_sympy(c) for c in coefficients]
        coefficients.reverse()
        self._poly = Poly(coefficients or [0], LAMBDA, domain=QQ)
        self._coefficients = None

    @classmethod
    def _wrap(cls, poly):
        obj = cls.__new__(cls)
        if poly.get_domain() != QQ:
            poly = poly.set_domain(QQ)
        obj._poly = poly
        obj._coefficients = None
        return obj

    @classmethod
    def constant(cls, value):
        return cls([value])

    @classmethod
    def variable(cls):
        """ the polynomial `lambda` """
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots):
        """ monic polynomial with the given roots """
        result = cls.constant(1)
        for root in roots:
            result = result * cls([-to_exact(root), 1])
        return result

    @property
    def coefficients(self):
        if self._coefficients is None:
            if self._poly.is_zero:
                self._coefficients = ()
            else:
                self._coefficients = tuple(
                    to_exact(c) for c in reversed(self._poly.all_coeffs()))
        return self._coefficients

    @property
    def degree(self):
        """ degree, -1 for the zero polynomial """
        return len(self.coefficients) - 1

    @property
    def is_zero(self):
        return self._poly.is_zero

    @property
    def leading_coefficient(self):
        if self.is_zero:
            return Fraction(0)
        return self.coefficients[-1]

    def __call__(self, x):
        """ exact Horner evaluation at a rational point """
        x = to_exact(x)
        result = Fraction(0)
        for c in reversed(self.coefficients):
            result = result * x + c
        return result

    evaluate = __call__

    @staticmethod
    def _coerce(other):
        if isinstance(other, UniPoly):
            return other
        return UniPoly.constant(other)

    def __add__(self, other):
        return UniPoly._wrap(self._poly + UniPoly._coerce(other)._poly)

    __radd__ = __add__

    def __sub__(self, other):
        return UniPoly._wrap(self._poly - UniPoly._coerce(other)._poly)

    def __rsub__(self, other):
        return UniPoly._wrap(UniPoly._coerce(other)._poly - self._poly)

    def __mul__(self, other):
        return UniPoly._wrap(self._poly * UniPoly._coerce(other)._poly)

    __rmul__ = __mul__

    def __neg__(self):
        return UniPoly._wrap(-self._poly)

    def __pow__(self, exponent):
        return UniPoly._wrap(self._poly ** int(exponent))

    def __truediv__(self, scalar):
        if isinstance(scalar, UniPoly):
            return self.exquo(scalar)
        scalar = to_exact(scalar)
        return UniPoly._wrap(self._poly * _to_sympy(1 / scalar))

    def __divmod__(self, other):
        q, r = self._poly.div(UniPoly._coerce(other)._poly)
        return UniPoly._wrap(q), UniPoly._wrap(r)

    def exquo(self, other):
        return UniPoly._wrap(self._poly.exquo(UniPoly._coerce(other)._poly))

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coefficients == other.coefficients
        try:
            other = to_exact(other)
        except (TypeError, ValueError):
            return NotImplemented
        if other == 0:
            return self.is_zero
        return self.coefficients == (other,)

    def __ne__(self, other):
        result = self.__eq__(other)
        if result is NotImplemented:
            return result
        return not result

    def __hash__(self):
        return hash(self.coefficients)

    def __bool__(self):
        return not self.is_zero

    def __repr__(self):
        return "UniPoly({})".format(self._poly.as_expr())

    def derivative(self):
        return UniPoly._wrap(self._poly.diff(LAMBDA))

    def gcd(self, other):
        return UniPoly._wrap(self._poly.gcd(UniPoly._coerce(other)._poly))

    def reflect(self):
        """ p(-lambda) """
        return UniPoly([c if k % 2 == 0 else -c
                        for k, c in enumerate(self.coefficients)])

    def square_free_part(self):
        return UniPoly._wrap(self._poly.sqf_part())

    def square_free_decomposition(self):
        """
            Square-free factors with multiplicities

            Returns:
                list: (UniPoly, int) pairs, the constant content is
                    dropped
        """

        _, factors = self._poly.sqf_list()
        return [(UniPoly._wrap(f), k) for f, k in factors]

    def sturm_sequence(self):
        """
            Sturm sequence of the square-free part of the polynomial
        """

        if self.degree < 1:
            return (self,)
        return tuple(UniPoly._wrap(q) for q in self._poly.sturm())

    def to_sympy(self):
        return self._poly


def _variations_at(sequence, x):
    return sign_variations([q(x) for q in sequence])


def sturm_count(p, lo, hi, sequence=None):
    """
        Number of distinct real roots of `p` in the open interval
        (lo, hi), computed from the Sturm sequence sign variations

        Args:
            p (UniPoly): nonzero polynomial
            lo (Fraction): left endpoint, not a root of p
            hi (Fraction): right endpoint, not a root of p
            sequence (tuple): precomputed Sturm sequence of p

        Returns:
            int
    """

    if p.is_zero:
        raise ZeroPolynomialError("sturm_count of the zero polynomial")

    lo, hi = to_exact(lo), to_exact(hi)
    if not lo < hi:
        raise InterlaceKitError(
            "empty interval ({}, {})".format(lo, hi))

    for endpoint in (lo, hi):
        if p(endpoint) == 0:
            raise EndpointRootError(endpoint)

    if p.degree < 1:
        return 0

    if sequence is None:
        sequence = p.sturm_sequence()

    return _variations_at(sequence, lo) - _variations_at(sequence, hi)


def nudge_off_root(p, point, direction=1):
    """
        Move `point` off a root of `p` by a rational epsilon small
        enough that no other root of p is stepped over

        Args:
            p (UniPoly): nonzero polynomial
            point (Fraction): candidate endpoint
            direction (int): +1 to move right, -1 to move left

        Returns:
            Fraction: point itself if it is not a root, otherwise a
                nearby non-root with no root of p strictly between
    """

    point = to_exact(point)
    if p(point) != 0:
        return point

    q = p.square_free_part()
    sequence = q.sturm_sequence()
    eps = Fraction(1)
    while True:
        left, right = point - eps, point + eps
        if q(left) != 0 and q(right) != 0 and \
                sturm_count(q, left, right, sequence) == 1:
            return point + direction * eps
        eps /= 2


def count_real_roots(p, lo, hi, closed=False):
    """
        Distinct roots of p in (lo, hi), or in [lo, hi] when `closed`
        is True. Unlike sturm_count, endpoints may be roots.
    """

    lo, hi = to_exact(lo), to_exact(hi)
    count = 0
    if closed:
        count += int(p(lo) == 0)
        if hi != lo:
            count += int(p(hi) == 0)
    if lo >= hi:
        return count

    inner_lo = nudge_off_root(p, lo, 1)
    inner_hi = nudge_off_root(p, hi, -1)
    if inner_lo >= inner_hi:
        return count
    return count + sturm_count(p, inner_lo, inner_hi)


def root_bound(p):
    """
        Cauchy bound: every real root r of p satisfies |r| < bound
    """

    if p.is_zero:
        raise ZeroPolynomialError("root bound of the zero polynomial")

    lead = abs(p.leading_coefficient)
    rest = [abs(c) for c in p.coefficients[:-1]]
    return 1 + (max(rest) / lead if rest else Fraction(0))


def descartes_sign_variations(p):
    """
        Number of sign changes in the coefficient sequence of p; the
        number of positive roots counted with multiplicity is at most
        this and of the same parity
    """

    if p.is_zero:
        raise ZeroPolynomialError("Descartes rule on the zero polynomial")

    return sign_variations(p.coefficients)


class IsolatedRoot:
    """
        A real algebraic number given by a square-free defining
        polynomial and a closed rational interval containing exactly
        one of its roots

        For intervals of positive width the endpoints are never roots
        of the defining polynomial. A zero width interval [r, r] means
        the root is the rational number r.
    """

    __slots__ = ('poly', 'lo', 'hi', 'multiplicity')

    def __init__(self, poly, lo, hi, multiplicity=1):
        lo, hi = to_exact(lo), to_exact(hi)
        if lo > hi:
            raise InterlaceKitError(
                "isolating interval [{}, {}] is reversed".format(lo, hi))
        self.poly = poly
        self.lo = lo
        self.hi = hi
        self.multiplicity = int(multiplicity)

    @property
    def is_exact(self):
        return self.lo == self.hi

    @property
    def width(self):
        return self.hi - self.lo

    @property
    def midpoint(self):
        return (self.lo + self.hi) / 2

    def __float__(self):
        return float(self.midpoint)

    def refine(self):
        """
            Halve the isolating interval

            Returns:
                IsolatedRoot: a new root object with half the width
                    (or a zero width interval if the midpoint is the
                    root)
        """

        if self.is_exact:
            return self

        mid = self.midpoint
        value = self.poly(mid)
        if value == 0:
            return IsolatedRoot(self.poly, mid, mid, self.multiplicity)

        if (self.poly(self.lo) > 0) == (value > 0):
            return IsolatedRoot(self.poly, mid, self.hi, self.multiplicity)
        return IsolatedRoot(self.poly, self.lo, mid, self.multiplicity)

    def refine_to(self, width):
        width = to_exact(width)
        root = self
        while root.width > width:
            root = root.refine()
        return root

    def contains(self, x):
        return self.lo <= to_exact(x) <= self.hi

    def negated(self):
        return IsolatedRoot(self.poly.reflect(), -self.hi, -self.lo,
                            self.multiplicity)

    def sign(self):
        """ exact sign of the algebraic number """

        root = self
        steps = 0
        while root.lo < 0 < root.hi:
            if root.poly(0) == 0:
                return 0
            root = root.refine()
            steps += 1
            if steps > MAX_REFINEMENT_STEPS:
                raise InterlaceKitError("sign refinement did not terminate")
        if root.lo >= 0:
            return 0 if root.hi == 0 else 1
        return -1

    def to_dict(self):
        return {'lo': format_exact(self.lo), 'hi': format_exact(self.hi),
                'multiplicity': self.multiplicity,
                'approx': float(self)}

    def __repr__(self):
        return "IsolatedRoot([{}, {}], multiplicity={})".format(
            format_exact(self.lo), format_exact(self.hi), self.multiplicity)


def _certainly_below(a, b):
    if a.hi < b.lo:
        return True
    # touching endpoints: a non-degenerate interval never has its
    # endpoint as the root
    return a.hi == b.lo and not (a.is_exact and b.is_exact)


def roots_equal(a, b):
    """
        Decide whether two isolated roots are the same algebraic
        number: true iff gcd of the defining polynomials vanishes in
        the intersection of the two isolating intervals
    """

    lo, hi = max(a.lo, b.lo), min(a.hi, b.hi)
    if lo > hi:
        return False

    g = a.poly.gcd(b.poly)
    if g.degree < 1:
        return False

    if g(lo) == 0 or g(hi) == 0:
        return True
    if lo == hi:
        return False
    return sturm_count(g, lo, hi) > 0


def compare_roots(a, b):
    """
        Exact three way comparison of two isolated roots

        Returns:
            tuple: (cmp, a', b') where cmp is -1, 0 or 1 and a', b'
                are the refined roots (disjoint unless cmp == 0)
    """

    if not (_certainly_below(a, b) or _certainly_below(b, a)):
        if roots_equal(a, b):
            return 0, a, b

    steps = 0
    while True:
        if _certainly_below(a, b):
            return -1, a, b
        if _certainly_below(b, a):
            return 1, a, b

        if a.width >= b.width:
            a = a.refine()
        else:
            b = b.refine()

        steps += 1
        if steps > MAX_REFINEMENT_STEPS:
            raise InterlaceKitError(
                "could not separate {} and {}".format(a, b))


def compare_root_to(root, x):
    """ exact comparison of an isolated root with a rational """

    x = to_exact(x)
    point = IsolatedRoot(UniPoly.from_roots([x]), x, x)
    return compare_roots(root, point)[0]


class Separation:
    """
        Result of refine_until_disjoint

        Attributes:
            roots (list): the refined roots, in input order
            equal_pairs (list): (i, j) index pairs of inputs that are
                the same algebraic number
    """

    def __init__(self, roots, equal_pairs):
        self.roots = roots
        self.equal_pairs = equal_pairs

    @property
    def has_equal(self):
        return len(self.equal_pairs) > 0


def refine_until_disjoint(roots):
    """
        Refine isolating intervals until they are pairwise disjoint

        Pairs that turn out to be the same algebraic number are
        reported in `equal_pairs` instead of being refined forever.

        Args:
            roots (list): list of IsolatedRoot

        Returns:
            Separation
    """

    roots = list(roots)
    equal_pairs = []
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            cmp, roots[i], roots[j] = compare_roots(roots[i], roots[j])
            if cmp == 0:
                logging.debug("roots {} and {} are equal".format(i, j))
                equal_pairs.append((i, j))

    return Separation(roots, equal_pairs)


def _isolate_square_free(f):
    """
        Bisection driven by Sturm counts on a square-free polynomial

        Returns:
            list: (lo, hi, defining polynomial) triples
    """

    bound = root_bound(f)
    found = []
    stack = [(f, f.sturm_sequence(), -bound, bound)]
    while stack:
        g, sequence, lo, hi = stack.pop()
        count = sturm_count(g, lo, hi, sequence)
        if count == 0:
            continue
        if count == 1:
            found.append((lo, hi, g))
            continue

        mid = (lo + hi) / 2
        if g(mid) == 0:
            found.append((mid, mid, UniPoly.from_roots([mid])))
            g = g.exquo(UniPoly.from_roots([mid]))
            sequence = g.sturm_sequence()
        stack.append((g, sequence, lo, mid))
        stack.append((g, sequence, mid, hi))

    return found


def isolate_real_roots(p):
    """
        Isolate all distinct real roots of a polynomial

        Args:
            p (UniPoly): nonzero polynomial

        Returns:
            list: IsolatedRoot objects with pairwise disjoint
                intervals, sorted increasing; multiplicities come from
                the square-free decomposition
    """

    if p.is_zero:
        raise ZeroPolynomialError("cannot isolate roots of the zero "
                                  "polynomial")

    roots = []
    for factor, multiplicity in p.square_free_decomposition():
        if factor.degree < 1:
            continue
        for lo, hi, defining in _isolate_square_free(factor):
            roots.append(IsolatedRoot(defining, lo, hi, multiplicity))

    # factors of the square-free decomposition are coprime, so no
    # equal pairs can appear here
    separated = refine_until_disjoint(roots)
    return sorted(separated.roots, key=lambda r: (r.lo, r.hi))
