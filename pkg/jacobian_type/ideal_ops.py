"""
Ideal arithmetic and membership in the local ring at the origin.

Local membership never expands power series: g lies in I localized at the
maximal ideal of the origin iff the colon ideal (I : g) contains an element
with nonzero constant term. Colon, product and intersection commute with
localization for finitely generated ideals, so every construction below is
carried out with ordinary polynomial Groebner bases.
"""

# Standard library imports
from dataclasses import dataclass
import logging
import threading

# Local application/library specific imports
from config.constants import AUXILIARY_VARIABLE
from groebner import GroebnerBasis, buchberger, divide, normal_form
from poly import EliminationOrder, PolyRing, change_ring, is_unit_at_origin
from utils.utils import multisets
from utils.validation_utils import UsageError, require

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


class Ideal:
    """
    An ideal of a PolyRing given by generators.

    Zero generators are dropped. Reduced Groebner bases are cached per
    monomial order; the cache is write-once per order and guarded by a lock,
    so ideals can be shared between threads.
    """

    def __init__(self, ring, generators=()):
        self.ring = ring
        unique = {}
        for g in generators:
            g = ring.coerce(g)
            if g:
                unique.setdefault(g, None)
        self.generators = tuple(unique)
        self._bases = {}
        self._lock = threading.Lock()

    @classmethod
    def unit(cls, ring):
        return cls(ring, [ring.one])

    @classmethod
    def zero(cls, ring):
        return cls(ring, [])

    def __repr__(self):
        return f"Ideal({self.ring}, {list(self.generators)})"

    def __len__(self):
        return len(self.generators)

    def groebner_basis(self, order=None):
        """Reduced Groebner basis for order (the ring's default order if omitted)."""
        order = order or self.ring.default_order
        with self._lock:
            gb = self._bases.get(order)
        if gb is not None:
            return gb
        if self.generators:
            gb = buchberger(list(self.generators), order)
        else:
            gb = GroebnerBasis((), order, self.ring.sympy_ring(order))
        logger.debug(f"Groebner basis of {len(self.generators)} generators has {len(gb)} elements")
        return self.remember_basis(gb)

    def remember_basis(self, gb):
        with self._lock:
            return self._bases.setdefault(gb.order, gb)

    def is_zero(self):
        return not self.generators

    def is_unit(self):
        return self.groebner_basis().is_unit()

    def contains(self, g):
        """Global membership by normal form in the default order."""
        g = self.ring.coerce(g)
        if not g:
            return True
        if not self.generators:
            return False
        return not normal_form(g, self.groebner_basis())


def _same_ring(I, J):
    if I.ring != J.ring:
        raise UsageError(f"ideals live in different rings: {I.ring} and {J.ring}")


def ideal_sum(I, J):
    _same_ring(I, J)
    return Ideal(I.ring, I.generators + J.generators)


def ideal_product(I, J):
    """Ideal generated by all pairwise products."""
    _same_ring(I, J)
    return Ideal(I.ring, [a * b for a in I.generators for b in J.generators])


def ideal_scale(I, g):
    """The ideal g*I."""
    g = I.ring.coerce(g)
    return Ideal(I.ring, [g * a for a in I.generators])


def ideal_power(I, k):
    """
    I**k generated by all k-fold products of generators; I**0 = (1).

    Raises:
        UsageError: If k is negative.
    """
    if not isinstance(k, int) or k < 0:
        raise UsageError(f"ideal power must be a non-negative integer, got {k!r}")
    if k == 0:
        return Ideal.unit(I.ring)
    gens = I.generators
    products = []
    for combo in multisets(len(gens), k):
        product = I.ring.one
        for index in combo:
            product = product * gens[index]
        products.append(product)
    return Ideal(I.ring, products)


def eliminate(I, front_vars, into=None):
    """
    Intersect I with the subring not involving front_vars.

    Args:
        I (Ideal): Ideal to eliminate from.
        front_vars (Iterable[str]): Variable names to eliminate.
        into (PolyRing, optional): Ring of the result; its variables must be
            the remaining ones. Its default order breaks ties after the
            front block, and the basis found is cached under that order.

    Returns:
        Ideal: The elimination ideal, in the smaller ring.
    """
    front = tuple(front_vars)
    if not front:
        return I
    rest = tuple(name for name in I.ring.variable_names if name not in front)
    unknown = set(front) - set(I.ring.variable_names)
    if unknown:
        raise UsageError(f"cannot eliminate unknown variables {sorted(unknown)}")
    if into is None:
        into = PolyRing(rest, I.ring.field)
    if set(into.variable_names) != set(rest):
        raise UsageError(f"target ring {into} does not match the remaining variables {rest}")
    if not rest:
        raise UsageError("cannot eliminate every variable")

    order = EliminationOrder(len(front), into.default_order)
    work = PolyRing(front + into.variable_names, I.ring.field, order)
    gens = [change_ring(g, work.ring) for g in I.generators]
    if not gens:
        return Ideal.zero(into)
    gb = buchberger(gens, order)
    nfront = len(front)
    kept = [g for g in gb.elements if not any(g.LM[:nfront])]
    result = Ideal(into, [change_ring(g, into.ring) for g in kept])

    result.remember_basis(
        GroebnerBasis(tuple(result.generators), into.default_order, into.ring)
    )
    logger.debug(f"Eliminated {front}: {len(gb)} basis elements, {len(kept)} kept")
    return result


def ideal_intersect(I, J):
    """I ∩ J, eliminating t from t*I + (1 - t)*J."""
    _same_ring(I, J)
    if I.is_zero() or J.is_zero():
        return Ideal.zero(I.ring)
    t_name = I.ring.fresh_variable(AUXILIARY_VARIABLE)
    big = I.ring.extended(front=(t_name,))
    t = big.var(t_name)
    gens = [t * change_ring(g, big.ring) for g in I.generators]
    gens += [(big.one - t) * change_ring(g, big.ring) for g in J.generators]
    return eliminate(Ideal(big, gens), [t_name], into=I.ring)


def ideal_colon(I, g):
    """
    I : g = (I ∩ (g)) / g, each generator divided exactly by g.

    By convention I : 0 = (1).
    """
    g = I.ring.coerce(g)
    if not g:
        return Ideal.unit(I.ring)
    if I.is_zero():
        return Ideal.zero(I.ring)
    intersection = ideal_intersect(I, Ideal(I.ring, [g]))
    quotients = []
    for h in intersection.generators:
        q, r = divide(h, [g])
        require(not r, "intersection generator not divisible by the colon element")
        quotients.append(q[0])
    return Ideal(I.ring, quotients)


def ideal_colon_ideal(I, J):
    """I : J as the intersection of the colons by J's generators."""
    _same_ring(I, J)
    if not J.generators:
        return Ideal.unit(I.ring)
    result = None
    for g in J.generators:
        colon = ideal_colon(I, g)
        result = colon if result is None else ideal_intersect(result, colon)
    return result


@dataclass(frozen=True)
class LocalWitness:
    """
    Evidence that unit * target lies in an ideal, with unit(0) != 0.

    unit = 1 whenever the membership already holds globally.
    """

    unit: object
    target: object

    @property
    def is_global(self):
        return self.unit == self.unit.ring.one

    def verify(self, ideal):
        return is_unit_at_origin(self.unit) and ideal.contains(self.unit * self.target)


def _pick_unit(candidates):
    units = [u for u in candidates if is_unit_at_origin(u)]
    if not units:
        return None
    return min(units, key=lambda u: (len(u), str(u)))


def is_member(g, I):
    """Global membership; returns (bool, witness with unit 1 or None)."""
    g = I.ring.coerce(g)
    if I.contains(g):
        return True, LocalWitness(I.ring.one, g)
    return False, None


def is_member_local(g, I, over=None):
    """
    Membership of g in I after localizing at the origin.

    Args:
        g (Polynomial): Candidate element.
        I (Ideal): The ideal.
        over (Sequence[str], optional): Base variables. When given, the
            localization is at the origin of the base ring only: the colon
            (I : g) is contracted to the base variables before the
            constant-term test.

    Returns:
        tuple: (bool, LocalWitness or None).
    """
    g = I.ring.coerce(g)
    if I.contains(g):
        return True, LocalWitness(I.ring.one, g)
    if I.is_zero():
        return False, None
    colon = ideal_colon(I, g)
    if over is not None:
        others = [name for name in I.ring.variable_names if name not in set(over)]
        base = PolyRing(tuple(over), I.ring.field)
        contracted = eliminate(colon, others, into=base)
        u = _pick_unit(contracted.generators)
        if u is None:
            return False, None
        u = change_ring(u, I.ring.ring)
    else:
        u = _pick_unit(colon.generators)
        if u is None:
            return False, None
    witness = LocalWitness(u, g)
    require(I.contains(u * g), "local witness does not re-verify")
    return True, witness


def is_subset(I, J):
    _same_ring(I, J)
    return all(J.contains(g) for g in I.generators)


def equals(I, J):
    return is_subset(I, J) and is_subset(J, I)


def is_subset_local(I, J, over=None):
    _same_ring(I, J)
    return all(is_member_local(g, J, over=over)[0] for g in I.generators)


def equals_local(I, J, over=None):
    return is_subset_local(I, J, over=over) and is_subset_local(J, I, over=over)


def member(g, I, local=True, over=None):
    """Dispatch to local or global membership."""
    if local:
        return is_member_local(g, I, over=over)
    return is_member(g, I)


def subset(I, J, local=True):
    return is_subset_local(I, J) if local else is_subset(I, J)


def same_ideal(I, J, local=True):
    return equals_local(I, J) if local else equals(I, J)

