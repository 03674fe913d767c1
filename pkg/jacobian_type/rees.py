"""
Rees algebra presentations.

For an ideal (g_1..g_m) of R = k[x], the Rees algebra R[g t] is presented as
R[u_1..u_m] / Q with Q the kernel of u_i -> g_i t. Q is found by eliminating
t from (u_i - g_i t). With deg x = 0 and deg u = deg t = 1 those generators
are homogeneous, so every reduced basis element of Q is homogeneous in u.
"""

# Standard library imports
from collections import Counter
import dataclasses
from dataclasses import dataclass
import logging

# Related third-party imports
from sympy.polys.orderings import grevlex

# Local application/library specific imports
from config.constants import AUXILIARY_VARIABLE, DEFAULT_PRESENTATION_NAMES
from groebner import normal_form_with_certificate
from ideal_ops import Ideal, eliminate, member
from poly import EliminationOrder, PolyRing, change_ring
from utils.utils import fresh_name, multisets
from utils.validation_utils import PreconditionError, UsageError, require

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


def default_presentation_names(count, taken=(), f_slot=False):
    """
    Names u1..um for the presentation variables; with f_slot the last one
    is called s.

    Args:
        count (int): Number of generators.
        taken (Iterable[str]): Names to avoid (the base variables).
        f_slot (bool): Whether the last generator is the divisor itself.

    Returns:
        tuple: The names.
    """
    taken = set(taken)
    prefix = DEFAULT_PRESENTATION_NAMES["PREFIX"]
    names = []
    plain = count - 1 if f_slot else count
    for index in range(1, plain + 1):
        name = fresh_name(f"{prefix}{index}", taken)
        taken.add(name)
        names.append(name)
    if f_slot:
        names.append(fresh_name(DEFAULT_PRESENTATION_NAMES["F_SLOT"], taken))
    return tuple(names)


@dataclass(frozen=True)
class ReesPresentation:
    """
    Defining ideal Q of the Rees algebra of (generators).

    ``ring`` has the presentation variables first and the base variables
    after, ordered by EliminationOrder(m): presentation degree first, so
    the basis elements of degree <= d generate Q<d>.
    """

    base_ring: PolyRing
    generators: tuple
    names: tuple
    ring: PolyRing
    defining_ideal: Ideal
    _truncations: dict = dataclasses.field(default_factory=dict, compare=False, repr=False)

    @property
    def basis(self):
        return self.defining_ideal.groebner_basis().elements

    @property
    def width(self):
        return len(self.names)

    def degree(self, p):
        """Presentation degree of a homogeneous p (degree of its leading monomial)."""
        return sum(p.LM[: self.width])

    def is_homogeneous(self, p):
        return len({sum(monom[: self.width]) for monom in p.itermonoms()}) <= 1

    def degree_histogram(self):
        return dict(sorted(Counter(self.degree(g) for g in self.basis).items()))

    def elements_of_degree(self, d):
        return [g for g in self.basis if self.degree(g) == d]

    def generated_up_to(self, d):
        """Q<d>, the ideal generated by the equations of degree at most d."""
        if d not in self._truncations:
            gens = [g for g in self.basis if self.degree(g) <= d]
            self._truncations[d] = Ideal(self.ring, gens)
        return self._truncations[d]

    def substitute(self, p):
        """
        Image of p under u_i -> g_i t, as {degree: coefficient of t^degree}.
        """
        base = self.base_ring.ring
        p = change_ring(p, self.ring.ring) if p.ring != self.ring.ring else p
        powers = {}
        images = {}
        for monom, coeff in p.items():
            exponents = monom[: self.width]
            term = base.from_dict({monom[self.width :]: coeff})
            for index, e in enumerate(exponents):
                if e:
                    key = (index, e)
                    if key not in powers:
                        powers[key] = self.generators[index] ** e
                    term = term * powers[key]
            d = sum(exponents)
            images[d] = images.get(d, base.zero) + term
        return {d: image for d, image in images.items() if image}

    def substitution_vanishes(self, p):
        return not self.substitute(p)


def rees_ideal(gens, ring, names=None):
    """
    Present the Rees algebra of the ideal generated by gens.

    Args:
        gens (list[Polynomial]): Generators in ring, not all zero. A zero
            generator contributes its variable as a degree-one equation.
        ring (PolyRing): Base ring R.
        names (Sequence[str], optional): Presentation variable names;
            defaults to u1..um.

    Returns:
        ReesPresentation: With Q's reduced basis cached.
    """
    gens = tuple(ring.coerce(g) for g in gens)
    if not any(gens):
        raise UsageError("a Rees presentation needs a nonzero generator")
    names = tuple(names) if names else default_presentation_names(len(gens), ring.variable_names)
    if len(names) != len(gens):
        raise UsageError(f"{len(names)} names given for {len(gens)} generators")
    if set(names) & set(ring.variable_names):
        raise UsageError(f"presentation names {names} clash with {ring.variable_names}")

    presentation_ring = PolyRing(
        names + ring.variable_names, ring.field, EliminationOrder(len(names), grevlex)
    )
    t_name = fresh_name(AUXILIARY_VARIABLE, names + ring.variable_names)
    big = PolyRing((t_name,) + names + ring.variable_names, ring.field)
    t = big.var(t_name)
    elimination_gens = [
        big.var(name) - change_ring(g, big.ring) * t for name, g in zip(names, gens)
    ]
    Q = eliminate(Ideal(big, elimination_gens), [t_name], into=presentation_ring)
    presentation = ReesPresentation(ring, gens, names, presentation_ring, Q)
    for g in presentation.basis:
        require(presentation.is_homogeneous(g), f"non-homogeneous equation {g}")
        require(presentation.substitution_vanishes(g), f"equation {g} does not vanish")
    logger.info(
        f"Rees presentation of {len(gens)} generators: degrees {presentation.degree_histogram()}"
    )
    return presentation


@dataclass(frozen=True)
class RelationTypeEvidence:
    """
    Relation type with its per-degree evidence trail.

    ``survivors[d]`` lists the degree-d basis elements that are not in
    Q<d-1> after localizing, i.e. the generators of E(I)_d.
    """

    relation_type: int
    survivors: dict
    tested: dict
    histogram: dict

    def effective_vanishes(self, d):
        """Whether E(I)_d = 0 (degrees >= 2)."""
        return not self.survivors.get(d)


def relation_type_local(presentation, local=True):
    """
    Relation type of the presented ideal over the local ring at the origin.

    rt is the largest d >= 2 with a degree-d basis element outside Q<d-1>
    locally, and 1 when there is none (including Q = 0).

    Args:
        presentation (ReesPresentation): The presentation.
        local (bool): Use local membership; False tests global membership.

    Returns:
        RelationTypeEvidence: rt plus the surviving equations per degree.
    """
    histogram = presentation.degree_histogram()
    base_names = presentation.base_ring.variable_names
    survivors = {}
    tested = {}
    for d in sorted(histogram):
        if d < 2:
            continue
        lower = presentation.generated_up_to(d - 1)
        kept = []
        candidates = presentation.elements_of_degree(d)
        for g in candidates:
            inside, _ = member(g, lower, local=local, over=base_names if local else None)
            if not inside:
                kept.append(g)
        tested[d] = len(candidates)
        if kept:
            survivors[d] = tuple(kept)
        logger.debug(f"Degree {d}: {len(kept)} of {len(candidates)} equations survive")
    rt = max(survivors) if survivors else 1
    return RelationTypeEvidence(rt, survivors, tested, histogram)


@dataclass(frozen=True)
class TopEquation:
    """
    An equation of degree L in Q of the form u*s^L + p_1 s^(L-1) + ... + p_L.

    When the unit u is a constant the equation is divided by it and is monic.
    """

    equation: object
    unit: object
    degree: int
    monic: bool
    homogeneous: bool
    substitution_vanishes: bool
    in_defining_ideal: bool

    @property
    def verified(self):
        return self.homogeneous and self.substitution_vanishes and self.in_defining_ideal


def leading_coefficient_in(p, index, degree):
    """Coefficient of v^degree in p, v the index-th variable, as a polynomial."""
    ring = p.ring
    terms = {}
    for monom, coeff in p.items():
        if monom[index] == degree:
            reduced = monom[:index] + (0,) + monom[index + 1 :]
            terms[reduced] = coeff
    return ring.from_dict(terms) if terms else ring.zero


def top_equation(presentation, gradient_gens, f, L, local=True):
    """
    Build the equation s^L + p_1 s^(L-1) + ... + p_L of Q from a
    representation u f^L = sum f_j h_j with h_j in I^(L-1).

    The presentation must be of (gradient_gens..., f) with s the last
    variable. Each product f_j * (generators of I^(L-1)) is lifted to the
    matching monomial in the presentation variables.

    Raises:
        PreconditionError: If f^L is not in J I^(L-1) (locally when local).
    """
    if L < 1:
        raise PreconditionError(f"top equation degree must be >= 1, got {L}")
    base = presentation.base_ring
    gradient_gens = [base.coerce(g) for g in gradient_gens]
    f = base.coerce(f)
    all_gens = gradient_gens + [f]
    if tuple(all_gens) != presentation.generators:
        raise UsageError("presentation does not match the gradient generators and f")
    m = len(gradient_gens)

    products, labels = [], []
    for j in range(m):
        if not gradient_gens[j]:
            continue
        for combo in multisets(m + 1, L - 1):
            product = gradient_gens[j]
            for index in combo:
                product = product * all_gens[index]
            products.append(product)
            labels.append((j, combo))

    target = f**L
    inside, witness = member(target, Ideal(base, products), local=local)
    if not inside:
        raise PreconditionError(f"f^{L} is not in J*I^{L - 1}: L is below id(f)")
    unit = witness.unit
    remainder, certificate = normal_form_with_certificate(
        unit * target, products, base.default_order
    )
    require(not remainder, "certificate for the top equation left a remainder")

    R = presentation.ring.ring
    variables = [presentation.ring.var(name) for name in presentation.names]
    s = variables[m]
    equation = change_ring(unit, R) * s**L
    for (j, combo), cofactor in zip(labels, certificate.cofactors):
        if not cofactor:
            continue
        monomial = variables[j]
        for index in combo:
            monomial = monomial * variables[index]
        equation -= change_ring(cofactor, R) * monomial

    unit_constant = unit.is_ground
    if unit_constant:
        equation = equation.quo_ground(unit.LC)
    leading = leading_coefficient_in(equation, m, L)
    result = TopEquation(
        equation=equation,
        unit=unit,
        degree=L,
        monic=leading == R.one,
        homogeneous=presentation.is_homogeneous(equation),
        substitution_vanishes=presentation.substitution_vanishes(equation),
        in_defining_ideal=presentation.defining_ideal.contains(equation),
    )
    logger.info(f"Top equation of degree {L}: verified={result.verified}, monic={result.monic}")
    return result


def extract_top_equation(presentation, data, L, local=True):
    """Top equation of the Jacobian ideal presentation of a DivisorData."""
    return top_equation(presentation, list(data.partials), data.f, L, local=local)
