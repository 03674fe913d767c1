"""Reduced Groebner bases with Buchberger's algorithm and cofactor certificates."""

# Standard library imports
from dataclasses import dataclass
from functools import cached_property, lru_cache
import heapq
from itertools import combinations
import logging

# Local application/library specific imports
from config.constants import DEFAULT_PAIR_STRATEGY, PAIR_STRATEGIES
from poly import flat_key, total_degree, with_monomial_order
from utils.validation_utils import UsageError, check_same_ring, require

# Set up logging
logging.basicConfig(level=logging.INFO)
logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class GroebnerBasis:
    """
    Reduced Groebner basis of an ideal for a fixed monomial order.

    Elements are monic, sorted by increasing leading monomial, and live in
    ``ring`` (a sympy ring whose order is ``order``). The zero ideal has no
    elements; the unit ideal is exactly ``(1,)``.
    """

    elements: tuple
    order: object
    ring: object
    reduced: bool = True

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    @cached_property
    def leading_monomials(self):
        return [g.LM for g in self.elements]

    def is_unit(self):
        return len(self.elements) == 1 and self.elements[0] == self.ring.one

    def is_zero(self):
        return not self.elements

    def contains(self, p):
        return not normal_form(p, self)


@dataclass(frozen=True)
class Certificate:
    """
    Cofactors expressing target = sum(cofactors[j] * generators[j]) + remainder.

    The remainder is zero exactly when the target lies in the ideal.
    """

    generators: tuple
    cofactors: tuple
    target: object
    remainder: object

    def combination(self):
        total = self.target.ring.zero
        for cofactor, generator in zip(self.cofactors, self.generators):
            total += cofactor * generator
        return total

    def verify(self):
        return self.combination() + self.remainder == self.target


def spoly(f, g, lmf=None, lmg=None):
    """Return the s-polynomial of monic polynomials f and g."""
    if f.ring != g.ring:
        raise UsageError("s-polynomial of polynomials from different rings")
    lmf = f.LM if lmf is None else lmf
    lmg = g.LM if lmg is None else lmg
    R = f.ring
    lcm = R.monomial_lcm(lmf, lmg)
    s1 = f.mul_monom(R.monomial_div(lcm, lmf))
    s2 = g.mul_monom(R.monomial_div(lcm, lmg))
    return s1 - s2


@lru_cache(maxsize=None)
def _descending_key(order):
    key = flat_key(order)
    return lambda monomial: tuple(-v for v in key(monomial))


def _reduce(p, polys, lms, lcs=None, track=False):
    """
    Full multivariate division of p by polys, largest monomial first.

    The monomials still to be reduced sit in a heap keyed by the negated
    order key, so each step finds the leading term without rescanning.

    Args:
        p (Polynomial): Dividend.
        polys (Sequence[Polynomial]): Divisors, in p's ring.
        lms (Sequence[tuple]): Their leading monomials.
        lcs (Sequence, optional): Their leading coefficients; None when all
            divisors are monic.
        track (bool): Whether to collect quotients.

    Returns:
        tuple: (list of quotient polynomials or None, remainder).
    """
    ring = p.ring
    domain = ring.domain
    divides = ring.monomial_div
    mul = ring.monomial_mul
    key = _descending_key(ring.order)
    candidates = [
        (k, g, lm, lcs[k] if lcs is not None else domain.one)
        for k, (g, lm) in enumerate(zip(polys, lms))
    ]

    f = dict(p.items())
    heap = [(key(m), m) for m in f]
    heapq.heapify(heap)
    remainder = {}
    quotients = [{} for _ in candidates] if track else None
    while heap:
        m = heapq.heappop(heap)[1]
        c = f.pop(m, None)
        if c is None:
            continue
        for k, g, lm, lc in candidates:
            q = divides(m, lm)
            if q is None:
                continue
            coeff = domain.quo(c, lc)
            if track:
                quotients[k][q] = quotients[k].get(q, domain.zero) + coeff
            for mg, cg in g.items():
                if mg == lm:
                    continue
                m1 = mul(mg, q)
                value = f.get(m1)
                if value is None:
                    f[m1] = -coeff * cg
                    heapq.heappush(heap, (key(m1), m1))
                else:
                    value -= coeff * cg
                    if value:
                        f[m1] = value
                    else:
                        del f[m1]
            break
        else:
            remainder[m] = c
    if track:
        quotients = [ring.from_dict(terms) for terms in quotients]
    return quotients, ring.from_dict(remainder)


def divide(p, divisors):
    """
    Multivariate division of p by divisors in the order of p's ring.

    Returns:
        tuple: (quotients aligned with divisors, remainder).
    """
    divisors = [g for g in divisors]
    if not all(divisors):
        raise UsageError("cannot divide by the zero polynomial")
    check_same_ring(p, *divisors)
    return _reduce(p, divisors, [g.LM for g in divisors], [g.LC for g in divisors], track=True)


def update(lmG, pairs, lmf, ring, sugars=None, sugar_f=0):
    """
    Return the pair map after a polynomial with leading monomial lmf joins
    a basis with leading monomials lmG, using the Gebauer-Moeller criteria.

    Pairs map (i, j) to their selection key (sugar, order of the lcm, i, j),
    so the sugar strategy with index tie-break is min() over the values.
    Without sugars every pair has sugar 0, which is the normal strategy.
    """
    lcm = ring.monomial_lcm
    mul = ring.monomial_mul
    div = ring.monomial_div
    order = ring.order
    k = len(lmG)

    def pair_key(i, L):
        if sugars is None:
            return (0, order(L), i, k)
        degree = sum(L)
        sugar = max(sugars[i] + degree - sum(lmG[i]), sugar_f + degree - sum(lmf))
        return (sugar, order(L), i, k)

    kept = {}
    for (i, j), key in pairs.items():
        lcm_ij = lcm(lmG[i], lmG[j])
        if (
            not div(lcm_ij, lmf)
            or lcm_ij == lcm(lmG[i], lmf)
            or lcm_ij == lcm(lmG[j], lmf)
        ):
            kept[(i, j)] = key

    lcm_dict = {}
    for i in range(k):
        lcm_dict.setdefault(lcm(lmG[i], lmf), []).append(i)
    minimalized_lcms = []
    for L in sorted(lcm_dict.keys(), key=order):
        if all(not div(L, L_) for L_ in minimalized_lcms):
            minimalized_lcms.append(L)
    for L in minimalized_lcms:
        if not any(lcm(lmG[i], lmf) == mul(lmG[i], lmf) for i in lcm_dict[L]):
            i = min(lcm_dict[L])
            kept[(i, k)] = pair_key(i, L)
    return kept


def _prepare(gens, order):
    if not gens:
        raise UsageError("buchberger needs at least one generator")
    converted = [with_monomial_order(g, order) for g in gens]
    check_same_ring(*converted)
    return converted[0].ring, converted


def _scaled_unit_vector(ring, size, index, scale):
    vector = [ring.zero] * size
    vector[index] = ring.ground_new(scale)
    return vector


def _reduce_tracked(p, vector, G, lmG, C):
    """Divide p by the monic G, carrying its cofactor vector along."""
    quotients, r = _reduce(p, G, lmG, track=True)
    vector = list(vector)
    for q, basis_vector in zip(quotients, C):
        if q:
            vector = [v - q * c for v, c in zip(vector, basis_vector)]
    return r, vector


def _monic_tracked(r, vector):
    lc = r.LC
    inverse = r.ring.domain.quo(r.ring.domain.one, lc)
    return r.mul_ground(inverse), [v.mul_ground(inverse) for v in vector]


def _complete(gens, order, track, strategy=DEFAULT_PAIR_STRATEGY):
    """
    Run Buchberger's algorithm; returns (elements, cofactor vectors or None).

    The "sugar" strategy picks the pair of least sugar degree first and
    breaks ties like the "normal" strategy, by least lcm then index.
    """
    if strategy not in PAIR_STRATEGIES:
        raise UsageError(f"unknown pair strategy {strategy!r}; choose from {PAIR_STRATEGIES}")
    ring, F = _prepare(gens, order)
    size = len(F)
    one = ring.domain.one

    G, lmG, C, sugars = [], [], [], []
    pairs = {}

    def add(h, vector, sugar):
        nonlocal pairs
        pairs = update(lmG, pairs, h.LM, ring, sugars if strategy == "sugar" else None, sugar)
        G.append(h)
        lmG.append(h.LM)
        C.append(vector)
        sugars.append(sugar)

    def unit(vector):
        return [ring.one], [vector] if track else None

    for index, f in enumerate(F):
        if not f:
            continue
        lc = f.LC
        h = f.monic()
        vector = _scaled_unit_vector(ring, size, index, ring.domain.quo(one, lc)) if track else None
        if h.LM == ring.zero_monom:
            return unit(vector)
        add(h, vector, total_degree(h))

    if not G:
        return [], [] if track else None

    steps = 0
    while pairs:
        i, j = min(pairs, key=pairs.get)
        sugar = pairs.pop((i, j))[0]
        s = spoly(G[i], G[j], lmf=lmG[i], lmg=lmG[j])
        steps += 1
        if track:
            m = ring.monomial_lcm(lmG[i], lmG[j])
            mi = ring.monomial_div(m, lmG[i])
            mj = ring.monomial_div(m, lmG[j])
            vector = [a.mul_monom(mi) - b.mul_monom(mj) for a, b in zip(C[i], C[j])]
            r, vector = _reduce_tracked(s, vector, G, lmG, C)
        else:
            r, vector = _reduce(s, G, lmG)[1], None
        if r:
            if track:
                r, vector = _monic_tracked(r, vector)
            else:
                r = r.monic()
            if r.LM == ring.zero_monom:
                logger.debug(f"Unit ideal detected after {steps} pairs")
                return unit(vector)
            add(r, vector, max(sugar, total_degree(r)))

    logger.debug(f"Buchberger finished: {steps} pairs, {len(G)} raw elements")
    return _minimalize_and_interreduce(G, C if track else None, ring)


def _minimalize_and_interreduce(G, C, ring):
    order = ring.order
    ranked = sorted(range(len(G)), key=lambda k: order(G[k].LM))
    minimal = []
    for k in ranked:
        if all(not ring.monomial_div(G[k].LM, G[m].LM) for m in minimal):
            minimal.append(k)
    Gmin = [G[k] for k in minimal]
    lms = [g.LM for g in Gmin]
    Cmin = [C[k] for k in minimal] if C is not None else None

    reduced, vectors = [], []
    for i, g in enumerate(Gmin):
        others = Gmin[:i] + Gmin[i + 1 :]
        other_lms = lms[:i] + lms[i + 1 :]
        if Cmin is not None:
            if others:
                r, vector = _reduce_tracked(
                    g, Cmin[i], others, other_lms, Cmin[:i] + Cmin[i + 1 :]
                )
            else:
                r, vector = g, Cmin[i]
            r, vector = _monic_tracked(r, vector)
            vectors.append(vector)
        else:
            r = (_reduce(g, others, other_lms)[1] if others else g).monic()
        reduced.append(r)
    return reduced, vectors if Cmin is not None else None


def buchberger(gens, order, strategy=DEFAULT_PAIR_STRATEGY):
    """
    Reduced Groebner basis of the ideal generated by gens.

    Args:
        gens (list[Polynomial]): Generators in one ring (any monomial order).
        order (MonomialOrder): Order of the basis.
        strategy (str): "sugar" or "normal" pair selection.

    Returns:
        GroebnerBasis: The unique reduced basis for this order.
    """
    elements, _ = _complete(gens, order, track=False, strategy=strategy)
    ring = with_monomial_order(gens[0], order).ring
    return GroebnerBasis(tuple(elements), order, ring)


def buchberger_with_cofactors(gens, order, strategy=DEFAULT_PAIR_STRATEGY):
    """
    Reduced Groebner basis plus, for every basis element, its cofactors over
    the original generators.

    Returns:
        tuple: (GroebnerBasis, tuple of cofactor tuples aligned with the
        basis elements).
    """
    elements, vectors = _complete(gens, order, track=True, strategy=strategy)
    ring = with_monomial_order(gens[0], order).ring
    return GroebnerBasis(tuple(elements), order, ring), tuple(tuple(v) for v in vectors)


def normal_form(p, gb):
    """
    Remainder of p on division by gb.

    Raises:
        UsageError: If p lives in another ring or under another order.
    """
    if p.ring != gb.ring:
        if p.ring.symbols == gb.ring.symbols and p.ring.domain == gb.ring.domain:
            raise UsageError(f"order mismatch: {p.ring.order} vs {gb.order}")
        raise UsageError("polynomial and basis live in different rings")
    if not gb.elements or not p:
        return p
    return _reduce(p, gb.elements, gb.leading_monomials)[1]


def normal_form_with_certificate(p, gens, order):
    """
    Normal form of p with respect to the ideal of gens, together with
    cofactors over the original generators.

    Returns:
        tuple: (remainder, Certificate) with
        p = sum(cofactor_j * gen_j) + remainder.
    """
    gb, vectors = buchberger_with_cofactors(gens, order)
    ring = gb.ring
    target = with_monomial_order(p, order)
    generators = tuple(with_monomial_order(g, order) for g in gens)
    cofactors = [ring.zero] * len(generators)
    if gb.elements and target:
        quotients, remainder = _reduce(target, gb.elements, gb.leading_monomials, track=True)
        for q, vector in zip(quotients, vectors):
            if q:
                cofactors = [c + q * v for c, v in zip(cofactors, vector)]
    else:
        remainder = target
    certificate = Certificate(generators, tuple(cofactors), target, remainder)
    require(certificate.verify(), "certificate identity does not re-expand")
    return remainder, certificate


def satisfies_buchberger_criterion(gb):
    """Check that every s-polynomial of the basis reduces to zero."""
    G = list(gb.elements)
    for i, j in combinations(range(len(G)), 2):
        if normal_form(spoly(G[i], G[j]), gb):
            return False
    return True


def is_reduced(gb):
    """Check monic leading coefficients and full inter-reduction."""
    G = list(gb.elements)
    lms = [g.LM for g in G]
    for i, g in enumerate(G):
        if g.LC != gb.ring.domain.one:
            return False
        for monom in g.itermonoms():
            if any(gb.ring.monomial_div(monom, lms[k]) for k in range(len(G)) if k != i):
                return False
    return True
