"""
Buchberger's algorithm with the sugar strategy, the Gebauer-Moeller pair
criteria and optional cofactor tracking, on sympy ``PolyElement`` data.

Submodules of a free module S^p are handled with the usual encoding: a vector
sum_k a_k e_k is the polynomial sum_k a_k * e_k in a ring whose first ``rank``
variables are the positions e_0..e_{p-1}. Only elements at the same position
form pairs, and the product criterion is used for ideals only.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Sequence, Tuple

from sympy.polys.rings import PolyElement, PolyRing

logger = logging.getLogger(__name__)

Cofactor = Dict[int, PolyElement]


@dataclass
class GroebnerResult:
    """A (not necessarily reduced) Groebner basis plus bookkeeping.

    ``cofactors[k]`` expresses ``basis[k]`` in the inputs when tracking was on.
    ``input_slots[i]`` is the basis position of input i if it survived as a
    basis element unchanged (up to a scalar).
    """

    ring: PolyRing
    rank: int
    inputs: List[PolyElement]
    basis: List[PolyElement]
    cofactors: Optional[List[Cofactor]]
    input_slots: Dict[int, int] = field(default_factory=dict)
    zero_inputs: List[int] = field(default_factory=list)


def weighted_degree(f: PolyElement, weights: Sequence[int]) -> int:
    return max((sum(w * e for w, e in zip(weights, m)) for m in f.keys()), default=0)


class Buchberger:
    """One Groebner basis computation.

    ``weights`` (one positive integer per ring variable) define the sugar of
    a polynomial as its largest weighted degree.
    """

    def __init__(self, ring: PolyRing, weights: Sequence[int], rank: int = 0, track: bool = False):
        self.ring = ring
        self.weights = tuple(weights)
        self.rank = rank
        self.track = track
        self.polys: List[PolyElement] = []
        self.lms: List[tuple] = []
        self.sugars: List[int] = []
        self.cofs: List[Optional[Cofactor]] = []
        self._serial = 0

    # -- helpers -------------------------------------------------------------
    def _wdeg(self, m) -> int:
        return sum(w * e for w, e in zip(self.weights, m))

    def _position(self, m) -> int:
        for k in range(self.rank):
            if m[k]:
                return k
        return -1

    def _compatible(self, i: int, j: int) -> bool:
        return self.rank == 0 or self._position(self.lms[i]) == self._position(self.lms[j])

    def _add(self, f: PolyElement, sugar: int, cof: Optional[Cofactor]) -> int:
        lc = f.LC
        if lc != 1:
            inv = self.ring.domain.one / lc
            f = f.mul_ground(inv)
            if cof is not None:
                cof = {i: c.mul_ground(inv) for i, c in cof.items()}
        self.polys.append(f)
        self.lms.append(f.LM)
        self.sugars.append(sugar)
        self.cofs.append(cof)
        return len(self.polys) - 1

    def _combine(self, a: Cofactor, b: Cofactor, term) -> Cofactor:
        """``a - term * b`` on cofactor dicts."""
        out = dict(a)
        for i, c in b.items():
            v = out.get(i, self.ring.zero) - c.mul_term(term)
            if v:
                out[i] = v
            else:
                out.pop(i, None)
        return out

    def reduce(self, p: PolyElement, active: Sequence[int], cof: Optional[Cofactor] = None,
               quotients: Optional[Dict[int, PolyElement]] = None) -> Tuple[PolyElement, Optional[Cofactor]]:
        """Full reduction of ``p`` by the active basis elements.

        With ``quotients`` given, the quotient of every divisor is accumulated
        there, so that ``p = sum q_k g_k + remainder``.
        """
        ring = self.ring
        monomial_div = ring.monomial_div
        monomial_mul = ring.monomial_mul
        zero = ring.domain.zero
        p = p.copy()
        remainder = ring.zero
        while p:
            m = p.leading_expv()
            c = p[m]
            for k in active:
                q = monomial_div(m, self.lms[k])
                if q is None:
                    continue
                get = p.get
                for mg, cg in self.polys[k].items():
                    m1 = monomial_mul(mg, q)
                    c1 = get(m1, zero) - c * cg
                    if c1:
                        p[m1] = c1
                    else:
                        del p[m1]
                if cof is not None:
                    cof = self._combine(cof, self.cofs[k], (q, c))
                if quotients is not None:
                    quotients[k] = quotients.get(k, ring.zero) + ring({q: c})
                break
            else:
                remainder[m] = c
                del p[m]
        return remainder, cof

    def _spoly(self, i: int, j: int) -> Tuple[PolyElement, Optional[Cofactor]]:
        ring = self.ring
        lcm = ring.monomial_lcm(self.lms[i], self.lms[j])
        ti = ring.monomial_div(lcm, self.lms[i])
        tj = ring.monomial_div(lcm, self.lms[j])
        one = ring.domain.one
        s = self.polys[i].mul_monom(ti) - self.polys[j].mul_monom(tj)
        cof = None
        if self.track:
            cof = {k: c.mul_monom(ti) for k, c in self.cofs[i].items()}
            cof = self._combine(cof, self.cofs[j], (tj, one))
        return s, cof

    def _pair_sugar(self, i: int, j: int) -> int:
        lcm = self.ring.monomial_lcm(self.lms[i], self.lms[j])
        w = self._wdeg(lcm)
        return max(self.sugars[i] + w - self._wdeg(self.lms[i]), self.sugars[j] + w - self._wdeg(self.lms[j]))

    # -- Gebauer-Moeller update ---------------------------------------------
    def _update(self, G: List[int], B: Dict[Tuple[int, int], Tuple[int, int]], ih: int):
        ring = self.ring
        monomial_lcm = ring.monomial_lcm
        monomial_div = ring.monomial_div
        monomial_mul = ring.monomial_mul
        mh = self.lms[ih]

        def disjoint(mg):
            return self.rank == 0 and monomial_mul(mh, mg) == monomial_lcm(mh, mg)

        C = [ig for ig in G if self._compatible(ih, ig)]
        D: List[int] = []
        while C:
            ig = C.pop(0)
            lcm_hg = monomial_lcm(mh, self.lms[ig])

            def lcm_divides(ip):
                return monomial_div(lcm_hg, monomial_lcm(mh, self.lms[ip])) is not None

            if disjoint(self.lms[ig]) or (not any(lcm_divides(ip) for ip in C)
                                          and not any(lcm_divides(ip) for ip in D)):
                D.append(ig)

        E = [ig for ig in D if not disjoint(self.lms[ig])]

        B_new = {}
        for (ig1, ig2), key in B.items():
            lcm12 = monomial_lcm(self.lms[ig1], self.lms[ig2])
            if (monomial_div(lcm12, mh) is None
                    or monomial_lcm(self.lms[ig1], mh) == lcm12
                    or monomial_lcm(self.lms[ig2], mh) == lcm12):
                B_new[(ig1, ig2)] = key
        for ig in E:
            self._serial += 1
            B_new[(ig, ih)] = (self._pair_sugar(ig, ih), self._serial)

        G_new = [ig for ig in G if monomial_div(self.lms[ig], mh) is None]
        G_new.append(ih)
        return G_new, B_new

    # -- driver ----------------------------------------------------------------
    def run(self, inputs: Sequence[PolyElement]) -> GroebnerResult:
        ring = self.ring
        one = ring.one
        G: List[int] = []
        B: Dict[Tuple[int, int], Tuple[int, int]] = {}
        zero_inputs = []
        slots = {}
        for i, f in enumerate(inputs):
            if not f:
                zero_inputs.append(i)
                continue
            cof = {i: one} if self.track else None
            ih = self._add(f, weighted_degree(f, self.weights), cof)
            slots[i] = ih
            G, B = self._update(G, B, ih)

        reductions = 0
        while B:
            pair = min(B, key=B.get)
            sugar, _ = B.pop(pair)
            s, cof = self._spoly(*pair)
            h, cof = self.reduce(s, G, cof)
            reductions += 1
            if h:
                ih = self._add(h, sugar, cof)
                G, B = self._update(G, B, ih)
                logger.debug("new basis element %d (sugar %d), %d pairs left", ih, sugar, len(B))

        logger.debug("groebner basis: %d elements after %d reductions", len(G), reductions)
        position = {ih: k for k, ih in enumerate(G)}
        return GroebnerResult(
            ring=ring,
            rank=self.rank,
            inputs=list(inputs),
            basis=[self.polys[ih] for ih in G],
            cofactors=[self.cofs[ih] for ih in G] if self.track else None,
            input_slots={i: position[ih] for i, ih in slots.items() if ih in position},
            zero_inputs=zero_inputs,
        )


def groebner(inputs: Sequence[PolyElement], weights: Sequence[int], rank: int = 0,
             track: bool = False) -> GroebnerResult:
    if not inputs:
        raise ValueError("groebner() needs at least one input to know the ring")
    return Buchberger(inputs[0].ring, weights, rank, track).run(inputs)


def minimalize(basis: Sequence[PolyElement]) -> List[PolyElement]:
    """Drop elements whose leading monomial is divisible by another's (first one wins on ties)."""
    if not basis:
        return []
    monomial_div = basis[0].ring.monomial_div
    lms = [g.LM for g in basis]
    keep = []
    for i, g in enumerate(basis):
        redundant = False
        for j in range(len(basis)):
            if j == i or monomial_div(lms[i], lms[j]) is None:
                continue
            if lms[i] != lms[j] or j < i:
                redundant = True
                break
        if not redundant:
            keep.append(g)
    return keep


def reduce_basis(basis: Sequence[PolyElement]) -> List[PolyElement]:
    """The reduced Groebner basis from any Groebner basis, sorted by leading monomial, largest first."""
    minimal = minimalize(basis)
    reduced = []
    for i, g in enumerate(minimal):
        others = minimal[:i] + minimal[i + 1:]
        r = g.rem(others) if others else g
        reduced.append(r.monic())
    if not reduced:
        return []
    order = reduced[0].ring.order
    return sorted(reduced, key=lambda g: order(g.LM), reverse=True)


def reduced_groebner(inputs: Sequence[PolyElement], weights: Sequence[int]) -> List[PolyElement]:
    nonzero = [f for f in inputs if f]
    if not nonzero:
        return []
    return reduce_basis(groebner(nonzero, weights).basis)


def normal_form(f: PolyElement, basis: Sequence[PolyElement]) -> PolyElement:
    if not basis or not f:
        return f
    return f.rem(list(basis))


def lift(result: GroebnerResult, f: PolyElement) -> Optional[Cofactor]:
    """Coefficients expressing ``f`` in the inputs, or ``None`` if ``f`` is not in the span.

    Needs a result computed with cofactor tracking.
    """
    engine = _engine_for(result)
    quotients: Dict[int, PolyElement] = {}
    remainder, _ = engine.reduce(f, range(len(result.basis)), None, quotients)
    if remainder:
        return None
    out: Cofactor = {}
    for k, q in quotients.items():
        for i, c in result.cofactors[k].items():
            v = out.get(i, result.ring.zero) + q * c
            if v:
                out[i] = v
            else:
                out.pop(i, None)
    return out


def _engine_for(result: GroebnerResult) -> Buchberger:
    """A Buchberger object whose basis is exactly ``result.basis``."""
    engine = Buchberger(result.ring, (1,) * result.ring.ngens, result.rank, result.cofactors is not None)
    for k, g in enumerate(result.basis):
        engine.polys.append(g)
        engine.lms.append(g.LM)
        engine.sugars.append(0)
        engine.cofs.append(result.cofactors[k] if result.cofactors is not None else None)
    return engine


def schreyer_syzygies(result: GroebnerResult) -> List[Cofactor]:
    """Generators of the syzygy module of ``result.inputs`` as sparse rows.

    Lead-term syzygies of the basis are pruned with the strict chain
    criterion: sigma_ij is dropped when some LM_k divides lcm_ij and both
    lcm_ik and lcm_jk are proper divisors of lcm_ij. The survivors are lifted
    to syzygies of the basis by division and mapped back with the cofactors.
    """
    if result.cofactors is None:
        raise ValueError("syzygies need a Groebner basis computed with cofactor tracking")
    ring = result.ring
    one = ring.one
    engine = _engine_for(result)
    n = len(result.basis)
    lms = engine.lms
    monomial_lcm = ring.monomial_lcm
    monomial_div = ring.monomial_div
    rows: List[Cofactor] = []

    for i in result.zero_inputs:
        rows.append({i: one})

    # inputs that did not survive as basis elements
    active = range(n)
    for i, f in enumerate(result.inputs):
        if not f or i in result.input_slots:
            continue
        quotients: Dict[int, PolyElement] = {}
        remainder, _ = engine.reduce(f, active, None, quotients)
        if remainder:
            raise RuntimeError("input does not reduce to zero modulo its own Groebner basis")
        row = {i: one}
        row = _subtract_mapped(row, quotients, result.cofactors, ring)
        if row:
            rows.append(row)

    pairs = [(i, j) for i in range(n) for j in range(i + 1, n) if engine._compatible(i, j)]
    kept = 0
    for i, j in pairs:
        lij = monomial_lcm(lms[i], lms[j])
        redundant = False
        for k in range(n):
            if k == i or k == j or not engine._compatible(i, k):
                continue
            if monomial_div(lij, lms[k]) is None:
                continue
            if monomial_lcm(lms[i], lms[k]) != lij and monomial_lcm(lms[j], lms[k]) != lij:
                redundant = True
                break
        if redundant:
            continue
        kept += 1
        ti = monomial_div(lij, lms[i])
        tj = monomial_div(lij, lms[j])
        s = result.basis[i].mul_monom(ti) - result.basis[j].mul_monom(tj)
        quotients: Dict[int, PolyElement] = {}
        remainder, _ = engine.reduce(s, active, None, quotients)
        if remainder:
            raise RuntimeError("S-polynomial does not reduce to zero: basis is not a Groebner basis")
        sigma = dict(quotients)
        sigma[i] = sigma.get(i, ring.zero) - ring({ti: ring.domain.one})
        sigma[j] = sigma.get(j, ring.zero) + ring({tj: ring.domain.one})
        # sigma now holds minus the basis syzygy; the sign does not matter
        row = _map_back(sigma, result.cofactors, ring)
        if row:
            rows.append(row)
    logger.debug("syzygies: %d of %d lead-term pairs kept, %d rows", kept, len(pairs), len(rows))
    return rows


def _map_back(sigma: Dict[int, PolyElement], cofactors: List[Cofactor], ring: PolyRing) -> Cofactor:
    out: Cofactor = {}
    for k, q in sigma.items():
        if not q:
            continue
        for i, c in cofactors[k].items():
            v = out.get(i, ring.zero) + q * c
            if v:
                out[i] = v
            else:
                out.pop(i, None)
    return out


def _subtract_mapped(row: Cofactor, quotients: Dict[int, PolyElement], cofactors: List[Cofactor],
                     ring: PolyRing) -> Cofactor:
    mapped = _map_back(quotients, cofactors, ring)
    out = dict(row)
    for i, c in mapped.items():
        v = out.get(i, ring.zero) - c
        if v:
            out[i] = v
        else:
            out.pop(i, None)
    return out
