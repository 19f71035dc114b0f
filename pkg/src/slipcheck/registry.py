"""
Worked examples as regression cases.

Every case rebuilds a published computation and records what it expects
next to what it got. Expectations carry a tag naming where the expected
value comes from: ``[PAPER]`` for values quoted from the published
computation, ``[TRIVIAL]`` for values that follow from the definitions and
``[DERIVED]`` for values produced once by an independent code path.
"""
import importlib.resources
import json
import logging
import operator
import time
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, List, Optional

from .algebra.degrees import DegreeBox
from .algebra.polynomials import parse_polynomial
from .algebra.rings import greek_aliases, hirzebruch, product_of_projective_spaces, projective_space
from .constructions import apolarity_lift, construct_p1p1_ideal, p1p1_order, product_lift
from .criteria import (
    CERTIFIED,
    CERTIFIED_UP_TO_L,
    EXCLUDED,
    INCONCLUSIVE,
    WITNESS,
    DegreeSet,
    FiniteDegreeSet,
    SufficiencyCertificate,
    classify_pn,
    classify_products,
    corner_witness,
    diagonal_witness,
    ext1_dim_degree_zero,
    factor_square_witness,
    hirzebruch_witness,
    pn_regularity_certificate,
    projective_witness,
    sufficiency_witness_check,
    tangent_criteria_all_factors,
    tangent_criterion_custom,
    tangent_criterion_factor,
    truncation_ideal,
)
from .errors import InputError
from .groebner.ideal import Ideal
from .groebner.operations import restrict_to_blocks, saturate_irrelevant
from .hilbert import forced_generators, hf_matches_target, hf_row
from .ringmaps import (
    ToricLiftData,
    blowdown_lift,
    check_lift_B_condition,
    preimage,
    segre_map,
    toric_lift_identity_check,
)
from .serialization import ideal_from_json, ring_from_json
from .settings import Settings, load_settings

logger = logging.getLogger(__name__)

PAPER = "[PAPER]"
TRIVIAL = "[TRIVIAL]"
DERIVED = "[DERIVED]"

_RELATIONS = {"==": operator.eq, "<": operator.lt, "<=": operator.le}


@dataclass
class Expectation:
    name: str
    expected: Any
    actual: Any
    tag: str = PAPER
    relation: str = "=="

    @property
    def ok(self) -> bool:
        return bool(_RELATIONS[self.relation](self.actual, self.expected))

    def to_json(self) -> dict:
        return {"name": self.name, "expected": self.expected, "actual": self.actual,
                "relation": self.relation, "tag": self.tag, "ok": self.ok}


@dataclass
class CaseResult:
    id: str
    title: str
    expectations: List[Expectation] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)

    def expect(self, name: str, expected: Any, actual: Any, tag: str = PAPER, relation: str = "==") -> Any:
        self.expectations.append(Expectation(name, expected, actual, tag, relation))
        return actual

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.expectations)

    @property
    def failures(self) -> List[Expectation]:
        return [e for e in self.expectations if not e.ok]

    def to_json(self) -> dict:
        return {"id": self.id, "title": self.title, "ok": self.ok,
                "expectations": [e.to_json() for e in self.expectations], "details": self.details}


@dataclass(frozen=True)
class ExampleCase:
    id: str
    title: str
    build: Callable[[CaseResult, Settings], None]
    slow: bool = False


REGISTRY: Dict[str, ExampleCase] = {}


def example(case_id: str, title: str, slow: bool = False):
    """Register the decorated builder under ``case_id``."""
    def register(build):
        if case_id in REGISTRY:
            raise ValueError(f"duplicate example id {case_id!r}")
        REGISTRY[case_id] = ExampleCase(case_id, title, build, slow)
        return build
    return register


def load_fixture(name: str) -> dict:
    text = importlib.resources.files("slipcheck").joinpath(f"fixtures/{name}.json").read_text(encoding="utf-8")
    return json.loads(text)


def run_case(case_id: str, settings: Optional[Settings] = None) -> CaseResult:
    case = REGISTRY.get(case_id)
    if case is None:
        raise InputError(f"unknown example {case_id!r}; known: {', '.join(sorted(REGISTRY))}")
    settings = settings or load_settings()
    result = CaseResult(case.id, case.title)
    start = time.perf_counter()
    case.build(result, settings)
    elapsed = time.perf_counter() - start
    if result.ok:
        logger.info("example %s passed in %.1fs", case.id, elapsed)
    else:
        logger.warning("example %s failed: %s", case.id, ", ".join(e.name for e in result.failures))
    return result


def run_all(settings: Optional[Settings] = None, include_slow: bool = True,
            max_workers: int = 1) -> List[CaseResult]:
    """Every registered case, in id order."""
    settings = settings or load_settings()
    ids = sorted(cid for cid, case in REGISTRY.items() if include_slow or not case.slow)
    if max_workers <= 1:
        return [run_case(cid, settings) for cid in ids]
    with ThreadPoolExecutor(max_workers=max_workers) as pool:
        return list(pool.map(lambda cid: run_case(cid, settings), ids))


def _product(ns):
    return product_of_projective_spaces(ns, greek_aliases(ns))


def _box(*upper) -> DegreeBox:
    return DegreeBox.up_to(upper)


# -- products of projective spaces ------------------------------------------------

TWO_POINTS = ["b0*b1", "a0*b0", "a1*b0", "a0^2"]

THREE_POINTS = {
    (1, 1): ["b0^2*b1", "a0*b0", "a0^3", "a1^2*b0", "a1*b0^2"],
    (2, 1): ["b0*b1^2", "a0*b0", "a1*b0", "a2*b0", "a0^2", "a0*a1", "a1^2"],
    (2, 2): ["b1*b2^2", "b0^2", "b0*b1", "b0*b2", "a0*b0", "a0*b1", "a1*b0", "a1*b1", "a2*b0", "a2*b1",
             "a0^2", "a0*a1", "a1^2"],
}

THREE_POINTS_DIMS = {(1, 1): 4, (2, 1): 3, (2, 2): 6}


@example("2pts", "two points on P^1 x P^1 outside Slip, and their padding to P^2 x P^1")
def _two_points(result: CaseResult, settings: Settings) -> None:
    ring = _product([1, 1])
    I = Ideal.from_strings(ring, TWO_POINTS)
    result.expect("H_{S/I} = h_2 on (0,0)..(4,4)", True, hf_matches_target(I, 2, _box(4, 4)).ok)
    report = tangent_criterion_factor(I, 2, 1)
    result.expect("dim Hom(I + a^2, S/(I + a^2))_0", 2, report.dim)
    result.expect("verdict", EXCLUDED, report.verdict)

    m, n = 2, 1
    padded = Ideal.from_strings(_product([m, n]), ["a2"] + TWO_POINTS)
    result.expect("padded H = h_2 on (0,0)..(4,4)", True, hf_matches_target(padded, 2, _box(4, 4)).ok)
    padded_report = tangent_criterion_factor(padded, 2, 1)
    result.expect("padded dim Hom <= 2(m+n) - 2", 2 * (m + n) - 2, padded_report.dim, relation="<=")
    result.expect("padded verdict", EXCLUDED, padded_report.verdict)
    result.details.update({"ideal": I.to_strings(), "criterion": report.to_json(),
                           "padded": padded.to_strings(), "padded_criterion": padded_report.to_json()})


@example("3pts", "three points on P^m x P^n outside Slip")
def _three_points(result: CaseResult, settings: Settings) -> None:
    reports = []
    for (m, n), generators in THREE_POINTS.items():
        I = Ideal.from_strings(_product([m, n]), generators)
        label = f"P^{m} x P^{n}"
        result.expect(f"{label}: H = h_3 on (0,0)..(4,4)", True, hf_matches_target(I, 3, _box(4, 4)).ok)
        report = tangent_criterion_factor(I, 3, 1)
        result.expect(f"{label}: dim Hom(I + a^2, S/(I + a^2))_0 < 3(m+n)", 3 * (m + n), report.dim, relation="<")
        result.expect(f"{label}: dim Hom(I + a^2, S/(I + a^2))_0", THREE_POINTS_DIMS[(m, n)], report.dim, DERIVED)
        reports.append({"m": m, "n": n, **report.to_json()})
    result.details["criteria"] = reports


@example("classification", "irreducibility of Hilb^{h_r} for products of projective spaces")
def _classification(result: CaseResult, settings: Settings) -> None:
    cases = [
        (1, [3, 3], True), (9, [1], True), (3, [4], True), (4, [2], False), (2, [1, 1], False),
        (3, [2, 2], False), (4, [1, 1], False), (7, [5, 5, 5], False), (4, [3, 3, 3], False),
    ]
    rows = []
    for r, ns, irreducible in cases:
        verdict = classify_products(r, ns)
        result.expect(f"r={r}, ns={ns}", irreducible, verdict["irreducible"])
        rows.append({"r": r, "ns": ns, **verdict})
    result.expect("P^n with n >= 2, r >= 4", False, classify_pn(2, 4)["irreducible"])
    result.details["rows"] = rows


@example("explicit", "four points on P^3 x P^3 x P^3 outside Slip", slow=True)
def _explicit(result: CaseResult, settings: Settings) -> None:
    data = load_fixture("explicit")
    ring = ring_from_json(data["ring"])
    r = data["r"]
    expected = data["expected"]
    I = ideal_from_json(data["I"], ring)
    result.expect("H = h_4 on (0,0,0)..(3,3,3)", True, hf_matches_target(I, r, _box(3, 3, 3)).ok)

    for k, generators in enumerate(data["projections"]):
        projection = restrict_to_blocks(I, [k])
        result.expect(f"projection to factor {k + 1}", True,
                      projection.equals(Ideal.from_strings(projection.ring, generators)))

    reports = tangent_criteria_all_factors(I, r)
    result.expect("factor criterion dims", expected["ts_factor_dims"], [rep.dim for rep in reports])
    result.expect("factor criterion threshold", expected["threshold"], reports[0].threshold)
    result.expect("factor criterion verdicts", [INCONCLUSIVE] * 3, [rep.verdict for rep in reports])

    saturation = saturate_irrelevant(I)
    result.expect("dim Ext^1(I^sat/I, S/I^sat)_0", expected["ext1"], ext1_dim_degree_zero(I, saturation))

    J = restrict_to_blocks(I, [0, 1])
    result.expect("restriction to P^3 x P^3", True, J.equals(Ideal.from_strings(J.ring, data["J"])))
    report = tangent_criterion_factor(J, r, 1)
    result.expect("dim Hom(J + a^2, T/(J + a^2))_0", expected["J_factor_dim"], report.dim)
    result.expect("threshold on P^3 x P^3", expected["J_threshold"], report.threshold)
    result.expect("verdict on P^3 x P^3", EXCLUDED, report.verdict)
    result.details.update({"criteria": [rep.to_json() for rep in reports], "restricted": report.to_json()})


@example("projections", "forced generators for seven points on P^5 x P^5 x P^5 and their Segre image")
def _projections(result: CaseResult, settings: Settings) -> None:
    ring = product_of_projective_spaces([5, 5, 5])
    r = 7
    result.expect("forced generators in degree (2,0,0)", 14, forced_generators(ring, r, (2, 0, 0)))
    result.expect("forced generators in degree (1,1,0)", 29, forced_generators(ring, r, (1, 1, 0)))
    degrees = [(2, 0, 0), (0, 2, 0), (0, 0, 2), (1, 1, 0), (1, 0, 1), (0, 1, 1)]
    result.expect("forced generators of degree 2", 129, sum(forced_generators(ring, r, d) for d in degrees))
    result.expect("linear generators on P^215", 209, forced_generators(projective_space(215), r, 1))
    result.expect("quadrics beyond the linear span", 21, forced_generators(projective_space(6), r, 2))


# -- P^n --------------------------------------------------------------------------

TSEX11 = ["a0^3", "a0*a1^2", "a0^2*a2", "a0*a1*a2", "a0*a2^4", "a1^6"]


@example("tsex11", "six points on P^2: truncations and sufficient degree sets")
def _tsex11(result: CaseResult, settings: Settings) -> None:
    ring = projective_space(2, greek_aliases([2]))
    r = 6
    I = Ideal.from_strings(ring, TSEX11)
    degrees = [(k,) for k in range(8)]
    everything, nothing = DegreeSet.everything(1), DegreeSet.empty(1)
    from_four, from_five, from_six = (DegreeSet.at_least(1, 0, k) for k in (4, 5, 6))

    result.expect("H_{S/I}", [1, 3, 6, 6, 6, 6, 6, 6], hf_row(I, degrees))
    rows = {
        "I cap B^4": ((from_four, nothing), [1, 3, 6, 10, 6, 6, 6, 6]),
        "I + B^5": ((everything, from_five), [1, 3, 6, 6, 6, 0, 0, 0]),
        "I cap B^4 + B^6": ((from_four, from_six), [1, 3, 6, 10, 6, 6, 0, 0]),
    }
    for name, ((B, A), expected) in rows.items():
        result.expect(f"H of {name}", expected, hf_row(truncation_ideal(I, B, A), degrees))

    for e, tested in ((3, [3, 4]), (4, [4, 5])):
        check = sufficiency_witness_check(ring, r, FiniteDegreeSet.of(tested), projective_witness(e),
                                          window=settings.sufficiency_window)
        result.expect(f"{tested} sufficient by witnesses", CERTIFIED, check.status)
        result.expect(f"{tested} sufficient by regularity", True, pn_regularity_certificate(2, r, tested).holds)

    certificate = SufficiencyCertificate(WITNESS, projective_witness(3), window=settings.sufficiency_window)
    report = tangent_criterion_custom(I, r, from_five, everything, certificate)
    result.expect("dim Hom(I + B^5, S/(I + B^5))_0", 8, report.dim)
    result.expect("threshold", 12, report.threshold, TRIVIAL)
    result.expect("verdict", EXCLUDED, report.verdict)
    result.details["criterion"] = report.to_json()


@example("lift4", "apolarity lifts of (a0, .., a_{n-2}, a_{n-1}^r) on P^n")
def _lift4(result: CaseResult, settings: Settings) -> None:
    lifts = []
    for n, r in ((2, 4), (2, 5), (3, 4)):
        ring = projective_space(n, greek_aliases([n]))
        J = Ideal.from_strings(ring, [f"a{i}" for i in range(n - 1)] + [f"a{n - 1}^{r}"])
        lift = apolarity_lift(J, r)
        I = lift.ideal
        label = f"n={n}, r={r}"
        result.expect(f"{label}: H = h_r", True, hf_matches_target(I, r).ok)
        result.expect(f"{label}: I inside J", True, J.contains(I), TRIVIAL)
        b = lift.b
        result.expect(f"{label}: I_(b+1) = J_(b+1)", J.dim_piece((b + 1,)), I.dim_piece((b + 1,)))
        power = parse_polynomial(ring, f"a0^{r - 2}")
        result.expect(f"{label}: a0^(r-2) not in I", False, power in I)
        lifts.append({"n": n, "r": r, **lift.to_json()})
    result.details["lifts"] = lifts


# -- lifts to products -------------------------------------------------------------

@example("lift3", "lifting ideals of three points on P^2 to P^2 x P^1")
def _lift3(result: CaseResult, settings: Settings) -> None:
    ring_x = projective_space(2, greek_aliases([2]))
    ring_y = projective_space(1, ["b0", "b1"])
    r = 3
    summary = []
    for generators in (["a0*a1", "a0*a2", "a1*a2"], ["a0^2", "a0*a1", "a1^2"], ["a0^2", "a0*a1", "a1*a2"]):
        I_x = Ideal.from_strings(ring_x, generators)
        lift = product_lift(I_x, ring_y, r)
        J = lift.harvest()
        label = ", ".join(generators)
        result.expect(f"({label}): closed under multiplication", True, lift.check_closure(), TRIVIAL)
        result.expect(f"({label}): H = h_3", True, hf_matches_target(J, r, lift.default_box()).ok)
        result.expect(f"({label}): restricts to I_X", True, restrict_to_blocks(J, [0]).equals(I_x))
        summary.append({"ideal": generators, "lift": J.to_strings()})
    result.details["lifts"] = summary


@example("p1p1", "r points on P^1 x P^1 through the Segre-type map of degree (1, r)", slow=True)
def _p1p1(result: CaseResult, settings: Settings) -> None:
    r = 4
    construction = construct_p1p1_ideal(r, settings.p1p1_b_scale)
    I = construction.ideal
    result.expect("H = h_r on (0,0)..(6,6)", True, hf_matches_target(I, r, _box(6, 6)).ok)
    result.expect("I^sat = (b0, a0^r)", True, saturate_irrelevant(I).equals(construction.saturation))

    phi = segre_map(I.ring, construction.embedding_degree, r, order=p1p1_order())
    K = preimage(phi, I)
    k = phi.source.nvars
    expected_sat = Ideal.from_strings(phi.source, [f"t{i}" for i in range(1, k - 1)] + [f"t{k - 1}^{r}"])
    result.expect("K^sat = (t1, .., t_2r, t_(2r+1)^r)", True, saturate_irrelevant(K).equals(expected_sat))
    result.expect("t1^(r-2) not in K", False, parse_polynomial(phi.source, f"t1^{r - 2}") in K)
    result.details.update({"construction": construction.to_json(), "preimage": K.to_strings()})


@example("p1p1-figure", "four comparison ideals of the two-point ideal on P^1 x P^1")
def _p1p1_figure(result: CaseResult, settings: Settings) -> None:
    ring = _product([1, 1])
    r = 2
    I = Ideal.from_strings(ring, TWO_POINTS)
    of = lambda *gens: DegreeSet.of(2, gens)  # noqa: E731
    cases = [
        ("I + a^2", DegreeSet.everything(2), of((2, 0)), factor_square_witness(ring, r, 1)),
        ("I cap a^2 b", of((2, 1)), DegreeSet.empty(2), corner_witness((2, 1), 1)),
        ("I + a^3 + b^3", DegreeSet.everything(2), of((3, 0), (0, 3)), diagonal_witness((1, 1))),
        ("(I + a^3 + b^3) cap B", of((1, 1)), of((3, 1), (1, 3)), diagonal_witness((1, 1))),
    ]
    reports = []
    for name, B, A, family in cases:
        certificate = SufficiencyCertificate(WITNESS, family, window=settings.sufficiency_window)
        report = tangent_criterion_custom(I, r, A, B, certificate)
        result.expect(f"{name}: B \\ A sufficient", CERTIFIED, certificate.report.status)
        reports.append({"K": name, **report.to_json()})
    result.expect("I + a^2: dim Hom", 2, reports[0]["dim"])
    result.details["criteria"] = reports


# -- Hirzebruch surfaces -------------------------------------------------------------

@example("hr", "two points on a Hirzebruch surface outside Slip")
def _hr(result: CaseResult, settings: Settings) -> None:
    reports = []
    for a in (1, 2):
        ring = hirzebruch(a)
        I = Ideal.from_strings(ring, ["a1*a3", "a1*a2", f"a1^{a}*a4", "a2^2"])
        result.expect(f"a={a}: H = h_2 on (0,0)..(5,5)", True, hf_matches_target(I, 2, _box(5, 5)).ok)
        A = DegreeSet.at_least(2, 1, 2)
        comparison = truncation_ideal(I, DegreeSet.everything(2), A)
        S_A = Ideal.from_strings(ring, ["a4^2", "a2*a4", "a2^2"])
        result.expect(f"a={a}: S_A = (a4^2, a2 a4, a2^2)", True, (I + S_A).equals(comparison), TRIVIAL)
        certificate = SufficiencyCertificate(WITNESS, hirzebruch_witness(a), settings.lift_l_bound,
                                             settings.sufficiency_window)
        report = tangent_criterion_custom(I, 2, A, DegreeSet.everything(2), certificate)
        result.expect(f"a={a}: dim Hom(I + S_A, S/(I + S_A))_0", 2, report.dim)
        result.expect(f"a={a}: sufficiency", CERTIFIED_UP_TO_L, certificate.report.status)
        result.expect(f"a={a}: verdict", EXCLUDED, report.verdict)
        reports.append({"a": a, **report.to_json()})
    result.details["criteria"] = reports


@example("h1", "the blow-down of Hirzebruch(1) to P^2 and the fiber over (b0^2, b2)")
def _h1(result: CaseResult, settings: Settings) -> None:
    phi, data = blowdown_lift()
    ring = phi.target
    result.expect("toric identity", True, toric_lift_identity_check(phi, data))
    swapped = ToricLiftData(data.source_rays, data.target_rays, ((0, 1), (1, 0)))
    result.expect("toric identity with swapped delta", False, toric_lift_identity_check(phi, swapped), TRIVIAL)
    result.expect("B(X) in the radical of phi(B(Y))", True, check_lift_B_condition(phi))

    fiber = Ideal.from_strings(ring, ["a3^2", "a2"])
    result.expect("H of (a3^2, a2) = h_2", True, hf_matches_target(fiber, 2, _box(5, 5)).ok)
    I = Ideal.from_strings(phi.source, ["b0^2", "b2"])
    result.expect("phi^-1((a3^2, a2)) = (b0^2, b2)", True, preimage(phi, fiber).equals(I))
    image = phi.image_ideal(I)
    result.expect("phi(I) S = (a3^2 a4^2, a2)", True, image.equals(Ideal.from_strings(ring, ["a3^2*a4^2", "a2"])))
    K = saturate_irrelevant(image)
    result.expect("dim K_(2,0)", 1, K.dim_piece((2, 0)))
    result.expect("a3^2 in K_(2,0)", True, parse_polynomial(ring, "a3^2") in K)
    result.details["map"] = phi.to_json()


@example("h1c", "the one-dimensional fiber over (b1, b2^2) under the blow-down")
def _h1c(result: CaseResult, settings: Settings) -> None:
    phi, _ = blowdown_lift()
    ring = phi.target
    I = Ideal.from_strings(phi.source, ["b1", "b2^2"])
    image = phi.image_ideal(I)
    result.expect("phi(I) S = (a1 a4, a2^2)", True, image.equals(Ideal.from_strings(ring, ["a1*a4", "a2^2"])))
    J = saturate_irrelevant(image)
    result.expect("saturation = (a1, a2^2)", True, J.equals(Ideal.from_strings(ring, ["a1", "a2^2"])))
    window = _box(4, 4)
    expected = [1 if D[1] == 0 else min(ring.dim_graded_piece(D), 2) for D in window]
    result.expect("H of the saturation", expected, hf_row(J, window))

    members = {}
    for s, t in ((1, 0), (0, 1), (1, 1), (2, 3)):
        J_st = Ideal.from_strings(ring, ["a2^2", "a1*a2", "a1*a4", f"{s}*a1^2 + {t}*a1*a3"])
        label = f"[{s}:{t}]"
        result.expect(f"J_{label}: H = h_2", True, hf_matches_target(J_st, 2, _box(5, 5)).ok)
        result.expect(f"J_{label}: preimage = (b1, b2^2)", True, preimage(phi, J_st).equals(I))
        members[label] = J_st.to_strings()
    hr = Ideal.from_strings(ring, ["a1*a3", "a1*a2", "a1*a4", "a2^2"])
    result.expect("J_[0:1] is the ideal outside Slip for a=1", True,
                  Ideal.from_strings(ring, members["[0:1]"]).equals(hr), TRIVIAL)
    result.details["fiber"] = members
