"""Randomized suites checking every structural statement against an oracle route.

Each suite pits the primary implementation against a structure-blind
computation (cartesian arithmetic, determinants, Gauss-Jordan elimination on
the block embedding) over seeded random trials.  A failure message always
carries the (seed, suite, trial) key that replays it bit-identically.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .core import DEFAULT_TOL, Bicomplex, E1, E2, ONE
from .linalg import DEFAULT_CLUSTER_TOL, EigenSet, frobenius, is_singular_matrix
from .operators import (
    BicomplexOperator,
    VectorClass,
    apply,
    assemble_pair_basis,
    classify_vector,
    image,
    is_singular_operator,
    kernel,
    shift,
)
from .oracle import (
    Rng,
    block_embed,
    brute_modified_eigenspace,
    cartesian_mul,
    classify_cartesian,
    complex_normal,
    elimination_nullspace,
    random_operator,
    random_scalar,
    random_vector,
)
from .oracle import residual as residual_norm
from .spectra import (
    ModifiedCase,
    component_spectra,
    contains_idempotent_product,
    eigenspace_sum,
    is_modified_eigenvalue,
    modified_eigenspace,
    modified_family,
    upsilon_description,
)
from .errors import BaseNotEigenvalueError

DEFAULT_SEED = 20240901
DEFAULT_TRIALS = 500


@dataclass
class SuiteResult:
    name: str
    statement: str
    trials: int
    failures: int = 0
    messages: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.failures == 0


@dataclass
class VerifyReport:
    seed: int
    trials: int
    n_min: int
    n_max: int
    tol: float
    cluster_tol: float
    suites: list[SuiteResult]

    @property
    def passed(self) -> bool:
        return all(s.passed for s in self.suites)

    def suite(self, name: str) -> SuiteResult:
        for s in self.suites:
            if s.name == name:
                return s
        raise KeyError(name)


class _Check:
    """Collects failures for one trial; messages keep the replay key."""

    def __init__(self, key: str):
        self.key = key
        self.messages: list[str] = []

    def __call__(self, condition: bool, message: str):
        if not condition:
            self.messages.append(f"[{self.key}] {message}")


def _far_scalar(gen, *eigensets: EigenSet) -> complex:
    """A complex draw at distance > 1e-3 from every listed spectrum."""
    c = complex(complex_normal(gen)) * 2.0
    for _ in range(100):
        if all(es.distance(c) > 1e-3 for es in eigensets):
            return c
        c = c + 2.5
    return c


def _residual_bound(op: BicomplexOperator, cluster_tol: float) -> float:
    return cluster_tol * op.scale_norm()


def _match_multisets(left: list[complex], right: list[complex], tol_abs: float) -> bool:
    """Greedy nearest-neighbour matching; True when every pair lands within tol_abs."""
    if len(left) != len(right):
        return False
    remaining = list(right)
    for a in sorted(left, key=lambda z: (z.real, z.imag)):
        best = min(range(len(remaining)), key=lambda i: abs(a - remaining[i]), default=None)
        if best is None or abs(a - remaining[best]) > tol_abs:
            return False
        del remaining[best]
    return True


# -- suites --------------------------------------------------------------


def _suite_scalar_product_rule(check, rng, n, tol, cluster_tol, fault):
    gen = rng.generator()
    scale = 10.0 ** gen.uniform(0.0, 3.0)
    x = random_scalar(rng.child(1), scale)
    y = random_scalar(rng.child(2), scale)
    direct = x * y
    via_cart = cartesian_mul(x, y)
    mag = max(abs(x.minus), abs(x.plus)) * max(abs(y.minus), abs(y.plus))
    bound = 1e-12 * (1.0 + mag)
    check(abs(direct.minus - via_cart.minus) <= bound, "minus component differs between routes")
    check(abs(direct.plus - via_cart.plus) <= bound, "plus component differs between routes")
    check((E1 * E2).is_zero(), "e1*e2 must vanish")
    check((E1 + E2 - ONE).is_zero(), "e1+e2 must be 1")
    check((x * y - y * x).is_zero(tol), "product must commute")


def _suite_scalar_singularity(check, rng, n, tol, cluster_tol, fault):
    gen = rng.generator()
    candidates = [random_scalar(rng.child(1), 1.0)]
    base = random_scalar(rng.child(2), 1.0)
    candidates.append(Bicomplex(base.minus, 0.0))          # exact member of I1
    candidates.append(Bicomplex(0.0, base.plus))           # exact member of I2
    # one component parked a controlled distance from the threshold
    big = base.minus if abs(base.minus) > 0 else 1.0 + 0j
    offset = 10.0 ** gen.uniform(-2.0, 2.0)
    small = tol * max(abs(big), 1.0) * offset
    candidates.append(Bicomplex(big, small))
    for x in candidates:
        z1, z2 = x.to_cartesian()
        via_components = x.classify(tol)
        via_cartesian = classify_cartesian(z1, z2, tol)
        small_mag = min(abs(x.minus), abs(x.plus))
        thr = x.singular_threshold(tol)
        in_band = 0.1 * thr <= small_mag <= 10.0 * thr
        if not in_band:
            check(
                via_components == via_cartesian,
                f"classification split outside the guard band: {via_components.value} vs "
                f"{via_cartesian.value} for {x}",
            )


def _suite_kernel_image(check, rng, n, tol, cluster_tol, fault):
    trial = rng.stream[-1]
    if trial % 4 == 3:
        # rectangular operators participate in kernel/image only
        gen = rng.generator()
        op = BicomplexOperator(complex_normal(gen, (n + 1, n)), complex_normal(gen, (n + 1, n)))
    else:
        profile = "rank-deficient" if trial % 2 == 0 else "generic"
        planted = random_operator(rng.child(0), n, profile)
        op = planted.operator
        if profile == "rank-deficient" and trial % 4 == 2:
            op = BicomplexOperator(op.t2, op.t1)  # exercise deficiency on both sides
    k1, k2 = kernel(op, tol)
    impl_dim = k1.dim + k2.dim
    if fault:
        impl_dim = k1.dim - k2.dim  # deliberate sign flip for sensitivity checks
    block = block_embed(op)
    brute = elimination_nullspace(block, tol * (1.0 + frobenius(block)) * max(block.shape))
    check(
        impl_dim == brute.shape[1],
        f"kernel dimension {impl_dim} != block-elimination dimension {brute.shape[1]}",
    )
    bound = _residual_bound(op, cluster_tol)
    for v in assemble_pair_basis((k1, k2)):
        check(apply(op, v).norm() <= bound, "assembled kernel vector not annihilated")
    i1, i2 = image(op, tol)
    cols = op.shape[1]
    check(i1.dim + k1.dim == cols, f"rank-nullity broken on t1: {i1.dim}+{k1.dim} != {cols}")
    check(i2.dim + k2.dim == cols, f"rank-nullity broken on t2: {i2.dim}+{k2.dim} != {cols}")


def _suite_operator_singularity(check, rng, n, tol, cluster_tol, fault):
    trial = rng.stream[-1]
    profile = "rank-deficient" if trial % 2 == 0 else "generic"
    planted = random_operator(rng.child(0), n, profile)
    op = planted.operator
    via_det = is_singular_operator(op, tol)
    component_det = is_singular_matrix(op.t1, tol) or is_singular_matrix(op.t2, tol)
    k1, k2 = kernel(op, tol)
    via_kernel = (k1.dim + k2.dim) > 0
    check(via_det == component_det, "operator and component determinant verdicts differ")
    check(via_det == via_kernel, f"determinant route {via_det} != kernel route {via_kernel}")
    if profile == "rank-deficient":
        check(via_det, "planted rank deficiency not detected")


def _suite_shift_singularity(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "shared-eigenvalue")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    gen = rng.generator()
    far = _far_scalar(gen, report.upsilon1, report.upsilon2)
    far2 = _far_scalar(gen, report.upsilon1, report.upsilon2)
    cases = [
        (Bicomplex(report.upsilon1.value_list()[0], far), True),
        (Bicomplex(far, report.upsilon2.value_list()[0]), True),
        (Bicomplex(far, far2), False),
    ]
    eye = np.eye(n, dtype=np.complex128)
    for kappa, expected in cases:
        shifted = shift(op, kappa)
        whole = is_singular_operator(shifted, tol)
        split = is_singular_matrix(op.t1 - kappa.minus * eye, tol) or is_singular_matrix(
            op.t2 - kappa.plus * eye, tol
        )
        check(whole == split, f"shifted singularity disagrees componentwise at {kappa}")
        check(whole == expected, f"shifted singularity wrong at {kappa}: got {whole}")


def _suite_eigenvalue_criterion(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "shared-eigenvalue")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    gen = rng.generator()
    lams = (
        report.upsilon1.value_list()
        + report.upsilon2.value_list()
        + [planted.shared_eigenvalue, _far_scalar(gen, report.upsilon1, report.upsilon2)]
    )
    for lam in lams:
        member = report.is_eigenvalue(lam)
        singular = is_singular_operator(shift(op, complex(lam)), tol)
        check(member == singular, f"eigenvalue criterion split at {lam}: member={member}")
    check(report.is_eigenvalue(planted.shared_eigenvalue), "planted shared eigenvalue missed")


def _suite_modified_criterion(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "shared-eigenvalue")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    gen = rng.generator()
    far = _far_scalar(gen, report.upsilon1, report.upsilon2)
    far2 = _far_scalar(gen, report.upsilon1, report.upsilon2)
    kappas = [
        Bicomplex(report.upsilon1.value_list()[0], far),
        Bicomplex(far, report.upsilon2.value_list()[0]),
        Bicomplex(report.upsilon1.value_list()[0], report.upsilon2.value_list()[0]),
        Bicomplex(far, far2),
    ]
    for kappa in kappas:
        verdict, case = is_modified_eigenvalue(op, kappa, cluster_tol, report)
        membership = report.in_upsilon1(kappa.minus) or report.in_upsilon2(kappa.plus)
        brute_dim = brute_modified_eigenspace(op, kappa, cluster_tol).dim
        via_det = is_singular_operator(shift(op, kappa), tol)
        check(verdict == membership, f"criterion vs membership split at {kappa}")
        check(verdict == via_det, f"criterion vs shifted-determinant split at {kappa}")
        check(
            verdict == (brute_dim > 0),
            f"criterion {verdict} vs block nullspace dim {brute_dim} at {kappa}",
        )
        check(verdict == (case is not None), "verdict and case tag inconsistent")


def _suite_containment(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "shared-eigenvalue")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    rec = contains_idempotent_product(op, cluster_tol, report)
    check(rec.all_pairs_modified, "a grid pair failed the modified-eigenvalue test")
    for pair in rec.pairs:
        check(pair.case is ModifiedCase.BOTH, f"grid pair {pair.kappa} not tagged Both")
    check(rec.witness is not None, "no proper-containment witness produced")
    if rec.witness is not None:
        verdict, case = is_modified_eigenvalue(op, rec.witness.kappa, cluster_tol, report)
        check(verdict, "witness rejected by the modified-eigenvalue test")
        in_grid = report.in_upsilon1(rec.witness.kappa.minus) and report.in_upsilon2(
            rec.witness.kappa.plus
        )
        check(not in_grid, "witness does not leave the idempotent-product grid")


def _suite_infinite_family(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "shared-eigenvalue")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    gen = rng.generator()
    samples = [0.0, complex(complex_normal(gen)) * 3.0, complex(complex_normal(gen)) * 30.0]
    base1 = report.upsilon1.value_list()[0]
    for member in modified_family(op, True, base1, samples, cluster_tol, report):
        verdict, _ = is_modified_eigenvalue(op, member.kappa, cluster_tol, report)
        check(verdict, f"family member {member.kappa} rejected")
    base2 = report.upsilon2.value_list()[0]
    for member in modified_family(op, False, base2, samples, cluster_tol, report):
        verdict, _ = is_modified_eigenvalue(op, member.kappa, cluster_tol, report)
        check(verdict, f"family member {member.kappa} rejected")
    probe = Bicomplex(base1, samples[1])
    check(
        brute_modified_eigenspace(op, probe, cluster_tol).dim > 0,
        "family member invisible to the block oracle",
    )
    outside = _far_scalar(gen, report.upsilon1)
    try:
        modified_family(op, True, outside, samples, cluster_tol, report)
        check(False, "family accepted a base outside the spectrum")
    except BaseNotEigenvalueError:
        pass


def _suite_cylinder_structure(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "shared-eigenvalue")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    desc = upsilon_description(op, cluster_tol, report)
    gen = rng.generator()
    far = _far_scalar(gen, report.upsilon1, report.upsilon2)
    kappas = [
        Bicomplex(report.upsilon1.value_list()[0], complex(complex_normal(gen)) * 5.0),
        Bicomplex(complex(complex_normal(gen)) * 5.0, report.upsilon2.value_list()[0]),
        Bicomplex(far, far),
    ]
    for _ in range(17):
        kappas.append(random_scalar(rng.child(int(gen.integers(1 << 30))), 2.0))
    for kappa in kappas:
        verdict, _ = is_modified_eigenvalue(op, kappa, cluster_tol, report)
        check(
            desc.contains(kappa) == verdict,
            f"cylinder description disagrees with the criterion at {kappa}",
        )


def _suite_eigenspace_structure(check, rng, n, tol, cluster_tol, fault):
    trial = rng.stream[-1]
    profile = ("shared-eigenvalue", "defective", "rank-deficient")[trial % 3]
    planted = random_operator(rng.child(0), n, profile)
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    gen = rng.generator()
    far = _far_scalar(gen, report.upsilon1, report.upsilon2)
    far2 = _far_scalar(gen, report.upsilon1, report.upsilon2)
    kappas = [
        Bicomplex(report.upsilon1.value_list()[0], far),
        Bicomplex(far2, report.upsilon2.value_list()[0]),
        Bicomplex(report.upsilon1.value_list()[0], report.upsilon2.value_list()[0]),
    ]
    bound = _residual_bound(op, cluster_tol)
    for kappa in kappas:
        space = modified_eigenspace(op, kappa, cluster_tol, report)
        brute = brute_modified_eigenspace(op, kappa, cluster_tol)
        check(
            space.dim == brute.dim,
            f"structure dim {space.dim} != block dim {brute.dim} at {kappa} ({profile})",
        )
        check(
            space.dim == space.minus_basis.dim + space.plus_basis.dim,
            "dimension bookkeeping broken",
        )
        check(space.max_residual(op) <= bound, f"residual above {bound} at {kappa}")
        if space.case is not ModifiedCase.BOTH:
            check(space.all_eigenvectors_singular, "one-sided case must flag singular")
            for v in space.assembled:
                check(
                    classify_vector(v, tol) is VectorClass.SINGULAR_NONZERO,
                    "one-sided basis vector not a singular nonzero vector",
                )
        else:
            check(not space.all_eigenvectors_singular, "Both case must not flag singular")
    # rejection test: a vector outside the eigenspace has a clearly positive residual
    kappa = kappas[0]
    space = modified_eigenspace(op, kappa, cluster_tol, report)
    brute = brute_modified_eigenspace(op, kappa, cluster_tol)
    for attempt in range(20):
        probe = random_vector(rng.child(7, attempt), n)
        flat = np.concatenate([probe.minus, probe.plus])
        inside = np.linalg.norm(flat - brute.project(flat)) <= 1e-3 * np.linalg.norm(flat)
        if not inside:
            check(
                residual_norm(op, kappa, probe) > 10.0 * bound,
                "off-space vector slipped under the residual bound",
            )
            break


def _suite_existence(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "generic")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    check(len(report.eigenvalues_of_T.values) > 0, "eigenvalue set empty")
    check(
        len(report.upsilon1.values) > 0 or len(report.upsilon2.values) > 0,
        "component spectra both empty",
    )
    kappa = Bicomplex(report.upsilon1.value_list()[0], 0.0)
    verdict, _ = is_modified_eigenvalue(op, kappa, cluster_tol, report)
    check(verdict, "no modified eigenvalue despite a nonempty spectrum")


def _suite_block_spectrum(check, rng, n, tol, cluster_tol, fault):
    trial = rng.stream[-1]
    profile = ("generic", "shared-eigenvalue", "defective")[trial % 3]
    planted = random_operator(rng.child(0), n, profile)
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    block = block_embed(op)
    block_eigs = list(np.linalg.eigvals(block))
    expected = report.upsilon1.multiset() + report.upsilon2.multiset()
    tol_abs = cluster_tol * (1.0 + frobenius(block))
    check(
        _match_multisets([complex(z) for z in block_eigs], expected, tol_abs),
        f"block spectrum is not the disjoint union of the component spectra ({profile})",
    )


def _suite_similarity_invariance(check, rng, n, tol, cluster_tol, fault):
    planted = random_operator(rng.child(0), n, "shared-eigenvalue")
    op = planted.operator
    report = component_spectra(op, cluster_tol)
    gen = rng.generator()
    # well-conditioned by construction: unitary * diag(0.5..2) * unitary
    q1, _ = np.linalg.qr(complex_normal(gen, (n, n)))
    q2, _ = np.linalg.qr(complex_normal(gen, (n, n)))
    p = q1 @ np.diag(gen.uniform(0.5, 2.0, n)) @ q2
    p_inv = np.linalg.inv(p)
    conjugated = BicomplexOperator(p @ op.t1 @ p_inv, p @ op.t2 @ p_inv)
    report2 = component_spectra(conjugated, cluster_tol)
    far = _far_scalar(gen, report.upsilon1, report.upsilon2)
    kappas = [
        Bicomplex(report.upsilon1.value_list()[0], far),
        Bicomplex(far, report.upsilon2.value_list()[0]),
        Bicomplex(planted.shared_eigenvalue, planted.shared_eigenvalue),
        Bicomplex(far, far),
    ]
    for kappa in kappas:
        before, _ = is_modified_eigenvalue(op, kappa, cluster_tol, report)
        after, _ = is_modified_eigenvalue(conjugated, kappa, cluster_tol, report2)
        check(before == after, f"membership changed under similarity at {kappa}")


SUITES: list[tuple[str, str, object]] = [
    (
        "scalar_product_rule",
        "x*y = (x^- y^-) e1 + (x^+ y^+) e2, matching cartesian multiplication",
        _suite_scalar_product_rule,
    ),
    (
        "scalar_singularity",
        "x is singular iff x lies in I1 ∪ I2 iff |z1^2 + z2^2| vanishes",
        _suite_scalar_singularity,
    ),
    (
        "kernel_image",
        "ker(e1 T1 + e2 T2) = ker T1 xe ker T2 and Im(e1 T1 + e2 T2) = Im T1 xe Im T2",
        _suite_kernel_image,
    ),
    (
        "operator_singularity",
        "T = e1 T1 + e2 T2 is singular iff T1 is singular or T2 is singular",
        _suite_operator_singularity,
    ),
    (
        "shift_singularity",
        "(T - kappa I) is singular iff (T1 - kappa1 I) or (T2 - kappa2 I) is",
        _suite_shift_singularity,
    ),
    (
        "eigenvalue_criterion",
        "lambda is an eigenvalue of T iff lambda ∈ Y1 ∪ Y2 iff (T - lambda I) is singular",
        _suite_eigenvalue_criterion,
    ),
    (
        "modified_criterion",
        "kappa is a modified eigenvalue iff kappa1 ∈ Y1 or kappa2 ∈ Y2 iff (T - kappa I) is singular",
        _suite_modified_criterion,
    ),
    (
        "containment",
        "Y1 xe Y2 is properly contained in the modified spectrum Y",
        _suite_containment,
    ),
    (
        "infinite_family",
        "kappa1 e1 + w e2 is modified for every w when kappa1 ∈ Y1 (and symmetrically)",
        _suite_infinite_family,
    ),
    (
        "cylinder_structure",
        "Y = (Y1 xe C1) ∪ (C1 xe Y2)",
        _suite_cylinder_structure,
    ),
    (
        "eigenspace_structure",
        "the modified eigenspace splits as E1(kappa1) xe E2(kappa2) with {0} on non-member sides",
        _suite_eigenspace_structure,
    ),
    (
        "existence",
        "a modified eigenvalue exists iff an eigenvalue exists (always, for n >= 1)",
        _suite_existence,
    ),
    (
        "block_spectrum",
        "the spectrum of diag(t1, t2) is the multiset union of the component spectra",
        _suite_block_spectrum,
    ),
    (
        "similarity_invariance",
        "membership verdicts are invariant under componentwise similarity P T P^-1",
        _suite_similarity_invariance,
    ),
]


def run_verify(
    seed: int = DEFAULT_SEED,
    trials: int = DEFAULT_TRIALS,
    n_min: int = 1,
    n_max: int = 6,
    tol: float = DEFAULT_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    inject_fault: bool = False,
    max_messages: int = 5,
) -> VerifyReport:
    """Run every suite for `trials` seeded trials with n cycling n_min..n_max."""
    if trials < 1:
        raise ValueError("trials must be at least 1")
    if not (1 <= n_min <= n_max):
        raise ValueError("need 1 <= n_min <= n_max")
    span = n_max - n_min + 1
    results = []
    for suite_index, (name, statement, fn) in enumerate(SUITES):
        result = SuiteResult(name=name, statement=statement, trials=trials)
        for trial in range(trials):
            n = n_min + (trial % span)
            rng = Rng(seed, (suite_index, trial))
            chk = _Check(f"seed={seed} suite={name} trial={trial} n={n}")
            fn(chk, rng, n, tol, cluster_tol, inject_fault)
            if chk.messages:
                result.failures += 1
                if len(result.messages) < max_messages:
                    result.messages.extend(chk.messages[: max_messages - len(result.messages)])
        results.append(result)
    return VerifyReport(
        seed=seed,
        trials=trials,
        n_min=n_min,
        n_max=n_max,
        tol=tol,
        cluster_tol=cluster_tol,
        suites=results,
    )


@dataclass
class SumSearchReport:
    """Tabulated directness of pairwise modified-eigenspace sums.

    Records computed findings only; no claim is made beyond the sampled
    operators and pairs.
    """

    seed: int
    trials: int
    direct_count: int
    non_direct_count: int
    witnesses: list[dict]


def run_sum_search(
    seed: int,
    trials: int,
    n_min: int = 2,
    n_max: int = 4,
    operator: BicomplexOperator | None = None,
    tol: float = DEFAULT_TOL,
    cluster_tol: float = DEFAULT_CLUSTER_TOL,
    max_witnesses: int = 10,
) -> SumSearchReport:
    """Sample pairs of modified eigenvalues and test whether their eigenspace sum is direct."""
    span = max(n_max - n_min + 1, 1)
    direct = 0
    non_direct = 0
    witnesses: list[dict] = []
    for trial in range(trials):
        rng = Rng(seed, (997, trial))
        if operator is None:
            n = n_min + (trial % span)
            op = random_operator(rng.child(0), n, ("generic", "shared-eigenvalue")[trial % 2]).operator
        else:
            op = operator
        report = component_spectra(op, cluster_tol)
        gen = rng.generator()
        far = _far_scalar(gen, report.upsilon1, report.upsilon2)
        far2 = _far_scalar(gen, report.upsilon1, report.upsilon2)
        u1 = report.upsilon1.value_list()
        u2 = report.upsilon2.value_list()
        pool = [Bicomplex(v, far) for v in u1] + [Bicomplex(far2, v) for v in u2]
        pool += [Bicomplex(v, w) for v in u1[:2] for w in u2[:2]]
        i = int(gen.integers(len(pool)))
        j = int(gen.integers(len(pool)))
        kappa, kappa2 = pool[i], pool[j]
        if kappa == kappa2:
            continue
        res = eigenspace_sum(op, kappa, kappa2, cluster_tol, tol, report)
        if res.is_direct:
            direct += 1
        else:
            non_direct += 1
            if len(witnesses) < max_witnesses:
                witnesses.append(
                    {
                        "trial": trial,
                        "kappa": [kappa.minus.real, kappa.minus.imag, kappa.plus.real, kappa.plus.imag],
                        "kappa_prime": [
                            kappa2.minus.real,
                            kappa2.minus.imag,
                            kappa2.plus.real,
                            kappa2.plus.imag,
                        ],
                        "dim_first": res.dim_first,
                        "dim_second": res.dim_second,
                        "sum_dim": res.sum_dim,
                        "intersection_dim": res.intersection_dim,
                    }
                )
    return SumSearchReport(
        seed=seed,
        trials=trials,
        direct_count=direct,
        non_direct_count=non_direct,
        witnesses=witnesses,
    )
