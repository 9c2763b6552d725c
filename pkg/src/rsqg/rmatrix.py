"""Finite R-matrices on V ⊗ V by three routes — explicit coefficient tables,
the ordered product of per-root local factors composed with the diagonal
weight twist and the flip, and the parameter-exchanged inverse — together
with the eigenvalue, intertwining, braid, minimal-polynomial, inverse, and
one-parameter specialization certificates.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from fractions import Fraction

from .lyndon import ConvexOrder, lalonde_ram
from .matrices import SMatrix, act_12, act_23, flip_map, kron
from .pairing import c_gamma, root_d
from .rep import (
    Representation,
    build_fundamental,
    coproduct_e,
    coproduct_f,
    highest_weight_vectors,
)
from .report import CheckItem, Report, first_mismatch
from .rootdata import f_function
from .rootvec import RootVectorMatrices, build_root_vector_matrices
from .scalars import Scalar, ScalarRing, Variable, rs_factorial

# ---------------------------------------------------------------------------
# per-type coefficient tables
# ---------------------------------------------------------------------------


@dataclass
class CoefficientTables:
    """σ_i signs, t_i monomials and a_ij monomials entering the explicit
    R-matrix displays (types B, C, D)."""

    rep: Representation

    def sigma(self, i: int) -> int:
        n = self.rep.n
        if self.rep.family == "B":
            return -1 if i < n + 1 else (0 if i == n + 1 else 1)
        return 1 if i <= n else -1

    def t(self, i: int) -> Scalar:
        ring, n = self.rep.ring, self.rep.n
        fam = self.rep.family
        if fam == "B":
            if i < n + 1:
                return ring.mono(s=2 * (i - n) - 1)
            if i == n + 1:
                return ring.mono(s=-1)
            return ring.mono(r=2 * (n + 1 - i) + 1)
        if fam == "C":
            return ring.mono(s=i - n - 1) if i <= n else -ring.mono(r=n - i)
        return ring.mono(s=i - n) if i <= n else ring.mono(r=n + 1 - i)

    def a(self, i: int, j: int) -> Scalar:
        ring = self.rep.ring
        jp = self.rep.prime(j)
        half = 1 if self.rep.family == "B" else Fraction(1, 2)
        e = -half * self.sigma(i) * self.sigma(j)
        if (j < i < jp) or (jp < i < j):
            e = -e
        elif not (i < min(j, jp) or i > max(j, jp)):
            raise ValueError(f"a_({i},{j}) undefined (j = i or j = i')")
        return ring.mono(r=e, s=e)


def verify_tables(rep: Representation) -> Report:
    """a_ij · a_ji = 1 and a_ij = f(ε_i, ε_j) away from j = i, i'."""
    out = Report()
    t0 = time.perf_counter()
    w = ""
    if rep.family == "A":
        out.add(CheckItem("coefficient-tables", "A", rep.n, True, "", 0.0))
        return out
    tab = CoefficientTables(rep)
    ring = rep.ring
    for i in range(1, rep.N + 1):
        for j in range(1, rep.N + 1):
            if j in (i, rep.prime(i)):
                continue
            if not (tab.a(i, j) * tab.a(j, i)).is_one():
                w = w or f"a_({i},{j}) a_({j},{i}) != 1"
            fv = f_function(rep.rs, ring, rep.weights[i - 1], rep.weights[j - 1])
            if tab.a(i, j) != fv:
                w = w or f"a_({i},{j}) != f(eps_{i},eps_{j})"
    out.add(CheckItem("coefficient-tables", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


# ---------------------------------------------------------------------------
# route one: explicit displays
# ---------------------------------------------------------------------------


def rhat_explicit(rep: Representation) -> SMatrix:
    ring, n, N = rep.ring, rep.n, rep.N
    fam = rep.family
    R = lambda **p: ring.mono(**p)
    one = ring.one
    pr = rep.prime
    ent: list[tuple[SMatrix, SMatrix, Scalar]] = []  # (X, Y, coeff) meaning coeff·X⊗Y

    def unit(i, j):
        return SMatrix.from_entries(ring, N, N, [(i - 1, j - 1, one)])

    if fam == "A":
        for i in range(1, N + 1):
            ent.append((unit(i, i), unit(i, i), one))
        for i in range(1, N + 1):
            for j in range(i + 1, N + 1):
                ent.append((unit(j, i), unit(i, j), R(r=1)))
                ent.append((unit(i, j), unit(j, i), R(s=-1)))
                ent.append((unit(j, j), unit(i, i), one - R(r=1, s=-1)))
    else:
        tab = CoefficientTables(rep)
        if fam == "B":
            lam1, lam1_inv = R(r=-1, s=1), R(r=1, s=-1)
            c = (R(r=2) - R(s=2)) * R(r=-1, s=-1)
            for i in range(1, N + 1):
                if i == n + 1:
                    ent.append((unit(i, i), unit(i, i), one))
                else:
                    ent.append((unit(i, i), unit(i, i), lam1))
                    ent.append((unit(i, pr(i)), unit(pr(i), i), lam1_inv))
            for i in range(1, n + 1):
                ent.append((unit(pr(i), pr(i)), unit(i, i), c * (R(r=2 * (n - i) + 1, s=2 * (i - n) - 1) - one)))
        else:
            half = Fraction(1, 2)
            lam1, lam1_inv = R(r=-half, s=half), R(r=half, s=-half)
            # sign convention below: the i > j diagonal block carries -c and
            # the t_i t_j^{-1} block +c, shared with the B branch
            c = (R(r=1) - R(s=1)) * R(r=-half, s=-half)
            for i in range(1, N + 1):
                ent.append((unit(i, i), unit(i, i), lam1))
                ent.append((unit(i, pr(i)), unit(pr(i), i), lam1_inv))
            for i in range(1, n + 1):
                if fam == "C":
                    factor = R(r=n + 1 - i, s=i - n - 1) + one
                else:
                    factor = one - R(r=n - i, s=i - n)
                ent.append((unit(pr(i), pr(i)), unit(i, i), -c * factor))
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if j in (i, pr(i)):
                    continue
                ent.append((unit(i, j), unit(j, i), tab.a(i, j)))
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if j == pr(i) or j == i:
                    continue
                if i > j:
                    ent.append((unit(i, i), unit(j, j), -c))
                else:
                    ent.append((unit(pr(i), j), unit(i, pr(j)), c * tab.t(i) * tab.t(j).inv()))

    acc = SMatrix.zero(ring, N * N, N * N)
    for x, y, coeff in ent:
        acc = acc + kron(x, y).scale(coeff)
    return acc


def build_rhat_explicit(family: str, rank: int, ring: ScalarRing | None = None) -> SMatrix:
    return rhat_explicit(build_fundamental(family, rank, ring))


# ---------------------------------------------------------------------------
# route two: ordered product of local factors
# ---------------------------------------------------------------------------


def ftilde(rep: Representation) -> SMatrix:
    """Diagonal operator v_a ⊗ v_b ↦ f(weight_a, weight_b) · v_a ⊗ v_b."""
    ring, N = rep.ring, rep.N
    rows = {}
    for a in range(N):
        for b in range(N):
            idx = a * N + b
            rows[idx] = {idx: f_function(rep.rs, ring, rep.weights[a], rep.weights[b])}
    return SMatrix(ring, N * N, N * N, rows)


def local_theta_factor(rvm: RootVectorMatrices, gamma, pairing_fn) -> SMatrix:
    """Θ_γ = Σ_m (f_γ^m, e_γ^m)^{-1} ρ(f_γ)^m ⊗ ρ(e_γ)^m, truncated at matrix
    nilpotency."""
    rep = rvm.rep
    ring, N = rep.ring, rep.N
    acc = SMatrix.identity(ring, N * N)
    fpow = rvm.f_of(gamma)
    epow = rvm.e_of(gamma)
    m = 1
    while not fpow.is_zero() and not epow.is_zero():
        const = pairing_fn(gamma, m)
        if const.is_zero():
            raise ArithmeticError(f"vanishing pairing constant for {gamma.label()} at m={m}")
        acc = acc + kron(fpow, epow).scale(const.inv())
        m += 1
        fpow = fpow @ rvm.f_of(gamma)
        epow = epow @ rvm.e_of(gamma)
    return acc


def theta_product(
    rep: Representation,
    order: ConvexOrder,
    rvm: RootVectorMatrices,
    from_block: int = 1,
) -> SMatrix:
    """Ordered product of the local factors, largest root leftmost (the
    convex order read decreasingly).  ``from_block`` truncates to the roots
    whose leading simple-root index is ≥ that value, giving the partial
    products of the block recursion."""
    ring = rep.ring

    def pairing_fn(gamma, m):
        d = root_d(rep.rs, gamma)
        pre = ring.mono(s=-Fraction(d * m * (m - 1), 2))
        return pre * c_gamma(order, gamma, ring) ** m * rs_factorial(ring, m, d=d)

    acc = SMatrix.identity(ring, rep.N * rep.N)
    for gamma in order.decreasing():
        if gamma.i < from_block:
            continue
        acc = acc @ local_theta_factor(rvm, gamma, pairing_fn)
    return acc


def build_theta(
    rep: Representation,
    order: ConvexOrder,
    rvm: RootVectorMatrices,
    pairing_fn=None,
) -> SMatrix:
    """Ordered product of local factors with injectable pairing constants
    (defaults to the recursion route)."""
    if pairing_fn is None:
        return theta_product(rep, order, rvm)
    acc = SMatrix.identity(rep.ring, rep.N * rep.N)
    for gamma in order.decreasing():
        acc = acc @ local_theta_factor(rvm, gamma, pairing_fn)
    return acc


def rhat_factorized(rep: Representation, order: ConvexOrder | None = None) -> SMatrix:
    order = order if order is not None else lalonde_ram(rep.rs)
    rvm = build_root_vector_matrices(rep, order)
    th = theta_product(rep, order, rvm)
    return th @ ftilde(rep) @ flip_map(rep.ring, rep.N)


def build_rhat_factorized(family: str, rank: int, ring: ScalarRing | None = None) -> SMatrix:
    return rhat_factorized(build_fundamental(family, rank, ring))


# ---------------------------------------------------------------------------
# route three: the inverse, from the parameter exchange r ↔ s
# ---------------------------------------------------------------------------


def eigenvalues(rep: Representation) -> list[Scalar]:
    """Eigenvalues of the explicit operator on the highest weight vectors of
    V ⊗ V (two for type A, three otherwise)."""
    ring, n = rep.ring, rep.n
    fam = rep.family
    if fam == "A":
        return [ring.one, -ring.mono(r=1, s=-1)]
    if fam == "B":
        return [ring.mono(r=-1, s=1), -ring.mono(r=1, s=-1), ring.mono(r=2 * n, s=-2 * n)]
    half = Fraction(1, 2)
    if fam == "C":
        return [
            ring.mono(r=-half, s=half),
            -ring.mono(r=half, s=-half),
            -ring.mono(r=n + half, s=-n - half),
        ]
    return [
        ring.mono(r=-half, s=half),
        -ring.mono(r=half, s=-half),
        ring.mono(r=n - half, s=-n + half),
    ]


def rbar_inverse_printed(rep: Representation) -> SMatrix:
    """The displayed inverse for types B/C/D; type A from the quadratic
    minimal polynomial (no printed display exists)."""
    ring, n, N = rep.ring, rep.n, rep.N
    fam = rep.family
    R = lambda **p: ring.mono(**p)
    one = ring.one
    pr = rep.prime

    if fam == "A":
        lam = eigenvalues(rep)
        rhat = rhat_explicit(rep)
        # R̂² = (λ1+λ2)R̂ - λ1λ2 ⇒ R̂^{-1} = ((λ1+λ2)Id - R̂)/(λ1 λ2)
        c = (lam[0] * lam[1]).inv()
        return (SMatrix.identity(ring, N * N).scale(lam[0] + lam[1]) - rhat).scale(c)

    tab = CoefficientTables(rep)
    ent: list[tuple[SMatrix, SMatrix, Scalar]] = []

    def unit(i, j):
        return SMatrix.from_entries(ring, N, N, [(i - 1, j - 1, one)])

    if fam == "B":
        c = (R(s=2) - R(r=2)) * R(r=-1, s=-1)
        for i in range(1, N + 1):
            if i == n + 1:
                ent.append((unit(i, i), unit(i, i), one))
            else:
                ent.append((unit(i, i), unit(i, i), R(r=1, s=-1)))
                ent.append((unit(i, pr(i)), unit(pr(i), i), R(r=-1, s=1)))
        for i in range(1, n + 1):
            ent.append((unit(i, i), unit(pr(i), pr(i)), c * (R(r=2 * (i - n) - 1, s=2 * (n - i) + 1) - one)))
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if j in (i, pr(i)):
                    continue
                ent.append((unit(i, j), unit(j, i), tab.a(i, j)))
                if i < j:
                    ent.append((unit(i, i), unit(j, j), -c))
                else:
                    ent.append((unit(pr(i), j), unit(i, pr(j)), c * tab.t(i) * tab.t(j).inv()))
    else:
        half = Fraction(1, 2)
        c = (R(r=1) - R(s=1)) * R(r=-half, s=-half)
        for i in range(1, N + 1):
            ent.append((unit(i, i), unit(i, i), R(r=half, s=-half)))
            ent.append((unit(i, pr(i)), unit(pr(i), i), R(r=-half, s=half)))
        for i in range(1, n + 1):
            if fam == "C":
                factor = R(r=i - n - 1, s=n + 1 - i) + one
            else:
                factor = one - R(r=i - n, s=n - i)
            ent.append((unit(i, i), unit(pr(i), pr(i)), c * factor))
        for i in range(1, N + 1):
            for j in range(1, N + 1):
                if j in (i, pr(i)):
                    continue
                ent.append((unit(i, j), unit(j, i), tab.a(i, j)))
                if i < j:
                    ent.append((unit(i, i), unit(j, j), c))
                else:
                    ent.append((unit(pr(i), j), unit(i, pr(j)), -c * tab.t(i) * tab.t(j).inv()))

    acc = SMatrix.zero(ring, N * N, N * N)
    for x, y, coeff in ent:
        acc = acc + kron(x, y).scale(coeff)
    return acc


def rbar_inverse_exchanged(rep: Representation, order: ConvexOrder | None = None) -> SMatrix:
    """Independent route, valid in every type: flip ∘ (inverse weight twist)
    ∘ (parameter-exchanged Θ), using the entrywise r ↔ s exchange."""
    order = order if order is not None else lalonde_ram(rep.rs)
    rvm = build_root_vector_matrices(rep, order)
    th_bar = theta_product(rep, order, rvm).exchanged_params()
    return flip_map(rep.ring, rep.N) @ ftilde(rep).diagonal_inv() @ th_bar


def build_rbar_inverse(family: str, rank: int, ring: ScalarRing | None = None) -> SMatrix:
    return rbar_inverse_printed(build_fundamental(family, rank, ring))


# ---------------------------------------------------------------------------
# certificates
# ---------------------------------------------------------------------------


def check_route_equivalence(rep: Representation) -> Report:
    out = Report()
    t0 = time.perf_counter()
    w = first_mismatch(rhat_explicit(rep), rhat_factorized(rep))
    out.add(CheckItem("route-equivalence", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


def check_eigenvalues(rep: Representation, rhat: SMatrix | None = None) -> Report:
    from .matrices import mat_vec, vec_scale

    rhat = rhat if rhat is not None else rhat_explicit(rep)
    hwt = highest_weight_vectors(rep)
    lam = eigenvalues(rep)
    out = Report()
    t0 = time.perf_counter()
    w = ""
    for k, vec in enumerate(hwt.vectors):
        got = mat_vec(rhat, vec)
        want = vec_scale(vec, lam[k])
        if got != want:
            w = w or f"w{k + 1} is not an eigenvector with value {lam[k]}"
    # the first eigenvalue is the weight twist at the highest weight
    if lam[0] != f_function(rep.rs, rep.ring, rep.weights[0], rep.weights[0]):
        w = w or "lambda_1 != f(eps_1, eps_1)"
    out.add(CheckItem("eigenvalues", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


def check_intertwining(rep: Representation, rhat: SMatrix | None = None) -> Report:
    """R̂ commutes with the action of every generator on V ⊗ V."""
    rhat = rhat if rhat is not None else rhat_explicit(rep)
    ring = rep.ring
    out = Report()
    t0 = time.perf_counter()
    w = ""
    for i in range(1, rep.n + 1):
        for mk, tag in (
            (coproduct_f(rep, i), "f"),
            (coproduct_e(rep, i), "e"),
            (kron(rep.omega[i], rep.omega[i]), "omega"),
            (kron(rep.omega_prime[i], rep.omega_prime[i]), "omega'"),
        ):
            ww = first_mismatch(mk @ rhat, rhat @ mk)
            if ww:
                w = w or f"Δ({tag}_{i}): {ww}"
    out.add(CheckItem("intertwining", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


def check_braid(rep: Representation, rhat: SMatrix | None = None) -> Report:
    """R̂₁₂ R̂₂₃ R̂₁₂ = R̂₂₃ R̂₁₂ R̂₂₃ on V ⊗ V ⊗ V."""
    rhat = rhat if rhat is not None else rhat_explicit(rep)
    out = Report()
    t0 = time.perf_counter()
    r12 = act_12(rhat, rep.N)
    r23 = act_23(rhat, rep.N)
    w = first_mismatch(r12 @ r23 @ r12, r23 @ r12 @ r23)
    out.add(CheckItem("braid", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


def check_min_poly(rep: Representation, rhat: SMatrix | None = None) -> Report:
    rhat = rhat if rhat is not None else rhat_explicit(rep)
    ring, N = rep.ring, rep.N
    out = Report()
    t0 = time.perf_counter()
    acc = SMatrix.identity(ring, N * N)
    ident = SMatrix.identity(ring, N * N)
    for lam in eigenvalues(rep):
        acc = acc @ (rhat - ident.scale(lam))
    w = "" if acc.is_zero() else first_mismatch(acc, SMatrix.zero(ring, N * N, N * N))
    out.add(CheckItem("min-poly", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


def check_inverse(rep: Representation) -> Report:
    """Explicit operator times the displayed inverse is the identity, and the
    parameter-exchange route reproduces the display."""
    out = Report()
    t0 = time.perf_counter()
    rhat = rhat_explicit(rep)
    rbar = rbar_inverse_printed(rep)
    ident = SMatrix.identity(rep.ring, rep.N * rep.N)
    w = first_mismatch(rhat @ rbar, ident) or first_mismatch(rbar @ rhat, ident)
    if not w:
        w = first_mismatch(rbar, rbar_inverse_exchanged(rep))
        if w:
            w = f"exchange route differs from display: {w}"
    out.add(CheckItem("inverse", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


def check_weight_preservation(rep: Representation, rhat: SMatrix | None = None) -> Report:
    rhat = rhat if rhat is not None else rhat_explicit(rep)
    N = rep.N
    out = Report()
    t0 = time.perf_counter()
    w = ""
    for ii, row in rhat.rows.items():
        wi = tuple(
            a + b for a, b in zip(rep.weights[ii // N], rep.weights[ii % N])
        )
        for jj in row:
            wj = tuple(
                a + b for a, b in zip(rep.weights[jj // N], rep.weights[jj % N])
            )
            if wi != wj:
                w = w or f"entry ({ii},{jj}) connects different weights"
    out.add(CheckItem("weight-preservation", rep.family, rep.n, w == "", w, time.perf_counter() - t0))
    return out


# ---------------------------------------------------------------------------
# one-parameter specialization (types A and B)
# ---------------------------------------------------------------------------


def q_ring() -> ScalarRing:
    return ScalarRing([Variable("q", 2)])


def one_param_r_finite(family: str, rank: int, ring: ScalarRing) -> SMatrix:
    """Printed one-parameter R = R̂∘τ after r ↦ q, s ↦ q^{-1}."""
    rep_shape = build_fundamental(family, rank)  # only for sizes/indexing
    N = rep_shape.N
    n = rank
    one = ring.one
    Q = lambda k: ring.mono(q=k)

    def unit(i, j):
        return SMatrix.from_entries(ring, N, N, [(i - 1, j - 1, one)])

    acc = SMatrix.zero(ring, N * N, N * N)
    if family == "A":
        for i in range(1, N + 1):
            acc = acc + kron(unit(i, i), unit(i, i))
            for j in range(1, N + 1):
                if i == j:
                    continue
                acc = acc + kron(unit(i, i), unit(j, j)).scale(Q(1))
                if i > j:
                    acc = acc + kron(unit(i, j), unit(j, i)).scale(one - Q(2))
        return acc
    if family != "B":
        raise ValueError("printed one-parameter display available for A and B only")
    pr = lambda i: N + 1 - i

    def tbar(i):
        # specialization of the B-type t_i
        if i < n + 1:
            return Q(-(2 * (i - n) - 1))
        if i == n + 1:
            return Q(1)
        return Q(2 * (n + 1 - i) + 1)

    c = Q(2) - Q(-2)
    for i in range(1, N + 1):
        if i == n + 1:
            acc = acc + kron(unit(i, i), unit(i, i))
        else:
            acc = acc + kron(unit(i, i), unit(i, i)).scale(Q(-2))
            acc = acc + kron(unit(i, i), unit(pr(i), pr(i))).scale(Q(2))
    for i in range(1, n + 1):
        acc = acc + kron(unit(pr(i), i), unit(i, pr(i))).scale(c * (Q(2 * (2 * n - 2 * i + 1)) - one))
    for i in range(1, N + 1):
        for j in range(1, N + 1):
            if j in (i, pr(i)):
                continue
            acc = acc + kron(unit(i, i), unit(j, j))
            if i > j:
                acc = acc - kron(unit(i, j), unit(j, i)).scale(c)
            else:
                acc = acc + kron(unit(pr(i), pr(j)), unit(i, j)).scale(c * tbar(i) * tbar(j).inv())
    return acc


def specialize_and_compare(family: str, rank: int) -> Report:
    """r ↦ q, s ↦ q^{-1} on the two-parameter R = R̂∘τ equals the printed
    one-parameter operator; for A also the spectral version and its z → 0
    limit."""
    if family not in ("A", "B"):
        raise ValueError("specialization displays exist for types A and B")
    out = Report()
    t0 = time.perf_counter()
    rep = build_fundamental(family, rank)
    qr = q_ring()
    rhat = rhat_explicit(rep)
    r_two = rhat @ flip_map(rep.ring, rep.N)
    qhalf = qr.atom("q")
    r_spec = r_two.substituted({"r": qhalf, "s": qhalf.inv()}, ring=qr)
    w = first_mismatch(r_spec, one_param_r_finite(family, rank, qr))
    out.add(CheckItem("specialize-finite", family, rank, w == "", w, time.perf_counter() - t0))

    if family == "A":
        from .affine import affine_rhat, one_param_r_affine_A

        t0 = time.perf_counter()
        from .scalars import rs_ring, substitute

        zr = rs_ring("z")
        rz = affine_rhat(family, rank, zr) @ flip_map(zr, rep.N)
        qz = ScalarRing([Variable("q", 2), "z"])
        qhalf2 = qz.atom("q")
        rz_spec = rz.substituted({"r": qhalf2, "s": qhalf2.inv(), "z": qz.atom("z")}, ring=qz)
        w = first_mismatch(rz_spec, one_param_r_affine_A(rank, qz))
        out.add(CheckItem("specialize-affine", family, rank, w == "", w, time.perf_counter() - t0))

        t0 = time.perf_counter()
        r_at_zero = rz.substituted({"z": zr.zero})
        r_two_in_zr = SMatrix(
            zr,
            rep.N**2,
            rep.N**2,
            {
                i: {j: substitute(v, {}, ring=zr) for j, v in row.items()}
                for i, row in r_two.rows.items()
            },
        )
        w = first_mismatch(r_at_zero, r_two_in_zr)
        out.add(CheckItem("affine-z0-limit", family, rank, w == "", w, time.perf_counter() - t0))
    return out


def run_rmatrix_checks(family: str, rank: int, checks: list[str]) -> Report:
    """Named certificate driver used by the command line."""
    rep = build_fundamental(family, rank)
    rhat = rhat_explicit(rep)
    out = Report()
    for c in checks:
        if c == "route":
            out = out.merged(check_route_equivalence(rep))
        elif c == "eigen":
            out = out.merged(check_eigenvalues(rep, rhat))
        elif c == "intertwine":
            out = out.merged(check_intertwining(rep, rhat))
        elif c == "braid":
            out = out.merged(check_braid(rep, rhat))
        elif c == "minpoly":
            out = out.merged(check_min_poly(rep, rhat))
        elif c == "inverse":
            out = out.merged(check_inverse(rep))
        elif c == "weights":
            out = out.merged(check_weight_preservation(rep, rhat))
        elif c == "tables":
            out = out.merged(verify_tables(rep))
        elif c == "specialize":
            out = out.merged(specialize_and_compare(family, rank))
        else:
            raise ValueError(f"unknown check {c!r}")
    return out
