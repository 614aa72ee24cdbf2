"""The verification suites run by ``kklab verify``."""
from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Callable, Dict, List

from . import extensions as ext
from . import gamma as G
from . import paths
from . import toeplitz as TP
from .polynomials import IntPolynomial, NCPolynomial
from .power import PowerRing, exponential_failure_check, quotient_exactness_check
from .report import Recorder, VerificationReport
from .rings import (AlgebraHom, AlgebraPresentation, CrossedProduct, RingMatrix,
                    matrix_inverse_adjugate, morita_check, rotation_homotopy_W)
from .simplicial import (build_standard, find_isomorphism, product, quotient,
                         subdivide_times)


@dataclass
class Options:
    degree: int = 6
    window: int = 64
    seed: int = 0
    subdivisions: int = 3


def catalog(subdivisions: int = 3):
    """Named test objects: simplices, boundaries, the circle and iterated subdivisions."""
    out = {}
    for n in range(4):
        out[f"simplex{n}"] = build_standard("simplex", n)
        if n:
            out[f"boundary{n}"] = build_standard("boundary", n)
    out["circle"] = build_standard("circle")
    D1, S1 = build_standard("simplex", 1), build_standard("circle")
    for m in range(1, max(subdivisions, 4) + 1):
        out[f"sd{m}_simplex1"] = subdivide_times(D1, m)[0]
    for m in range(1, subdivisions + 1):
        out[f"sd{m}_circle"] = subdivide_times(S1, m)[0]
    return out


# simplicial

def suite_simplicial(rec: Recorder, opt: Options) -> None:
    expected = {("simplex", 1): (2, 1), ("simplex", 2): (3, 3, 1), ("simplex", 3): (4, 6, 4, 1),
                ("boundary", 2): (3, 3), ("boundary", 3): (4, 6, 4), ("circle", 0): (1, 1)}
    for (kind, n), counts in expected.items():
        K = build_standard(kind, n)
        rec.run(f"simplicial.counts.{kind}{n}", f"nondegenerate counts of {kind} {n} = {counts}",
                lambda K=K, c=counts: (K.counts() == c and K.identity_violation() is None, K.counts()))
    D1 = build_standard("simplex", 1)
    for m in range(1, opt.subdivisions + 1):
        def sd_interval(m=m):
            K, h = subdivide_times(D1, m)
            return K.counts() == (2 ** m + 1, 2 ** m) and h.is_valid(), K.counts()
        rec.run(f"simplicial.sd_interval.{m}", f"sd^{m} Δ^1 has 2^{m}+1 vertices and 2^{m} edges; last-vertex map simplicial",
                sd_interval)
    rec.run("simplicial.sd_triangle", "sd Δ^2 counts (7, 12, 6), χ = 1",
            lambda: (subdivide_times(build_standard("simplex", 2), 1)[0].counts() == (7, 12, 6), None))
    rec.run("simplicial.sd_circle", "sd S^1 counts (2, 2)",
            lambda: subdivide_times(build_standard("circle"), 1)[0].counts() == (2, 2))
    rec.run("simplicial.quotient_circle", "Δ^1/∂Δ^1 ≅ S^1",
            lambda: find_isomorphism(quotient(D1, ["0", "1"]), build_standard("circle")) is not None)
    D2 = build_standard("simplex", 2)
    rec.run("simplicial.quotient_sphere", "Δ^2/∂Δ^2 counts (1, 0, 1); χ(sd(Δ^2/∂Δ^2)) = 2",
            lambda: (quotient(D2, ["0", "1", "2", "01", "02", "12"]).counts() == (1, 0, 1)
                     and subdivide_times(quotient(D2, ["0", "1", "2", "01", "02", "12"]), 1)[0]
                     .euler_characteristic() == 2))
    rec.run("simplicial.product_square", "Δ^1 × Δ^1 counts (4, 5, 2)", lambda: product(D1, D1).counts() == (4, 5, 2))
    rec.run("simplicial.product_prism", "Δ^1 × Δ^2 counts (6, 12, 10, 3)",
            lambda: product(D1, D2).counts() == (6, 12, 10, 3))
    rec.run("simplicial.product_point", "Δ^2 × Δ^0 ≅ Δ^2",
            lambda: find_isomorphism(product(D2, build_standard("point")), D2) is not None)


# rings

def suite_rings(rec: Recorder, opt: Options) -> None:
    W, record = rotation_homotopy_W()
    for key, anchor in [("ev0_is_identity", "ev_0(W) = I"), ("ev1_is_rotation", "ev_1(W) = ((0,-1),(1,0))"),
                        ("det_is_one", "det(W) = 1"), ("inverse_checked", "W·W⁻¹ = I")]:
        rec.add(f"rings.W.{key}", anchor, record[key], None if record[key] else repr(record))

    rng = random.Random(opt.seed)
    t = IntPolynomial.var("t")

    def adjugate_random():
        for _ in range(10):
            # unimodular: product of elementary matrices over ℤ[t]
            M = RingMatrix.identity(3, IntPolynomial(0), IntPolynomial(1))
            for _ in range(4):
                i, j = rng.sample(range(3), 2)
                E = RingMatrix.identity(3, IntPolynomial(0), IntPolynomial(1))
                rows = [list(r) for r in E.rows]
                rows[i][j] = t ** rng.randint(0, 2) * rng.randint(-2, 2)
                M = M * RingMatrix(rows, IntPolynomial(0), IntPolynomial(1))
            if not M * matrix_inverse_adjugate(M) == 1:
                return False, repr(M)
        return True
    rec.run("rings.adjugate_inverse", "M·adj(M) = I for det M = 1 (random unimodular)", adjugate_random)

    cp = CrossedProduct(["x", "y"], {"x": IntPolynomial.var("y"), "y": IntPolynomial.var("x")},
                        {"x": IntPolynomial.var("y"), "y": IntPolynomial.var("x")})

    def rand_cp():
        terms = {}
        for _ in range(rng.randint(1, 3)):
            k = rng.randint(-2, 2)
            terms[k] = terms.get(k, 0) + IntPolynomial.var(rng.choice("xy")) ** rng.randint(0, 2) * rng.randint(-2, 2)
        return cp.element(terms)

    def assoc():
        for _ in range(30):
            a, b, c = rand_cp(), rand_cp(), rand_cp()
            if (a * b) * c != a * (b * c):
                return False, (a, b, c)
        return True
    rec.run("rings.crossed.associative", "(ab)c = a(bc) in A[t, t⁻¹; σ] (random triples)", assoc)

    def conj():
        for g in ("x", "y"):
            a = cp.const(IntPolynomial.var(g))
            if cp.t(1) * a * cp.t(-1) != cp.const(cp.sigma(IntPolynomial.var(g))):
                return False, g
        return True
    rec.run("rings.crossed.conjugation", "t a t⁻¹ = σ(a)", conj)

    one, zero = IntPolynomial(1), IntPolynomial(0)
    x = IntPolynomial.var("x")
    rec.run("rings.morita", "ξ_{p,q}(a)ξ_{p,q}(b) = ξ_{p,q}(ab) when Σ q_i p_i acts as 1",
            lambda: morita_check([one, zero], [one, x], [x, x + 1, one], zero, one).ok)

    # orthogonal sum in the Toeplitz setting: ψ ⊥ ι = φ₁
    maps = TP.named_maps()
    samples = [NCPolynomial.gen("alpha"), NCPolynomial.gen("beta"), NCPolynomial(1)]

    def orth():
        s, v = ext.orthogonal_sum(maps["psi"], maps["iota"], samples)
        return v.ok and all(s(g) == maps["phi1"](g) for g in ("alpha", "beta")), v.detail
    rec.run("rings.orthogonal_sum", "f(a)g(b) = g(a)f(b) = 0 ⇒ f + g is a hom", orth)


# power

def suite_power(rec: Recorder, opt: Options) -> None:
    d = opt.degree
    for name, K in catalog(opt.subdivisions).items():
        def free(K=K):
            R = PowerRing(K, d)
            v = R.closure_violation()
            return v is None, {"ranks": list(R.ranks()), "violation": v}
        rec.run(f"power.free.{name}", f"ℤ^K free with integral products (d = {d})", free)

    D1 = build_standard("simplex", 1)
    rec.run("power.simplex1.ranks", "ℤ^{Δ^1} ranks per degree (1, 1, 1)",
            lambda: PowerRing(D1, 2).ranks() == (1, 1, 1))
    rec.run("power.circle.basis", "ℤ^{S^1}_{≤3} spanned by 1, t²-t, t³-t",
            _circle_basis)
    for n in (1, 2):
        Dn = build_standard("simplex", n)
        bd = [x for x in Dn.all_ids() if len(x) <= n]
        rec.run(f"power.exactness.{n}", f"0 → ℤ^{{Δ^{n}/∂Δ^{n}}} → ℤ^{{Δ^{n}}} → ℤ^{{∂Δ^{n}}} → 0 exact (pointed)",
                lambda Dn=Dn, bd=bd: _exactness(Dn, bd, min(d, 4)))

    def expo():
        r = exponential_failure_check(2)
        return r["ok"], {"square": list(r["square_ranks"]), "triangle": list(r["triangle_ranks"])}
    rec.run("power.exponential_failure", "rank ℤ^{Δ^1×Δ^1}_{≤2} ≠ rank ℤ^{Δ^2}_{≤2}", expo)


def _circle_basis():
    from .lattice import same_lattice
    R = PowerRing(build_standard("circle"), 3)
    t = IntPolynomial.var("t1")
    golden = [R.element({"e": p, "*": p.subs({"t1": 0})}) for p in (IntPolynomial(1), t * t - t, t ** 3 - t)]
    return same_lattice(R.basis_rows, [R.row_of(g) for g in golden])


def _exactness(L, K_ids, d):
    r = quotient_exactness_check(L, K_ids, "0", d)
    return r.ok, r.details


# gamma

def suite_gamma(rec: Recorder, opt: Options) -> None:
    N = opt.window
    _, checks = G.sum_ring_data()
    for k, (name, ok) in enumerate(checks.items()):
        rec.add(f"gamma.sum_ring.{k}", name, ok)
    rec.run("gamma.associator", "U((x⊕y)⊕z)Uᵀ = x⊕(y⊕z), UUᵀ = 1", _associator)
    rec.run("gamma.oplus_units", "e_00 ⊕ e_00 = e_00 + e_11",
            lambda: G.oplus(G.PM.unit(0, 0), G.PM.unit(0, 0)) == G.PM.unit(0, 0) + G.PM.unit(1, 1))

    rng = random.Random(opt.seed)
    samples = [(G.PM.zero(), G.PM.zero()), (G.PM.unit(0, 0), G.PM.zero()), (G.ALPHA_HAT, G.BETA_HAT)]
    samples += [(G.random_progression(rng, 3, 4), G.random_progression(rng, 3, 4)) for _ in range(4)]
    rec.run("gamma.wagoner.exact", "Q diag(a⊕b, 0, 0) Q⁻¹ = diag(a, b, 0)", lambda: G.wagoner_Q_check(samples))
    rec.run("gamma.wagoner.window", f"Q diag(a⊕b, 0, 0) Q⁻¹ = diag(a, b, 0) with φ^∞ operands (window {N})",
            lambda: G.wagoner_window_check(G.phi_infinity(G.ALPHA_HAT), G.BETA_HAT, N))

    gens = [G.ALPHA_HAT, G.BETA_HAT, G.PM.unit(0, 0), G.PM.identity()]

    def phi_fixed():
        for x in gens:
            p = G.phi_infinity(x)
            if not G.windows_agree(G.oracle_oplus(x, p), p, N):
                return False, repr(x)
        return True
    rec.run("gamma.phi_inf.fixed", f"x ⊕ φ^∞(x) = φ^∞(x) (window {N})", phi_fixed)

    def phi_mult():
        sizes = []
        for x in gens:
            for y in gens:
                lhs = G.phi_infinity(x * y)
                rhs = G.phi_infinity(x) * G.phi_infinity(y)
                if not G.windows_agree(lhs, rhs, N):
                    return False, (repr(x), repr(y))
                ok, M = G.window_product_check(G.phi_infinity(x), G.phi_infinity(y), N)
                if not ok:
                    return False, ("window", repr(x), repr(y))
                sizes.append(M)
        return True, {"min_safe_rows": min(sizes)}
    rec.run("gamma.phi_inf.multiplicative", f"φ^∞(xy) = φ^∞(x)φ^∞(y) (window {N}, safe rows)", phi_mult)

    def random_windows():
        for _ in range(40):
            x, y, z = (G.random_progression(rng) for _ in range(3))
            ok, _ = G.window_product_check(x, y, N)
            if not ok or (x * y) * z != x * (y * z):
                return False, (repr(x), repr(y))
        return True
    rec.run("gamma.products.random", f"normal-form products agree with windows (N = {N}) and associate",
            random_windows)

    def split():
        x = 1 - G.BETA_HAT * G.ALPHA_HAT
        fin, prog = G.m_infinity_split(x)
        return fin == G.PM.unit(0, 0) and prog == 0, repr(x)
    rec.run("gamma.minfty_split", "1 - β̂α̂ = e_00 ∈ M_∞", split)

    def wodzicki():
        vals = [G.wodzicki_blowup(n) for n in (3, 10, 28)]
        return vals[0] < vals[1] < vals[2], vals
    rec.run("gamma.wodzicki", "max entry of A² strictly increases along N = 3, 10, 28", wodzicki)


def _associator():
    U = G.associator()
    x, y, z = G.ALPHA_HAT, G.BETA_HAT, G.PM.unit(0, 0)
    return U * G.oplus(G.oplus(x, y), z) * U.transpose() == G.oplus(x, G.oplus(y, z)) and U * U.transpose() == 1


# toeplitz

def suite_toeplitz(rec: Recorder, opt: Options) -> None:
    def hat_units():
        for p in range(5):
            for q in range(5):
                x = TP.BETA ** p * TP.ALPHA ** q - TP.BETA ** (p + 1) * TP.ALPHA ** (q + 1)
                if TP.hat(x) != G.PM.unit(p, q):
                    return False, (p, q)
        return True
    rec.run("toeplitz.hat.units", "hat(β^pα^q − β^{p+1}α^{q+1}) = e_{p,q} (p, q ≤ 4)", hat_units)

    rng = random.Random(opt.seed)

    def hat_mono():
        for _ in range(200):
            x, y = TP.random_toeplitz(rng, 6), TP.random_toeplitz(rng, 6)
            if (TP.hat(x) == 0) != (x == 0):
                return False, repr(x)
            if TP.hat(x * y) != TP.hat(x) * TP.hat(y) or TP.hat(x + y) != TP.hat(x) + TP.hat(y):
                return False, (repr(x), repr(y))
            if TP.in_Minfty(x) != TP.hat(x).is_finite():
                return False, ("kernel", repr(x))
        return True
    rec.run("toeplitz.hat.monomorphism", "hat injective ring map; π(x) = 0 iff hat(x) finite", hat_mono)
    rec.run("toeplitz.tau0", "α − 1 ∈ τ₀, 1 ∉ τ₀, 1 − βα ∈ τ₀",
            lambda: TP.tau0_member(TP.ALPHA - 1) and not TP.tau0_member(TP.ONE) and TP.tau0_member(TP.E))
    for r in TP.fundamental_suite():
        rec.add(f"toeplitz.fundamental.{r['id']}", r["anchor"], r["ok"], r["witness"])


# homotopy and extensions

def suite_homotopy(rec: Recorder, opt: Options) -> None:
    for n in range(min(opt.subdivisions, 2) + 1):
        def eta(n=n):
            r = paths.eta_transformation(n, 2)
            return r.ok, {"failures": r.failures[:3],
                          "constants": {f"{k},{l}": c for (k, l), c in sorted(r.constants.items())}}
        rec.run(f"homotopy.eta.{n}", f"η_{{k,l}} paste to a ring map ℤ^{{sd^{n} Δ^1}} → ℤ^{{sd^{n} Δ^1 × sd^{n} Δ^1}}", eta)

    rho = ext.loop_rho(ext.INTEGERS, 3)
    rec.run("homotopy.loop_rho.2", "ρ_ℤ(x⊗x − x) = t² − t",
            lambda: rho({("x", "x"): 1, ("x",): -1}) == IntPolynomial.var("t") ** 2 - IntPolynomial.var("t"))
    rec.run("homotopy.loop_rho.3", "ρ_ℤ(x⊗x⊗x − x) = t³ − t",
            lambda: rho({("x", "x", "x"): 1, ("x",): -1}) == IntPolynomial.var("t") ** 3 - IntPolynomial.var("t"))
    rec.run("homotopy.loop_rho.kernel", "ρ_ℤ lands in Ω ℤ on the J-basis", lambda: (rho.ok, rho.failures))
    rec.run("homotopy.j_basis", "J(ℤ)_{≤2} = ⟨x⊗x − x⟩, rank J(ℤ)_{≤3} = 2",
            lambda: ext.j_basis(ext.INTEGERS, 2) == [{("x", "x"): 1, ("x",): -1}]
            and len(ext.j_basis(ext.INTEGERS, 3)) == 2)
    rec.run("homotopy.split_extension", "multiplicative section ⇒ classifying map 0",
            lambda: all(i == 0 for i in ext.classifying_map(ext.split_extension_example(), 4).images))
    rec.run("homotopy.loop_naturality", "f^{S^1} ρ_A = ρ_B J(f) on J(ℤ)_{≤3}", lambda: ext.loop_naturality_check(3).ok)

    for name, example in (("polynomial", ext.polynomial_ring_example()), ("square_zero", ext.square_zero_example())):
        def graded(example=example):
            _, v = ext.graded_homotopy(*example)
            return all(x.ok for x in v.values()), {k: x.detail for k, x in v.items() if not x.ok}
        rec.run(f"homotopy.graded.{name}", "h(a_n) = a_n t^n is a hom, ev_0 h = π_0, ev_1 h = id", graded)

    def amalg():
        data = ext.amalgamated_example()
        return all(v.ok for v in data.verdicts.values()), {k: v.detail for k, v in data.verdicts.items() if not v.ok}
    rec.run("homotopy.amalgamated", "ϑ(a) = (a, α(a)), ϑ(b) = (β(b), b) and η(a, b) = diag(a, b) are homs", amalg)

    U = ext.Unitalized
    rec.run("homotopy.qq.confluent", "uu → u, vv → v is confluent", lambda: ext.qq_confluence_check(6))

    def qq_rank():
        r = ext.qQ_calculus([[U(1), 0], [0, 0]], [[0, 0], [0, 0]])
        return r.ok and r.k0.rank() == 1, r.failures
    rec.run("homotopy.qq.rank_one", "(diag(1, 0), 0) ↦ [e_0] − [e_1] of rank 1", qq_rank)

    def qq_equal():
        e = [[U(1), 0], [0, 0]]
        r = ext.qQ_calculus(e, e)
        return r.ok and r.k0.rank() == 0 and r.hom(NCPolynomial.gen("u") - NCPolynomial.gen("v")) == r.hom.zero
    rec.run("homotopy.qq.equal", "e_0 = e_1 ⇒ class 0 and u − v ↦ 0", qq_equal)

    rec.run("homotopy.paths", "concatenation, reversal and refinement keep paths valid", _paths_check)


def _paths_check():
    x = IntPolynomial.var("x")
    t = IntPolynomial.var("t")
    A = AlgebraPresentation(["x"], [])
    zero_map = AlgebraHom(A, {"x": IntPolynomial(0)}, IntPolynomial(1))
    ident = AlgebraHom(A, {"x": x}, IntPolynomial(1))
    h = paths.ElementaryHomotopy(AlgebraHom(A, {"x": x * t}, IntPolynomial(1)))
    if not paths.check_elementary(h, zero_map, ident).ok:
        return False, "x ↦ xt does not connect 0 to id"
    p = paths.SubdividedPath.from_homotopy(h)
    loop = paths.concat(p, p.reverse())
    zz = paths.concat(loop, paths.SubdividedPath.constant(zero_map, 1))
    for q in (p, loop, zz, zz.refine()):
        ok, _ = q.as_power_hom(3)
        if not (q.is_valid() and ok):
            return False, f"path at level {q.n} invalid"
    return loop.start()("x") == 0 and loop.end()("x") == 0


SUITES: Dict[str, Callable[[Recorder, Options], None]] = {
    "simplicial": suite_simplicial,
    "rings": suite_rings,
    "power": suite_power,
    "gamma": suite_gamma,
    "toeplitz": suite_toeplitz,
    "homotopy": suite_homotopy,
}


def run_suite(name: str, opt: Options) -> VerificationReport:
    names: List[str] = list(SUITES) if name == "all" else [name]
    if any(n not in SUITES for n in names):
        raise KeyError(f"unknown suite {name!r}")
    rec = Recorder(name)
    for n in names:
        SUITES[n](rec, opt)
    flags = {"degree": opt.degree, "window": opt.window, "seed": opt.seed, "subdivisions": opt.subdivisions}
    return VerificationReport(name, flags, rec.checks)
