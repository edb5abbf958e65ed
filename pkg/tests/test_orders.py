"""Order-calculus engine: ledgers, form checks, verdict dispatch."""

import random

import pytest

from uniqpoly.curves import Configuration
from uniqpoly.orders import (
    ASSUME_NO_CONIC,
    ASSUME_NO_LINEAR,
    ASSUME_SCALE_RIGID,
    ASSUME_SEPARATED,
    VERDICT_RANK,
    FormSpec,
    RouteError,
    atom_link,
    atom_x,
    atom_y,
    build_ledger,
    check_form,
    diag_pencil_refinement,
    enumerate_configurations,
    form,
    hyperbolicity_verdict,
    replay_chain,
    replay_verdict,
    scaled_statement_grants,
)
from uniqpoly.polynomials import Poly, X

DIAG = ("diag",)


# ---------------------------------------------------------------------------
# ledger construction
# ---------------------------------------------------------------------------

def test_scaled_crossing_locks_contact_ratio():
    # multiplicities 3 and 1: (3+1)*ord(x) = (1+1)*ord(y) forces
    # ord(x) = t, ord(y) = 2t
    cfg = Configuration("scaled", (3, 1), ((0, 1),))
    led = build_ledger(cfg)
    c = led.crossing(0)
    assert c.x_scale == 1 and c.y_scale == 2
    ox = c.order_of(atom_x(0))
    oy = c.order_of(atom_y(1))
    assert (ox.g_coef, ox.exact) == (1, True)
    assert (oy.g_coef, oy.exact) == (2, True)
    # the Wronskian W(Y,Z) drops one from the y-contact
    ow = c.order_of(("w",), "YZ")
    assert (ow.g_coef, ow.const, ow.exact) == (2, -1, True)


def test_scaled_crossing_equal_multiplicities():
    cfg = Configuration("scaled", (2, 2), ((0, 1),))
    c = build_ledger(cfg).crossing(0)
    assert c.x_scale == 1 and c.y_scale == 1


def test_scaled_crossing_coprime_contact_orders():
    # multiplicities 3 and 2: 4*ord(x) = 3*ord(y) with gcd(4,3)=1 forces
    # ord(x) divisible by 3
    cfg = Configuration("scaled", (3, 2), ((0, 1),))
    c = build_ledger(cfg).crossing(0)
    assert c.x_scale == 3 and c.y_scale == 4


def test_shared_crossing_and_fibers():
    cfg = Configuration("shared", (2, 2))
    led = build_ledger(cfg)
    c = led.crossing(1)
    assert c.order_of(atom_x(1)).g_coef == 1
    assert c.order_of(atom_y(1)).g_coef == 1
    od = c.order_of(DIAG)
    assert (od.g_coef, od.e_coef) == (1, 1)
    # off-index atoms are units at the crossing
    assert c.order_of(atom_x(0)) .g_coef == 0
    fibers = [p for p in led.points if p.kind == "x-fiber"]
    assert len(fibers) == 2
    f = fibers[0]
    assert f.order_of(atom_x(0)).const == 1
    assert f.order_of(("w",), "YZ").const == 2  # multiplicity of the branch
    assert f.order_of(("w",), "XZ").const == 0


def test_ledger_needs_two_critical_points():
    with pytest.raises(ValueError):
        build_ledger(Configuration("shared", (4,)))


# ---------------------------------------------------------------------------
# form specification sanity
# ---------------------------------------------------------------------------

def test_form_degree_bookkeeping_enforced():
    with pytest.raises(ValueError):
        form("YZ", {}, {atom_x(0): 1})  # den = num + 1, not + 2
    with pytest.raises(ValueError):
        form("YZ", {DIAG: 2}, {atom_x(0): 2})


def test_form_denominator_restricted_to_coordinate_lines():
    with pytest.raises(ValueError):
        FormSpec("YZ", (), ((atom_link(0, 1), 2),))
    with pytest.raises(ValueError):
        FormSpec("YZ", (), ((DIAG, 2),))


def test_form_shared_atoms_must_cancel():
    with pytest.raises(ValueError):
        FormSpec("YZ", ((atom_x(0), 1),), ((atom_x(0), 3),))


def test_form_display():
    f = form("YZ", {atom_link(0, 1): 2}, {atom_x(0): 2, atom_x(1): 2})
    assert f.describe() == "L[0,1]^2*W(Y,Z) / x0^2*x1^2"


def test_check_form_rejects_unrepresentable_atoms():
    cfg = Configuration("scaled", (2, 2), ((0, 1),))
    led = build_ledger(cfg)
    # connector needs both endpoints to be crossings; index 1 is not
    bad = form("YZ", {atom_link(0, 1): 2}, {atom_x(0): 2, atom_x(1): 2})
    with pytest.raises(ValueError):
        check_form(cfg, led, bad)
    # the diagonal lives on the shared curve only
    with pytest.raises(ValueError):
        check_form(cfg, led, form("YZ", {DIAG: 1}, {atom_x(0): 3}))


# ---------------------------------------------------------------------------
# form checking against the ledger
# ---------------------------------------------------------------------------

def test_balanced_diagonal_form_on_three_simple_points():
    # n = 4, all multiplicities 1: (X-Y) * W / (x0*x1*x2) has bound
    # g + e - 1 >= 0 at each crossing, and 0 at fibers and infinity
    cfg = Configuration("shared", (1, 1, 1))
    led = build_ledger(cfg)
    spec = form("YZ", {DIAG: 1}, {atom_x(0): 1, atom_x(1): 1, atom_x(2): 1})
    v = check_form(cfg, led, spec)
    assert v.regular == "yes"
    at = {c.point: c for c in v.chain}
    assert at["crossing:0"].expr.display() == "1g + 1e - 1"
    assert at["x-fiber:0"].expr.value() == 0
    assert at["infinity"].expr.value() == 0


def test_balanced_diagonal_form_fails_on_thin_profile():
    # l = 2 with a simple point: at the deep crossing the bound drops to
    # e - 1, which is negative for transversal diagonal contact
    cfg = Configuration("shared", (2, 1))
    led = build_ledger(cfg)
    spec = form("YZ", {DIAG: 1}, {atom_x(0): 2, atom_x(1): 1})
    v = check_form(cfg, led, spec)
    assert v.regular == "unknown"
    bad = {c.point: c for c in v.chain}["crossing:0"]
    assert not bad.ok
    assert bad.expr.display() == "1e - 1"


def test_wide_mismatch_pair_is_regular():
    # paired multiplicities (4, 1): contact orders lock to 2t and 5t, so
    # X*y1*W/x0^4 and Y*y1*W/x0^4 clear the denominator with room
    cfg = Configuration("scaled", (4, 1), ((0, 1), (1, 0)))
    led = build_ledger(cfg)
    for coord in ("X", "Y"):
        spec = form("YZ", {("coord", coord): 1, atom_y(1): 1}, {atom_x(0): 4})
        assert check_form(cfg, led, spec).regular == "yes"


def test_replay_chain_matches_symbolic_check():
    cfg = Configuration("shared", (1, 1, 1, 1))
    led = build_ledger(cfg)
    spec = form("YZ", {DIAG: 2}, {atom_x(i): 1 for i in range(4)})
    v = check_form(cfg, led, spec)
    assert v.regular == "yes"
    assert replay_chain(v, random.Random(123), trials=50)


# ---------------------------------------------------------------------------
# verdict pins
# ---------------------------------------------------------------------------

def test_shared_three_simple_points_algebraic_only():
    hv = hyperbolicity_verdict(Configuration("shared", (1, 1, 1)))
    assert hv.verdict == "algebraic"
    assert hv.route == "balanced-diagonal"
    assert len(hv.forms) == 1
    assert hv.assumptions == (ASSUME_SEPARATED,)


def test_shared_two_double_points_algebraic_only():
    hv = hyperbolicity_verdict(Configuration("shared", (2, 2)))
    assert hv.verdict == "algebraic"


def test_shared_four_points_brody():
    hv = hyperbolicity_verdict(Configuration("shared", (1, 1, 1, 1)))
    assert hv.verdict == "brody"
    assert hv.route == "split-diagonal-pair"
    assert len(hv.forms) == 2
    assert hv.independence.kind == "linear-span"
    assert not hv.needs_coefficient_check


def test_shared_fallback_pencil_flags_coefficient_check():
    # profile (3, 2): the second basis form swaps a diagonal power for
    # the deep coordinate line, and independence leans on the absence of
    # a rescaling symmetry
    hv = hyperbolicity_verdict(Configuration("shared", (3, 2)))
    assert hv.verdict == "brody"
    assert hv.route == "balanced-plus-split"
    assert hv.needs_coefficient_check
    assert ASSUME_SCALE_RIGID in hv.independence.assumptions


def test_shared_thin_profiles_get_none():
    assert hyperbolicity_verdict(Configuration("shared", (5, 1))).verdict == "none"
    hv = hyperbolicity_verdict(Configuration("shared", (3,)))
    assert hv.verdict == "none" and hv.reason == "single-critical-point"


def test_scaled_three_cycle_is_the_degenerate_case():
    cfg = Configuration("scaled", (1, 1, 1), ((0, 1), (1, 2), (2, 0)))
    hv = hyperbolicity_verdict(cfg)
    assert hv.verdict == "none"
    assert hv.reason == "three-cycle-scaling"


def test_scaled_unpaired_deep_point_gives_brody():
    cfg = Configuration("scaled", (3, 1), ())
    hv = hyperbolicity_verdict(cfg)
    assert hv.verdict == "brody"
    assert hv.route == "unpaired-deep-coordinate-pair"


def test_scaled_two_double_points_fully_paired_algebraic_only():
    cfg = Configuration("scaled", (2, 2), ((0, 1), (1, 0)))
    hv = hyperbolicity_verdict(cfg)
    assert hv.verdict == "algebraic"
    assert hv.route == "top-pair-connector-power"
    # but breaking one pairing frees a double point and upgrades it
    hv2 = hyperbolicity_verdict(Configuration("scaled", (2, 2), ((0, 1),)))
    assert hv2.verdict == "brody"


def test_scaled_wide_mismatch_brody():
    cfg = Configuration("scaled", (4, 1), ((0, 1), (1, 0)))
    hv = hyperbolicity_verdict(cfg)
    assert hv.verdict == "brody"
    assert hv.route == "paired-mismatch-wide"
    assert ASSUME_NO_LINEAR in hv.assumptions


def test_scaled_narrow_mismatch_algebraic():
    cfg = Configuration("scaled", (3, 1), ((0, 1), (1, 0)))
    hv = hyperbolicity_verdict(cfg)
    assert hv.verdict == "algebraic"
    assert hv.route == "paired-mismatch"


def test_scaled_silent_profiles():
    # one critical point: nothing to anchor a form on
    assert hyperbolicity_verdict(Configuration("scaled", (4,))).verdict == "none"
    # simple point paired into a deep one, nothing unpaired of weight
    assert hyperbolicity_verdict(
        Configuration("scaled", (3, 1), ((0, 1),))).verdict == "none"


def test_scaled_triangle_of_double_points():
    cfg = Configuration("scaled", (2, 2, 2), ((0, 1), (1, 2), (2, 0)))
    hv = hyperbolicity_verdict(cfg)
    assert hv.verdict == "brody"
    assert hv.independence.kind == "conic-exclusion"
    assert ASSUME_NO_CONIC in hv.independence.assumptions


def test_brody_certificates_carry_two_forms_and_independence():
    for cfg in enumerate_configurations(8):
        hv = hyperbolicity_verdict(cfg)
        if hv.verdict == "brody":
            assert len(hv.forms) == 2 and hv.independence is not None
            labels = {f.independence_class for f in hv.forms}
            assert len(labels) == 2 and all(
                s.startswith("pencil-basis-") for s in labels)
        elif hv.verdict == "algebraic":
            assert len(hv.forms) >= 1
        else:
            assert hv.forms == () and hv.reason


# ---------------------------------------------------------------------------
# the statement table, encoded independently
# ---------------------------------------------------------------------------

def _expected_shared(mults):
    ms = sorted(mults, reverse=True)
    l = len(ms)
    if l >= 4 or (l == 3 and ms[0] >= 2) or (l == 2 and ms[1] >= 2 and ms[0] >= 3):
        return "brody"
    if l >= 3 or (l == 2 and ms[1] >= 2):
        return "algebraic"
    return "none"


def _expected_scaled(mults, pairing):
    l = len(mults)
    if l < 2:
        return "none"
    paired_src = sorted(i for i, _ in pairing)
    unpaired = [i for i in range(l) if i not in paired_src]
    everyone_paired = len(paired_src) == l
    ms = sorted(mults, reverse=True)
    deltas = [abs(mults[i] - mults[j]) for i, j in pairing]
    simple_free = [i for i in unpaired if mults[i] == 1]
    heavy_free = [i for i in unpaired if mults[i] >= 2]
    all_simple = ms[0] == 1

    brody = False
    # fully paired with a big multiplicity gap somewhere
    if everyone_paired and deltas and max(deltas) >= 3:
        brody = True
    # a free point of weight 3, or of weight 2 next to any other heavy
    # point, or two free points of combined weight 3, or (for at least
    # three points) two free simple points
    if any(mults[i] >= 3 for i in unpaired):
        brody = True
    for i in unpaired:
        if mults[i] == 2 and any(mults[k] >= 2 for k in range(l) if k != i):
            brody = True
    for a in range(len(unpaired)):
        for b in range(a + 1, len(unpaired)):
            if mults[unpaired[a]] + mults[unpaired[b]] == 3:
                brody = True
    if l >= 3 and len(simple_free) >= 2:
        brody = True
    # profile-level grants: two heavy points (except the pair of bare
    # doubles), or at least three points with a single heavy one (except
    # three simple points, where a cycle can genuinely degenerate)
    if ms[1] >= 2 and not (l == 2 and ms[0] == 2 and ms[1] == 2):
        brody = True
    if l >= 3 and ms[1] == 1 and not (l == 3 and all_simple):
        brody = True
    if brody:
        return "brody"

    alg = False
    if everyone_paired and deltas and max(deltas) >= 2:
        alg = True
    if heavy_free or len(simple_free) >= 2:
        alg = True
    if ms[1] >= 2:
        alg = True
    if l >= 3 and ms[1] == 1:
        # three simple points, all chained into a cycle: the one shape
        # with no grant at all
        if not (l == 3 and all_simple and everyone_paired):
            alg = True
    return "algebraic" if alg else "none"


def test_machine_matches_hand_table():
    mismatches = []
    for cfg in enumerate_configurations(10):
        hv = hyperbolicity_verdict(cfg)
        want = _expected_shared(cfg.mults) if cfg.kind == "shared" \
            else _expected_scaled(cfg.mults, cfg.pairing)
        if hv.verdict != want:
            mismatches.append((cfg, hv.verdict, want))
    assert not mismatches, mismatches[:5]


def test_grant_helper_agrees_with_hand_table():
    for cfg in enumerate_configurations(9, kinds=("scaled",)):
        alg, brody = scaled_statement_grants(cfg)
        want = _expected_scaled(cfg.mults, cfg.pairing)
        got = "brody" if brody else ("algebraic" if alg else "none")
        assert got == want, cfg


def test_pairings_never_upgrade_unpaired_verdicts():
    # dropping one pairing edge re-frees a critical point; when the
    # smaller configuration wins through a free-point route, the bigger
    # one may not beat it
    free_routes = {
        "unpaired-deep-coordinate-pair", "unpaired-double-with-deep-partner",
        "two-unpaired-sum-three", "two-unpaired-simple",
        "unpaired-deep", "two-unpaired-simple-form",
    }
    for cfg in enumerate_configurations(9, kinds=("scaled",)):
        if not cfg.pairing:
            continue
        hv = hyperbolicity_verdict(cfg)
        for drop in range(len(cfg.pairing)):
            sub = Configuration(
                "scaled", cfg.mults,
                cfg.pairing[:drop] + cfg.pairing[drop + 1:])
            hv_sub = hyperbolicity_verdict(sub)
            if hv_sub.route in free_routes:
                assert VERDICT_RANK[hv.verdict] <= VERDICT_RANK[hv_sub.verdict], \
                    (cfg, sub)


def test_every_certificate_replays_at_random_orders():
    rng = random.Random(2024)
    for cfg in enumerate_configurations(9):
        hv = hyperbolicity_verdict(cfg)
        assert replay_verdict(hv, rng), cfg


# ---------------------------------------------------------------------------
# enumeration helper
# ---------------------------------------------------------------------------

def test_enumeration_small_counts():
    cfgs = enumerate_configurations(4)
    shared = [c for c in cfgs if c.kind == "shared"]
    assert {c.mults for c in shared} == {(1, 1), (2, 1), (1, 1, 1)}
    # (1,1) admits empty, single-edge, and double-edge pairings
    pair11 = [c for c in cfgs if c.kind == "scaled" and c.mults == (1, 1)]
    assert sorted(len(c.pairing) for c in pair11) == [0, 1, 2]
    # (2,1) has two distinguishable single edges (deep->simple, simple->deep)
    pair21 = [c for c in cfgs if c.kind == "scaled" and c.mults == (2, 1)]
    assert sorted(len(c.pairing) for c in pair21) == [0, 1, 1, 2]


def test_enumeration_pairings_are_valid_injections():
    for cfg in enumerate_configurations(8, kinds=("scaled",)):
        srcs = [i for i, _ in cfg.pairing]
        dsts = [j for _, j in cfg.pairing]
        assert len(set(srcs)) == len(srcs)
        assert len(set(dsts)) == len(dsts)
        assert all(i != j for i, j in cfg.pairing)


# ---------------------------------------------------------------------------
# coefficient-level refinement
# ---------------------------------------------------------------------------

def test_diag_pencil_refinement_generic_is_rigid():
    # recentered support {3, 4, 5}: no common divisor, no symmetry
    p = X**5 + X**4 + X**3 + 7
    trace = diag_pencil_refinement(p, 0)
    assert trace["scale_rigid"]
    assert trace["support_gcd"] == 1
    # shifting the center is handled by the recentering step
    q = p.taylor_shift(-2)  # deep root moved to 2
    assert diag_pencil_refinement(q, 2)["centered_support"] == [3, 4, 5]


def test_diag_pencil_refinement_flags_even_symmetry():
    # support {2, 4}: invariant under X -> -X, hence not rigid; such a
    # polynomial also fails separation (critical points +r, -r share a
    # value), so the flag never fires on accepted inputs
    p = X**4 - 2 * X**2
    trace = diag_pencil_refinement(p, 0)
    assert not trace["scale_rigid"]
    assert trace["support_gcd"] == 2
