import pytest

import profsemi as ps


def test_builtin_semirings_validate():
    for spec in ["bool2", "zmod:4", "trop_trunc:2", "nat_sat:3"]:
        s = ps.builtin_semiring(spec)
        assert ps.validate_semiring(s)["status"] == "pass"
    assert ps.builtin_semiring("trop_trunc:2").idempotent()
    assert not ps.builtin_semiring("zmod:2").idempotent()


def test_natural_order_rejects_non_idempotent():
    with pytest.raises(ps.DomainError):
        ps.natural_order(ps.builtin_semiring("zmod:2"))
    order = ps.natural_order(ps.builtin_semiring("trop_trunc:2"))
    assert order.bottom == 3  # infinity
    assert order.leq(3, 0)


def test_dirac_measures_evaluate_clopens():
    cantor = ps.make_space("cantor")
    b2 = ps.builtin_semiring("bool2")
    z = ps.Point.from_prefix(cantor, 0, 0, 6)
    b0 = ps.Clopen(cantor, 1, [0])
    m = ps.dirac(b2, z)
    assert ps.eval_measure(m, b0) == 1
    assert ps.eval_measure(m, ~b0) == 0
    assert ps.point_in(z, b0)


def test_density_roundtrip():
    cantor = ps.make_space("cantor")
    t2 = ps.builtin_semiring("trop_trunc:2")
    z = ps.Point.from_prefix(cantor, 0, 0, 8)
    o = ps.Point.from_prefix(cantor, 1, 1, 8)
    m = ps.integrate(ps.FinSuppFn(cantor, t2, [(z, 1), (o, 2)]))
    d = ps.density(m)
    value, stabilised = ps.eval_pointwise(d, z, 5)
    assert (value, stabilised) == (1, True)
    assert ps.equal_to_depth(ps.to_measure(d), m, 5)
    b0 = ps.Clopen(cantor, 1, [0])
    assert ps.integral(d, b0) == ps.eval_measure(m, b0)


def test_duality_and_monad_reports():
    rep = ps.bijection_report(2, ps.builtin_semiring("bool2"))
    assert rep["bijection"] == "pass"
    assert rep["atom_count"] == 4

    laws = ps.check_monad_laws(ps.builtin_semiring("zmod:2"))
    assert laws["status"] == "pass"
    assert not laws["partial"]


def test_witness_and_vietoris():
    cantor = ps.make_space("cantor")
    z2 = ps.builtin_semiring("zmod:2")
    b0 = ps.Clopen(cantor, 1, [0])
    res = ps.density_witness(cantor, z2, [(b0, [1])], 3)
    assert res["satisfiable"]
    res2 = ps.density_witness(cantor, z2, [(b0, [1]), (b0, [0])], 3)
    assert not res2["satisfiable"]

    b2 = ps.builtin_semiring("bool2")
    z = ps.Point.from_prefix(cantor, 0, 0, 6)
    o = ps.Point.from_prefix(cantor, 1, 1, 6)
    fam = ps.ClosedSetFamily.union_of(
        [ps.ClosedSetFamily.singleton(z), ps.ClosedSetFamily.singleton(o)]
    )
    assert ps.family_meets(fam, b0)
    assert ps.family_meets(fam, ~b0)
    assert not ps.family_inside(fam, b0)


def test_semimodule_round_trips():
    mod = ps.three_chain_module(ps.builtin_semiring("nat_sat:3"))
    assert ps.validate_semimodule(mod)["status"] == "pass"
    text = '{"semiring": "zmod:2", "mzero": 0, "madd": [[0,1],[1,0]], "action": [[0,0],[0,1]]}'
    assert ps.validate_semimodule(ps.semimodule_from_json(text))["status"] == "pass"


def test_joint_continuity_example():
    rep = ps.saturated_three_chain_action_report(8, 6)
    assert rep["status"] == "fail"
    assert any(f["target"] == 2 for f in rep["failures"])
    ctrl = ps.self_action_report(ps.builtin_semiring("nat_sat:3"), 8, 6)
    assert ctrl["status"] == "pass"
