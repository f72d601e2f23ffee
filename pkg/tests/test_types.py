import pytest

import agmpy.types as t


def test_node_encoding():
    n = t.Node(6, 5)
    assert n.encode(7) == 47
    assert t.Node.decode(47, 7) == n
    assert str(n) == "(6,5)"
    assert t.Node.parse("(6,5)") == n
    assert t.Node.parse(" 6, 5 ") == n
    assert n.reversal() == t.Node(5, 6)
    a, b = n
    assert (a, b) == (6, 5)


def test_node_order_matches_encoding():
    nodes = [t.Node(2, 1), t.Node(1, 6), t.Node(1, 2)]
    assert sorted(nodes) == sorted(nodes, key=lambda n: n.encode(7))


def test_field_spec():
    spec = t.FieldSpec(5, 3)
    assert spec.q == 125
    assert spec.q_mod_8 == 5
    assert spec.congruence_class is t.CongruenceClass.Q_5_MOD_8
    assert str(spec) == "F_125"
    assert t.FieldSpec(7) == t.FieldSpec(7, 1)


@pytest.mark.parametrize(
    "q, cls",
    [
        (3, t.CongruenceClass.Q_3_MOD_4),
        (7, t.CongruenceClass.Q_3_MOD_4),
        (27, t.CongruenceClass.Q_3_MOD_4),
        (5, t.CongruenceClass.Q_5_MOD_8),
        (125, t.CongruenceClass.Q_5_MOD_8),
        (9, t.CongruenceClass.Q_1_MOD_8),
        (113, t.CongruenceClass.Q_1_MOD_8),
    ],
)
def test_congruence_class(q, cls):
    assert t.CongruenceClass.of_order(q) is cls
    assert cls.admits(q)
    assert t.CongruenceClass.ALL.admits(q)


def test_enum_str():
    assert t.CongruenceClass("5MOD8") is t.CongruenceClass.Q_5_MOD_8
    assert t.Direction("BACK") is t.Direction.BACKTRACK
    assert t.OutputFormat("DOT") is t.OutputFormat.DOT
    assert t.Command("verify") is t.Command.VERIFY
    assert str(t.Direction.ADVANCE) == "adv"
    with pytest.raises(ValueError):
        t.Direction("sideways")


def test_residue_class_is_square():
    assert t.ResidueClass.FOURTH_POWER.is_square
    assert t.ResidueClass.SQUARE_NOT_FOURTH.is_square
    assert not t.ResidueClass.NONSQUARE.is_square
    assert not t.ResidueClass.ZERO.is_square


def test_check_status():
    assert t.CheckStatus.of(True) is t.CheckStatus.PASS
    assert t.CheckStatus.of(False) is t.CheckStatus.FAIL


def test_adv_class():
    cyclic = t.AdvClass(t.INFINITY, t.INFINITY)
    tentacle = t.AdvClass(t.INFINITY, 0)
    colon = t.AdvClass(1, t.INFINITY)
    transient = t.AdvClass(0, 2)
    assert cyclic.cyclic and not cyclic.tentacle and not cyclic.colon
    assert tentacle.tentacle and not tentacle.cyclic
    assert colon.colon and not colon.tentacle
    assert not (transient.cyclic or transient.tentacle or transient.colon)
    assert t.is_infinite(cyclic.adv_depth)
