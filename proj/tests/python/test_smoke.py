import json

import pytest

import quintic_rank as qr


def test_arith():
    assert qr.is_prime(149)
    assert not qr.is_prime(559)
    assert qr.factorize(60) == [(2, 2), (3, 1), (5, 1)]
    assert qr.mult_order_mod5(19) == 2
    assert qr.splitting_oracle(11) == (1, 4)
    assert qr.splitting(149) == qr.splitting_oracle(149) == (2, 2)
    with pytest.raises(ValueError):
        qr.factorize(1)


def test_normalize():
    assert qr.normalize(3249) == 57
    assert qr.normalize_factors([(19, 1), (3, 7), (19, 1)]) == [(3, 1), (19, 1)]
    with pytest.raises(qr.DegenerateRadicand):
        qr.normalize(32)
    with pytest.raises(ValueError):
        qr.classify(32)


def test_classify():
    rec = qr.classify(22201)
    assert rec["form"] == "R1_5"
    assert rec["canonical_n"] == 149
    assert rec["predicted_rank"] == 1
    assert rec["d"] == 2
    assert rec["zeta_norm"] is True

    other = qr.classify(12)
    assert other["form"] == "NotCovered"
    assert other["predicted_rank"] is None
    assert other["rank_bounds"] == [0, 1]

    assert qr.match_form(57) == {"form": "R1_4", "associate_t": 1, "roles": [19, 3]}


def test_enumerate():
    assert [r["n"] for r in qr.enumerate(100, form="R1_2")] == [95]
    assert qr.enumerate(94, form="R1_2") == []
    assert [r["n"] for r in qr.enumerate(60, rank=2)] == [55]
    with pytest.raises(ValueError):
        qr.enumerate(10, form="R9_9")


def test_emit_table():
    rows = json.loads(qr.emit_table("R1_5", 200, "json"))
    assert rows[0]["n"] == 149
    assert rows[0]["published_n"] == 22201
    assert qr.emit_table("R1_5", 200, "md").splitlines()[0].startswith("| p | p mod 5 |")


def test_verify_fixtures():
    findings = qr.verify_fixtures()
    kinds = {(f["primes"], f["kind"]) for f in findings}
    assert ("559", "composite-stated-prime") in kinds
    assert ("31,2", "congruence-gate-failure") in kinds
    assert findings == qr.verify_fixtures()
