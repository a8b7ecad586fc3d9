import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from seqlab.boustrophedon import entringer
from seqlab.errors import DuplicateId, ParseError
from seqlab.seqdb import (
    MIN_MATCH,
    SUPERSEEK_STEPS,
    a36917_by_recurrence,
    a46520_min_upto,
    apply_chain,
    binomial_sum_A36917,
    central_binomials,
    inequality_sequence_A46520,
    load_db,
    loeschian_by_primes,
    loeschian_search,
    loeschian_test,
    lookup,
    mod5_square_indices,
    mod5_square_indices_count,
    normalize_id,
    parse_stripped,
    superseek,
)


def test_normalize_id():
    assert normalize_id("A435") == "A000435"
    assert normalize_id(" a000435 ") == "A000435"
    with pytest.raises(ValueError):
        normalize_id("B12")


def test_load_and_parse(tmp_path):
    p = tmp_path / "db.txt"
    p.write_text("# comment\nA000435 0,1,8,78,944\n\nA7 -1,2\n")
    db = load_db(p)
    assert db["A435"] == (0, 1, 8, 78, 944)
    assert db["A000007"] == (-1, 2)
    assert "A435" in db and len(db) == 2
    empty = tmp_path / "empty.txt"
    empty.write_text("")
    assert len(load_db(empty)) == 0


def test_parse_errors():
    with pytest.raises(ParseError) as err:
        parse_stripped(["A000435 0,1", "A1 1,,2"])
    assert err.value.lineno == 2
    with pytest.raises(ParseError):
        parse_stripped(["A1"])
    with pytest.raises(ParseError):
        parse_stripped(["X1 1,2"])
    with pytest.raises(ParseError):
        parse_stripped(["A1 1,2,x"])
    with pytest.raises(DuplicateId):
        parse_stripped(["A1 1,2", "A000001 3"])


def test_load_is_idempotent(tmp_path):
    a, b = load_db(), load_db()
    assert a.entries == b.entries
    assert a.index_snapshot() == b.index_snapshot()


def test_default_db_from_environment(tmp_path, monkeypatch):
    p = tmp_path / "x.txt"
    p.write_text("A5 1,2,3\n")
    monkeypatch.setenv("SEQLAB_DB", str(p))
    assert list(load_db().entries) == ["A000005"]


def test_lookup_examples(db):
    hits = lookup(db, [1, 1, 2, 3, 6, 10, 20, 35, 70])
    assert hits[0].id == "A001405" and hits[0].exact
    assert central_binomials(10) == [1, 1, 2, 3, 6, 10, 20, 35, 70, 126]
    assert [m.id for m in lookup(db, [1, 8, 88, 1088, 14296])] == ["A036917"]
    assert lookup(db, [9, 9, 9]) == []
    assert lookup(db, []) == []


def test_lookup_low_confidence_and_ranking(db):
    hits = lookup(db, [1, 2])
    assert hits and all(m.low_confidence for m in hits)
    exact = [m.exact for m in hits]
    assert exact == sorted(exact, reverse=True)
    inner = lookup(db, [78, 944, 13800])
    assert inner[0].id == "A000435" and inner[0].position == 3 and not inner[0].exact


def test_lookup_agrees_with_linear_scan(db):
    rng = random.Random(4)
    ids = sorted(db.entries)
    for _ in range(200):
        terms = db.entries[rng.choice(ids)]
        if len(terms) < 4:
            continue
        i = rng.randrange(len(terms) - 3)
        q = terms[i : i + rng.randint(3, min(6, len(terms) - i))]
        want = sorted(
            sid for sid, t in db.entries.items() if any(t[p : p + len(q)] == q for p in range(len(t)))
        )
        assert sorted(m.id for m in lookup(db, q)) == want


def test_superseek_partial_sums(db):
    query = list(db["A30124"][:9])
    results = superseek(db, query)
    direct = [r for r in results if r.chain == ()]
    assert [r.id for r in direct] == ["A030124"]
    assert any(r.id == "A005228" and r.chain == ("partial_sums[1]",) for r in results)


def test_superseek_entringer(db):
    results = superseek(db, entringer(8))
    assert any(r.id == "A000111" and "boustrophedon" in r.chain for r in results)


def test_superseek_chains_replay(db):
    for query in (list(db["A30124"][:9]), entringer(8), [1, 2, 4, 8, 16, 32, 64]):
        for r in superseek(db, query):
            out = r.replay(query)
            assert len(out) >= MIN_MATCH
            assert tuple(out) == db[r.id][r.offset : r.offset + len(out)]
            assert len(r.chain) <= 2


def test_superseek_noise_is_empty(db):
    rng = random.Random(1)
    q = [rng.randint(10**6, 10**9) for _ in range(8)]
    assert superseek(db, q) == []


def test_superseek_max_chain(db):
    query = list(db["A30124"][:9])
    assert all(r.chain == () for r in superseek(db, query, max_chain=0))
    assert all(len(r.chain) <= 1 for r in superseek(db, query, max_chain=1))


def test_apply_chain():
    assert apply_chain(["partial_sums[0]"], [1, 2, 3]) == [0, 1, 3, 6]
    assert apply_chain(["divide[2]"], [1, 2]) is None
    assert apply_chain(["scale[3]", "shift"], [1, 2]) == [6]
    assert "boustrophedon" in SUPERSEEK_STEPS


def test_a36917(frozen):
    assert binomial_sum_A36917(6) == [1, 8, 88, 1088, 14296, 195008]
    assert binomial_sum_A36917(1) == [1]
    a = binomial_sum_A36917(40)
    assert a == a36917_by_recurrence(40) == frozen["a36917_40"]
    with pytest.raises(ValueError):
        binomial_sum_A36917(0)


def test_a46520():
    assert inequality_sequence_A46520(15) == [-1, 0, 0, 2, 0, 6, 0, 7, 4, 10, 0, 18, 0, 14, 12]
    assert a46520_min_upto(10**6) == (0, 2)


def test_mod5(frozen):
    assert mod5_square_indices_count(12) == [1, 4, 5, 9, 11, 16, 19, 20, 25, 29, 31, 36]
    assert mod5_square_indices(200) == frozen["mod5_200"]


def test_loeschian(frozen):
    assert loeschian_test(7) and loeschian_search(7) in {(1, 2), (2, 1)}
    assert loeschian_test(0)
    assert not loeschian_test(2)
    assert [loeschian_test(N) for N in range(61)] == frozen["loeschian_0_60"]
    with pytest.raises(ValueError):
        loeschian_search(-1)


@given(st.integers(0, 10**6))
@settings(max_examples=300, deadline=None)
def test_loeschian_routes_agree(N):
    found = loeschian_search(N)
    assert (found is not None) == loeschian_by_primes(N)
    if found:
        a, b = found
        assert a * a + a * b + b * b == N
