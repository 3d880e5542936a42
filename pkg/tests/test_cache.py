import json

import pytest

from apolar import (
    CorruptCacheError,
    FBoundEntry,
    f_upper_bound,
    load_table,
    merge_store,
)


def _entry(e=4, r=5, seed=0, budget=5):
    return f_upper_bound(e, r, budget=budget, seed=seed)


def test_round_trip_identity(tmp_path):
    path = str(tmp_path / "cache.json")
    entries = [_entry(4, 4), _entry(4, 5), _entry(5, 4)]
    merge_store(path, entries)
    loaded = load_table(path)
    key = lambda d: (d["e"], d["r"])
    assert sorted((en.to_dict() for en in loaded), key=key) == sorted(
        (en.to_dict() for en in entries), key=key
    )


def test_missing_and_empty_files(tmp_path):
    path = str(tmp_path / "none.json")
    assert load_table(path) == []
    with pytest.raises(CorruptCacheError):
        load_table(path, missing_ok=False)
    empty = tmp_path / "empty.json"
    empty.write_text("")
    assert load_table(str(empty)) == []
    empty.write_text("[]")
    assert load_table(str(empty)) == []


def test_min_merge_keeps_smaller_bound(tmp_path):
    path = str(tmp_path / "cache.json")
    good = _entry(4, 13)  # bound 12
    assert good.bound == 12
    merge_store(path, [good])
    # a 13 never displaces the stored 12
    worse = FBoundEntry(
        e=4, r=13, bound=13, exact=False,
        certificate=_entry(4, 13, seed=1).certificate, nvars=13,
        field_spec=good.field_spec, seed=1, timestamp=good.timestamp,
    )
    merged = merge_store(path, [worse])
    kept = [en for en in merged if (en.e, en.r) == (4, 13)]
    assert len(kept) == 1 and kept[0].bound == 12
    assert kept[0].seed == good.seed


def test_merge_tie_keeps_incumbent(tmp_path):
    path = str(tmp_path / "cache.json")
    first = _entry(4, 6, seed=0)
    merge_store(path, [first])
    second = _entry(4, 6, seed=99)
    assert second.bound == first.bound
    merged = merge_store(path, [second])
    kept = [en for en in merged if (en.e, en.r) == (4, 6)][0]
    assert kept.seed == 0


def test_corrupt_certificate_dropped_with_warning(tmp_path, caplog):
    path = str(tmp_path / "cache.json")
    good = _entry(4, 5)
    merge_store(path, [good])
    data = json.loads((tmp_path / "cache.json").read_text())
    data[0]["bound"] = good.bound - 1  # certificate no longer matches
    (tmp_path / "cache.json").write_text(json.dumps(data))
    with caplog.at_level("WARNING"):
        assert load_table(path) == []
    assert any("re-verification" in rec.message for rec in caplog.records)


def test_malformed_entry_dropped_with_warning(tmp_path, caplog):
    path = tmp_path / "cache.json"
    good = _entry(4, 5)
    path.write_text(json.dumps([{"e": 4}, good.to_dict()]))
    with caplog.at_level("WARNING"):
        loaded = load_table(str(path))
    assert [en.r for en in loaded] == [5]
    assert any("malformed" in rec.message for rec in caplog.records)


def test_structurally_broken_files_raise(tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("{not json")
    with pytest.raises(CorruptCacheError):
        load_table(str(bad))
    bad.write_text('{"a": 1}')
    with pytest.raises(CorruptCacheError):
        load_table(str(bad))


def test_store_writes_valid_sorted_json(tmp_path):
    path = str(tmp_path / "cache.json")
    merge_store(path, [_entry(5, 4), _entry(4, 7), _entry(4, 3)])
    data = json.loads((tmp_path / "cache.json").read_text())
    keys = [(d["e"], d["r"]) for d in data]
    assert keys == sorted(keys)
    assert all("timestamp" in d for d in data)
