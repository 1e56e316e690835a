import pytest

from ccgeval.fileio import atomic_write, atomic_write_many


def test_atomic_write(tmp_path):
    target = tmp_path / "a.txt"
    atomic_write(target, b"one")
    atomic_write(target, b"two")
    assert target.read_bytes() == b"two"
    assert [p.name for p in tmp_path.iterdir()] == ["a.txt"]


def test_many_is_all_or_nothing(tmp_path):
    keep = tmp_path / "keep.txt"
    keep.write_bytes(b"old")
    with pytest.raises(OSError):
        atomic_write_many({keep: b"new", tmp_path / "missing" / "x.txt": b"x"})
    assert keep.read_bytes() == b"old"
    assert sorted(p.name for p in tmp_path.iterdir()) == ["keep.txt"]
