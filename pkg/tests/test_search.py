import numpy as np
import pytest

from wolstenholme.errors import ConfirmationMismatch
from wolstenholme.modmath import ResidueClass
from wolstenholme.search import (
    ScanSpec,
    SearchHit,
    run_scan,
    scan_general_pseudoprimes,
    scan_morley_primes,
    scan_semiprime_pseudoprimes,
    scan_square_pseudoprimes,
    scan_wolstenholme_primes,
)
from wolstenholme.search import scans


def _ns(hits):
    return [h.n for h in hits]


def test_wprimes_examples():
    assert _ns(scan_wolstenholme_primes(5, 16843)) == []
    assert _ns(scan_wolstenholme_primes(16850, 20000)) == []
    hits = scan_wolstenholme_primes(16800, 16900)
    assert _ns(hits) == [16843]
    h = hits[0]
    assert h.kind == "prime" and h.order == 4 and h.confirmed
    assert h.residual == ResidueClass(0, 16843**4) and h.b_pm3 == ResidueClass(0, 16843)


def test_mprimes_examples():
    assert _ns(scan_morley_primes(5, 1000)) == []
    assert _ns(scan_morley_primes(16843, 16844)) == [16843]


def test_square_examples():
    assert _ns(scan_square_pseudoprimes(5, 1000, "M")) == []
    assert _ns(scan_square_pseudoprimes(5, 1000, "W")) == _ns(scan_square_pseudoprimes(5, 1000, "M"))
    hits = scan_square_pseudoprimes(16840, 16850, "W")
    assert _ns(hits) == [16843**2] and hits[0].order == 2
    assert hits[0].factorization.factors == ((16843, 2),)


def test_semiprime_examples():
    assert _ns(scan_semiprime_pseudoprimes(10**6, "W", 1)) == [27173]
    assert _ns(scan_semiprime_pseudoprimes(10**6, "M", 1)) == []


def test_semiprime_higher_orders_empty():
    assert _ns(scan_semiprime_pseudoprimes(10**5, "W", 2)) == []


def test_general_examples():
    assert _ns(scan_general_pseudoprimes(10**5, "W")) == [27173]
    assert _ns(scan_general_pseudoprimes(1000, "M")) == []
    assert _ns(scan_general_pseudoprimes(100, "W")) == []


def test_general_against_exhaustive_direct():
    from wolstenholme.congruences import pseudoprime_test
    from wolstenholme.modmath import is_prime

    for fam in ("W", "M"):
        expect = [
            n
            for n in range(9, 4000, 2)
            if not is_prime(n) and pseudoprime_test(n, fam, 1, "direct")[0]
        ]
        got = _ns(scan_general_pseudoprimes(4000, fam, include_prime_powers=True))
        assert got == expect


def test_prime_powers_included_on_request():
    got = _ns(scan_general_pseudoprimes(1000, "W", include_prime_powers=True))
    assert got == [9, 25, 49, 121, 125, 169, 289, 343, 361, 529, 841, 961]
    assert all(h.kind == "general-pseudoprime" for h in scan_general_pseudoprimes(200, "W", include_prime_powers=True))


def test_strict_mode_agrees():
    assert _ns(scan_semiprime_pseudoprimes(3 * 10**5, "W", strict=True)) == _ns(
        scan_semiprime_pseudoprimes(3 * 10**5, "W")
    )


def test_worker_count_does_not_change_hits():
    spec = ScanSpec("semiprime", "W", 1, 0, 10**6)
    one = run_scan(spec, workers=1).hits
    two = run_scan(spec, workers=2).hits
    assert [h.to_json() for h in one] == [h.to_json() for h in two]


def test_seed_changes_nothing_in_output():
    a = scan_semiprime_pseudoprimes(10**5, "W", seed=1, sample_rate=0.5)
    b = scan_semiprime_pseudoprimes(10**5, "W", seed=2, sample_rate=0.5)
    assert [h.to_json() for h in a] == [h.to_json() for h in b]


def test_full_sampling_confirms_rejections():
    assert _ns(scan_semiprime_pseudoprimes(40000, "W", sample_rate=1.0)) == [27173]
    assert _ns(scan_wolstenholme_primes(5, 400, sample_rate=1.0)) == []
    assert _ns(scan_general_pseudoprimes(30000, "W", sample_rate=1.0)) == [27173]


def test_faulty_bernoulli_criterion_is_caught(monkeypatch):
    monkeypatch.setattr(scans, "b_pm3", lambda p: ResidueClass(0, p))
    with pytest.raises(ConfirmationMismatch):
        scan_wolstenholme_primes(5, 100)


def test_faulty_rejecting_digit_criterion_is_caught(monkeypatch):
    monkeypatch.setattr(scans, "residue_array", lambda ns, p, fam: np.zeros(len(ns), dtype=np.int64))
    with pytest.raises(ConfirmationMismatch):
        scan_semiprime_pseudoprimes(30000, "W", sample_rate=1.0)


def test_faulty_accepting_digit_criterion_is_caught(monkeypatch):
    monkeypatch.setattr(scans, "residue_array", lambda ns, p, fam: np.ones(len(ns), dtype=np.int64))
    monkeypatch.setattr(scans, "big_mod_array", lambda x, mods: np.zeros(len(mods), dtype=np.int64))
    with pytest.raises(ConfirmationMismatch):
        scan_semiprime_pseudoprimes(1000, "W")


def test_hit_json_round_trip():
    for h in scan_semiprime_pseudoprimes(3 * 10**4, "W") + scan_wolstenholme_primes(16843, 16844):
        again = SearchHit.from_json(h.to_json())
        assert again == h
        assert again.to_json() == h.to_json()


def test_hit_record_schema():
    h = scan_semiprime_pseudoprimes(3 * 10**4, "W")[0]
    rec = h.to_record()
    assert rec["factors"] == [[29, 1], [937, 1]]
    assert rec["residual"] == "0" and rec["modulus"] == "27173"
    assert rec["confirmed"] is True
    assert h.human().startswith("W_27173 ≡ 1 (mod 27173)")


def test_scan_spec_json_round_trip():
    spec = ScanSpec("general", "M", 1, 0, 5000, seed=3, sample_rate=0.2, include_prime_powers=True)
    assert ScanSpec.from_json(spec.to_json()) == spec


def test_bad_arguments():
    with pytest.raises(ValueError):
        scan_wolstenholme_primes(3, 100)
    with pytest.raises(ValueError):
        scan_semiprime_pseudoprimes(10)
    with pytest.raises(ValueError):
        scan_semiprime_pseudoprimes(1000, "X")
    with pytest.raises(ValueError):
        scan_general_pseudoprimes(1000, "W", order=2)
    with pytest.raises(ValueError):
        scan_general_pseudoprimes(5)
