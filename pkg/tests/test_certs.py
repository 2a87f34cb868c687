import json

import pytest

from hypfree.arrangement import delete
from hypfree.certs import (CertificateError, check_free_certificate,
                           check_path_certificate, check_spog_certificate,
                           free_certificate_to_json, not_free_to_json,
                           path_result_to_json, spog_certificate_to_json,
                           to_json_text)
from hypfree.freeness import is_free
from hypfree.freepath import free_path
from hypfree.spog import spog_check


def roundtrip(doc):
    return json.loads(to_json_text(doc))


def test_free_certificate_round_trip(pentagon_pair):
    a, _ = pentagon_pair
    doc = roundtrip(free_certificate_to_json(is_free(a)))
    arr = check_free_certificate(doc)
    assert arr == a


def test_free_certificate_tampering(pentagon_pair, boolean3):
    a, _ = pentagon_pair
    base = free_certificate_to_json(is_free(a))

    doc = roundtrip(base)
    doc["exponents"] = [1, 4, 6]
    with pytest.raises(CertificateError):
        check_free_certificate(doc)

    doc = roundtrip(base)
    doc["saito_constant"] = "1"
    with pytest.raises(CertificateError):
        check_free_certificate(doc)

    doc = roundtrip(base)
    doc["basis"][1]["components"][0][0][1] = "7/2"
    with pytest.raises(CertificateError):
        check_free_certificate(doc)

    doc = roundtrip(base)
    doc["extra_field"] = True
    with pytest.raises(CertificateError):
        check_free_certificate(doc)

    doc = roundtrip(base)
    doc["char_poly"] = [1, 0, 0, 0]
    with pytest.raises(CertificateError):
        check_free_certificate(doc)


def test_not_free_document_shape(pentagon_pair):
    a, _ = pentagon_pair
    doc = roundtrip(not_free_to_json(is_free(delete(a, 0))))
    assert doc["kind"] == "not_free"
    assert doc["char_poly"][0] == 1


def test_spog_certificate_round_trip(pentagon_pair):
    a, _ = pentagon_pair
    cert = spog_check(delete(a, 1))
    doc = roundtrip(spog_certificate_to_json(cert))
    arr = check_spog_certificate(doc)
    assert arr == delete(a, 1)


def test_spog_certificate_tampering(pentagon_pair):
    a, _ = pentagon_pair
    base = spog_certificate_to_json(spog_check(delete(a, 1)))

    doc = roundtrip(base)
    doc["level"] = 4
    with pytest.raises(CertificateError):
        check_spog_certificate(doc)

    doc = roundtrip(base)
    doc["relation"][0] = []
    with pytest.raises(CertificateError):
        check_spog_certificate(doc)

    doc = roundtrip(base)
    doc["poexp"] = [1, 4, 5]
    with pytest.raises(CertificateError):
        check_spog_certificate(doc)


def test_path_certificate_negative(pentagon_pair):
    a, b = pentagon_pair
    result = free_path(b, a)
    doc = roundtrip(path_result_to_json(result, b, a))
    assert doc["status"] == "NONE"
    assert doc["explored_count"] == 16
    check_path_certificate(doc)

    bad = roundtrip(path_result_to_json(result, b, a))
    del bad["explored"]["3"]
    bad["explored_count"] = 15
    with pytest.raises(CertificateError):
        check_path_certificate(bad)

    cheat = roundtrip(path_result_to_json(result, b, a))
    for m in ("1", "3", "7"):
        cheat["explored"][m] = "free"
    with pytest.raises(CertificateError):
        check_path_certificate(cheat)


def test_path_certificate_found(boolean3):
    lo = delete(delete(boolean3, 0), 0)
    result = free_path(lo, boolean3)
    doc = roundtrip(path_result_to_json(result, lo, boolean3))
    assert doc["status"] == "FOUND"
    assert [len(n["arrangement"]["hyperplanes"]) for n in doc["chain"]] == [1, 2, 3]
    check_path_certificate(doc)

    doc["chain"][1]["certificate"]["saito_constant"] = "5"
    with pytest.raises(CertificateError):
        check_path_certificate(doc)


def test_json_text_deterministic(pentagon_pair):
    a, _ = pentagon_pair
    t1 = to_json_text(free_certificate_to_json(is_free(a)))
    t2 = to_json_text(free_certificate_to_json(is_free(a)))
    assert t1 == t2
