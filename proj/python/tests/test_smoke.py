import pytest

import eword


def test_e_word():
    assert eword.e_word("30/7") == "b^2 a b^4 a b^5 a b^4 a b^4 a b^5 a b^4 a b^2"
    assert eword.e_word("4/13", mode="shortcut") == "a^2 b a^3 b a^3 b a^3 b a^2"
    assert eword.e_word("1/2", alphabet="AB") == "A^-1 B A^-1"
    assert eword.e_word("inf") == "b"
    assert eword.e_word("-3/1") == "b^2 a^-1 b"


def test_farey():
    assert eword.parents("3/5") == ("1/2", "2/3")
    assert eword.continued_fraction("68/13") == "[5;4,3]"
    assert eword.farey_level("3/5") == "4"


def test_words():
    assert eword.reduce("a b b^-1 a") == "a^2"
    assert eword.is_palindrome("b^3 a b^3")
    assert not eword.is_palindrome("b a")


def test_trace():
    t = eword.trace("[5;4,3]")
    assert t["last_changed_index"] == "68/13"
    assert len(t["steps"]) == 12


def test_count_and_verify():
    assert eword.count(12) == (8, 8)
    report = eword.verify(10)
    assert report["ok"]
    assert report["failure_count"] == 0


def test_errors():
    with pytest.raises(ValueError):
        eword.e_word("1/x")
    with pytest.raises(ValueError):
        eword.parents("0")
    with pytest.raises(ValueError):
        eword.trace("[0;]")
    with pytest.raises(ValueError):
        eword.reduce("a c")
