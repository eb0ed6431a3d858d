"""Session-scoped fixtures: the packaged presentation and its quotient handles.

The reduced bases are expensive enough to share; all handles are immutable,
so session scope is safe.
"""

import pytest

import gcrs


@pytest.fixture(scope="session")
def hs260():
    return gcrs.load_fixture("hs260")


@pytest.fixture(scope="session")
def Q(hs260):
    """R/I for the fixture ring."""
    return gcrs.QuotientRing.from_presentation(hs260)


@pytest.fixture(scope="session")
def Qq(Q, hs260):
    """R/(I + <q>)."""
    return Q.mod_out([hs260.ring.parse("q")])


@pytest.fixture(scope="session")
def hs260_f4(hs260):
    return gcrs.base_change(hs260, 2)


@pytest.fixture(scope="session")
def Q4(hs260_f4):
    return gcrs.QuotientRing.from_presentation(hs260_f4)


@pytest.fixture(scope="session")
def Q4q(Q4, hs260_f4):
    return Q4.mod_out([hs260_f4.ring.parse("q")])


@pytest.fixture(scope="session")
def degree2_scan_Qq(Qq):
    """The full 63-candidate regular scan of degree 2 in R/(I + <q>); shared
    because each candidate costs one elimination run."""
    return gcrs.exhaustive_regular_scan(Qq, 2)


@pytest.fixture(scope="session")
def fixture_file(tmp_path_factory):
    """The packaged .gcr fixture copied to a plain filesystem path."""
    target = tmp_path_factory.mktemp("data") / "hs260.gcr"
    target.write_text(gcrs.fixture_path("hs260.gcr").read_text(encoding="utf-8"),
                      encoding="utf-8")
    claims = tmp_path_factory.getbasetemp() / "data0" / "hs260.claims"
    return target


@pytest.fixture(scope="session")
def claims_file(fixture_file):
    target = fixture_file.with_suffix(".claims")
    target.write_text(gcrs.fixture_path("hs260.claims").read_text(encoding="utf-8"),
                      encoding="utf-8")
    return target
