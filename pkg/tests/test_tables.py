import pytest

from utils.tables import (
    TABLES,
    any_value_table,
    bound_comparison_table,
    build_table,
    classification_table,
    scroll_family_table,
    special_grid_table,
)


def test_scroll_family_table():
    df = scroll_family_table(3, 6)
    assert list(df["r"]) == [3, 4, 5, 6]
    assert list(df["epsilon"]) == ["2/3", "3/4", "4/5", "5/6"]
    assert list(df["L^2"]) == [2, 3, 4, 5]
    assert all(df["h0(L)"] == df["r"] + 1)
    assert df.loc[df["r"] == 5, "general_bound"].item() == "sqrt(7/10)"


def test_any_value_table():
    df = any_value_table()
    row = df[(df["a"] == 5) & (df["t"] == 3)].iloc[0]
    assert row["L"] == "5*C0+31*f"
    assert row["L^2"] == 235
    assert row["epsilon"] == "5/3"


def test_bound_comparison_table():
    df = bound_comparison_table(Lsq=1, r_min=2, r_max=4)
    first = df.iloc[0]
    assert first["general_bound"] == "sqrt(2/5)"
    assert first["ss_bound"] == "sqrt(1/4)"
    assert float(first["ss_bound~"]) == pytest.approx(0.5)


def test_classification_table_lists_only_candidates():
    df = classification_table()
    conic = df[(df["e"] == 1) & (df["class"] == "2*C0+2*f")]
    assert conic["case"].item() == "(6)"
    assert not ((df["e"] == 2) & (df["class"] == "1*C0+1*f")).any()


def test_special_grid_table():
    df = special_grid_table(e=3, a=1)
    assert set(df["curve"]) <= {"fibre", "section-c0"}
    row = df[(df["L"] == "1*C0+4*f") & (df["r"] == 3) & (df["t"] == 1) & (df["s"] == 3)]
    assert row["epsilon"].item() == "1/3"


@pytest.mark.parametrize("name", list(TABLES))
def test_every_table_builds(name):
    assert len(build_table(name)) > 0
